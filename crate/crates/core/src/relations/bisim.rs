use std::collections::BTreeSet;

use crate::interpretation::{Interpretation, PointedInterpretation};
use crate::signature::Signature;

/// A bisimulation between two interpretations, as pairs of element
/// positions `(element of the first, element of the second)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bisimulation {
    pairs: BTreeSet<(usize, usize)>,
}

impl Bisimulation {
    pub fn pairs(&self) -> &BTreeSet<(usize, usize)> {
        &self.pairs
    }

    pub fn contains(&self, left: usize, right: usize) -> bool {
        self.pairs.contains(&(left, right))
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    /// Checks the atom, forth and back conditions for every pair over `sig`.
    pub fn is_valid(&self, left: &Interpretation, right: &Interpretation, sig: &Signature) -> bool {
        self.pairs.iter().all(|&(x, y)| {
            sig.concept_names()
                .iter()
                .all(|a| left.has_label(a, x) == right.has_label(a, y))
                && sig.role_names().iter().all(|r| {
                    left.role_successors(r, x)
                        .all(|x2| right.role_successors(r, y).any(|y2| self.contains(x2, y2)))
                        && right
                            .role_successors(r, y)
                            .all(|y2| left.role_successors(r, x).any(|x2| self.contains(x2, y2)))
                })
        })
    }
}

fn reachable(interp: &Interpretation, from: usize, sig: &Signature) -> Vec<usize> {
    let mut seen = vec![false; interp.len()];
    let mut stack = vec![from];
    seen[from] = true;
    let mut out = Vec::new();
    while let Some(e) = stack.pop() {
        out.push(e);
        for role in sig.role_names() {
            for next in interp.role_successors(role, e) {
                if !seen[next] {
                    seen[next] = true;
                    stack.push(next);
                }
            }
        }
    }
    out.sort_unstable();
    out
}

fn same_atoms(
    left: &Interpretation,
    x: usize,
    right: &Interpretation,
    y: usize,
    names: &BTreeSet<String>,
) -> bool {
    names
        .iter()
        .all(|a| left.has_label(a, x) == right.has_label(a, y))
}

/// The greatest bisimulation over `sig` between the parts reachable from the
/// two points, if it relates the points.
pub fn bisimilar(
    p1: &PointedInterpretation,
    p2: &PointedInterpretation,
    sig: &Signature,
) -> Option<Bisimulation> {
    let (left, right) = (p1.interpretation(), p2.interpretation());
    let xs = reachable(left, p1.point(), sig);
    let ys = reachable(right, p2.point(), sig);
    let mut related = vec![vec![false; right.len()]; left.len()];
    for &x in &xs {
        for &y in &ys {
            related[x][y] = same_atoms(left, x, right, y, sig.concept_names());
        }
    }
    let mut changed = true;
    while changed {
        changed = false;
        for &x in &xs {
            for &y in &ys {
                if related[x][y] && !step_ok(left, x, right, y, sig.role_names(), &related) {
                    related[x][y] = false;
                    changed = true;
                }
            }
        }
    }
    if !related[p1.point()][p2.point()] {
        return None;
    }
    let pairs = xs
        .iter()
        .flat_map(|&x| ys.iter().map(move |&y| (x, y)))
        .filter(|&(x, y)| related[x][y])
        .collect();
    Some(Bisimulation { pairs })
}

// forth and back for one pair against the current relation
fn step_ok(
    left: &Interpretation,
    x: usize,
    right: &Interpretation,
    y: usize,
    roles: &BTreeSet<String>,
    related: &[Vec<bool>],
) -> bool {
    roles.iter().all(|r| {
        left.role_successors(r, x)
            .all(|x2| right.role_successors(r, y).any(|y2| related[x2][y2]))
            && right
                .role_successors(r, y)
                .all(|y2| left.role_successors(r, x).any(|x2| related[x2][y2]))
    })
}

/// Whether a `k`-bisimulation relates the two points. Atoms and roles range
/// over every name mentioned by either interpretation.
pub fn k_bisimilar(p1: &PointedInterpretation, p2: &PointedInterpretation, k: usize) -> bool {
    let sig = p1
        .signature()
        .union(&p2.signature())
        .expect("names of interpretations are valid identifiers");
    k_bisimilar_over(p1, p2, k, &sig)
}

/// As [`k_bisimilar`], with atoms and roles restricted to `sig`.
pub fn k_bisimilar_over(
    p1: &PointedInterpretation,
    p2: &PointedInterpretation,
    k: usize,
    sig: &Signature,
) -> bool {
    let (left, right) = (p1.interpretation(), p2.interpretation());
    let atoms: Vec<Vec<bool>> = (0..left.len())
        .map(|x| {
            (0..right.len())
                .map(|y| same_atoms(left, x, right, y, sig.concept_names()))
                .collect()
        })
        .collect();
    let mut level = atoms.clone();
    for _ in 0..k {
        let next: Vec<Vec<bool>> = (0..left.len())
            .map(|x| {
                (0..right.len())
                    .map(|y| atoms[x][y] && step_ok(left, x, right, y, sig.role_names(), &level))
                    .collect()
            })
            .collect();
        level = next;
    }
    level[p1.point()][p2.point()]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::interpretation::{chain_model, unfold};

    fn looped() -> PointedInterpretation {
        let mut i = Interpretation::new(["d"]).unwrap();
        i.add_edge("r", "d", "d").unwrap();
        PointedInterpretation::new(i, "d").unwrap()
    }

    fn sig_r() -> Signature {
        Signature::new(Vec::<String>::new(), ["r"]).unwrap()
    }

    #[test]
    fn identity_and_unfolding() {
        let m = chain_model(3, "r");
        let z = bisimilar(&m, &m, &sig_r()).unwrap();
        assert!((0..4).all(|e| z.contains(e, e)));
        assert!(z.is_valid(m.interpretation(), m.interpretation(), &sig_r()));
        assert!(bisimilar(&m, &unfold(&m, 3), &sig_r()).is_some());
        assert!(bisimilar(&chain_model(1, "r"), &chain_model(2, "r"), &sig_r()).is_none());
    }

    #[test]
    fn loops_are_not_finite_chains() {
        assert!(bisimilar(&looped(), &chain_model(4, "r"), &sig_r()).is_none());
        assert!(k_bisimilar(&looped(), &chain_model(4, "r"), 4));
        assert!(!k_bisimilar(&looped(), &chain_model(4, "r"), 5));
    }

    #[test]
    fn k_bisimulation() {
        assert!(!k_bisimilar(&chain_model(1, "r"), &chain_model(2, "r"), 2));
        assert!(k_bisimilar(&chain_model(1, "r"), &chain_model(2, "r"), 1));
        assert!(k_bisimilar(&chain_model(1, "r"), &chain_model(2, "r"), 0));

        // the last element of the chain in A is invisible up to depth m
        let m = 3;
        let plain = chain_model(m + 1, "r");
        let mut labeled = plain.interpretation().clone();
        labeled.add_concept("A", &(m + 1).to_string()).unwrap();
        let labeled = PointedInterpretation::new(labeled, "0").unwrap();
        assert!(k_bisimilar(&plain, &labeled, m));
        assert!(!k_bisimilar(&plain, &labeled, m + 1));
    }

    #[test]
    fn signature_restricts_atoms() {
        let mut i = Interpretation::new(["d"]).unwrap();
        i.add_concept("A", "d").unwrap();
        let a = PointedInterpretation::new(i, "d").unwrap();
        let plain = chain_model(0, "r");
        assert!(bisimilar(&a, &plain, &sig_r()).is_some());
        let sig_a = Signature::new(["A"], ["r"]).unwrap();
        assert!(bisimilar(&a, &plain, &sig_a).is_none());
    }
}
