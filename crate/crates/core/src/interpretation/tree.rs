//! Tree-shaped pointed interpretations: unfolding, chains, canonical models
//! and the inverse direction from trees back to EL concepts.

use std::collections::BTreeMap;

use super::{Interpretation, PointedInterpretation};
use crate::concept::{conjunction_multiset, Concept, Dialect};
use crate::error::{Error, Result};

/// The chain `0 -r-> 1 -r-> ... -r-> n` pointed at `0`, with empty labels.
pub fn chain_model(n: usize, role: &str) -> PointedInterpretation {
    let mut interp = Interpretation::empty();
    for i in 0..=n {
        interp.push_element(i.to_string());
    }
    interp.declare_role(role);
    for i in 0..n {
        interp.connect(role, i, i + 1);
    }
    PointedInterpretation::from_index(interp, 0)
}

/// Paths of length at most `k` starting at the point, as a tree.
///
/// Elements are named by the path they stand for, e.g. `d1/r/d2`.
pub fn unfold(pi: &PointedInterpretation, k: usize) -> PointedInterpretation {
    let src = pi.interpretation();
    let mut out = Interpretation::empty();
    for name in src.concept_names() {
        out.declare_concept(name);
    }
    for role in src.role_names() {
        out.declare_role(role);
    }
    let root = out.push_element(src.element(pi.point()).to_owned());
    // (original element, copy, remaining depth)
    let mut stack = vec![(pi.point(), root, k)];
    while let Some((orig, copy, budget)) = stack.pop() {
        let labels: Vec<String> = src.labels(orig).map(str::to_owned).collect();
        for name in labels {
            out.label(&name, copy);
        }
        if budget == 0 {
            continue;
        }
        let succs: Vec<(String, usize)> = src.successors(orig).map(|(r, e)| (r.to_owned(), e)).collect();
        for (role, next) in succs {
            let id = format!("{}/{}/{}", out.element(copy), role, src.element(next));
            let child = out.push_element(id);
            out.connect(&role, copy, child);
            stack.push((next, child, budget - 1));
        }
    }
    PointedInterpretation::from_index(out, root)
}

impl PointedInterpretation {
    /// True iff the interpretation is a finite rooted tree at its point: the
    /// point has no incoming edge, every other element exactly one, and every
    /// element is reachable from the point.
    pub fn is_tree_shaped(&self) -> bool {
        let interp = self.interpretation();
        let mut indegree = vec![0usize; interp.len()];
        for role in interp.role_names() {
            for (_, to) in interp.role_pairs(role) {
                indegree[to] += 1;
            }
        }
        if indegree[self.point()] != 0 {
            return false;
        }
        if indegree
            .iter()
            .enumerate()
            .any(|(e, &d)| e != self.point() && d != 1)
        {
            return false;
        }
        // in-degree one everywhere else, so reaching every element from the
        // root also rules out cycles
        let mut seen = vec![false; interp.len()];
        let mut stack = vec![self.point()];
        seen[self.point()] = true;
        while let Some(e) = stack.pop() {
            for (_, next) in interp.successors(e) {
                if !seen[next] {
                    seen[next] = true;
                    stack.push(next);
                }
            }
        }
        seen.iter().all(|&s| s)
    }

    pub(crate) fn require_tree(&self) -> Result<()> {
        if self.is_tree_shaped() {
            Ok(())
        } else {
            Err(Error::NotTree(format!(
                "element `{}` does not root a finite tree",
                self.point_id()
            )))
        }
    }

    /// Height of a tree-shaped interpretation (0 for a single node).
    pub fn tree_depth(&self) -> Result<usize> {
        self.require_tree()?;
        fn height(i: &Interpretation, e: usize) -> usize {
            i.successors(e).map(|(_, c)| 1 + height(i, c)).max().unwrap_or(0)
        }
        Ok(height(self.interpretation(), self.point()))
    }

    /// Isomorphism-invariant text of the tree below `element`.
    fn canonical_form(&self, element: usize) -> String {
        let interp = self.interpretation();
        let labels: Vec<&str> = interp.labels(element).collect();
        let mut children: Vec<String> = interp
            .successors(element)
            .map(|(r, c)| format!("{r}:{}", self.canonical_form(c)))
            .collect();
        children.sort();
        format!("[{}|{}]", labels.join(","), children.join(";"))
    }
}

/// Satisfiability of an EL⊥ concept by bottom propagation.
pub fn el_bot_satisfiable(c: &Concept) -> Result<bool> {
    require_dialect(c, Dialect::ElBot)?;
    Ok(propagate_bottom(c) != Concept::Bot)
}

pub(crate) fn require_dialect(c: &Concept, required: Dialect) -> Result<()> {
    if c.dialect() <= required {
        Ok(())
    } else {
        Err(Error::Dialect {
            concept: c.to_string(),
            required: required.as_str(),
        })
    }
}

fn propagate_bottom(c: &Concept) -> Concept {
    match c {
        Concept::And(items) => {
            let items: Vec<Concept> = items.iter().map(propagate_bottom).collect();
            if items.contains(&Concept::Bot) {
                Concept::Bot
            } else {
                Concept::And(items)
            }
        }
        Concept::Exists(r, filler) => match propagate_bottom(filler) {
            Concept::Bot => Concept::Bot,
            filler => Concept::Exists(r.clone(), Box::new(filler)),
        },
        other => other.clone(),
    }
}

/// The canonical model of a satisfiable EL⊥ concept.
///
/// Elements are named by their path from the root: `ε` for the root,
/// `r.0` for its first `r`-successor, `r.0/s.1` below that, and so on.
pub fn canonical_model(c: &Concept) -> Result<PointedInterpretation> {
    if !el_bot_satisfiable(c)? {
        return Err(Error::Unsatisfiable(c.to_string()));
    }
    let mut interp = Interpretation::empty();
    for name in c.signature().concept_names() {
        interp.declare_concept(name);
    }
    for role in c.signature().role_names() {
        interp.declare_role(role);
    }
    let root = interp.push_element("ε".to_owned());
    build_canonical(c, &mut interp, root, &mut BTreeMap::new());
    Ok(PointedInterpretation::from_index(interp, root))
}

// `counters` holds, per role, the next child index of `node`.
fn build_canonical(
    c: &Concept,
    interp: &mut Interpretation,
    node: usize,
    counters: &mut BTreeMap<String, usize>,
) {
    match c {
        Concept::Top => {}
        Concept::Name(a) => interp.label(a, node),
        Concept::And(items) => {
            for item in items {
                build_canonical(item, interp, node, counters);
            }
        }
        Concept::Exists(r, filler) => {
            let slot = counters.entry(r.clone()).or_insert(0);
            let local = format!("{r}.{slot}");
            *slot += 1;
            let id = if node == 0 {
                local
            } else {
                format!("{}/{local}", interp.element(node))
            };
            let child = interp.push_element(id);
            interp.connect(r, node, child);
            build_canonical(filler, interp, child, &mut BTreeMap::new());
        }
        Concept::Bot | Concept::Not(_) | Concept::Or(_) | Concept::Forall(..) => {
            unreachable!("checked to be a satisfiable EL⊥ concept")
        }
    }
}

/// The EL concept whose canonical model is (isomorphic to) the given tree.
///
/// Repeated identical subtrees yield repeated conjuncts, so the result is
/// not normalized in the deduplicating sense.
pub fn concept_of_tree(pi: &PointedInterpretation) -> Result<Concept> {
    pi.require_tree()?;
    fn describe(i: &Interpretation, e: usize) -> Concept {
        let atoms = i.labels(e).map(Concept::name);
        let edges: Vec<Concept> = i
            .successors(e)
            .map(|(r, c)| Concept::exists(r, describe(i, c)))
            .collect();
        conjunction_multiset(atoms.chain(edges))
    }
    Ok(describe(pi.interpretation(), pi.point()))
}

/// Isomorphism of rooted labeled trees.
pub fn isomorphic_trees(p1: &PointedInterpretation, p2: &PointedInterpretation) -> Result<bool> {
    p1.require_tree()?;
    p2.require_tree()?;
    Ok(p1.canonical_form(p1.point()) == p2.canonical_form(p2.point()))
}
