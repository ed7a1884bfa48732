use std::collections::{HashMap, VecDeque};

use crate::concept::Concept;
use crate::error::{Error, Result};

use super::{FiniteUniverse, ModelSet};

/// Above this universe size the all-subsets family is handled only through
/// closed forms and is never listed.
pub const MAX_LISTED_UNIVERSE: usize = 20;

/// The finitely representable model sets of a fragment, over a universe.
#[derive(Clone, Debug)]
pub enum FrFamily {
    /// Every subset is representable, as for ALC over depth-bounded trees
    /// (a union of classes is the disjunction of their characteristic
    /// concepts).
    AllSubsets { size: usize },
    /// An explicit list, each set with a concept defining it.
    Explicit {
        size: usize,
        sets: Vec<ModelSet>,
        witnesses: Vec<Concept>,
    },
}

impl FrFamily {
    pub fn alc(u: &FiniteUniverse) -> FrFamily {
        FrFamily::AllSubsets { size: u.len() }
    }

    /// Model sets of the EL concepts over the universe's signature of depth
    /// at most `depth`, with `⊥` added when `with_bottom`.
    ///
    /// Works on model sets rather than syntax: a level-`j` set is an
    /// intersection of atom extensions and of `∃r.X` extensions for level
    /// `j-1` sets `X`, and the extension of `∃r.X` over the universe only
    /// depends on `X`. Each set carries the first concept found for it.
    pub fn el(u: &FiniteUniverse, depth: usize, with_bottom: bool) -> FrFamily {
        let n = u.len();
        let sig = u.signature();
        let atoms: Vec<(ModelSet, Concept)> = sig
            .concept_names()
            .iter()
            .map(|a| {
                let c = Concept::name(a.as_str());
                let ext = ModelSet::from_indices(n, (0..n).filter(|&i| crate::model_check(u.model(i), &c)));
                (ext, c)
            })
            .collect();
        let roles: Vec<&String> = sig.role_names().iter().collect();

        let mut level = intersection_closure(n, &atoms);
        for _ in 0..depth {
            let mut generators = atoms.clone();
            for (slot, role) in roles.iter().enumerate() {
                for (set, concept) in &level {
                    let ext = ModelSet::from_indices(
                        n,
                        (0..n).filter(|&i| u.successor_classes(i)[slot].iter().any(|&c| set.contains(c))),
                    );
                    generators.push((ext, Concept::exists(role.as_str(), concept.clone())));
                }
            }
            level = intersection_closure(n, &generators);
        }
        let (mut sets, mut witnesses): (Vec<ModelSet>, Vec<Concept>) = level.into_iter().unzip();
        if with_bottom && !sets.iter().any(ModelSet::is_empty) {
            sets.push(ModelSet::empty(n));
            witnesses.push(Concept::Bot);
        }
        FrFamily::Explicit {
            size: n,
            sets,
            witnesses,
        }
    }

    pub fn universe_size(&self) -> usize {
        match self {
            FrFamily::AllSubsets { size } | FrFamily::Explicit { size, .. } => *size,
        }
    }

    pub fn contains(&self, m: &ModelSet) -> bool {
        match self {
            FrFamily::AllSubsets { size } => m.universe_size() == *size,
            FrFamily::Explicit { sets, .. } => sets.contains(m),
        }
    }

    /// Number of members, when it fits in a `u128`.
    pub fn len(&self) -> Option<u128> {
        match self {
            FrFamily::AllSubsets { size } => (*size < 128).then(|| 1u128 << size),
            FrFamily::Explicit { sets, .. } => Some(sets.len() as u128),
        }
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// All members; the all-subsets family is listed only for small
    /// universes.
    pub fn members(&self) -> Result<Vec<ModelSet>> {
        match self {
            FrFamily::AllSubsets { size } if *size <= MAX_LISTED_UNIVERSE => Ok((0..1u64 << size)
                .map(|mask| ModelSet::from_mask(*size, mask))
                .collect()),
            FrFamily::AllSubsets { size } => Err(Error::Budget {
                count: format!("2^{size}"),
                limit: 1 << MAX_LISTED_UNIVERSE,
            }),
            FrFamily::Explicit { sets, .. } => Ok(sets.clone()),
        }
    }

    /// A concept defining `m`, for explicit families.
    pub fn witness(&self, m: &ModelSet) -> Option<&Concept> {
        match self {
            FrFamily::AllSubsets { .. } => None,
            FrFamily::Explicit { sets, witnesses, .. } => {
                sets.iter().position(|s| s == m).map(|i| &witnesses[i])
            }
        }
    }
}

// closure of {full} under intersection with the generators, in breadth-first
// order so that each set keeps a concept with few conjuncts
fn intersection_closure(n: usize, generators: &[(ModelSet, Concept)]) -> Vec<(ModelSet, Concept)> {
    let mut seen: HashMap<ModelSet, usize> = HashMap::new();
    let mut out: Vec<(ModelSet, Concept)> = Vec::new();
    let mut queue = VecDeque::new();
    let full = ModelSet::full(n);
    seen.insert(full.clone(), 0);
    out.push((full.clone(), Concept::Top));
    queue.push_back(0);
    while let Some(at) = queue.pop_front() {
        let (set, concept) = out[at].clone();
        for (gen, gen_concept) in generators {
            let next = set.intersection(gen);
            if seen.contains_key(&next) {
                continue;
            }
            let witness = Concept::and([concept.clone(), gen_concept.clone()]);
            seen.insert(next.clone(), out.len());
            queue.push_back(out.len());
            out.push((next, witness));
        }
    }
    out
}

/// `⊆`-minimal members of `fr` containing `m`.
pub fn min_fr_sups(m: &ModelSet, fr: &FrFamily) -> Vec<ModelSet> {
    match fr {
        FrFamily::AllSubsets { .. } => vec![m.clone()],
        FrFamily::Explicit { sets, .. } => {
            let above: Vec<&ModelSet> = sets.iter().filter(|s| m.is_subset(s)).collect();
            let mut out: Vec<ModelSet> = above
                .iter()
                .filter(|s| !above.iter().any(|t| t.is_proper_subset(s)))
                .map(|s| (*s).clone())
                .collect();
            out.sort_by(ModelSet::cmp_lex);
            out
        }
    }
}

/// `⊆`-maximal members of `fr` contained in `m`.
pub fn max_fr_subs(m: &ModelSet, fr: &FrFamily) -> Vec<ModelSet> {
    match fr {
        FrFamily::AllSubsets { .. } => vec![m.clone()],
        FrFamily::Explicit { sets, .. } => {
            let below: Vec<&ModelSet> = sets.iter().filter(|s| s.is_subset(m)).collect();
            let mut out: Vec<ModelSet> = below
                .iter()
                .filter(|s| !below.iter().any(|t| s.is_proper_subset(t)))
                .map(|s| (*s).clone())
                .collect();
            out.sort_by(ModelSet::cmp_lex);
            out
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::{enumerate_universe, mod_set};
    use crate::signature::Signature;

    fn sig(concepts: &[&str], roles: &[&str]) -> Signature {
        Signature::new(concepts.iter().copied(), roles.iter().copied()).unwrap()
    }

    #[test]
    fn el_family_over_one_name() {
        let u = enumerate_universe(&sig(&["A"], &[]), 0).unwrap();
        let fr = FrFamily::el(&u, 0, true);
        let members = fr.members().unwrap();
        assert_eq!(members.len(), 3);
        let a = mod_set(&Concept::name("A"), &u).unwrap();
        assert!(fr.contains(&a));
        assert!(!fr.contains(&a.complement()));
        assert_eq!(fr.witness(&a), Some(&Concept::name("A")));
    }

    #[test]
    fn empty_signature() {
        let u = enumerate_universe(&sig(&[], &[]), 1).unwrap();
        let fr = FrFamily::el(&u, 1, true);
        assert_eq!(fr.members().unwrap().len(), 2);
        assert_eq!(FrFamily::alc(&u).members().unwrap().len(), 2);
    }

    #[test]
    fn chain_reception_minimum() {
        let u = enumerate_universe(&sig(&[], &["r"]), 2).unwrap();
        let fr = FrFamily::el(&u, 2, true);
        let r3 = mod_set(&Concept::exists_chain("r", 3, Concept::Top), &u).unwrap();
        assert!(r3.is_empty());
        let target = r3.union(&ModelSet::from_indices(
            u.len(),
            [u.class_of(&crate::interpretation::chain_model(1, "r")).unwrap()],
        ));
        let sups = min_fr_sups(&target, &fr);
        assert_eq!(sups, vec![mod_set(&"exists r.top".parse().unwrap(), &u).unwrap()]);
    }

    #[test]
    fn bounds_of_members() {
        let u = enumerate_universe(&sig(&["A"], &["r"]), 1).unwrap();
        let fr = FrFamily::el(&u, 1, true);
        for m in fr.members().unwrap() {
            assert_eq!(min_fr_sups(&m, &fr), vec![m.clone()]);
            assert_eq!(max_fr_subs(&m, &fr), vec![m.clone()]);
        }
        assert_eq!(max_fr_subs(&u.empty_set(), &fr), vec![u.empty_set()]);
        let alc = FrFamily::alc(&u);
        let odd = ModelSet::from_indices(u.len(), [1, 3]);
        assert_eq!(min_fr_sups(&odd, &alc), vec![odd.clone()]);
    }
}
