//! Random generators and independent oracles shared by the integration
//! tests and the acceptance run.
#![allow(dead_code)]

use std::collections::BTreeMap;

use model_change::{Concept, Interpretation, PointedInterpretation, Signature};
use rand::seq::SliceRandom;
use rand::Rng;

pub fn sig(concepts: &[&str], roles: &[&str]) -> Signature {
    Signature::new(concepts.iter().copied(), roles.iter().copied()).unwrap()
}

pub fn c(text: &str) -> Concept {
    text.parse().unwrap()
}

fn names(sig: &Signature) -> (Vec<String>, Vec<String>) {
    (
        sig.concept_names().iter().cloned().collect(),
        sig.role_names().iter().cloned().collect(),
    )
}

/// A random ALC concept of role depth at most `depth`.
pub fn random_alc<R: Rng>(rng: &mut R, sig: &Signature, depth: usize) -> Concept {
    let (atoms, roles) = names(sig);
    alc(rng, &atoms, &roles, depth, 3)
}

fn alc<R: Rng>(rng: &mut R, atoms: &[String], roles: &[String], depth: usize, size: usize) -> Concept {
    let leaf = |rng: &mut R| match rng.gen_range(0..10) {
        0 => Concept::Top,
        1 => Concept::Bot,
        _ if atoms.is_empty() => Concept::Top,
        2..=3 => Concept::not(Concept::name(atoms.choose(rng).unwrap().as_str())),
        _ => Concept::name(atoms.choose(rng).unwrap().as_str()),
    };
    if size == 0 {
        return leaf(rng);
    }
    let modal = depth > 0 && !roles.is_empty();
    match rng.gen_range(0..10) {
        0..=1 => leaf(rng),
        2 => Concept::not(alc(rng, atoms, roles, depth, size - 1)),
        3..=4 => {
            let n = rng.gen_range(2..=3);
            Concept::and(
                (0..n)
                    .map(|_| alc(rng, atoms, roles, depth, size - 1))
                    .collect::<Vec<_>>(),
            )
        }
        5..=6 => {
            let n = rng.gen_range(2..=3);
            Concept::or(
                (0..n)
                    .map(|_| alc(rng, atoms, roles, depth, size - 1))
                    .collect::<Vec<_>>(),
            )
        }
        7..=8 if modal => {
            let r = roles.choose(rng).unwrap().clone();
            Concept::exists(r, alc(rng, atoms, roles, depth - 1, size))
        }
        _ if modal => {
            let r = roles.choose(rng).unwrap().clone();
            Concept::forall(r, alc(rng, atoms, roles, depth - 1, size))
        }
        _ => leaf(rng),
    }
}

/// A random EL concept of role depth at most `depth`, with `⊥` occasionally
/// when `bottom` is set.
pub fn random_el<R: Rng>(rng: &mut R, sig: &Signature, depth: usize, bottom: bool) -> Concept {
    let (atoms, roles) = names(sig);
    el(rng, &atoms, &roles, depth, bottom)
}

fn el<R: Rng>(rng: &mut R, atoms: &[String], roles: &[String], depth: usize, bottom: bool) -> Concept {
    if bottom && rng.gen_range(0..12) == 0 {
        return Concept::Bot;
    }
    let mut parts = Vec::new();
    for a in atoms {
        if rng.gen_bool(0.4) {
            parts.push(Concept::name(a.as_str()));
        }
    }
    if depth > 0 && !roles.is_empty() {
        for _ in 0..rng.gen_range(0..=2) {
            let r = roles.choose(rng).unwrap().clone();
            parts.push(Concept::exists(r, el(rng, atoms, roles, depth - 1, bottom)));
        }
    }
    Concept::and(parts)
}

/// A random finite tree of depth at most `depth` and branching at most
/// `branching`, pointed at its root.
pub fn random_tree<R: Rng>(
    rng: &mut R,
    sig: &Signature,
    depth: usize,
    branching: usize,
) -> PointedInterpretation {
    let (atoms, roles) = names(sig);
    let mut nodes: Vec<(String, Vec<String>)> = Vec::new();
    let mut edges: Vec<(String, String, String)> = Vec::new();
    grow(rng, &atoms, &roles, depth, branching, &mut nodes, &mut edges);
    let mut i = Interpretation::new(nodes.iter().map(|(id, _)| id.clone())).unwrap();
    for (id, labels) in &nodes {
        for a in labels {
            i.add_concept(a, id).unwrap();
        }
    }
    for (r, from, to) in &edges {
        i.add_edge(r, from, to).unwrap();
    }
    PointedInterpretation::new(i, "n0").unwrap()
}

fn grow<R: Rng>(
    rng: &mut R,
    atoms: &[String],
    roles: &[String],
    depth: usize,
    branching: usize,
    nodes: &mut Vec<(String, Vec<String>)>,
    edges: &mut Vec<(String, String, String)>,
) -> String {
    let id = format!("n{}", nodes.len());
    let labels = atoms.iter().filter(|_| rng.gen_bool(0.5)).cloned().collect();
    nodes.push((id.clone(), labels));
    if depth > 0 && !roles.is_empty() {
        for _ in 0..rng.gen_range(0..=branching) {
            let r = roles.choose(rng).unwrap().clone();
            let child = grow(rng, atoms, roles, depth - 1, branching, nodes, edges);
            edges.push((r, id.clone(), child));
        }
    }
    id
}

/// A random finite interpretation, possibly cyclic, pointed at its first
/// element.
pub fn random_graph<R: Rng>(rng: &mut R, sig: &Signature, size: usize) -> PointedInterpretation {
    let (atoms, roles) = names(sig);
    let ids: Vec<String> = (0..size).map(|i| format!("e{i}")).collect();
    let mut i = Interpretation::new(ids.clone()).unwrap();
    for id in &ids {
        for a in &atoms {
            if rng.gen_bool(0.5) {
                i.add_concept(a, id).unwrap();
            }
        }
        for r in &roles {
            for to in &ids {
                if rng.gen_bool(0.35) {
                    i.add_edge(r, id, to).unwrap();
                }
            }
        }
    }
    PointedInterpretation::new(i, "e0").unwrap()
}

/// ALC satisfiability by brute force over truth assignments: guess the value
/// of every name and modal subformula at the top boolean level, then recurse
/// into one successor per existential demand.
pub fn brute_satisfiable(conjuncts: &[Concept]) -> bool {
    let mut literals: Vec<Concept> = Vec::new();
    for c in conjuncts {
        collect_literals(c, &mut literals);
    }
    literals.sort();
    literals.dedup();
    if literals.len() > 20 {
        panic!("too many literals for brute force");
    }
    'assignment: for mask in 0u32..1 << literals.len() {
        let value = |c: &Concept| {
            literals
                .iter()
                .position(|l| l == c)
                .map(|i| mask >> i & 1 == 1)
                .unwrap()
        };
        if !conjuncts.iter().all(|c| boolean_value(c, &value)) {
            continue;
        }
        let mut universal: BTreeMap<&str, Vec<Concept>> = BTreeMap::new();
        let mut demands: Vec<(&str, Concept)> = Vec::new();
        for (i, l) in literals.iter().enumerate() {
            let on = mask >> i & 1 == 1;
            match (l, on) {
                (Concept::Exists(r, x), true) => demands.push((r, (**x).clone())),
                (Concept::Exists(r, x), false) => {
                    universal.entry(r).or_default().push(Concept::not((**x).clone()))
                }
                (Concept::Forall(r, x), true) => universal.entry(r).or_default().push((**x).clone()),
                (Concept::Forall(r, x), false) => demands.push((r, Concept::not((**x).clone()))),
                _ => {}
            }
        }
        for (r, demand) in demands {
            let mut node = universal.get(r).cloned().unwrap_or_default();
            node.push(demand);
            if !brute_satisfiable(&node) {
                continue 'assignment;
            }
        }
        return true;
    }
    false
}

fn collect_literals(c: &Concept, out: &mut Vec<Concept>) {
    match c {
        Concept::Top | Concept::Bot => {}
        Concept::Name(_) | Concept::Exists(..) | Concept::Forall(..) => out.push(c.clone()),
        Concept::Not(x) => collect_literals(x, out),
        Concept::And(xs) | Concept::Or(xs) => xs.iter().for_each(|x| collect_literals(x, out)),
    }
}

fn boolean_value(c: &Concept, value: &dyn Fn(&Concept) -> bool) -> bool {
    match c {
        Concept::Top => true,
        Concept::Bot => false,
        Concept::Not(x) => !boolean_value(x, value),
        Concept::And(xs) => xs.iter().all(|x| boolean_value(x, value)),
        Concept::Or(xs) => xs.iter().any(|x| boolean_value(x, value)),
        _ => value(c),
    }
}

/// The depth-`k` characteristic concept of an element, built directly from
/// the interpretation: two elements are k-bisimilar over `sig` iff one
/// satisfies the other's concept.
pub fn k_characteristic(pi: &PointedInterpretation, sig: &Signature, k: usize) -> Concept {
    fn go(i: &Interpretation, e: usize, sig: &Signature, k: usize) -> Concept {
        let mut parts: Vec<Concept> = sig
            .concept_names()
            .iter()
            .map(|a| {
                if i.has_label(a, e) {
                    Concept::name(a.as_str())
                } else {
                    Concept::not(Concept::name(a.as_str()))
                }
            })
            .collect();
        if k > 0 {
            for r in sig.role_names() {
                let children: Vec<Concept> = i.role_successors(r, e).map(|s| go(i, s, sig, k - 1)).collect();
                parts.extend(children.iter().map(|ch| Concept::exists(r.as_str(), ch.clone())));
                parts.push(Concept::forall(r.as_str(), Concept::or(children)));
            }
        }
        Concept::and(parts)
    }
    go(pi.interpretation(), pi.point(), sig, k)
}

/// `T₀ = 2^nc`, `Tᵢ₊₁ = 2^nc · 2^(nr·Tᵢ)`, by repeated doubling.
pub fn type_count(nc: u32, nr: u32, k: usize) -> u128 {
    let mut t: u128 = 1 << nc;
    for _ in 0..k {
        let mut next: u128 = 1 << nc;
        for _ in 0..nr as u128 * t {
            next *= 2;
        }
        t = next;
    }
    t
}

use model_change::oracle::{FiniteUniverse, FrFamily, ModelSet, UniverseLimits};

/// The small universes and fragments the oracle suites sample from.
pub fn fragments() -> Vec<(String, FiniteUniverse, FrFamily)> {
    let mut out = Vec::new();
    let one = sig(&["A"], &["r"]);
    let u = FiniteUniverse::new(&one, 1, &UniverseLimits::default()).unwrap();
    out.push(("ALC ({A},{r}) k=1".to_string(), u.clone(), FrFamily::alc(&u)));
    out.push((
        "EL ({A},{r}) k=1".to_string(),
        u.clone(),
        FrFamily::el(&u, 1, true),
    ));
    let u = FiniteUniverse::new(&sig(&[], &["r"]), 2, &UniverseLimits::default()).unwrap();
    out.push(("EL (∅,{r}) k=2".to_string(), u.clone(), FrFamily::el(&u, 2, true)));
    let u = FiniteUniverse::new(&sig(&["A", "B"], &[]), 0, &UniverseLimits::default()).unwrap();
    out.push(("ALC ({A,B},∅) k=0".to_string(), u.clone(), FrFamily::alc(&u)));
    out.push((
        "EL ({A,B},∅) k=0".to_string(),
        u.clone(),
        FrFamily::el(&u, 0, true),
    ));
    let u = FiniteUniverse::new(&one, 2, &UniverseLimits::default()).unwrap();
    out.push((
        "EL ({A},{r}) k=2".to_string(),
        u.clone(),
        FrFamily::el(&u, 2, true),
    ));
    let u = FiniteUniverse::new(&sig(&["A", "B", "C"], &["r"]), 0, &UniverseLimits::budget(8)).unwrap();
    out.push((
        "EL ({A,B,C},{r}) k=0".to_string(),
        u.clone(),
        FrFamily::el(&u, 2, true),
    ));
    out
}

/// A random subset of the universe with about `k` members.
pub fn random_subset<R: Rng>(rng: &mut R, n: usize, k: usize) -> ModelSet {
    ModelSet::from_indices(n, (0..k).map(|_| rng.gen_range(0..n)))
}

/// A random revision instance: a representable base and disjoint sets of
/// models to incorporate and to remove.
pub fn random_instance<R: Rng>(rng: &mut R, fr: &FrFamily) -> (ModelSet, ModelSet, ModelSet) {
    let n = fr.universe_size();
    let base = match fr {
        FrFamily::AllSubsets { .. } => {
            let k = rng.gen_range(0..=n);
            random_subset(rng, n, k)
        }
        FrFamily::Explicit { sets, .. } => sets.choose(rng).unwrap().clone(),
    };
    let (p, m) = (rng.gen_range(0..=2), rng.gen_range(0..=2));
    let plus = random_subset(rng, n, p);
    let minus = random_subset(rng, n, m).difference(&plus);
    (base, plus, minus)
}
