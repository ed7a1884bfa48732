//! Concept satisfiability for ALC without a TBox.
//!
//! Concepts are put in negation normal form and hash-consed into a node
//! table. A node label is a sorted set of node ids; the search saturates
//! conjunctions, branches on the disjunction with the fewest open disjuncts,
//! and finally spawns one successor per existential, each carrying the
//! fillers of the matching universal restrictions. Results are cached per
//! saturated label.

use std::collections::{BTreeSet, HashMap};

use crate::concept::Concept;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
enum Node {
    Top,
    Bot,
    Lit(String, bool),
    And(Vec<u32>),
    Or(Vec<u32>),
    Some(String, u32),
    All(String, u32),
}

#[derive(Default)]
struct Tableau {
    nodes: Vec<Node>,
    ids: HashMap<Node, u32>,
    complement: HashMap<u32, u32>,
    cache: HashMap<Vec<u32>, bool>,
}

impl Tableau {
    fn intern(&mut self, node: Node) -> u32 {
        if let Some(&id) = self.ids.get(&node) {
            return id;
        }
        let id = self.nodes.len() as u32;
        self.nodes.push(node.clone());
        self.ids.insert(node, id);
        id
    }

    // `c` must be in negation normal form
    fn add(&mut self, c: &Concept) -> u32 {
        let node = match c {
            Concept::Top => Node::Top,
            Concept::Bot => Node::Bot,
            Concept::Name(a) => Node::Lit(a.clone(), true),
            Concept::Not(inner) => match inner.as_ref() {
                Concept::Name(a) => Node::Lit(a.clone(), false),
                other => unreachable!("not in negation normal form: {other}"),
            },
            Concept::And(items) => {
                let mut ids: Vec<u32> = items.iter().map(|c| self.add(c)).collect();
                ids.sort_unstable();
                ids.dedup();
                Node::And(ids)
            }
            Concept::Or(items) => {
                let mut ids: Vec<u32> = items.iter().map(|c| self.add(c)).collect();
                ids.sort_unstable();
                ids.dedup();
                Node::Or(ids)
            }
            Concept::Exists(r, filler) => Node::Some(r.clone(), self.add(filler)),
            Concept::Forall(r, filler) => Node::All(r.clone(), self.add(filler)),
        };
        let id = self.intern(node.clone());
        if let Node::Lit(a, polarity) = node {
            let other = self.intern(Node::Lit(a, !polarity));
            self.complement.insert(id, other);
            self.complement.insert(other, id);
        }
        id
    }

    fn clashes(&self, label: &BTreeSet<u32>, id: u32) -> bool {
        matches!(self.nodes[id as usize], Node::Bot)
            || self.complement.get(&id).is_some_and(|c| label.contains(c))
    }

    /// Adds `start` and everything forced by conjunction. Returns `None` on
    /// a clash.
    fn saturate(&self, label: &mut BTreeSet<u32>, start: &[u32]) -> Option<()> {
        let mut stack: Vec<u32> = start.to_vec();
        while let Some(id) = stack.pop() {
            if self.clashes(label, id) {
                return None;
            }
            if !label.insert(id) {
                continue;
            }
            if let Node::And(items) = &self.nodes[id as usize] {
                stack.extend(items.iter().copied());
            }
        }
        Some(())
    }

    fn satisfiable(&mut self, start: &[u32]) -> bool {
        let mut label = BTreeSet::new();
        if self.saturate(&mut label, start).is_none() {
            return false;
        }
        self.search(label)
    }

    fn search(&mut self, label: BTreeSet<u32>) -> bool {
        let key: Vec<u32> = label.iter().copied().collect();
        if let Some(&known) = self.cache.get(&key) {
            return known;
        }
        let result = self.expand(&label);
        self.cache.insert(key, result);
        result
    }

    fn expand(&mut self, label: &BTreeSet<u32>) -> bool {
        // pick the pending disjunction with the fewest viable disjuncts
        let mut choice: Option<Vec<u32>> = None;
        for &id in label {
            if let Node::Or(items) = &self.nodes[id as usize] {
                if items.iter().any(|d| label.contains(d)) {
                    continue;
                }
                let open: Vec<u32> = items
                    .iter()
                    .copied()
                    .filter(|&d| !self.clashes(label, d))
                    .collect();
                if open.is_empty() {
                    return false;
                }
                if choice.as_ref().is_none_or(|c| open.len() < c.len()) {
                    choice = Some(open);
                }
            }
        }
        if let Some(open) = choice {
            for d in open {
                let mut next = label.clone();
                if self.saturate(&mut next, &[d]).is_some() && self.search(next) {
                    return true;
                }
            }
            return false;
        }
        let successors: Vec<Vec<u32>> = label
            .iter()
            .filter_map(|&id| match &self.nodes[id as usize] {
                Node::Some(r, filler) => {
                    let mut start = vec![*filler];
                    for &other in label {
                        if let Node::All(r2, d) = &self.nodes[other as usize] {
                            if r2 == r {
                                start.push(*d);
                            }
                        }
                    }
                    Some(start)
                }
                _ => None,
            })
            .collect();
        successors.iter().all(|start| self.satisfiable(start))
    }
}

/// Whether some pointed interpretation satisfies `c`.
pub fn alc_satisfiable(c: &Concept) -> bool {
    let mut tableau = Tableau::default();
    let root = tableau.add(&c.nnf());
    tableau.satisfiable(&[root])
}

/// `c` entails `d`: every model of `c` is a model of `d`.
pub fn alc_entails(c: &Concept, d: &Concept) -> bool {
    !alc_satisfiable(&Concept::And(vec![c.clone(), Concept::not(d.clone())]))
}

pub fn equivalent(c: &Concept, d: &Concept) -> bool {
    alc_entails(c, d) && alc_entails(d, c)
}
