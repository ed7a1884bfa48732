//! Concept syntax trees for EL, EL-bottom and ALC, with structural
//! normalization and the usual syntactic measures.

use std::collections::BTreeSet;
use std::fmt;

use crate::signature::Signature;

/// A concept over some signature.
///
/// Conjunction and disjunction are n-ary. A concept is *normalized* when every
/// `And`/`Or` list is flattened, duplicate-free, sorted by canonical print and
/// has at least two members, `Top` never occurs inside a conjunction and `Bot`
/// never occurs inside a disjunction. [`Concept::normalize`] produces that form.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Concept {
    Top,
    Bot,
    Name(String),
    Not(Box<Concept>),
    And(Vec<Concept>),
    Or(Vec<Concept>),
    Exists(String, Box<Concept>),
    Forall(String, Box<Concept>),
}

/// The smallest description logic admitting a concept.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Dialect {
    El,
    ElBot,
    Alc,
}

impl Dialect {
    pub fn as_str(self) -> &'static str {
        match self {
            Dialect::El => "EL",
            Dialect::ElBot => "EL_BOT",
            Dialect::Alc => "ALC",
        }
    }
}

impl fmt::Display for Dialect {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl Concept {
    pub fn name(name: impl Into<String>) -> Concept {
        Concept::Name(name.into())
    }

    #[allow(clippy::should_implement_trait)]
    pub fn not(c: Concept) -> Concept {
        Concept::Not(Box::new(c))
    }

    pub fn exists(role: impl Into<String>, c: Concept) -> Concept {
        Concept::Exists(role.into(), Box::new(c))
    }

    pub fn forall(role: impl Into<String>, c: Concept) -> Concept {
        Concept::Forall(role.into(), Box::new(c))
    }

    /// Normalized conjunction of `items`.
    pub fn and(items: impl IntoIterator<Item = Concept>) -> Concept {
        Concept::And(items.into_iter().collect()).normalize()
    }

    /// Normalized disjunction of `items`.
    pub fn or(items: impl IntoIterator<Item = Concept>) -> Concept {
        Concept::Or(items.into_iter().collect()).normalize()
    }

    /// `exists r. ... exists r. filler` with `n` nestings; `n = 0` gives `filler`.
    pub fn exists_chain(role: &str, n: usize, filler: Concept) -> Concept {
        (0..n).fold(filler, |acc, _| Concept::exists(role, acc))
    }

    /// `forall r. ... forall r. filler` with `n` nestings.
    pub fn forall_chain(role: &str, n: usize, filler: Concept) -> Concept {
        (0..n).fold(filler, |acc, _| Concept::forall(role, acc))
    }

    pub fn normalize(&self) -> Concept {
        match self {
            Concept::Top | Concept::Bot | Concept::Name(_) => self.clone(),
            Concept::Not(c) => Concept::not(c.normalize()),
            Concept::Exists(r, c) => Concept::exists(r.clone(), c.normalize()),
            Concept::Forall(r, c) => Concept::forall(r.clone(), c.normalize()),
            Concept::And(items) => normalize_junction(items, true),
            Concept::Or(items) => normalize_junction(items, false),
        }
    }

    pub fn is_normalized(&self) -> bool {
        *self == self.normalize()
    }

    /// Role depth: quantifiers add one, boolean connectives take the maximum.
    pub fn depth(&self) -> usize {
        match self {
            Concept::Top | Concept::Bot | Concept::Name(_) => 0,
            Concept::Not(c) => c.depth(),
            Concept::And(items) | Concept::Or(items) => items.iter().map(Concept::depth).max().unwrap_or(0),
            Concept::Exists(_, c) | Concept::Forall(_, c) => 1 + c.depth(),
        }
    }

    /// The concept and role names occurring in the concept.
    pub fn signature(&self) -> Signature {
        let mut sig = Signature::default();
        self.collect_names(&mut sig);
        sig
    }

    fn collect_names(&self, sig: &mut Signature) {
        match self {
            Concept::Top | Concept::Bot => {}
            Concept::Name(a) => sig.insert_concept(a),
            Concept::Not(c) => c.collect_names(sig),
            Concept::And(items) | Concept::Or(items) => items.iter().for_each(|c| c.collect_names(sig)),
            Concept::Exists(r, c) | Concept::Forall(r, c) => {
                sig.insert_role(r);
                c.collect_names(sig);
            }
        }
    }

    pub fn dialect(&self) -> Dialect {
        match self {
            Concept::Top | Concept::Name(_) => Dialect::El,
            Concept::Bot => Dialect::ElBot,
            Concept::Not(_) | Concept::Or(_) | Concept::Forall(..) => Dialect::Alc,
            Concept::And(items) => items.iter().map(Concept::dialect).max().unwrap_or(Dialect::El),
            Concept::Exists(_, c) => c.dialect(),
        }
    }

    /// Every concept occurring in `self`, `self` included.
    pub fn subconcepts(&self) -> BTreeSet<Concept> {
        let mut out = BTreeSet::new();
        self.collect_subconcepts(&mut out);
        out
    }

    fn collect_subconcepts(&self, out: &mut BTreeSet<Concept>) {
        if !out.insert(self.clone()) {
            return;
        }
        match self {
            Concept::Top | Concept::Bot | Concept::Name(_) => {}
            Concept::Not(c) | Concept::Exists(_, c) | Concept::Forall(_, c) => c.collect_subconcepts(out),
            Concept::And(items) | Concept::Or(items) => items.iter().for_each(|c| c.collect_subconcepts(out)),
        }
    }

    /// Top-level conjuncts (a non-conjunction is its own single conjunct).
    pub fn conjuncts(&self) -> &[Concept] {
        match self {
            Concept::And(items) => items,
            Concept::Top => &[],
            other => std::slice::from_ref(other),
        }
    }

    /// Top-level disjuncts (a non-disjunction is its own single disjunct).
    pub fn disjuncts(&self) -> &[Concept] {
        match self {
            Concept::Or(items) => items,
            Concept::Bot => &[],
            other => std::slice::from_ref(other),
        }
    }

    /// Negation normal form: negation is pushed down to concept names.
    pub fn nnf(&self) -> Concept {
        match self {
            Concept::Top | Concept::Bot | Concept::Name(_) => self.clone(),
            Concept::And(items) => Concept::And(items.iter().map(Concept::nnf).collect()),
            Concept::Or(items) => Concept::Or(items.iter().map(Concept::nnf).collect()),
            Concept::Exists(r, c) => Concept::exists(r.clone(), c.nnf()),
            Concept::Forall(r, c) => Concept::forall(r.clone(), c.nnf()),
            Concept::Not(inner) => match inner.as_ref() {
                Concept::Top => Concept::Bot,
                Concept::Bot => Concept::Top,
                Concept::Name(_) => self.clone(),
                Concept::Not(c) => c.nnf(),
                Concept::And(items) => {
                    Concept::Or(items.iter().map(|c| Concept::not(c.clone()).nnf()).collect())
                }
                Concept::Or(items) => {
                    Concept::And(items.iter().map(|c| Concept::not(c.clone()).nnf()).collect())
                }
                Concept::Exists(r, c) => Concept::forall(r.clone(), Concept::not((**c).clone()).nnf()),
                Concept::Forall(r, c) => Concept::exists(r.clone(), Concept::not((**c).clone()).nnf()),
            },
        }
    }
}

/// Conjunction that keeps repeated members.
///
/// Flattens and sorts like [`Concept::normalize`] but does not deduplicate, so
/// `exists r.top and exists r.top` keeps both conjuncts. Used where the
/// number of successors matters (canonical models of trees).
pub fn conjunction_multiset(items: impl IntoIterator<Item = Concept>) -> Concept {
    let mut flat = Vec::new();
    for item in items {
        match item {
            Concept::Top => {}
            Concept::And(inner) => flat.extend(inner),
            other => flat.push(other),
        }
    }
    flat.sort_by_cached_key(|c| c.to_string());
    match flat.len() {
        0 => Concept::Top,
        1 => flat.pop().unwrap(),
        _ => Concept::And(flat),
    }
}

fn normalize_junction(items: &[Concept], conjunction: bool) -> Concept {
    let (unit, absorbing) = if conjunction {
        (Concept::Top, Concept::Bot)
    } else {
        (Concept::Bot, Concept::Top)
    };
    let mut flat: Vec<Concept> = Vec::with_capacity(items.len());
    for item in items {
        let item = item.normalize();
        match item {
            Concept::And(inner) if conjunction => flat.extend(inner),
            Concept::Or(inner) if !conjunction => flat.extend(inner),
            c if c == unit => {}
            c if c == absorbing => return absorbing,
            c => flat.push(c),
        }
    }
    let mut keyed: Vec<(String, Concept)> = flat.into_iter().map(|c| (c.to_string(), c)).collect();
    keyed.sort_by(|a, b| a.0.cmp(&b.0));
    keyed.dedup_by(|a, b| a.0 == b.0);
    let mut flat: Vec<Concept> = keyed.into_iter().map(|(_, c)| c).collect();
    match flat.len() {
        0 => unit,
        1 => flat.pop().unwrap(),
        _ if conjunction => Concept::And(flat),
        _ => Concept::Or(flat),
    }
}
