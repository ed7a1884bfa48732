//! Finite interpretations, pointed interpretations and concept evaluation.

mod tree;

use std::collections::{BTreeMap, BTreeSet, HashMap};

use fixedbitset::FixedBitSet;
use serde::{Deserialize, Serialize};

use crate::concept::Concept;
use crate::error::{Error, Result};
use crate::signature::Signature;

pub(crate) use tree::require_dialect;
pub use tree::{canonical_model, chain_model, concept_of_tree, el_bot_satisfiable, isomorphic_trees, unfold};

/// A finite interpretation with a non-empty, ordered domain.
///
/// Elements are opaque string ids; internally they are addressed by their
/// position in the domain. Names without an entry have empty extension.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Interpretation {
    elements: Vec<String>,
    index: HashMap<String, usize>,
    concepts: BTreeMap<String, BTreeSet<usize>>,
    roles: BTreeMap<String, BTreeSet<(usize, usize)>>,
}

impl Interpretation {
    pub fn new<I>(domain: I) -> Result<Self>
    where
        I: IntoIterator,
        I::Item: Into<String>,
    {
        let mut interp = Interpretation::empty();
        for id in domain {
            let id = id.into();
            if interp.index.contains_key(&id) {
                return Err(Error::Interpretation {
                    key: "domain".into(),
                    element: id,
                    reason: "duplicate element".into(),
                });
            }
            interp.push_element(id);
        }
        if interp.elements.is_empty() {
            return Err(Error::Interpretation {
                key: "domain".into(),
                element: String::new(),
                reason: "the domain must be non-empty".into(),
            });
        }
        Ok(interp)
    }

    pub(crate) fn empty() -> Self {
        Interpretation {
            elements: Vec::new(),
            index: HashMap::new(),
            concepts: BTreeMap::new(),
            roles: BTreeMap::new(),
        }
    }

    pub(crate) fn push_element(&mut self, id: String) -> usize {
        let idx = self.elements.len();
        self.index.insert(id.clone(), idx);
        self.elements.push(id);
        idx
    }

    pub(crate) fn label(&mut self, name: &str, element: usize) {
        self.concepts.entry(name.to_owned()).or_default().insert(element);
    }

    pub(crate) fn connect(&mut self, role: &str, from: usize, to: usize) {
        self.roles.entry(role.to_owned()).or_default().insert((from, to));
    }

    fn lookup(&self, key: &str, element: &str) -> Result<usize> {
        self.index
            .get(element)
            .copied()
            .ok_or_else(|| Error::Interpretation {
                key: key.to_owned(),
                element: element.to_owned(),
                reason: "element is not in the domain".into(),
            })
    }

    /// Adds `element` to the extension of concept name `name`.
    pub fn add_concept(&mut self, name: &str, element: &str) -> Result<()> {
        let idx = self.lookup(name, element)?;
        self.label(name, idx);
        Ok(())
    }

    /// Adds the pair `(from, to)` to the extension of role name `role`.
    pub fn add_edge(&mut self, role: &str, from: &str, to: &str) -> Result<()> {
        let from = self.lookup(role, from)?;
        let to = self.lookup(role, to)?;
        self.connect(role, from, to);
        Ok(())
    }

    /// Registers a name with empty extension (affects only `signature`).
    pub fn declare_concept(&mut self, name: &str) {
        self.concepts.entry(name.to_owned()).or_default();
    }

    pub fn declare_role(&mut self, role: &str) {
        self.roles.entry(role.to_owned()).or_default();
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[String] {
        &self.elements
    }

    pub fn element(&self, idx: usize) -> &str {
        &self.elements[idx]
    }

    pub fn index_of(&self, id: &str) -> Option<usize> {
        self.index.get(id).copied()
    }

    pub fn has_label(&self, name: &str, element: usize) -> bool {
        self.concepts.get(name).is_some_and(|ext| ext.contains(&element))
    }

    /// Concept names whose extension contains `element`.
    pub fn labels(&self, element: usize) -> impl Iterator<Item = &str> + '_ {
        self.concepts
            .iter()
            .filter(move |(_, ext)| ext.contains(&element))
            .map(|(name, _)| name.as_str())
    }

    /// Outgoing edges of `element` as `(role, successor)`, ordered by role.
    pub fn successors(&self, element: usize) -> impl Iterator<Item = (&str, usize)> + '_ {
        self.roles.iter().flat_map(move |(role, pairs)| {
            pairs
                .range((element, 0)..=(element, usize::MAX))
                .map(move |&(_, to)| (role.as_str(), to))
        })
    }

    pub fn role_successors<'a>(&'a self, role: &str, element: usize) -> impl Iterator<Item = usize> + 'a {
        self.roles.get(role).into_iter().flat_map(move |pairs| {
            pairs
                .range((element, 0)..=(element, usize::MAX))
                .map(|&(_, to)| to)
        })
    }

    pub fn role_pairs(&self, role: &str) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.roles
            .get(role)
            .into_iter()
            .flat_map(|pairs| pairs.iter().copied())
    }

    pub fn role_names(&self) -> impl Iterator<Item = &str> {
        self.roles.keys().map(String::as_str)
    }

    pub fn concept_names(&self) -> impl Iterator<Item = &str> {
        self.concepts.keys().map(String::as_str)
    }

    /// Names mentioned by the interpretation, including declared empty ones.
    pub fn signature(&self) -> Signature {
        let mut sig = Signature::default();
        self.concepts.keys().for_each(|n| sig.insert_concept(n));
        self.roles.keys().for_each(|r| sig.insert_role(r));
        sig
    }

    /// The extension `c^I` as a bitset over element positions.
    pub fn extension(&self, c: &Concept) -> FixedBitSet {
        let n = self.elements.len();
        match c {
            Concept::Top => {
                let mut all = FixedBitSet::with_capacity(n);
                all.insert_range(..);
                all
            }
            Concept::Bot => FixedBitSet::with_capacity(n),
            Concept::Name(a) => {
                let mut set = FixedBitSet::with_capacity(n);
                if let Some(ext) = self.concepts.get(a) {
                    ext.iter().for_each(|&e| set.insert(e));
                }
                set
            }
            Concept::Not(inner) => {
                let mut set = self.extension(inner);
                set.toggle_range(..);
                set
            }
            Concept::And(items) => {
                let mut set = self.extension(&Concept::Top);
                for item in items {
                    set.intersect_with(&self.extension(item));
                }
                set
            }
            Concept::Or(items) => {
                let mut set = FixedBitSet::with_capacity(n);
                for item in items {
                    set.union_with(&self.extension(item));
                }
                set
            }
            Concept::Exists(r, filler) => {
                let inner = self.extension(filler);
                let mut set = FixedBitSet::with_capacity(n);
                for (from, to) in self.role_pairs(r) {
                    if inner.contains(to) {
                        set.insert(from);
                    }
                }
                set
            }
            Concept::Forall(r, filler) => {
                let inner = self.extension(filler);
                let mut set = self.extension(&Concept::Top);
                for (from, to) in self.role_pairs(r) {
                    if !inner.contains(to) {
                        set.set(from, false);
                    }
                }
                set
            }
        }
    }

    /// Fails if the interpretation mentions a name outside `sig`.
    pub fn check_signature(&self, sig: &Signature) -> Result<()> {
        for (name, ext) in &self.concepts {
            if !sig.has_concept(name) {
                return Err(Error::Interpretation {
                    key: name.clone(),
                    element: ext
                        .iter()
                        .next()
                        .map(|&e| self.elements[e].clone())
                        .unwrap_or_default(),
                    reason: "concept name is not declared in the signature".into(),
                });
            }
        }
        for (role, pairs) in &self.roles {
            if !sig.has_role(role) {
                return Err(Error::Interpretation {
                    key: role.clone(),
                    element: pairs
                        .iter()
                        .next()
                        .map(|&(e, _)| self.elements[e].clone())
                        .unwrap_or_default(),
                    reason: "role name is not declared in the signature".into(),
                });
            }
        }
        Ok(())
    }
}

/// An interpretation together with a distinguished element, the unit of
/// "model" throughout the library.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PointedInterpretation {
    interp: Interpretation,
    point: usize,
}

impl PointedInterpretation {
    pub fn new(interp: Interpretation, point: &str) -> Result<Self> {
        let point = interp.lookup("point", point)?;
        Ok(PointedInterpretation { interp, point })
    }

    pub(crate) fn from_index(interp: Interpretation, point: usize) -> Self {
        debug_assert!(point < interp.len());
        PointedInterpretation { interp, point }
    }

    pub fn interpretation(&self) -> &Interpretation {
        &self.interp
    }

    pub fn point(&self) -> usize {
        self.point
    }

    pub fn point_id(&self) -> &str {
        self.interp.element(self.point)
    }

    pub fn signature(&self) -> Signature {
        self.interp.signature()
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let file: InterpretationFile = serde_json::from_str(text)?;
        file.try_into()
    }

    pub fn to_json_value(&self) -> serde_json::Value {
        serde_json::to_value(InterpretationFile::from(self)).expect("interpretation serializes")
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&InterpretationFile::from(self)).expect("interpretation serializes")
    }
}

/// Satisfaction `(I, d) ⊨ C`, i.e. `d ∈ C^I`.
///
/// Names absent from the interpretation have empty extension; use
/// [`Signature::check_concept`] first when undeclared names must be rejected.
pub fn model_check(pi: &PointedInterpretation, c: &Concept) -> bool {
    pi.interp.extension(c).contains(pi.point)
}

/// On-disk form of a pointed interpretation.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InterpretationFile {
    pub domain: Vec<String>,
    #[serde(default)]
    pub concepts: BTreeMap<String, Vec<String>>,
    #[serde(default)]
    pub roles: BTreeMap<String, Vec<(String, String)>>,
    pub point: String,
}

impl TryFrom<InterpretationFile> for PointedInterpretation {
    type Error = Error;

    fn try_from(file: InterpretationFile) -> Result<Self> {
        let mut interp = Interpretation::new(file.domain)?;
        for (name, members) in &file.concepts {
            if !crate::signature::is_identifier(name) {
                return Err(Error::Interpretation {
                    key: name.clone(),
                    element: String::new(),
                    reason: "not a valid concept name".into(),
                });
            }
            interp.declare_concept(name);
            for element in members {
                interp.add_concept(name, element)?;
            }
        }
        for (role, pairs) in &file.roles {
            if !crate::signature::is_identifier(role) || file.concepts.contains_key(role) {
                return Err(Error::Interpretation {
                    key: role.clone(),
                    element: String::new(),
                    reason: "not a valid role name".into(),
                });
            }
            interp.declare_role(role);
            for (from, to) in pairs {
                interp.add_edge(role, from, to)?;
            }
        }
        PointedInterpretation::new(interp, &file.point)
    }
}

impl From<&PointedInterpretation> for InterpretationFile {
    fn from(pi: &PointedInterpretation) -> Self {
        let interp = &pi.interp;
        InterpretationFile {
            domain: interp.elements.clone(),
            concepts: interp
                .concepts
                .iter()
                .map(|(name, ext)| {
                    (
                        name.clone(),
                        ext.iter().map(|&e| interp.elements[e].clone()).collect(),
                    )
                })
                .collect(),
            roles: interp
                .roles
                .iter()
                .map(|(role, pairs)| {
                    let pairs = pairs
                        .iter()
                        .map(|&(a, b)| (interp.elements[a].clone(), interp.elements[b].clone()))
                        .collect();
                    (role.clone(), pairs)
                })
                .collect(),
            point: interp.elements[pi.point].clone(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Platypus world: d is a mammal laying egg e.
    fn platypus(herbivore: bool) -> PointedInterpretation {
        let mut i = Interpretation::new(["d", "e"]).unwrap();
        i.add_concept("Mammal", "d").unwrap();
        i.add_concept("Egg", "e").unwrap();
        i.add_edge("lays", "d", "e").unwrap();
        if herbivore {
            i.add_concept("Herbivore", "d").unwrap();
        }
        PointedInterpretation::new(i, "d").unwrap()
    }

    #[test]
    fn satisfaction_basics() {
        let c: Concept = "Mammal and exists lays.Egg".parse().unwrap();
        assert!(model_check(&platypus(false), &c));
        assert!(model_check(&platypus(true), &c));
        assert!(model_check(&platypus(false), &Concept::Top));
        assert!(!model_check(&platypus(false), &Concept::Bot));
        let not_herb: Concept = "not Herbivore".parse().unwrap();
        assert!(model_check(&platypus(false), &not_herb));
        assert!(!model_check(&platypus(true), &not_herb));
        let forall: Concept = "forall lays.Egg".parse().unwrap();
        assert!(model_check(&platypus(false), &forall));
    }

    #[test]
    fn json_roundtrip_and_validation() {
        let text = r#"{"domain": ["d1", "d2"], "concepts": {"A": ["d2"]},
                       "roles": {"r": [["d1", "d2"]]}, "point": "d1"}"#;
        let pi = PointedInterpretation::from_json(text).unwrap();
        assert_eq!(pi.point_id(), "d1");
        let again = PointedInterpretation::from_json(&pi.to_json()).unwrap();
        assert_eq!(pi, again);

        let bad = r#"{"domain": ["d1"], "concepts": {"A": ["d9"]}, "point": "d1"}"#;
        match PointedInterpretation::from_json(bad) {
            Err(Error::Interpretation { key, element, .. }) => {
                assert_eq!(key, "A");
                assert_eq!(element, "d9");
            }
            other => panic!("unexpected {other:?}"),
        }
        let empty = r#"{"domain": [], "point": "d1"}"#;
        assert!(PointedInterpretation::from_json(empty).is_err());
        let bad_point = r#"{"domain": ["d1"], "point": "d2"}"#;
        assert!(PointedInterpretation::from_json(bad_point).is_err());
    }

    #[test]
    fn signature_check_reports_key() {
        let pi = platypus(false);
        let sig = Signature::new(["Mammal", "Egg"], ["lays"]).unwrap();
        pi.interpretation().check_signature(&sig).unwrap();
        let small = Signature::new(["Mammal"], ["lays"]).unwrap();
        match pi.interpretation().check_signature(&small) {
            Err(Error::Interpretation { key, .. }) => assert_eq!(key, "Egg"),
            other => panic!("unexpected {other:?}"),
        }
    }
}
