use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::concept::Concept;
use crate::error::{Error, Result};

/// A finite signature: concept names and role names, kept sorted.
///
/// The two sets are disjoint. Iteration order is lexicographic, which makes
/// every enumeration built on top of a signature deterministic.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "SignatureFile", into = "SignatureFile")]
pub struct Signature {
    concepts: BTreeSet<String>,
    roles: BTreeSet<String>,
}

#[derive(Serialize, Deserialize)]
struct SignatureFile {
    #[serde(default)]
    concepts: Vec<String>,
    #[serde(default)]
    roles: Vec<String>,
}

impl TryFrom<SignatureFile> for Signature {
    type Error = Error;

    fn try_from(file: SignatureFile) -> Result<Self> {
        Signature::new(file.concepts, file.roles)
    }
}

impl From<Signature> for SignatureFile {
    fn from(sig: Signature) -> Self {
        SignatureFile {
            concepts: sig.concepts.into_iter().collect(),
            roles: sig.roles.into_iter().collect(),
        }
    }
}

pub(crate) fn is_identifier(name: &str) -> bool {
    let mut chars = name.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic())
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
        && !crate::syntax::KEYWORDS.contains(&name)
}

impl Signature {
    pub fn new<C, R>(concepts: C, roles: R) -> Result<Self>
    where
        C: IntoIterator,
        C::Item: Into<String>,
        R: IntoIterator,
        R::Item: Into<String>,
    {
        let mut sig = Signature::default();
        for name in concepts {
            let name = name.into();
            if !is_identifier(&name) {
                return Err(Error::Signature(format!("`{name}` is not a valid concept name")));
            }
            if !sig.concepts.insert(name.clone()) {
                return Err(Error::Signature(format!("concept name `{name}` declared twice")));
            }
        }
        for name in roles {
            let name = name.into();
            if !is_identifier(&name) {
                return Err(Error::Signature(format!("`{name}` is not a valid role name")));
            }
            if sig.concepts.contains(&name) {
                return Err(Error::Signature(format!(
                    "`{name}` is declared both as a concept and as a role"
                )));
            }
            if !sig.roles.insert(name.clone()) {
                return Err(Error::Signature(format!("role name `{name}` declared twice")));
            }
        }
        Ok(sig)
    }

    /// Signature with concept names `A, B, ...` and role names `r, s, ...`.
    pub fn generated(concept_count: usize, role_count: usize) -> Result<Self> {
        const CONCEPTS: &str = "ABCDEFGHIJKLMNOPQRSTUVWXYZ";
        const ROLES: &str = "rstuvwxyz";
        if concept_count > CONCEPTS.len() || role_count > ROLES.len() {
            return Err(Error::Signature("too many generated names".into()));
        }
        Signature::new(
            CONCEPTS.chars().take(concept_count).map(String::from),
            ROLES.chars().take(role_count).map(String::from),
        )
    }

    pub fn from_json(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn concept_names(&self) -> &BTreeSet<String> {
        &self.concepts
    }

    pub fn role_names(&self) -> &BTreeSet<String> {
        &self.roles
    }

    pub fn has_concept(&self, name: &str) -> bool {
        self.concepts.contains(name)
    }

    pub fn has_role(&self, name: &str) -> bool {
        self.roles.contains(name)
    }

    pub fn is_empty(&self) -> bool {
        self.concepts.is_empty() && self.roles.is_empty()
    }

    pub fn is_subset(&self, other: &Signature) -> bool {
        self.concepts.is_subset(&other.concepts) && self.roles.is_subset(&other.roles)
    }

    pub fn union(&self, other: &Signature) -> Result<Signature> {
        Signature::new(
            self.concepts.union(&other.concepts).cloned(),
            self.roles.union(&other.roles).cloned(),
        )
    }

    pub(crate) fn insert_concept(&mut self, name: &str) {
        self.concepts.insert(name.to_owned());
    }

    pub(crate) fn insert_role(&mut self, name: &str) {
        self.roles.insert(name.to_owned());
    }

    /// Fails with an undeclared-name error if `c` uses a name outside `self`.
    pub fn check_concept(&self, c: &Concept) -> Result<()> {
        let used = c.signature();
        if let Some(name) = used.concepts.difference(&self.concepts).next() {
            return Err(Error::UndeclaredName {
                kind: "concept",
                name: name.clone(),
            });
        }
        if let Some(name) = used.roles.difference(&self.roles).next() {
            return Err(Error::UndeclaredName {
                kind: "role",
                name: name.clone(),
            });
        }
        Ok(())
    }
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names = |set: &BTreeSet<String>| set.iter().cloned().collect::<Vec<_>>().join(", ");
        write!(f, "({{{}}}, {{{}}})", names(&self.concepts), names(&self.roles))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_overlap_and_duplicates() {
        assert!(Signature::new(["A"], ["A"]).is_err());
        assert!(Signature::new(["A", "A"], Vec::<String>::new()).is_err());
        assert!(Signature::new(["exists"], Vec::<String>::new()).is_err());
        assert!(Signature::new(["1A"], Vec::<String>::new()).is_err());
    }

    #[test]
    fn json_roundtrip_is_sorted() {
        let sig = Signature::from_json(r#"{"concepts": ["B", "A"], "roles": ["r"]}"#).unwrap();
        let text = serde_json::to_string(&sig).unwrap();
        assert_eq!(text, r#"{"concepts":["A","B"],"roles":["r"]}"#);
        assert_eq!(sig.to_string(), "({A, B}, {r})");
    }

    #[test]
    fn missing_keys_mean_empty() {
        let sig = Signature::from_json(r#"{"roles": ["r"]}"#).unwrap();
        assert!(sig.concept_names().is_empty());
        assert!(sig.has_role("r"));
    }
}
