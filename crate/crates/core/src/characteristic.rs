//! Characteristic ALC concepts of finite trees.
//!
//! For an EL⊥ concept `C = ⊓S ⊓ ⊓_{r∈T} ⊓_l ∃r.C_r^l` over a finite
//! signature, `dagger(C)` is
//!
//! ```text
//! ⊓S ⊓ ⊓_{A∉S} ¬A
//!    ⊓ ⊓_{r∈T} ( ⊓_l ∃r.dagger(C_r^l) ⊓ ∀r.⊔_l dagger(C_r^l) )
//!    ⊓ ⊓_{s∉T} ∀s.⊥
//! ```
//!
//! whose models are exactly the pointed interpretations bisimilar to the
//! canonical model of `C`. The universal restriction ranges over the
//! *disjunction* of the successor translations: every successor must look
//! like one of the children, not like all of them at once.

use std::collections::{BTreeMap, BTreeSet};

use crate::concept::{Concept, Dialect};
use crate::error::{Error, Result};
use crate::interpretation::{concept_of_tree, el_bot_satisfiable, require_dialect, PointedInterpretation};
use crate::signature::Signature;

/// Atoms and per-role existential fillers of an EL concept, after
/// flattening nested conjunctions.
struct Shape<'a> {
    atoms: BTreeSet<&'a str>,
    children: BTreeMap<&'a str, Vec<&'a Concept>>,
}

fn shape(c: &Concept) -> Shape<'_> {
    fn walk<'a>(c: &'a Concept, out: &mut Shape<'a>) {
        match c {
            Concept::Top => {}
            Concept::Name(a) => {
                out.atoms.insert(a);
            }
            Concept::And(items) => items.iter().for_each(|item| walk(item, out)),
            Concept::Exists(r, filler) => out.children.entry(r).or_default().push(filler),
            other => unreachable!("not an EL concept: {other}"),
        }
    }
    let mut out = Shape {
        atoms: BTreeSet::new(),
        children: BTreeMap::new(),
    };
    walk(c, &mut out);
    out
}

/// The characteristic concept of the canonical model of `c` over `sig`.
pub fn dagger(c: &Concept, sig: &Signature) -> Result<Concept> {
    require_dialect(c, Dialect::ElBot)?;
    if !el_bot_satisfiable(c)? {
        return Err(Error::Unsatisfiable(c.to_string()));
    }
    sig.check_concept(c)?;
    Ok(translate(c, sig))
}

fn translate(c: &Concept, sig: &Signature) -> Concept {
    let shape = shape(c);
    let mut conjuncts = Vec::new();
    for name in sig.concept_names() {
        let atom = Concept::name(name.as_str());
        conjuncts.push(if shape.atoms.contains(name.as_str()) {
            atom
        } else {
            Concept::not(atom)
        });
    }
    for role in sig.role_names() {
        match shape.children.get(role.as_str()) {
            Some(fillers) => {
                let translated: Vec<Concept> = fillers.iter().map(|f| translate(f, sig)).collect();
                for t in &translated {
                    conjuncts.push(Concept::exists(role.as_str(), t.clone()));
                }
                conjuncts.push(Concept::forall(role.as_str(), Concept::or(translated)));
            }
            None => conjuncts.push(Concept::forall(role.as_str(), Concept::Bot)),
        }
    }
    Concept::and(conjuncts)
}

/// The characteristic concept of a finite tree over `sig`.
pub fn dagger_of_tree(pi: &PointedInterpretation, sig: &Signature) -> Result<Concept> {
    pi.interpretation().check_signature(sig)?;
    dagger(&concept_of_tree(pi)?, sig)
}
