//! Reception, eviction and revision operators.
//!
//! The ALC operators add or remove bisimulation classes of finite trees by
//! disjoining or conjoining characteristic concepts. The EL⊥ operators work
//! on canonical models: reception by least common subsumers, eviction by
//! deepening the base past every model to be removed.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::characteristic::dagger_of_tree;
use crate::concept::{Concept, Dialect};
use crate::error::{Error, Result};
use crate::interpretation::{
    canonical_model, concept_of_tree, el_bot_satisfiable, model_check, require_dialect, Interpretation,
    InterpretationFile, PointedInterpretation,
};
use crate::relations::{alc_entails, bisimilar, el_subsumes};
use crate::signature::Signature;
use crate::syntax::parse_concept;

/// A base together with the models to incorporate and to remove.
#[derive(Clone, Debug)]
pub struct ChangeRequest {
    pub base: Concept,
    pub signature: Signature,
    pub positives: Vec<PointedInterpretation>,
    pub negatives: Vec<PointedInterpretation>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RequestFile {
    base: String,
    signature: Signature,
    #[serde(default)]
    positives: Vec<InterpretationFile>,
    #[serde(default)]
    negatives: Vec<InterpretationFile>,
}

impl ChangeRequest {
    /// Validates that the base and every model live over `signature` and
    /// that every model is a finite tree.
    pub fn new(
        base: Concept,
        signature: Signature,
        positives: Vec<PointedInterpretation>,
        negatives: Vec<PointedInterpretation>,
    ) -> Result<Self> {
        signature.check_concept(&base)?;
        check_models(&positives, &signature)?;
        check_models(&negatives, &signature)?;
        Ok(ChangeRequest {
            base,
            signature,
            positives,
            negatives,
        })
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let file: RequestFile = serde_json::from_str(text)?;
        let base = parse_concept(&file.base, &file.signature)?;
        let load = |files: Vec<InterpretationFile>| -> Result<Vec<PointedInterpretation>> {
            files.into_iter().map(PointedInterpretation::try_from).collect()
        };
        ChangeRequest::new(base, file.signature, load(file.positives)?, load(file.negatives)?)
    }

    pub fn to_json(&self) -> String {
        let file = RequestFile {
            base: self.base.to_string(),
            signature: self.signature.clone(),
            positives: self.positives.iter().map(InterpretationFile::from).collect(),
            negatives: self.negatives.iter().map(InterpretationFile::from).collect(),
        };
        serde_json::to_string_pretty(&file).expect("request serializes")
    }
}

fn check_models(models: &[PointedInterpretation], sig: &Signature) -> Result<()> {
    for pi in models {
        pi.require_tree()?;
        pi.interpretation().check_signature(sig)?;
    }
    Ok(())
}

/// True iff no model of `ps` is bisimilar over `sig` to a model of `ns`.
pub fn bisimulation_disjoint(
    ps: &[PointedInterpretation],
    ns: &[PointedInterpretation],
    sig: &Signature,
) -> bool {
    ps.iter()
        .all(|p| ns.iter().all(|n| bisimilar(p, n, sig).is_none()))
}

/// Characteristic concepts of the models, one per bisimulation class, in
/// order of first occurrence.
fn class_daggers(models: &[PointedInterpretation], sig: &Signature) -> Result<Vec<Concept>> {
    check_models(models, sig)?;
    let mut kept: Vec<&PointedInterpretation> = Vec::new();
    for pi in models {
        if kept.iter().all(|k| bisimilar(k, pi, sig).is_none()) {
            kept.push(pi);
        }
    }
    kept.into_iter().map(|pi| dagger_of_tree(pi, sig)).collect()
}

/// Reception: `base ⊔ ⊔ᵢ dagger(pᵢ)`.
pub fn receive_alc(base: &Concept, positives: &[PointedInterpretation], sig: &Signature) -> Result<Concept> {
    sig.check_concept(base)?;
    let mut disjuncts = vec![base.clone()];
    disjuncts.extend(class_daggers(positives, sig)?);
    Ok(simplify(&Concept::or(disjuncts)))
}

/// Eviction: `base ⊓ ⊓ⱼ ¬dagger(nⱼ)`.
pub fn evict_alc(base: &Concept, negatives: &[PointedInterpretation], sig: &Signature) -> Result<Concept> {
    sig.check_concept(base)?;
    let mut conjuncts = vec![base.clone()];
    conjuncts.extend(class_daggers(negatives, sig)?.into_iter().map(Concept::not));
    Ok(simplify(&Concept::and(conjuncts)))
}

/// Revision: `(⊔ᵢ dagger(pᵢ) ⊔ base) ⊓ ⊓ⱼ ¬dagger(nⱼ)`.
///
/// Fails when some positive is bisimilar to some negative, since no concept
/// can then separate them.
pub fn revise_alc(req: &ChangeRequest) -> Result<Concept> {
    let sig = &req.signature;
    sig.check_concept(&req.base)?;
    check_models(&req.positives, sig)?;
    check_models(&req.negatives, sig)?;
    if !bisimulation_disjoint(&req.positives, &req.negatives, sig) {
        return Err(Error::Realizability(
            "a model to incorporate is bisimilar to a model to remove".into(),
        ));
    }
    let received = receive_alc(&req.base, &req.positives, sig)?;
    evict_alc(&received, &req.negatives, sig)
}

/// Drops top-level disjuncts (conjuncts) entailed by (entailing) a sibling.
/// Among equivalent siblings the first in canonical order is kept.
pub fn simplify(c: &Concept) -> Concept {
    match c {
        Concept::Or(items) => Concept::or(prune(items, alc_entails)),
        Concept::And(items) => Concept::and(prune(items, |a, b| alc_entails(b, a))),
        other => other.clone(),
    }
}

// drops items[i] when `redundant(items[i], items[j])` for a surviving j,
// unless the two are mutually redundant and i comes first
fn prune(items: &[Concept], redundant: impl Fn(&Concept, &Concept) -> bool) -> Vec<Concept> {
    let n = items.len();
    let mut alive = vec![true; n];
    for i in 0..n {
        for j in 0..n {
            if i == j || !alive[j] || !redundant(&items[i], &items[j]) {
                continue;
            }
            if j < i || !redundant(&items[j], &items[i]) {
                alive[i] = false;
                break;
            }
        }
    }
    items
        .iter()
        .zip(alive)
        .filter(|&(_c, keep)| keep)
        .map(|(c, _keep)| c.clone())
        .collect()
}

/// Removes existential conjuncts made redundant by a more specific sibling
/// on the same role, recursively.
pub fn el_reduce(c: &Concept) -> Result<Concept> {
    require_dialect(c, Dialect::ElBot)?;
    if !el_bot_satisfiable(c)? {
        return Ok(Concept::Bot);
    }
    reduce(&c.normalize())
}

fn reduce(c: &Concept) -> Result<Concept> {
    match c {
        Concept::Exists(r, filler) => Ok(Concept::exists(r.clone(), reduce(filler)?)),
        Concept::And(items) => {
            let items: Vec<Concept> = items.iter().map(reduce).collect::<Result<_>>()?;
            let n = items.len();
            let mut alive = vec![true; n];
            for i in 0..n {
                let Concept::Exists(ri, ci) = &items[i] else {
                    continue;
                };
                for j in 0..n {
                    if i == j || !alive[j] {
                        continue;
                    }
                    let Concept::Exists(rj, cj) = &items[j] else {
                        continue;
                    };
                    if ri == rj && el_subsumes(cj, ci)? && (j < i || !el_subsumes(ci, cj)?) {
                        alive[i] = false;
                        break;
                    }
                }
            }
            Ok(Concept::and(
                items
                    .into_iter()
                    .zip(alive)
                    .filter_map(|(c, keep)| keep.then_some(c)),
            ))
        }
        other => Ok(other.clone()),
    }
}

/// Least common subsumer of two EL⊥ concepts, from the product of their
/// canonical models. `lcs(⊥, x) = x`.
pub fn el_lcs(c: &Concept, d: &Concept) -> Result<Concept> {
    require_dialect(c, Dialect::ElBot)?;
    require_dialect(d, Dialect::ElBot)?;
    if !el_bot_satisfiable(c)? {
        return el_reduce(d);
    }
    if !el_bot_satisfiable(d)? {
        return el_reduce(c);
    }
    let (left, right) = (canonical_model(c)?, canonical_model(d)?);
    let product = product_concept(
        left.interpretation(),
        left.point(),
        right.interpretation(),
        right.point(),
        &mut HashMap::new(),
    );
    el_reduce(&product)
}

fn product_concept(
    left: &Interpretation,
    x: usize,
    right: &Interpretation,
    y: usize,
    memo: &mut HashMap<(usize, usize), Concept>,
) -> Concept {
    if let Some(known) = memo.get(&(x, y)) {
        return known.clone();
    }
    let mut conjuncts: Vec<Concept> = left
        .labels(x)
        .filter(|a| right.has_label(a, y))
        .map(Concept::name)
        .collect();
    let left_edges: Vec<(String, usize)> = left.successors(x).map(|(r, e)| (r.to_owned(), e)).collect();
    for (role, x2) in left_edges {
        let targets: Vec<usize> = right.role_successors(&role, y).collect();
        for y2 in targets {
            let filler = product_concept(left, x2, right, y2, memo);
            conjuncts.push(Concept::exists(role.clone(), filler));
        }
    }
    let result = Concept::and(conjuncts);
    memo.insert((x, y), result.clone());
    result
}

/// EL⊥ reception: the least common subsumer of the base and the concepts of
/// the positive trees. A base equivalent to `⊥` contributes nothing.
pub fn el_receive(base: &Concept, positives: &[PointedInterpretation]) -> Result<Concept> {
    require_dialect(base, Dialect::ElBot)?;
    let mut acc = base.clone();
    for pi in positives {
        acc = el_lcs(&acc, &concept_of_tree(pi)?)?;
    }
    el_reduce(&acc)
}

/// EL⊥ eviction by deepening: if some negative satisfies the base, conjoin
/// an `r`-chain one step longer than any tree involved, so that no negative
/// can satisfy the result. The result entails the base; it is not in general
/// a maximal subset of the base's models.
pub fn el_evict_deepening(
    base: &Concept,
    negatives: &[PointedInterpretation],
    role: &str,
) -> Result<Concept> {
    require_dialect(base, Dialect::ElBot)?;
    if !el_bot_satisfiable(base)? {
        return Ok(Concept::Bot);
    }
    if negatives.iter().all(|n| !model_check(n, base)) {
        return el_reduce(base);
    }
    let mut depth = base.depth();
    for n in negatives {
        depth = depth.max(n.tree_depth()?);
    }
    let chain = Concept::exists_chain(role, depth + 1, Concept::Top);
    el_reduce(&Concept::and([base.clone(), chain]))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::interpretation::chain_model;
    use crate::relations::equivalent;

    fn c(text: &str) -> Concept {
        text.parse().unwrap()
    }

    fn sig(concepts: &[&str], roles: &[&str]) -> Signature {
        Signature::new(concepts.iter().copied(), roles.iter().copied()).unwrap()
    }

    fn node(labels: &[&str]) -> PointedInterpretation {
        let mut i = Interpretation::new(["d"]).unwrap();
        for a in labels {
            i.add_concept(a, "d").unwrap();
        }
        PointedInterpretation::new(i, "d").unwrap()
    }

    #[test]
    fn disjointness() {
        let s = sig(&[], &["r"]);
        assert!(bisimulation_disjoint(
            &[chain_model(1, "r")],
            &[chain_model(2, "r")],
            &s
        ));
        assert!(!bisimulation_disjoint(
            &[chain_model(1, "r")],
            &[chain_model(1, "r")],
            &s
        ));
    }

    #[test]
    fn alc_reception_and_eviction() {
        let s = sig(&["A"], &["r"]);
        let got = receive_alc(&Concept::Bot, &[node(&["A"])], &s).unwrap();
        assert!(equivalent(&got, &c("A and forall r.bot")));

        let s = sig(&[], &["r"]);
        let got = evict_alc(&Concept::Top, &[node(&[])], &s).unwrap();
        assert!(equivalent(&got, &c("exists r.top")));
        let base = c("exists r.top");
        assert_eq!(evict_alc(&base, &[], &s).unwrap(), base);
        // a negative outside the base leaves it untouched
        assert_eq!(evict_alc(&base, &[node(&[])], &s).unwrap(), base);
    }

    #[test]
    fn revision_requires_disjointness() {
        let s = sig(&[], &["r"]);
        let req = ChangeRequest::new(
            Concept::Top,
            s,
            vec![chain_model(1, "r")],
            vec![chain_model(1, "r")],
        )
        .unwrap();
        assert!(matches!(revise_alc(&req), Err(Error::Realizability(_))));
    }

    #[test]
    fn revision_trivial_request() {
        let s = sig(&["A"], &["r"]);
        let base = c("exists r.A");
        let req = ChangeRequest::new(base.clone(), s, vec![], vec![]).unwrap();
        assert_eq!(revise_alc(&req).unwrap(), base);
    }

    #[test]
    fn least_common_subsumers() {
        let r3 = Concept::exists_chain("r", 3, Concept::Top);
        assert_eq!(el_lcs(&r3, &c("exists r.top")).unwrap(), c("exists r.top"));
        assert_eq!(el_lcs(&c("A and B"), &c("A and C")).unwrap(), c("A"));
        let x = c("A and exists r.(B and exists r.A)");
        assert_eq!(el_lcs(&x, &x).unwrap(), x);
        assert_eq!(el_lcs(&Concept::Bot, &x).unwrap(), x);
        assert_eq!(
            el_lcs(&c("exists r.A and exists r.B"), &c("exists r.(A and B)")).unwrap(),
            c("exists r.A and exists r.B")
        );
    }

    #[test]
    fn el_reception() {
        assert_eq!(
            el_receive(&Concept::Bot, &[chain_model(1, "r")]).unwrap(),
            c("exists r.top")
        );
        let r3 = Concept::exists_chain("r", 3, Concept::Top);
        assert_eq!(
            el_receive(&r3, &[chain_model(1, "r")]).unwrap(),
            c("exists r.top")
        );
        assert_eq!(el_receive(&c("A"), &[node(&["B"])]).unwrap(), Concept::Top);
    }

    #[test]
    fn reduction() {
        assert_eq!(
            el_reduce(&c("exists r.top and exists r.A")).unwrap(),
            c("exists r.A")
        );
        assert_eq!(
            el_reduce(&c("exists r.top and exists r.exists r.exists r.top")).unwrap(),
            Concept::exists_chain("r", 3, Concept::Top)
        );
        assert_eq!(el_reduce(&c("A and exists r.bot")).unwrap(), Concept::Bot);
    }

    #[test]
    fn deepening_eviction() {
        let base = c("exists r.top");
        let got = el_evict_deepening(&base, &[chain_model(2, "r")], "r").unwrap();
        assert_eq!(got, Concept::exists_chain("r", 3, Concept::Top));
        assert_eq!(el_evict_deepening(&base, &[node(&[])], "r").unwrap(), base);
    }

    #[test]
    fn request_json() {
        let text = r#"{
            "base": "exists r.top",
            "signature": {"concepts": ["A"], "roles": ["r"]},
            "positives": [{"domain": ["d1", "d2"], "concepts": {"A": ["d2"]},
                           "roles": {"r": [["d1", "d2"]]}, "point": "d1"}],
            "negatives": []
        }"#;
        let req = ChangeRequest::from_json(text).unwrap();
        assert_eq!(req.positives.len(), 1);
        let again = ChangeRequest::from_json(&req.to_json()).unwrap();
        assert_eq!(again.base, req.base);
        let bad = text.replace("\"A\": [\"d2\"]", "\"B\": [\"d2\"]");
        assert!(ChangeRequest::from_json(&bad).is_err());
    }
}
