//! Rationality postulates checked on concrete runs over a finite universe.
//!
//! A run records the base's model set, the models to incorporate and to
//! remove, and the model set of the operator's output, all over one
//! universe. Postulates quantifying over finitely representable sets range
//! over the supplied family only, so their verdicts are relative to the
//! bounded fragment.

use serde_json::{json, Value};

use super::{max_fr_subs, min_fr_sups, FiniteUniverse, FrFamily, ModelSet};
use crate::error::Result;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Postulate {
    Success,
    Persistence,
    Inclusion,
    FiniteTemperance,
    FiniteRetainment,
    VacuousExpansion,
    VacuousRemoval,
    Lethargy,
    Circumspection,
    Uniformity,
}

impl Postulate {
    pub fn as_str(self) -> &'static str {
        match self {
            Postulate::Success => "success",
            Postulate::Persistence => "persistence",
            Postulate::Inclusion => "inclusion",
            Postulate::FiniteTemperance => "finite-temperance",
            Postulate::FiniteRetainment => "finite-retainment",
            Postulate::VacuousExpansion => "vacuous-expansion",
            Postulate::VacuousRemoval => "vacuous-removal",
            Postulate::Lethargy => "lethargy",
            Postulate::Circumspection => "circumspection",
            Postulate::Uniformity => "uniformity",
        }
    }

    /// Whether the verdict depends on the family standing in for all
    /// finitely representable sets.
    pub fn fragment_relative(self) -> bool {
        matches!(
            self,
            Postulate::FiniteTemperance
                | Postulate::FiniteRetainment
                | Postulate::Circumspection
                | Postulate::Uniformity
        )
    }
}

/// The kind of change a run performed.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Operation {
    Reception,
    Eviction,
    Revision,
}

impl Operation {
    pub fn postulates(self) -> &'static [Postulate] {
        match self {
            Operation::Reception => &[
                Postulate::Success,
                Postulate::Persistence,
                Postulate::FiniteTemperance,
            ],
            Operation::Eviction => &[
                Postulate::Success,
                Postulate::Inclusion,
                Postulate::FiniteRetainment,
            ],
            Operation::Revision => &[
                Postulate::Success,
                Postulate::VacuousExpansion,
                Postulate::VacuousRemoval,
                Postulate::Lethargy,
                Postulate::Circumspection,
            ],
        }
    }
}

/// One operator application. For reception only `positives` is used, for
/// eviction only `negatives`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Run {
    pub base: ModelSet,
    pub positives: ModelSet,
    pub negatives: ModelSet,
    pub output: ModelSet,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verdict {
    pub postulate: Postulate,
    pub pass: bool,
    /// A universe model exhibiting the failure, when there is one.
    pub witness: Option<usize>,
}

impl Verdict {
    fn pass(postulate: Postulate) -> Self {
        Verdict {
            postulate,
            pass: true,
            witness: None,
        }
    }

    fn fail(postulate: Postulate, witness: Option<usize>) -> Self {
        Verdict {
            postulate,
            pass: false,
            witness,
        }
    }

    fn subset(postulate: Postulate, small: &ModelSet, large: &ModelSet) -> Self {
        match small.difference(large).iter().next() {
            None => Verdict::pass(postulate),
            Some(w) => Verdict::fail(postulate, Some(w)),
        }
    }

    /// The report object: postulate, status, witness interpretation and the
    /// universe's fragment.
    pub fn to_json(&self, u: &FiniteUniverse) -> Value {
        let sig = u.signature();
        let mut report = json!({
            "postulate": self.postulate.as_str(),
            "status": if self.pass { "pass" } else { "fail" },
            "witness": self.witness.map(|w| u.model(w).to_json_value()),
            "fragment": {
                "nc": sig.concept_names().len(),
                "nr": sig.role_names().len(),
                "k": u.depth(),
            },
        });
        if self.postulate.fragment_relative() {
            report["scope"] = json!("fragment-relative");
        }
        report
    }
}

/// Checks every postulate of `op` on `run`.
pub fn check_postulates(op: Operation, run: &Run, fr: &FrFamily) -> Vec<Verdict> {
    op.postulates()
        .iter()
        .map(|&p| check_postulate(op, p, run, fr))
        .collect()
}

pub fn check_postulate(op: Operation, postulate: Postulate, run: &Run, fr: &FrFamily) -> Verdict {
    let Run {
        base: b,
        positives: plus,
        negatives: minus,
        output: o,
    } = run;
    match postulate {
        Postulate::Success => match op {
            Operation::Reception => Verdict::subset(postulate, plus, o),
            Operation::Eviction => Verdict::subset(
                postulate,
                &minus.intersection(o),
                &ModelSet::empty(o.universe_size()),
            ),
            Operation::Revision => {
                let missing = plus.difference(o).union(&minus.intersection(o));
                Verdict::subset(postulate, &missing, &ModelSet::empty(o.universe_size()))
            }
        },
        Postulate::Persistence => Verdict::subset(postulate, b, o),
        Postulate::Inclusion => Verdict::subset(postulate, o, b),
        Postulate::FiniteTemperance => {
            // no representable M' with b ∪ M ⊆ M' ⊂ o
            let floor = b.union(plus);
            between(fr, &floor, o, true).map_or(Verdict::pass(postulate), |m| {
                Verdict::fail(postulate, o.difference(&m).iter().next())
            })
        }
        Postulate::FiniteRetainment => {
            // no representable M' with o ⊂ M' ⊆ b \ M
            let ceiling = b.difference(minus);
            between(fr, o, &ceiling, false).map_or(Verdict::pass(postulate), |m| {
                Verdict::fail(postulate, m.difference(o).iter().next())
            })
        }
        Postulate::VacuousExpansion => {
            if plus.is_subset(b) {
                Verdict::subset(postulate, o, b)
            } else {
                Verdict::pass(postulate)
            }
        }
        Postulate::VacuousRemoval => {
            if minus.is_disjoint(b) {
                Verdict::subset(postulate, b, o)
            } else {
                Verdict::pass(postulate)
            }
        }
        Postulate::Lethargy => {
            if plus.is_subset(b) && minus.is_disjoint(b) && o != b {
                Verdict::fail(postulate, o.symmetric_difference(b).iter().next())
            } else {
                Verdict::pass(postulate)
            }
        }
        Postulate::Circumspection => match circumspection_counterexample(run, fr) {
            None => Verdict::pass(postulate),
            Some(z) => Verdict::fail(postulate, z.symmetric_difference(o).iter().next()),
        },
        Postulate::Uniformity => Verdict::pass(postulate),
    }
}

// a member M' of fr with low ⊆ M' ⊆ high where the bound on the side of
// `strict_high` (high if true, low otherwise) must be strict
fn between(fr: &FrFamily, low: &ModelSet, high: &ModelSet, strict_high: bool) -> Option<ModelSet> {
    if !low.is_subset(high) || low == high {
        return None;
    }
    match fr {
        FrFamily::AllSubsets { .. } => Some(if strict_high { low.clone() } else { high.clone() }),
        FrFamily::Explicit { sets, .. } => sets
            .iter()
            .filter(|m| low.is_subset(m) && m.is_subset(high))
            .find(|m| if strict_high { *m != high } else { *m != low })
            .cloned(),
    }
}

/// A representable set `Z = (b \ X⁻) ∪ X⁺` that the postulate forbids.
///
/// With `X⁻ = b \ Z` and `X⁺ = Z \ b` (disjoint, one inside `b`, one
/// outside), the side conditions on `X⁻`, `X⁺` and `Z ≠ o` become:
/// `b ∩ o ⊆ Z ⊆ b ∪ o`, `Z` avoids `M⁻ ∩ b`, `Z` contains `M⁺ \ b`.
/// Every such `Z` arises from exactly one pair, so scanning the family is
/// equivalent to quantifying over all pairs.
pub fn circumspection_counterexample(run: &Run, fr: &FrFamily) -> Option<ModelSet> {
    let Run {
        base: b,
        positives: plus,
        negatives: minus,
        output: o,
    } = run;
    let low = b.intersection(o).union(&plus.difference(b));
    let high = b.union(o).difference(&minus.intersection(b));
    if !low.is_subset(&high) {
        return None;
    }
    match fr {
        FrFamily::AllSubsets { .. } => {
            if low == high && &low == o {
                None
            } else if &low != o {
                Some(low)
            } else {
                Some(high)
            }
        }
        FrFamily::Explicit { sets, .. } => sets
            .iter()
            .find(|z| low.is_subset(z) && z.is_subset(&high) && *z != o)
            .cloned(),
    }
}

/// Uniformity on a supplied pair of runs: equal bounds in the family must
/// give equal outputs. Only reception and eviction have this postulate.
pub fn check_uniformity(op: Operation, first: &Run, second: &Run, fr: &FrFamily) -> Verdict {
    let bounds = |run: &Run| match op {
        Operation::Reception => min_fr_sups(&run.base.union(&run.positives), fr),
        Operation::Eviction | Operation::Revision => max_fr_subs(&run.base.difference(&run.negatives), fr),
    };
    if bounds(first) == bounds(second) && first.output != second.output {
        Verdict::fail(
            Postulate::Uniformity,
            first.output.symmetric_difference(&second.output).iter().next(),
        )
    } else {
        Verdict::pass(Postulate::Uniformity)
    }
}

/// Every member of `fr` passing success, vacuous-expansion, vacuous-removal
/// and circumspection as an output for the given request.
pub fn revision_outputs_passing(
    base: &ModelSet,
    positives: &ModelSet,
    negatives: &ModelSet,
    fr: &FrFamily,
) -> Result<Vec<ModelSet>> {
    let mut out: Vec<ModelSet> = fr
        .members()?
        .into_iter()
        .filter(|y| {
            let run = Run {
                base: base.clone(),
                positives: positives.clone(),
                negatives: negatives.clone(),
                output: y.clone(),
            };
            [
                Postulate::Success,
                Postulate::VacuousExpansion,
                Postulate::VacuousRemoval,
                Postulate::Circumspection,
            ]
            .iter()
            .all(|&p| check_postulate(Operation::Revision, p, &run, fr).pass)
        })
        .collect();
    out.sort_by(ModelSet::cmp_lex);
    Ok(out)
}
