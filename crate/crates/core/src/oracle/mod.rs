//! Brute-force semantics over a finite universe of depth-bounded trees.
//!
//! The universe holds one representative per bisimulation class of trees of
//! bounded depth over a small signature. Model sets are bitmasks over it,
//! and the finitely representable sets of a fragment are either all subsets
//! (ALC) or an explicitly enumerated family (EL, EL⊥). On top of that the
//! module computes closest candidates for revision and checks the
//! rationality postulates of reception, eviction and revision.

mod enumerate;
mod family;
mod modelset;
mod postulates;
mod revision;
mod universe;

pub use enumerate::el_concepts;
pub use family::{max_fr_subs, min_fr_sups, FrFamily, MAX_LISTED_UNIVERSE};
pub use modelset::ModelSet;
pub use postulates::{
    check_postulate, check_postulates, check_uniformity, circumspection_counterexample,
    revision_outputs_passing, Operation, Postulate, Run, Verdict,
};
pub use revision::{
    bounded_evict, bounded_receive, chi_min, naive_revise, sel, symmetric_differential_minima,
    symmetric_differential_revise, RevisionCase,
};
pub use universe::{
    class_count, enumerate_universe, mod_set, FiniteUniverse, UniverseLimits, DEFAULT_CLASS_BUDGET,
};
