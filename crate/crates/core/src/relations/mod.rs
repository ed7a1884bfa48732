//! Bisimulation, homomorphism, subsumption and satisfiability.

mod bisim;
mod hom;
mod tableau;

pub use bisim::{bisimilar, k_bisimilar, k_bisimilar_over, Bisimulation};
pub use hom::{el_subsumes, homomorphism_exists};
pub use tableau::{alc_entails, alc_satisfiable, equivalent};
