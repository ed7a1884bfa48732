//! Model change for description-logic concepts: reception, eviction and
//! revision of EL⊥ and ALC concepts, with pointed interpretations as models.

pub mod change;
pub mod characteristic;
pub mod cli;
pub mod concept;
pub mod error;
pub mod interpretation;
pub mod oracle;
pub mod relations;
pub mod scenarios;
pub mod signature;
pub mod syntax;

pub use concept::{Concept, Dialect};
pub use error::{Error, Result};
pub use interpretation::{model_check, Interpretation, PointedInterpretation};
pub use signature::Signature;
pub use syntax::{parse_concept, print_concept};
