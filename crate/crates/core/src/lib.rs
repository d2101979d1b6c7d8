//! Exact verification of Hom-alternative algebras, Hom-Poisson coalgebras and
//! their (co)modules given by structure constants over the rationals.

pub mod catalog;
pub mod cli;
pub mod error;
pub mod exactcore;
pub mod homalg;
pub mod homcoalg;
pub mod homcomod;
pub mod hommod;
pub mod report;
pub mod structure;

pub use error::{Error, Result};
pub use exactcore::{LinearMap, Rational, Vector};
pub use report::{Axiom, AxiomReport, Witness};
pub use structure::Structure;
