//! Finite-model toolkit for tense residuated lattices.

pub mod algebra;
pub mod congfil;
pub mod drl;
pub mod error;
pub mod fixtures;
pub mod icrdl;
pub mod kalman;
pub mod order;
pub mod report;
pub mod tense;
pub mod term;
pub mod translate;

pub use algebra::{load_algebra, ElementId, FiniteAlgebra, OperationTable};
pub use error::{Error, Result};
pub use report::{Check, Report};
