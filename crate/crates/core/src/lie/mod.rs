//! Lie algebras as structure-constant tensors: validation, nilpotency
//! analysis, structural subspaces, the GL change-of-basis action and
//! type-(p, q) presentations.

pub mod algebra;
pub mod bracket;
pub mod presentation;

pub use algebra::{LieAlgebra, LieError};
pub use bracket::{pair_count, Bracket, BracketError, JacobiViolation};
pub use presentation::TwoStepPresentation;
