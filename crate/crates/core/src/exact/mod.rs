//! Exact arithmetic: scalar fields, dense matrices, subspaces and sparse
//! multivariate polynomials. Everything here is immutable after
//! construction and free of rounding.

pub mod matrix;
pub mod poly;
pub mod scalar;
pub mod subspace;

pub use matrix::Matrix;
pub use poly::{pfaffian, MultiPoly, PolyError};
pub use scalar::{
    parse_gaussian, parse_rational, rat, rat_int, Field, GaussianRational, Rational,
    ScalarParseError,
};
pub use subspace::Subspace;
