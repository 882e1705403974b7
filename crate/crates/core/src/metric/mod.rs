//! Left-invariant Riemannian data: Levi-Civita connection, curvature, Gray
//! identities, Ricci operator, nilsoliton / minimal certificates and the
//! Hermitian (quasi-Kahler / Chern-flat / SKT) checks. Everything here is
//! exact; the floating-point search lives in `soliton`.

mod connection;
mod curvature;
mod hermitian;
mod ricci;

pub use connection::{levi_civita, Connection};
pub use curvature::{curvature, gray_check, CurvatureTensor, GrayIdentity};
pub use hermitian::{
    chern_flat_check, hermitian_report, quasi_kahler_check, skt_check, HermitianReport,
};
pub use ricci::{minimal_check, nilsoliton_check, ricci, ricci_one_one, SolitonCertificate};

use num_traits::Signed;
use thiserror::Error;

use crate::acs::AlmostComplexStructure;
use crate::exact::{Matrix, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MetricError {
    #[error("inner product matrix is not symmetric")]
    NotSymmetric,
    #[error("inner product is not positive definite (leading minor {0} fails)")]
    NotPositiveDefinite(usize),
    #[error("dimension mismatch: expected {0}, got {1}")]
    DimensionMismatch(usize, usize),
    #[error("operation requires a nilpotent algebra")]
    NonNilpotent,
    #[error("SKT check requires an integrable Chern-flat Hermitian structure ({0})")]
    SktHypotheses(&'static str),
}

/// Exact symmetric positive-definite inner product on the algebra.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct InnerProduct {
    g: Matrix<Rational>,
}

impl InnerProduct {
    pub fn new(g: Matrix<Rational>) -> Result<Self, MetricError> {
        if !g.is_symmetric() {
            return Err(MetricError::NotSymmetric);
        }
        // positive definiteness: all leading principal minors > 0
        let n = g.rows();
        for k in 1..=n {
            let sub = Matrix::from_fn(k, k, |i, j| g[(i, j)].clone());
            if !sub.det().is_positive() {
                return Err(MetricError::NotPositiveDefinite(k));
            }
        }
        Ok(InnerProduct { g })
    }

    /// The identity Gram matrix (the standard basis is orthonormal).
    pub fn standard(n: usize) -> Self {
        InnerProduct {
            g: Matrix::identity(n),
        }
    }

    pub fn dim(&self) -> usize {
        self.g.rows()
    }

    pub fn gram(&self) -> &Matrix<Rational> {
        &self.g
    }

    pub fn inverse_gram(&self) -> Matrix<Rational> {
        self.g.inverse().expect("positive definite matrices invert")
    }

    pub fn inner(&self, u: &[Rational], v: &[Rational]) -> Rational {
        let gu = self.g.mul_vec(u);
        gu.iter()
            .zip(v)
            .map(|(a, b)| a.clone() * b.clone())
            .fold(<Rational as crate::exact::Field>::zero(), |acc, t| acc + t)
    }

    /// g(JX, JY) = g(X, Y), exactly.
    pub fn is_compatible(&self, j: &AlmostComplexStructure) -> bool {
        j.dim() == self.dim()
            && j.matrix().transpose().mul(&self.g).mul(j.matrix()) == self.g
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{rat_int, Field};

    #[test]
    fn positive_definiteness_enforced() {
        let bad = Matrix::from_fn(2, 2, |i, j| {
            if i == j {
                rat_int(if i == 0 { 1 } else { -1 })
            } else {
                Field::zero()
            }
        });
        assert!(matches!(
            InnerProduct::new(bad),
            Err(MetricError::NotPositiveDefinite(2))
        ));
        let asym = Matrix::from_fn(2, 2, |i, j| rat_int((i + 2 * j) as i64));
        assert!(matches!(
            InnerProduct::new(asym),
            Err(MetricError::NotSymmetric)
        ));
        assert!(InnerProduct::new(Matrix::identity(3)).is_ok());
    }

    #[test]
    fn compatibility_with_interleaved_j() {
        let j = AlmostComplexStructure::standard_interleaved(4);
        assert!(InnerProduct::standard(4).is_compatible(&j));
        let g = Matrix::diagonal(&[rat_int(1), rat_int(2), rat_int(1), rat_int(1)]);
        assert!(!InnerProduct::new(g).unwrap().is_compatible(&j));
    }
}
