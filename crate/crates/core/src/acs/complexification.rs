//! Complexification (bilinear extension) and anti-complexification
//! (conjugate-bilinear extension) of a real Lie algebra, realified on the
//! interleaved basis (X1, iX1, X2, iX2, ...). With this convention J is
//! block-diagonal with 2x2 rotation blocks.

use crate::exact::{Field, Rational};
use crate::lie::{Bracket, LieAlgebra, LieError};

use super::{AcsError, AlmostComplexStructure};

fn realify(
    h: &LieAlgebra<Rational>,
    imag_sign: i64,
) -> Result<(LieAlgebra<Rational>, AlmostComplexStructure), AcsError> {
    let n = h.dim();
    let mut b = Bracket::zero(2 * n);
    for a in 0..n {
        for c in a + 1..n {
            let v = h.bracket().of_basis(a, c);
            for (k, coeff) in v.iter().enumerate() {
                if coeff.is_zero() {
                    continue;
                }
                let s = Rational::from_int(imag_sign);
                // [X_a, X_c] -> real x real lands in real
                b.add_to_pair(2 * a, 2 * c, 2 * k, coeff.clone());
                // real x imaginary lands in imaginary (sign = conjugation twist)
                b.add_to_pair(2 * a, 2 * c + 1, 2 * k + 1, coeff.clone() * s.clone());
                b.add_to_pair(2 * a + 1, 2 * c, 2 * k + 1, coeff.clone() * s);
                // imaginary x imaginary lands in real with a minus
                b.add_to_pair(2 * a + 1, 2 * c + 1, 2 * k, -coeff.clone());
            }
        }
    }
    let algebra = LieAlgebra::validate(b)?;
    Ok((algebra, AlmostComplexStructure::standard_interleaved(2 * n)))
}

/// h tensor C with the bilinear bracket and J = multiplication by i; J is
/// bi-invariant on the result for every input algebra.
pub fn complexify(
    h: &LieAlgebra<Rational>,
) -> Result<(LieAlgebra<Rational>, AlmostComplexStructure), AcsError> {
    realify(h, 1)
}

/// h tensor C with the conjugate-twisted bracket
/// [X (x) a, Y (x) b] = conj(a b) [X, Y]; requires nilpotency class <= 2
/// (the Jacobi identity fails otherwise) and yields an anti-bi-invariant J.
pub fn anticomplexify(
    h: &LieAlgebra<Rational>,
) -> Result<(LieAlgebra<Rational>, AlmostComplexStructure), AcsError> {
    if !h.is_class_at_most_two() {
        return Err(AcsError::Lie(LieError::NotTwoStep));
    }
    realify(h, -1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::acs::{classify_acs, holds, SubspaceIdentity};
    use crate::exact::rat_int;
    use crate::lie::test_algebras::{abelian, aff_c_like, h3};

    #[test]
    fn complexified_h3_brackets() {
        let (a, j) = complexify(&h3()).unwrap();
        assert_eq!(a.dim(), 6);
        // [X1,X3]=X5, [X1,X4]=X6, [X2,X3]=X6, [X2,X4]=-X5 (1-based)
        assert_eq!(a.bracket().of_basis(0, 2)[4], rat_int(1));
        assert_eq!(a.bracket().of_basis(0, 3)[5], rat_int(1));
        assert_eq!(a.bracket().of_basis(1, 2)[5], rat_int(1));
        assert_eq!(a.bracket().of_basis(1, 3)[4], rat_int(-1));
        assert!(holds(a.bracket(), &j, SubspaceIdentity::BiInvariant));
    }

    #[test]
    fn anticomplexified_h3_brackets() {
        let (a, j) = anticomplexify(&h3()).unwrap();
        assert_eq!(a.dim(), 6);
        // [X1,X3]=X5, [X1,X4]=-X6, [X2,X3]=-X6, [X2,X4]=-X5
        assert_eq!(a.bracket().of_basis(0, 2)[4], rat_int(1));
        assert_eq!(a.bracket().of_basis(0, 3)[5], rat_int(-1));
        assert_eq!(a.bracket().of_basis(1, 2)[5], rat_int(-1));
        assert_eq!(a.bracket().of_basis(1, 3)[4], rat_int(-1));
        let f = classify_acs(&a, &j);
        assert!(f.in_cbar && f.in_ch);
        assert!(!f.in_c && !f.in_int);
    }

    #[test]
    fn abelian_cases() {
        let (c, _) = complexify(&abelian(3)).unwrap();
        assert!(c.is_abelian());
        assert_eq!(c.dim(), 6);
        let (ac, _) = anticomplexify(&abelian(3)).unwrap();
        assert!(ac.is_abelian());
    }

    #[test]
    fn complexify_is_always_bi_invariant() {
        // even for a non-nilpotent input like aff(R)^2-ish realification
        let (a, j) = complexify(&aff_c_like()).unwrap();
        assert!(classify_acs(&a, &j).in_c);
    }

    #[test]
    fn anticomplexify_requires_class_two() {
        assert!(matches!(
            anticomplexify(&aff_c_like()),
            Err(AcsError::Lie(LieError::NotTwoStep))
        ));
    }
}
