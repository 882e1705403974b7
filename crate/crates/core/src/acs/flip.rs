//! The metric-dependent sign flip J -> J^- : keep J on the center, negate it
//! on the metric-orthogonal complement of the center. It carries bi-invariant
//! structures to anti-bi-invariant ones on 2-step algebras and is an
//! involution.

use crate::exact::{Field, Matrix, Rational};
use crate::lie::LieAlgebra;
use crate::metric::InnerProduct;

use super::{AcsError, AlmostComplexStructure};

pub fn j_flip(
    a: &LieAlgebra<Rational>,
    j: &AlmostComplexStructure,
    ip: &InnerProduct,
) -> Result<AlmostComplexStructure, AcsError> {
    let n = a.dim();
    if j.dim() != n || ip.dim() != n {
        return Err(AcsError::DimensionMismatch(n, j.dim(), ip.dim()));
    }
    let center = a.center();
    let perp = center.orthogonal_complement(ip.gram());
    if !center.is_invariant_under(j.matrix()) {
        return Err(AcsError::NotJInvariant { subspace: "center" });
    }
    if !perp.is_invariant_under(j.matrix()) {
        return Err(AcsError::NotJInvariant {
            subspace: "orthogonal complement of the center",
        });
    }
    // projector onto the center along its complement
    let mut cols = center.basis_columns();
    cols.extend(perp.basis_columns());
    let c = Matrix::from_columns(n, &cols);
    let cinv = c
        .inverse()
        .expect("center and its orthogonal complement span");
    let diag: Vec<Rational> = (0..n)
        .map(|i| {
            if i < center.dim() {
                Rational::from_int(1)
            } else {
                Rational::from_int(-1)
            }
        })
        .collect();
    // J^- = J on the center, -J on the complement
    let jminus = j.matrix().mul(&c.mul(&Matrix::diagonal(&diag)).mul(&cinv));
    AlmostComplexStructure::new(jminus)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::acs::{classify_acs, complexify};
    use crate::lie::test_algebras::{abelian, h3};

    #[test]
    fn flip_on_iwasawa_like() {
        let (a, j) = complexify(&h3()).unwrap();
        let ip = InnerProduct::standard(6);
        let jm = j_flip(&a, &j, &ip).unwrap();
        // sign flipped exactly on the 4-dimensional complement of the center
        for k in 0..4 {
            let mut e = vec![Rational::from_int(0); 6];
            e[k] = Rational::from_int(1);
            assert_eq!(jm.apply(&e), j.apply(&e).iter().map(|x| -x.clone()).collect::<Vec<_>>());
        }
        for k in 4..6 {
            let mut e = vec![Rational::from_int(0); 6];
            e[k] = Rational::from_int(1);
            assert_eq!(jm.apply(&e), j.apply(&e));
        }
        let f = classify_acs(&a, &jm);
        assert!(f.in_cbar && !f.in_c);
        // involution
        let back = j_flip(&a, &jm, &ip).unwrap();
        assert_eq!(back, j);
        // J^- commutes with J
        assert_eq!(
            jm.matrix().mul(j.matrix()),
            j.matrix().mul(jm.matrix())
        );
    }

    #[test]
    fn abelian_center_is_everything() {
        let a = abelian(4);
        let j = AlmostComplexStructure::standard_interleaved(4);
        let jm = j_flip(&a, &j, &InnerProduct::standard(4)).unwrap();
        assert_eq!(jm, j);
    }
}
