//! Ricci operator of a nilmanifold metric, its (1,1)-part, and exact
//! nilsoliton / minimal-metric certificates.
//!
//! The defining formula
//!   <Ric X, Y> = -1/2 sum <[X,Xi],Xj><[Y,Xi],Xj> + 1/4 sum <[Xi,Xj],X><[Xi,Xj],Y>
//! runs over an orthonormal basis; to stay rational for arbitrary exact
//! metrics the sums are contracted against the Gram matrix and its inverse
//! instead, which is the same tensor expression. The orthonormal form is
//! recovered exactly whenever a rational orthonormal basis exists (tested).

use crate::acs::AlmostComplexStructure;
use crate::exact::{rat, Field, Matrix, Rational};
use crate::lie::LieAlgebra;

use super::{InnerProduct, MetricError};

/// Exact witness of Ric = c I + D with D a derivation.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SolitonCertificate {
    pub c: Rational,
    pub d: Matrix<Rational>,
}

/// The Ricci operator (not the bilinear form): self-adjoint with respect to
/// ip and independent of any basis choice.
pub fn ricci(a: &LieAlgebra<Rational>, ip: &InnerProduct) -> Result<Matrix<Rational>, MetricError> {
    let n = a.dim();
    if ip.dim() != n {
        return Err(MetricError::DimensionMismatch(n, ip.dim()));
    }
    let g = ip.gram();
    let h = ip.inverse_gram();
    // gad[x] = G ad(e_x); entry (c, a) = <[e_x, e_a], e_c>
    let gad: Vec<Matrix<Rational>> = (0..n).map(|x| g.mul(&a.bracket().ad_basis(x))).collect();

    let half = rat(1, 2);
    let quarter = rat(1, 4);
    let mut form = Matrix::zero(n, n);
    // term 1: -1/2 tr(H (G ad_x)^T H (G ad_y)), symmetric in (x, y)
    for x in 0..n {
        for y in x..n {
            let k = gad[x].transpose().mul(&h).mul(&gad[y]);
            let mut acc = Rational::from_int(0);
            for p in 0..n {
                for q in 0..n {
                    if !h[(p, q)].is_zero() && !k[(p, q)].is_zero() {
                        acc = acc + h[(p, q)].clone() * k[(p, q)].clone();
                    }
                }
            }
            let val = -acc * half.clone();
            form[(x, y)] = val.clone();
            if x != y {
                form[(y, x)] = val;
            }
        }
    }
    // term 2: 1/4 sum_{a,c} H_{ac} [(G ad_a) H (G ad_c)^T]_{xy}
    for aa in 0..n {
        for cc in 0..n {
            if h[(aa, cc)].is_zero() {
                continue;
            }
            let m = gad[aa].mul(&h).mul(&gad[cc].transpose());
            for x in 0..n {
                for y in 0..n {
                    if !m[(x, y)].is_zero() {
                        form[(x, y)] = form[(x, y)].clone()
                            + quarter.clone() * h[(aa, cc)].clone() * m[(x, y)].clone();
                    }
                }
            }
        }
    }
    // operator = G^{-1} * form
    Ok(h.mul(&form))
}

/// The (1,1)-component (Ric - J Ric J) / 2; commutes with J and equals Ric
/// whenever [Ric, J] = 0.
pub fn ricci_one_one(
    a: &LieAlgebra<Rational>,
    ip: &InnerProduct,
    j: &AlmostComplexStructure,
) -> Result<Matrix<Rational>, MetricError> {
    let ric = ricci(a, ip)?;
    if j.dim() != a.dim() {
        return Err(MetricError::DimensionMismatch(a.dim(), j.dim()));
    }
    let jr = j.matrix().mul(&ric).mul(j.matrix());
    Ok(ric.sub(&jr).scale(&rat(1, 2)))
}

fn certificate_for(
    a: &LieAlgebra<Rational>,
    operator: &Matrix<Rational>,
) -> Option<SolitonCertificate> {
    let n = a.dim();
    let ders = a.derivation_space();
    // unknowns: c plus derivation coordinates; columns [vec(I) | der basis]
    let k = ders.dim();
    let cols = Matrix::from_fn(n * n, 1 + k, |row, col| {
        if col == 0 {
            let (i, j) = (row / n, row % n);
            if i == j {
                Rational::from_int(1)
            } else {
                Rational::from_int(0)
            }
        } else {
            ders.basis()[(row, col - 1)].clone()
        }
    });
    let rhs = operator.to_flat();
    let (x, _) = cols.solve_affine(&rhs)?;
    let c = x[0].clone();
    let d = operator.sub(&Matrix::identity(n).scale(&c));
    Some(SolitonCertificate { c, d })
}

/// Exact linear feasibility of Ric = c I + D over (c, Der coordinates); a
/// verdict about this particular metric only.
pub fn nilsoliton_check(
    a: &LieAlgebra<Rational>,
    ip: &InnerProduct,
) -> Result<Option<SolitonCertificate>, MetricError> {
    if !a.is_nilpotent() {
        return Err(MetricError::NonNilpotent);
    }
    let ric = ricci(a, ip)?;
    Ok(certificate_for(a, &ric))
}

/// Same feasibility with the (1,1)-part of Ric in place of Ric.
pub fn minimal_check(
    a: &LieAlgebra<Rational>,
    ip: &InnerProduct,
    j: &AlmostComplexStructure,
) -> Result<Option<SolitonCertificate>, MetricError> {
    if !a.is_nilpotent() {
        return Err(MetricError::NonNilpotent);
    }
    let ricj = ricci_one_one(a, ip, j)?;
    Ok(certificate_for(a, &ricj))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat_int;
    use crate::lie::test_algebras::{abelian, aff_c_like, h3};

    #[test]
    fn h3_ricci_diagonal() {
        let r = ricci(&h3(), &InnerProduct::standard(3)).unwrap();
        let expect = Matrix::diagonal(&[rat(-1, 2), rat(-1, 2), rat(1, 2)]);
        assert_eq!(r, expect);
    }

    #[test]
    fn abelian_ricci_zero() {
        assert!(ricci(&abelian(5), &InnerProduct::standard(5)).unwrap().is_zero());
    }

    #[test]
    fn gram_formula_matches_orthonormal_formula() {
        // metric with a rational orthonormal basis: diag(4, 9, 25) has
        // orthonormal basis e_i / sqrt(g_ii) with rational entries
        let a = h3();
        let g = Matrix::diagonal(&[rat_int(4), rat_int(9), rat_int(25)]);
        let ip = InnerProduct::new(g).unwrap();
        let ric = ricci(&a, &ip).unwrap();
        // orthonormal basis columns
        let onb: Vec<Vec<Rational>> = vec![
            vec![rat(1, 2), rat_int(0), rat_int(0)],
            vec![rat_int(0), rat(1, 3), rat_int(0)],
            vec![rat_int(0), rat_int(0), rat(1, 5)],
        ];
        // direct orthonormal evaluation of the defining formula as a form
        let form_direct = |x: &[Rational], y: &[Rational]| -> Rational {
            let mut acc = Rational::from_int(0);
            for xi in &onb {
                for xj in &onb {
                    let t1 = ip.inner(&a.bracket().of_vectors(x, xi), xj)
                        * ip.inner(&a.bracket().of_vectors(y, xi), xj);
                    let t2 = ip.inner(&a.bracket().of_vectors(xi, xj), x)
                        * ip.inner(&a.bracket().of_vectors(xi, xj), y);
                    acc = acc + t2 * rat(1, 4) - t1 * rat(1, 2);
                }
            }
            acc
        };
        for i in 0..3 {
            for j in 0..3 {
                let ei = {
                    let mut v = vec![rat_int(0); 3];
                    v[i] = rat_int(1);
                    v
                };
                let ej = {
                    let mut v = vec![rat_int(0); 3];
                    v[j] = rat_int(1);
                    v
                };
                // <Ric e_i, e_j> from the operator
                let lhs = ip.inner(&ric.mul_vec(&ei), &ej);
                assert_eq!(lhs, form_direct(&ei, &ej));
            }
        }
    }

    #[test]
    fn ricci_is_self_adjoint_and_equivariant() {
        use crate::lie::test_algebras::random_invertible;
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(29);
        let a = h3();
        for _ in 0..5 {
            let m = random_invertible(&mut rng, 3);
            let g = m.transpose().mul(&m).add(&Matrix::identity(3));
            let ip = InnerProduct::new(g.clone()).unwrap();
            let ric = ricci(&a, &ip).unwrap();
            // self-adjoint: G Ric = Ric^T G
            assert_eq!(ip.gram().mul(&ric), ric.transpose().mul(ip.gram()));

            // isometry equivariance: push the algebra and metric forward
            // along random invertible h; Ric transforms by conjugation
            let hmat = random_invertible(&mut rng, 3);
            let hinv = hmat.inverse().unwrap();
            let a2 = a.act_gl(&hmat).unwrap();
            let g2 = hinv.transpose().mul(&g).mul(&hinv);
            let ip2 = InnerProduct::new(g2).unwrap();
            let ric2 = ricci(&a2, &ip2).unwrap();
            assert_eq!(ric2, hmat.mul(&ric).mul(&hinv));
        }
    }

    #[test]
    fn h3_soliton_certificate() {
        let cert = nilsoliton_check(&h3(), &InnerProduct::standard(3))
            .unwrap()
            .unwrap();
        assert_eq!(cert.c, rat(-3, 2));
        assert_eq!(
            cert.d,
            Matrix::diagonal(&[rat_int(1), rat_int(1), rat_int(2)])
        );
        // D is a derivation and Ric = cI + D exactly
        assert!(h3().derivation_space().contains(&cert.d.to_flat()));
    }

    #[test]
    fn abelian_trivial_certificate() {
        let cert = nilsoliton_check(&abelian(3), &InnerProduct::standard(3))
            .unwrap()
            .unwrap();
        assert_eq!(cert.c, rat_int(0));
        assert!(cert.d.is_zero());
    }

    #[test]
    fn non_nilpotent_rejected() {
        assert!(matches!(
            nilsoliton_check(&aff_c_like(), &InnerProduct::standard(4)),
            Err(MetricError::NonNilpotent)
        ));
    }

    #[test]
    fn scalar_curvature_is_trace() {
        // for 2-step algebras the trace is negative unless abelian
        let a = h3();
        let ip = InnerProduct::standard(3);
        let ric = ricci(&a, &ip).unwrap();
        let tr = ric.trace();
        assert_eq!(tr, rat(-1, 2));
        assert!(num_traits::Signed::is_negative(&tr));
    }
}
