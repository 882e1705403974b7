//! Hermitian-geometry checks: quasi-Kahler (the (0,1)-part of D_{Zbar} W
//! vanishes on (1,0) fields), Chern-flatness as a bracket identity, the SKT
//! obstruction tensor, and the aggregated report with the memberships of
//! Theorem-2 style sets.

use crate::acs::{
    classify_bracket, holds, identity_witness, AlmostComplexStructure, ClassificationFlags,
    SubspaceIdentity,
};
use crate::exact::{rat, Field, GaussianRational, Matrix, Rational, Subspace};
use crate::lie::LieAlgebra;

use super::connection::levi_civita;
use super::curvature::{curvature, gray_check, GrayIdentity};
use super::{InnerProduct, MetricError};

/// (1,0) vector e_a - i J e_a as Gaussian coordinates in the real basis.
fn one_zero_vector(j: &AlmostComplexStructure, a: usize) -> Vec<GaussianRational> {
    let n = j.dim();
    let jcol = j.matrix().column(a);
    (0..n)
        .map(|k| {
            let re = if k == a {
                Rational::from_int(1)
            } else {
                Rational::from_int(0)
            };
            GaussianRational::new(re, -jcol[k].clone())
        })
        .collect()
}

fn conj_vec(v: &[GaussianRational]) -> Vec<GaussianRational> {
    v.iter().map(|z| z.conj()).collect()
}

/// True iff D_{Zbar} W stays of type (1,0) for all (1,0) pairs; false comes
/// with the first violating basis pair.
pub fn quasi_kahler_check(
    a: &LieAlgebra<Rational>,
    ip: &InnerProduct,
    j: &AlmostComplexStructure,
) -> Result<(bool, Option<(usize, usize)>), MetricError> {
    let n = a.dim();
    if j.dim() != n {
        return Err(MetricError::DimensionMismatch(n, j.dim()));
    }
    let conn = levi_civita(a, ip)?;
    // complexified connection: bilinear in Gaussian coordinates
    let jg = j.matrix().map(|x| x.clone().into_gaussian());
    for x in 0..n {
        let zbar = conj_vec(&one_zero_vector(j, x));
        for y in 0..n {
            let w = one_zero_vector(j, y);
            // D_{zbar} w
            let mut d = vec![GaussianRational::zero(); n];
            for i in 0..n {
                if zbar[i].is_zero() {
                    continue;
                }
                for k in 0..n {
                    if w[k].is_zero() {
                        continue;
                    }
                    let coeff = zbar[i].clone() * w[k].clone();
                    for (o, g) in d.iter_mut().zip(conn.of_basis(i, k)) {
                        if !g.is_zero() {
                            *o = o.clone() + coeff.clone() * g.clone().into_gaussian();
                        }
                    }
                }
            }
            // (0,1)-part: (d + i J d) / 2
            let jd = jg.mul_vec(&d);
            let i_unit = GaussianRational::i();
            let bad = d
                .iter()
                .zip(&jd)
                .any(|(p, q)| !(p.clone() + i_unit.clone() * q.clone()).is_zero());
            if bad {
                return Ok((false, Some((x, y))));
            }
        }
    }
    Ok((true, None))
}

/// Chern-flatness reduces to the bracket identity [JX, Y] = [X, JY].
pub fn chern_flat_check(a: &LieAlgebra<Rational>, j: &AlmostComplexStructure) -> bool {
    holds(a.bracket(), j, SubspaceIdentity::ChernFlat)
}

/// SKT obstruction under the Chern-flat Hermitian hypotheses. The tensor
/// E(r,s,m,l) = h([Z_r, Z_s], [Z_m, Z_l]) over a (1,0) basis (h the induced
/// Hermitian pairing) vanishes iff every c_{rs}^i does, i.e. iff the
/// complex algebra is abelian; frame choice only rescales the tensor, so no
/// unitary normalization is needed.
pub fn skt_check(
    a: &LieAlgebra<Rational>,
    ip: &InnerProduct,
    j: &AlmostComplexStructure,
) -> Result<(bool, Option<[usize; 4]>), MetricError> {
    let n = a.dim();
    if j.dim() != n || ip.dim() != n {
        return Err(MetricError::DimensionMismatch(n, j.dim()));
    }
    let flags = classify_bracket(a.bracket(), j);
    if !flags.in_int {
        return Err(MetricError::SktHypotheses("J is not integrable"));
    }
    if !flags.in_ch {
        return Err(MetricError::SktHypotheses("the pair is not Chern-flat"));
    }
    if !ip.is_compatible(j) {
        return Err(MetricError::SktHypotheses("the metric is not Hermitian for J"));
    }

    // greedy (1,0) basis out of the spanning set e_a - i J e_a
    let mut basis: Vec<Vec<GaussianRational>> = Vec::new();
    for aidx in 0..n {
        if basis.len() == n / 2 {
            break;
        }
        let cand = one_zero_vector(j, aidx);
        let mut cols = basis.clone();
        cols.push(cand.clone());
        if Subspace::span(n, &cols).dim() == cols.len() {
            basis.push(cand);
        }
    }
    debug_assert_eq!(basis.len(), n / 2);

    let bg = a.bracket().promote();
    let gg = ip.gram().map(|x| x.clone().into_gaussian());
    let m = basis.len();
    let mut brackets = vec![vec![Vec::new(); m]; m];
    for r in 0..m {
        for s in 0..m {
            brackets[r][s] = bg.of_vectors(&basis[r], &basis[s]);
        }
    }
    let herm = |v: &[GaussianRational], w: &[GaussianRational]| -> GaussianRational {
        let gw = gg.mul_vec(&conj_vec(w));
        v.iter()
            .zip(&gw)
            .map(|(p, q)| p.clone() * q.clone())
            .fold(GaussianRational::zero(), |acc, t| acc + t)
    };
    for r in 0..m {
        for s in r + 1..m {
            for mm in 0..m {
                for l in mm + 1..m {
                    if !herm(&brackets[r][s], &brackets[mm][l]).is_zero() {
                        return Ok((false, Some([r, s, mm, l])));
                    }
                }
            }
        }
    }
    Ok((true, None))
}

/// Aggregated Hermitian report: classification flags, Gray identities,
/// quasi-Kahler / Chern-flat / SKT verdicts with first witnesses, and the
/// derived set memberships.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct HermitianReport {
    pub flags: ClassificationFlags,
    pub compatible_metric: bool,
    pub two_step: bool,
    pub g1: bool,
    pub g2: bool,
    pub g3: bool,
    pub g1_witness: Option<[usize; 4]>,
    pub g2_witness: Option<[usize; 4]>,
    pub g3_witness: Option<[usize; 4]>,
    pub quasi_kahler: bool,
    pub quasi_kahler_witness: Option<(usize, usize)>,
    pub chern_flat: bool,
    pub chern_flat_witness: Option<(usize, usize)>,
    /// None when the SKT hypotheses (integrable + Chern-flat + Hermitian)
    /// do not apply.
    pub skt: Option<bool>,
    pub skt_witness: Option<[usize; 4]>,
    /// Chern-flat Hermitian with G2: the complex-parallelisable side.
    pub in_cp2: bool,
    /// quasi-Kahler Chern-flat: the anti-bi-invariant side.
    pub in_qk0: bool,
}

pub fn hermitian_report(
    a: &LieAlgebra<Rational>,
    ip: &InnerProduct,
    j: &AlmostComplexStructure,
) -> Result<HermitianReport, MetricError> {
    let flags = classify_bracket(a.bracket(), j);
    let compatible = ip.is_compatible(j);
    let r = curvature(a, ip)?;
    let (g1, g1_witness) = gray_check(&r, j, GrayIdentity::G1);
    let (g2, g2_witness) = gray_check(&r, j, GrayIdentity::G2);
    let (g3, g3_witness) = gray_check(&r, j, GrayIdentity::G3);
    let (quasi_kahler, quasi_kahler_witness) = quasi_kahler_check(a, ip, j)?;
    let chern_flat = flags.in_ch;
    let chern_flat_witness = identity_witness(a.bracket(), j, SubspaceIdentity::ChernFlat);
    let (skt, skt_witness) = if flags.in_int && flags.in_ch && compatible {
        let (v, w) = skt_check(a, ip, j)?;
        (Some(v), w)
    } else {
        (None, None)
    };
    Ok(HermitianReport {
        flags,
        compatible_metric: compatible,
        two_step: a.is_two_step(),
        g1,
        g2,
        g3,
        g1_witness,
        g2_witness,
        g3_witness,
        quasi_kahler,
        quasi_kahler_witness,
        chern_flat,
        chern_flat_witness,
        skt,
        skt_witness,
        in_cp2: compatible && flags.in_int && flags.in_ch && g2,
        in_qk0: compatible && chern_flat && quasi_kahler,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::acs::{anticomplexify, complexify, j_flip};
    use crate::lie::test_algebras::{abelian, aff_c_like, h3};

    #[test]
    fn quasi_kahler_on_flipped_iwasawa() {
        let (a, j) = complexify(&h3()).unwrap();
        let ip = InnerProduct::standard(6);
        let jminus = j_flip(&a, &j, &ip).unwrap();
        assert!(quasi_kahler_check(&a, &ip, &jminus).unwrap().0);
        // with the original bi-invariant J the metric is not quasi-Kahler
        let (ok, witness) = quasi_kahler_check(&a, &ip, &j).unwrap();
        assert!(!ok);
        assert!(witness.is_some());
    }

    #[test]
    fn quasi_kahler_abelian() {
        let a = abelian(4);
        let j = AlmostComplexStructure::standard_interleaved(4);
        assert!(quasi_kahler_check(&a, &InnerProduct::standard(4), &j).unwrap().0);
    }

    #[test]
    fn skt_verdicts() {
        // abelian torus: SKT
        let ab = abelian(4);
        let j4 = AlmostComplexStructure::standard_interleaved(4);
        assert!(skt_check(&ab, &InnerProduct::standard(4), &j4).unwrap().0);
        // nonabelian complex parallelisable: never SKT
        let (iw, j) = complexify(&h3()).unwrap();
        let (ok, witness) = skt_check(&iw, &InnerProduct::standard(6), &j).unwrap();
        assert!(!ok && witness.is_some());
        // anti-bi-invariant structures are not integrable: hypotheses fail
        let (anti, ja) = anticomplexify(&h3()).unwrap();
        assert!(matches!(
            skt_check(&anti, &InnerProduct::standard(6), &ja),
            Err(MetricError::SktHypotheses(_))
        ));
    }

    #[test]
    fn report_correspondence_on_iwasawa() {
        let (a, j) = complexify(&h3()).unwrap();
        let ip = InnerProduct::standard(6);
        let rep = hermitian_report(&a, &ip, &j).unwrap();
        assert!(rep.in_cp2);
        assert!(!rep.in_qk0);
        assert_eq!(rep.skt, Some(false));
        let jminus = j_flip(&a, &j, &ip).unwrap();
        let rep_minus = hermitian_report(&a, &ip, &jminus).unwrap();
        assert!(rep_minus.in_qk0);
        assert!(!rep_minus.in_cp2);
        assert!(rep_minus.skt.is_none());
    }

    #[test]
    fn report_on_aff_is_not_cp2() {
        let aff = aff_c_like();
        let j = AlmostComplexStructure::standard_interleaved(4);
        let rep = hermitian_report(&aff, &InnerProduct::standard(4), &j).unwrap();
        // Chern-flat (bi-invariant implies V(Ch)) but G2 fails: not in CP2
        assert!(rep.chern_flat);
        assert!(!rep.g2);
        assert!(!rep.in_cp2);
    }

    #[test]
    fn report_abelian_all_good() {
        let a = abelian(4);
        let j = AlmostComplexStructure::standard_interleaved(4);
        let rep = hermitian_report(&a, &InnerProduct::standard(4), &j).unwrap();
        assert!(rep.g1 && rep.g2 && rep.g3 && rep.quasi_kahler && rep.chern_flat);
        assert_eq!(rep.skt, Some(true));
        assert!(rep.in_cp2 && rep.in_qk0);
    }
}
