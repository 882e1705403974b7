//! Almost complex structures on Lie algebras: the five-subspace
//! classification, the decomposition of the bracket variety, conjugation,
//! complexification / anti-complexification and the center-based sign flip.

mod complexification;
mod conjugation;
mod flip;

pub use complexification::{anticomplexify, complexify};
pub use conjugation::ConjugationSplit;
pub use flip::j_flip;

use thiserror::Error;

use crate::exact::{rat_int, Field, Matrix, Rational};
use crate::lie::{Bracket, LieAlgebra, LieError};

/// A linear J with J^2 = -I, exactly, over the rationals.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct AlmostComplexStructure {
    j: Matrix<Rational>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AcsError {
    #[error("J^2 != -identity")]
    NotAlmostComplex,
    #[error("dimension mismatch: algebra dim {0}, J is {1}x{2}")]
    DimensionMismatch(usize, usize, usize),
    #[error("{subspace} is not J-invariant")]
    NotJInvariant { subspace: &'static str },
    #[error(transparent)]
    Lie(#[from] LieError),
}

impl AlmostComplexStructure {
    pub fn new(j: Matrix<Rational>) -> Result<Self, AcsError> {
        if !j.is_square() {
            return Err(AcsError::NotAlmostComplex);
        }
        let n = j.rows();
        if j.mul(&j) != Matrix::identity(n).neg() {
            return Err(AcsError::NotAlmostComplex);
        }
        Ok(AlmostComplexStructure { j })
    }

    /// Multiplication by i on interleaved coordinates (x1, ix1, x2, ix2, ...):
    /// J e_{2k} = e_{2k+1}, J e_{2k+1} = -e_{2k}.
    pub fn standard_interleaved(dim: usize) -> Self {
        assert!(dim % 2 == 0, "need even dimension");
        let mut j = Matrix::zero(dim, dim);
        for k in 0..dim / 2 {
            j[(2 * k + 1, 2 * k)] = rat_int(1);
            j[(2 * k, 2 * k + 1)] = rat_int(-1);
        }
        AlmostComplexStructure { j }
    }

    pub fn dim(&self) -> usize {
        self.j.rows()
    }

    pub fn matrix(&self) -> &Matrix<Rational> {
        &self.j
    }

    pub fn apply(&self, v: &[Rational]) -> Vec<Rational> {
        self.j.mul_vec(v)
    }
}

/// Membership of a bracket in the five invariant subspaces of the bracket
/// variety. The implications in_ab => in_int, in_c => in_int and in_ch,
/// in_cbar => in_ch hold for every input.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct ClassificationFlags {
    pub in_int: bool,
    pub in_ab: bool,
    pub in_c: bool,
    pub in_ch: bool,
    pub in_cbar: bool,
}

/// Which defining identity to test; used for witness extraction.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum SubspaceIdentity {
    Integrable,
    Abelian,
    BiInvariant,
    ChernFlat,
    AntiBiInvariant,
}

fn identity_residual(
    b: &Bracket<Rational>,
    j: &AlmostComplexStructure,
    which: SubspaceIdentity,
    x: usize,
    y: usize,
) -> Vec<Rational> {
    let n = b.dim();
    let jm = j.matrix();
    let ex = |i: usize| -> Vec<Rational> {
        let mut v = vec![rat_int(0); n];
        v[i] = rat_int(1);
        v
    };
    let jx = jm.column(x);
    let jy = jm.column(y);
    let bxy = b.of_basis(x, y);
    let diff = |a: Vec<Rational>, c: Vec<Rational>| -> Vec<Rational> {
        a.into_iter().zip(c).map(|(p, q)| p - q).collect()
    };
    match which {
        SubspaceIdentity::Abelian => {
            // [JX, JY] = [X, Y]
            diff(b.of_vectors(&jx, &jy), bxy)
        }
        SubspaceIdentity::Integrable => {
            // [JX, JY] = [X, Y] + J[JX, Y] + J[X, JY]
            let lhs = b.of_vectors(&jx, &jy);
            let t1 = jm.mul_vec(&b.of_vectors(&jx, &ex(y)));
            let t2 = jm.mul_vec(&b.of_vectors(&ex(x), &jy));
            let rhs: Vec<Rational> = bxy
                .into_iter()
                .zip(t1)
                .zip(t2)
                .map(|((a, p), q)| a + p + q)
                .collect();
            diff(lhs, rhs)
        }
        SubspaceIdentity::BiInvariant => {
            // [JX, Y] = J[X, Y]
            diff(b.of_vectors(&jx, &ex(y)), jm.mul_vec(&bxy))
        }
        SubspaceIdentity::ChernFlat => {
            // [JX, Y] = [X, JY]
            diff(b.of_vectors(&jx, &ex(y)), b.of_vectors(&ex(x), &jy))
        }
        SubspaceIdentity::AntiBiInvariant => {
            // [JX, Y] = -J[X, Y]
            let neg: Vec<Rational> = jm.mul_vec(&bxy).into_iter().map(|v| -v).collect();
            diff(b.of_vectors(&jx, &ex(y)), neg)
        }
    }
}

/// Lexicographically first basis pair violating the identity, if any.
pub fn identity_witness(
    b: &Bracket<Rational>,
    j: &AlmostComplexStructure,
    which: SubspaceIdentity,
) -> Option<(usize, usize)> {
    let n = b.dim();
    assert_eq!(j.dim(), n, "dimension mismatch");
    for x in 0..n {
        for y in 0..n {
            if identity_residual(b, j, which, x, y)
                .iter()
                .any(|v| !v.is_zero())
            {
                return Some((x, y));
            }
        }
    }
    None
}

pub fn holds(b: &Bracket<Rational>, j: &AlmostComplexStructure, which: SubspaceIdentity) -> bool {
    identity_witness(b, j, which).is_none()
}

/// Exact truth value of each defining identity, quantified over all basis
/// pairs.
pub fn classify_bracket(b: &Bracket<Rational>, j: &AlmostComplexStructure) -> ClassificationFlags {
    ClassificationFlags {
        in_int: holds(b, j, SubspaceIdentity::Integrable),
        in_ab: holds(b, j, SubspaceIdentity::Abelian),
        in_c: holds(b, j, SubspaceIdentity::BiInvariant),
        in_ch: holds(b, j, SubspaceIdentity::ChernFlat),
        in_cbar: holds(b, j, SubspaceIdentity::AntiBiInvariant),
    }
}

pub fn classify_acs(a: &LieAlgebra<Rational>, j: &AlmostComplexStructure) -> ClassificationFlags {
    classify_bracket(a.bracket(), j)
}

/// The three components of V = V(ab) + V(C) + V(Cbar).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BracketDecomposition {
    pub ab: Bracket<Rational>,
    pub c: Bracket<Rational>,
    pub cbar: Bracket<Rational>,
}

/// Decompose a (not necessarily Jacobi) skew bracket along the invariant
/// subspaces: first the half-sums ([X,Y] +- [JX,JY]) / 2 split off V(ab) and
/// V(Ch), then ([X,Y] -+ J[JX,Y]) / 2 splits V(Ch) into V(C) and V(Cbar).
pub fn decompose_bracket(
    b: &Bracket<Rational>,
    j: &AlmostComplexStructure,
) -> BracketDecomposition {
    let n = b.dim();
    assert_eq!(j.dim(), n, "dimension mismatch");
    let jm = j.matrix();
    let half = crate::exact::rat(1, 2);
    let mut ab = Bracket::zero(n);
    let mut ch = Bracket::zero(n);
    for x in 0..n {
        for y in x + 1..n {
            let bxy = b.of_basis(x, y);
            let jj = b.of_vectors(&jm.column(x), &jm.column(y));
            let plus: Vec<Rational> = bxy
                .iter()
                .zip(&jj)
                .map(|(a, c)| (a.clone() + c.clone()) * half.clone())
                .collect();
            let minus: Vec<Rational> = bxy
                .iter()
                .zip(&jj)
                .map(|(a, c)| (a.clone() - c.clone()) * half.clone())
                .collect();
            ab.set_pair(x, y, plus);
            ch.set_pair(x, y, minus);
        }
    }
    let mut c = Bracket::zero(n);
    let mut cbar = Bracket::zero(n);
    for x in 0..n {
        for y in x + 1..n {
            let mxy = ch.of_basis(x, y);
            let ex = {
                let mut v = vec![rat_int(0); n];
                v[y] = rat_int(1);
                v
            };
            let jleft = jm.mul_vec(&ch.of_vectors(&jm.column(x), &ex));
            let cpart: Vec<Rational> = mxy
                .iter()
                .zip(&jleft)
                .map(|(a, t)| (a.clone() - t.clone()) * half.clone())
                .collect();
            let cbarpart: Vec<Rational> = mxy
                .iter()
                .zip(&jleft)
                .map(|(a, t)| (a.clone() + t.clone()) * half.clone())
                .collect();
            c.set_pair(x, y, cpart);
            cbar.set_pair(x, y, cbarpart);
        }
    }
    BracketDecomposition { ab, c, cbar }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::test_algebras::{abelian, h3};
    use rand::{Rng, SeedableRng};

    fn iwasawa_like() -> (LieAlgebra<Rational>, AlmostComplexStructure) {
        complexify(&h3()).unwrap()
    }

    #[test]
    fn j_squared_checked() {
        assert!(AlmostComplexStructure::new(Matrix::identity(2)).is_err());
        let j = AlmostComplexStructure::standard_interleaved(4);
        assert_eq!(j.matrix().mul(j.matrix()), Matrix::identity(4).neg());
    }

    #[test]
    fn classify_bi_invariant_case() {
        let (a, j) = iwasawa_like();
        let f = classify_acs(&a, &j);
        assert!(f.in_c && f.in_int && f.in_ch);
        assert!(!f.in_ab && !f.in_cbar);
    }

    #[test]
    fn classify_zero_bracket_all_true() {
        let a = abelian(4);
        let j = AlmostComplexStructure::standard_interleaved(4);
        let f = classify_acs(&a, &j);
        assert!(f.in_int && f.in_ab && f.in_c && f.in_ch && f.in_cbar);
    }

    #[test]
    fn decompose_fixes_its_subspaces() {
        let (a, j) = iwasawa_like();
        // bi-invariant bracket projects to (0, bracket, 0)
        let d = decompose_bracket(a.bracket(), &j);
        assert!(d.ab.is_zero());
        assert_eq!(&d.c, a.bracket());
        assert!(d.cbar.is_zero());
        // anti-bi-invariant bracket projects to (0, 0, bracket)
        let (b, jb) = anticomplexify(&h3()).unwrap();
        let d = decompose_bracket(b.bracket(), &jb);
        assert!(d.ab.is_zero() && d.c.is_zero());
        assert_eq!(&d.cbar, b.bracket());
    }

    #[test]
    fn decompose_random_brackets() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(17);
        let j = AlmostComplexStructure::standard_interleaved(6);
        for _ in 0..25 {
            let mut b = Bracket::zero(6);
            for i in 0..6 {
                for k in i + 1..6 {
                    let v: Vec<Rational> =
                        (0..6).map(|_| rat_int(rng.gen_range(-4i64..=4))).collect();
                    b.set_pair(i, k, v);
                }
            }
            let d = decompose_bracket(&b, &j);
            // parts re-sum to the input
            assert_eq!(d.ab.add(&d.c).add(&d.cbar), b);
            // each part satisfies its defining identity exactly
            assert!(holds(&d.ab, &j, SubspaceIdentity::Abelian));
            assert!(holds(&d.c, &j, SubspaceIdentity::BiInvariant));
            assert!(holds(&d.cbar, &j, SubspaceIdentity::AntiBiInvariant));
            // projections are idempotent
            let dd = decompose_bracket(&d.ab, &j);
            assert_eq!(dd.ab, d.ab);
            assert!(dd.c.is_zero() && dd.cbar.is_zero());
            let dc = decompose_bracket(&d.c, &j);
            assert_eq!(dc.c, d.c);
            assert!(dc.ab.is_zero() && dc.cbar.is_zero());
            let db = decompose_bracket(&d.cbar, &j);
            assert_eq!(db.cbar, d.cbar);
            assert!(db.ab.is_zero() && db.c.is_zero());
        }
    }

    #[test]
    fn flag_implications_on_random_inputs() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(23);
        let j = AlmostComplexStructure::standard_interleaved(4);
        for _ in 0..40 {
            let mut b = Bracket::zero(4);
            for i in 0..4 {
                for k in i + 1..4 {
                    let v: Vec<Rational> =
                        (0..4).map(|_| rat_int(rng.gen_range(-2i64..=2))).collect();
                    b.set_pair(i, k, v);
                }
            }
            // mix in projections so the special subspaces actually occur
            let d = decompose_bracket(&b, &j);
            for candidate in [b, d.ab, d.c, d.cbar] {
                let f = classify_bracket(&candidate, &j);
                assert!(!f.in_ab || f.in_int);
                assert!(!f.in_c || (f.in_int && f.in_ch));
                assert!(!f.in_cbar || f.in_ch);
            }
        }
    }
}
