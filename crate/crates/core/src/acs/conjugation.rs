//! The conjugation of a type-(p, q) bracket: the involution phi that is the
//! identity on W2 and anti-commutes with J on W1, acting through the GL
//! action. It exchanges the bi-invariant and anti-bi-invariant subspaces.

use crate::exact::{rat_int, Matrix, Rational, Subspace};
use crate::lie::{LieAlgebra, TwoStepPresentation};

use super::{AcsError, AlmostComplexStructure};

#[derive(Clone, Debug)]
pub struct ConjugationSplit {
    presentation: TwoStepPresentation<Rational>,
    j: AlmostComplexStructure,
    phi: Matrix<Rational>,
}

impl ConjugationSplit {
    /// Build the split for an algebra of nilpotency class <= 2 whose
    /// canonical W1, W2 are J-invariant. W1 is refined into a J-adapted
    /// basis (u_1, J u_1, ..., u_{p/2}, J u_{p/2}); phi fixes W2 and the
    /// u_a and negates the J u_a.
    pub fn new(
        algebra: &LieAlgebra<Rational>,
        j: &AlmostComplexStructure,
        w1_choice: Option<Subspace<Rational>>,
    ) -> Result<Self, AcsError> {
        if j.dim() != algebra.dim() {
            return Err(AcsError::DimensionMismatch(
                algebra.dim(),
                j.dim(),
                j.dim(),
            ));
        }
        let presentation = TwoStepPresentation::class_two(algebra, w1_choice)?;
        let w1 = presentation.w1();
        let w2 = presentation.w2();
        if !w1.is_invariant_under(j.matrix()) {
            return Err(AcsError::NotJInvariant { subspace: "W1" });
        }
        if !w2.is_invariant_under(j.matrix()) {
            return Err(AcsError::NotJInvariant { subspace: "W2" });
        }

        let n = algebra.dim();
        // greedy J-adapted basis of W1
        let mut adapted: Vec<Vec<Rational>> = Vec::new();
        for cand in w1.basis_columns() {
            let span = Subspace::span(n, &adapted);
            if !span.contains(&cand) {
                let jc = j.apply(&cand);
                adapted.push(cand);
                adapted.push(jc);
            }
        }
        debug_assert_eq!(adapted.len(), w1.dim(), "W1 has odd complex structure");

        // change of basis: adapted W1 vectors then the W2 basis
        let mut cols = adapted.clone();
        cols.extend(w2.basis_columns());
        let c = Matrix::from_columns(n, &cols);
        let cinv = c.inverse().expect("presentation columns form a basis");
        let diag: Vec<Rational> = (0..n)
            .map(|i| {
                if i < adapted.len() && i % 2 == 1 {
                    rat_int(-1)
                } else {
                    rat_int(1)
                }
            })
            .collect();
        let phi = c.mul(&Matrix::diagonal(&diag)).mul(&cinv);
        debug_assert_eq!(phi.mul(&phi), Matrix::identity(n));
        Ok(ConjugationSplit {
            presentation,
            j: j.clone(),
            phi,
        })
    }

    pub fn presentation(&self) -> &TwoStepPresentation<Rational> {
        &self.presentation
    }

    pub fn j(&self) -> &AlmostComplexStructure {
        &self.j
    }

    pub fn phi(&self) -> &Matrix<Rational> {
        &self.phi
    }

    /// The conjugate algebra phi . lambda; applying the construction twice
    /// returns the original bracket.
    pub fn conjugate(&self) -> Result<LieAlgebra<Rational>, AcsError> {
        Ok(self.presentation.algebra().act_gl(&self.phi)?)
    }
}

/// Convenience: conjugate with the canonical presentation.
pub fn conjugate_bracket(
    algebra: &LieAlgebra<Rational>,
    j: &AlmostComplexStructure,
) -> Result<LieAlgebra<Rational>, AcsError> {
    ConjugationSplit::new(algebra, j, None)?.conjugate()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::acs::{anticomplexify, classify_acs, complexify};
    use crate::lie::test_algebras::{abelian, h3};

    #[test]
    fn phi_shape_on_iwasawa_like() {
        let (a, j) = complexify(&h3()).unwrap();
        let split = ConjugationSplit::new(&a, &j, None).unwrap();
        // phi fixes W2 pointwise and anti-commutes with J on W1
        for v in split.presentation().w2().basis_columns() {
            assert_eq!(split.phi().mul_vec(&v), v);
        }
        let jm = j.matrix();
        for v in split.presentation().w1().basis_columns() {
            let pj = split.phi().mul_vec(&jm.mul_vec(&v));
            let jp: Vec<Rational> = jm
                .mul_vec(&split.phi().mul_vec(&v))
                .into_iter()
                .map(|x| -x)
                .collect();
            assert_eq!(pj, jp);
        }
    }

    #[test]
    fn conjugation_swaps_c_and_cbar() {
        let (a, j) = complexify(&h3()).unwrap();
        let conj = conjugate_bracket(&a, &j).unwrap();
        let f = classify_acs(&conj, &j);
        assert!(f.in_cbar && !f.in_c);
        // and it equals the anti-complexification (see the correspondence
        // tests in the integration suite for the general statement)
        let (anti, _) = anticomplexify(&h3()).unwrap();
        assert_eq!(conj, anti);
    }

    #[test]
    fn involution_on_iwasawa_like() {
        let (a, j) = complexify(&h3()).unwrap();
        let once = conjugate_bracket(&a, &j).unwrap();
        let twice = conjugate_bracket(&once, &j).unwrap();
        assert_eq!(twice, a);
    }

    #[test]
    fn abelian_unchanged() {
        let a = abelian(4);
        let j = AlmostComplexStructure::standard_interleaved(4);
        assert_eq!(conjugate_bracket(&a, &j).unwrap(), a);
    }
}
