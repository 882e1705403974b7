//! Type-(p, q) presentations of 2-step algebras: a splitting W1 + W2 with
//! [W1, W1] inside W2 and [W, W2] = 0, W2 the derived algebra for canonical
//! presentations.

use crate::exact::{Field, Subspace};

use super::algebra::{LieAlgebra, LieError};

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TwoStepPresentation<F> {
    algebra: LieAlgebra<F>,
    w1: Subspace<F>,
    w2: Subspace<F>,
}

impl<F: Field> TwoStepPresentation<F> {
    /// Canonical presentation of a 2-step algebra: W2 = derived algebra, W1 =
    /// supplied complement or the pivot-free coordinate complement.
    pub fn new(algebra: &LieAlgebra<F>, w1_choice: Option<Subspace<F>>) -> Result<Self, LieError> {
        if !algebra.is_two_step() {
            return Err(LieError::NotTwoStep);
        }
        Self::class_two(algebra, w1_choice)
    }

    /// Same construction but also accepting abelian algebras (q = 0); used
    /// by the conjugation machinery where the degenerate case is legal.
    pub(crate) fn class_two(
        algebra: &LieAlgebra<F>,
        w1_choice: Option<Subspace<F>>,
    ) -> Result<Self, LieError> {
        if !algebra.is_class_at_most_two() {
            return Err(LieError::NotTwoStep);
        }
        let w2 = algebra.derived_subalgebra();
        let w1 = match w1_choice {
            None => w2.coordinate_complement(),
            Some(w1) => {
                if w1.dim() + w2.dim() != algebra.dim() || w1.sum(&w2).dim() != algebra.dim() {
                    return Err(LieError::NotAComplement);
                }
                w1
            }
        };
        // W2 is central in a 2-step algebra; checked anyway
        let center = algebra.center();
        if !center.contains_subspace(&w2) {
            return Err(LieError::W1MovesW2);
        }
        Ok(TwoStepPresentation {
            algebra: algebra.clone(),
            w1,
            w2,
        })
    }

    pub fn algebra(&self) -> &LieAlgebra<F> {
        &self.algebra
    }

    pub fn w1(&self) -> &Subspace<F> {
        &self.w1
    }

    pub fn w2(&self) -> &Subspace<F> {
        &self.w2
    }

    /// dim W1.
    pub fn p(&self) -> usize {
        self.w1.dim()
    }

    /// dim W2 = dim of the derived algebra.
    pub fn q(&self) -> usize {
        self.w2.dim()
    }
}
