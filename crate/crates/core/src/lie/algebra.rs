//! Validated Lie algebras and their structural subspaces: lower central
//! series, center, derived subalgebra, derivations.

use thiserror::Error;

use crate::exact::{Field, Matrix, Subspace};

use super::bracket::{Bracket, BracketError, JacobiViolation};

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LieAlgebra<F> {
    bracket: Bracket<F>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LieError {
    #[error("Jacobi identity fails on basis triple ({i}, {j}, {k}); cyclic sum {sum}")]
    JacobiViolation {
        i: usize,
        j: usize,
        k: usize,
        sum: String,
    },
    #[error(transparent)]
    Bracket(#[from] BracketError),
    #[error("algebra is not 2-step nilpotent")]
    NotTwoStep,
    #[error("supplied W1 is not a complement of W2")]
    NotAComplement,
    #[error("supplied W1 does not commute with W2")]
    W1MovesW2,
}

impl<F: Field> LieAlgebra<F> {
    /// Validate a raw bracket; reports the first violated Jacobi triple.
    pub fn validate(bracket: Bracket<F>) -> Result<Self, LieError> {
        match bracket.jacobi_violation() {
            None => Ok(LieAlgebra { bracket }),
            Some(JacobiViolation { triple, cyclic_sum }) => Err(LieError::JacobiViolation {
                i: triple.0,
                j: triple.1,
                k: triple.2,
                sum: format!(
                    "({})",
                    cyclic_sum
                        .iter()
                        .map(|x| x.to_string())
                        .collect::<Vec<_>>()
                        .join(", ")
                ),
            }),
        }
    }

    pub fn dim(&self) -> usize {
        self.bracket.dim()
    }

    pub fn bracket(&self) -> &Bracket<F> {
        &self.bracket
    }

    pub fn is_abelian(&self) -> bool {
        self.bracket.is_zero()
    }

    /// Span of all [e_i, e_j].
    pub fn derived_subalgebra(&self) -> Subspace<F> {
        let n = self.dim();
        let mut vecs = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                let v = self.bracket.of_basis(i, j);
                if v.iter().any(|x| !x.is_zero()) {
                    vecs.push(v);
                }
            }
        }
        Subspace::span(n, &vecs)
    }

    /// [n, s]: span of brackets of basis vectors with a subspace basis.
    fn bracket_with(&self, s: &Subspace<F>) -> Subspace<F> {
        let n = self.dim();
        let mut vecs = Vec::new();
        for i in 0..n {
            let mut e = vec![F::zero(); n];
            e[i] = F::one();
            for col in s.basis_columns() {
                let v = self.bracket.of_vectors(&e, &col);
                if v.iter().any(|x| !x.is_zero()) {
                    vecs.push(v);
                }
            }
        }
        Subspace::span(n, &vecs)
    }

    /// Descending series n >= [n,n] >= [n,[n,n]] >= ... down to zero or
    /// stabilization. 2-step means the third term is zero and the second is
    /// not; non-nilpotent algebras stabilize at a nonzero subspace.
    pub fn lower_central_series(&self) -> Vec<Subspace<F>> {
        let mut series = vec![Subspace::full(self.dim())];
        loop {
            let next = self.bracket_with(series.last().unwrap());
            let stop = next.is_zero() || next.dim() == series.last().unwrap().dim();
            series.push(next);
            if stop {
                break;
            }
        }
        series
    }

    pub fn is_nilpotent(&self) -> bool {
        self.lower_central_series().last().unwrap().is_zero()
    }

    pub fn is_two_step(&self) -> bool {
        let s = self.lower_central_series();
        s.len() == 3 && !s[1].is_zero() && s[2].is_zero()
    }

    /// Nilpotency class at most two: [[n, n], n] = 0 (abelian included).
    pub fn is_class_at_most_two(&self) -> bool {
        self.bracket_with(&self.derived_subalgebra()).is_zero()
    }

    /// Exact kernel of X -> ad(X).
    pub fn center(&self) -> Subspace<F> {
        let n = self.dim();
        // rows indexed by (basis j, coordinate k); columns by X-coordinates
        let m = Matrix::from_fn(n * n, n, |row, x| {
            let (j, k) = (row / n, row % n);
            self.bracket.of_basis(x, j)[k].clone()
        });
        m.kernel()
    }

    /// Exact kernel of D -> (D[X,Y] - [DX,Y] - [X,DY]) over all basis pairs.
    /// Ambient coordinates flatten D row-major: flat[a*n + b] = D_{ab}.
    pub fn derivation_space(&self) -> Subspace<F> {
        let n = self.dim();
        let pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .collect();
        let m = Matrix::from_fn(pairs.len() * n, n * n, |row, col| {
            let (pi, k) = (row / n, row % n);
            let (i, j) = pairs[pi];
            let (a, b) = (col / n, col % n);
            // coefficient of D_{ab} in coordinate k of
            //   D[e_i, e_j] - [D e_i, e_j] - [e_i, D e_j]
            let mut acc = F::zero();
            if k == a {
                acc = acc + self.bracket.of_basis(i, j)[b].clone();
            }
            if b == i {
                acc = acc - self.bracket.of_basis(a, j)[k].clone();
            }
            if b == j {
                acc = acc - self.bracket.of_basis(i, a)[k].clone();
            }
            acc
        });
        m.kernel()
    }

    /// Derivation subspace basis as matrices.
    pub fn derivation_matrices(&self) -> Vec<Matrix<F>> {
        let n = self.dim();
        self.derivation_space()
            .basis_columns()
            .into_iter()
            .map(|flat| Matrix::from_flat(n, n, flat))
            .collect()
    }

    /// Push the algebra forward along an invertible g.
    pub fn act_gl(&self, g: &Matrix<F>) -> Result<Self, LieError> {
        let b = self.bracket.act_gl(g)?;
        // the GL action preserves Jacobi, so no re-validation is needed
        Ok(LieAlgebra { bracket: b })
    }

    pub(crate) fn from_valid_bracket(bracket: Bracket<F>) -> Self {
        debug_assert!(bracket.jacobi_violation().is_none());
        LieAlgebra { bracket }
    }
}
