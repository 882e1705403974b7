//! Linear subspaces of an ambient exact vector space, stored with a
//! canonical (reduced row echelon) basis so that equal subspaces compare
//! equal structurally.

use super::matrix::Matrix;
use super::scalar::Field;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Subspace<F> {
    ambient: usize,
    /// ambient x dim matrix; columns are the canonical basis vectors.
    basis: Matrix<F>,
}

impl<F: Field> Subspace<F> {
    pub fn zero(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: Matrix::zero(ambient, 0),
        }
    }

    pub fn full(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: Matrix::identity(ambient),
        }
    }

    /// Span of the given vectors, reduced to a canonical independent basis.
    pub fn span(ambient: usize, vectors: &[Vec<F>]) -> Self {
        for v in vectors {
            assert_eq!(v.len(), ambient, "vector length mismatch");
        }
        if vectors.is_empty() {
            return Subspace::zero(ambient);
        }
        // rows = vectors; canonical basis = nonzero rows of the RREF
        let rows = Matrix::from_fn(vectors.len(), ambient, |i, j| vectors[i][j].clone());
        let (r, pivots) = rows.rref();
        let cols: Vec<Vec<F>> = (0..pivots.len())
            .map(|row| (0..ambient).map(|j| r[(row, j)].clone()).collect())
            .collect();
        Subspace {
            ambient,
            basis: Matrix::from_columns(ambient, &cols),
        }
    }

    /// Wrap columns already known independent (still canonicalized).
    pub fn from_independent_columns(ambient: usize, cols: Vec<Vec<F>>) -> Self {
        let n = cols.len();
        let s = Subspace::span(ambient, &cols);
        debug_assert_eq!(s.dim(), n, "columns were not independent");
        s
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.cols()
    }

    pub fn basis(&self) -> &Matrix<F> {
        &self.basis
    }

    pub fn basis_columns(&self) -> Vec<Vec<F>> {
        self.basis.columns()
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    pub fn contains(&self, v: &[F]) -> bool {
        self.coords_of(v).is_some()
    }

    /// Coordinates of v in the canonical basis, if v lies in the subspace.
    pub fn coords_of(&self, v: &[F]) -> Option<Vec<F>> {
        assert_eq!(v.len(), self.ambient, "vector length mismatch");
        if self.dim() == 0 {
            return if v.iter().all(|x| x.is_zero()) {
                Some(Vec::new())
            } else {
                None
            };
        }
        self.basis.solve_affine(v).map(|(x, _)| x)
    }

    pub fn contains_subspace(&self, other: &Subspace<F>) -> bool {
        other
            .basis_columns()
            .iter()
            .all(|v| self.contains(v))
    }

    /// Sum of two subspaces of the same ambient space.
    pub fn sum(&self, other: &Subspace<F>) -> Subspace<F> {
        assert_eq!(self.ambient, other.ambient);
        let mut vs = self.basis_columns();
        vs.extend(other.basis_columns());
        Subspace::span(self.ambient, &vs)
    }

    /// Pivot columns of the canonical basis (one ambient coordinate per
    /// basis vector).
    pub fn pivot_coordinates(&self) -> Vec<usize> {
        let (_, pivots) = self.basis.transpose().rref();
        pivots
    }

    /// The coordinate subspace spanned by ambient coordinates that are not
    /// pivots of this subspace; a deterministic complement.
    pub fn coordinate_complement(&self) -> Subspace<F> {
        let pivots = self.pivot_coordinates();
        let cols: Vec<Vec<F>> = (0..self.ambient)
            .filter(|c| !pivots.contains(c))
            .map(|c| {
                let mut v = vec![F::zero(); self.ambient];
                v[c] = F::one();
                v
            })
            .collect();
        Subspace::from_independent_columns(self.ambient, cols)
    }

    /// Whether m maps this subspace into itself.
    pub fn is_invariant_under(&self, m: &Matrix<F>) -> bool {
        self.basis_columns()
            .iter()
            .all(|v| self.contains(&m.mul_vec(v)))
    }

    /// Orthogonal complement with respect to a symmetric Gram matrix.
    pub fn orthogonal_complement(&self, gram: &Matrix<F>) -> Subspace<F> {
        // v orthogonal to all basis vectors b: (b^T G) v = 0
        let bt = self.basis.transpose().mul(gram);
        bt.kernel()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::scalar::{rat_int, Rational};

    fn v(vals: &[i64]) -> Vec<Rational> {
        vals.iter().map(|&x| rat_int(x)).collect()
    }

    #[test]
    fn canonical_equality() {
        let a = Subspace::span(3, &[v(&[1, 1, 0]), v(&[0, 0, 1])]);
        let b = Subspace::span(3, &[v(&[1, 1, 1]), v(&[2, 2, 1]), v(&[1, 1, 2])]);
        assert_eq!(a, b);
        assert_eq!(a.dim(), 2);
    }

    #[test]
    fn membership_and_complement() {
        let s = Subspace::span(3, &[v(&[0, 0, 1])]);
        assert!(s.contains(&v(&[0, 0, 5])));
        assert!(!s.contains(&v(&[1, 0, 0])));
        let c = s.coordinate_complement();
        assert_eq!(c.dim(), 2);
        assert_eq!(s.sum(&c).dim(), 3);
    }

    #[test]
    fn orthogonal_complement_identity_gram() {
        let s = Subspace::span(4, &[v(&[1, 2, 0, 0])]);
        let c = s.orthogonal_complement(&Matrix::identity(4));
        assert_eq!(c.dim(), 3);
        assert!(c.contains(&v(&[-2, 1, 0, 0])));
        assert!(c.contains(&v(&[0, 0, 1, 0])));
    }
}
