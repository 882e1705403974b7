//! Skew-symmetric bilinear brackets on an exact vector space.
//!
//! A `Bracket` is a point of the variety V of all skew maps W x W -> W,
//! stored through structure constants for i < j only, so antisymmetry holds
//! by construction. Lie algebras are validated brackets (see `algebra`).

use thiserror::Error;

use crate::exact::{Field, GaussianRational, Matrix, Rational};

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Bracket<F> {
    dim: usize,
    /// c[pair_index(i, j)][k] is the coefficient of e_k in [e_i, e_j], i < j.
    c: Vec<Vec<F>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BracketError {
    #[error("matrix is singular")]
    SingularMatrix,
    #[error("dimension mismatch: bracket dim {0}, matrix {1}x{2}")]
    DimensionMismatch(usize, usize, usize),
}

fn pair_index(dim: usize, i: usize, j: usize) -> usize {
    debug_assert!(i < j && j < dim);
    i * dim - i * (i + 1) / 2 + (j - i - 1)
}

pub fn pair_count(dim: usize) -> usize {
    dim * (dim - 1) / 2
}

impl<F: Field> Bracket<F> {
    pub fn zero(dim: usize) -> Self {
        Bracket {
            dim,
            c: vec![vec![F::zero(); dim]; pair_count(dim)],
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Structure vector of [e_i, e_j] for i < j.
    pub fn set_pair(&mut self, i: usize, j: usize, value: Vec<F>) {
        assert!(i < j && j < self.dim, "need i < j < dim");
        assert_eq!(value.len(), self.dim);
        self.c[pair_index(self.dim, i, j)] = value;
    }

    pub fn add_to_pair(&mut self, i: usize, j: usize, k: usize, coeff: F) {
        assert!(i != j, "repeated generator");
        let (a, b, sign) = if i < j { (i, j, false) } else { (j, i, true) };
        let idx = pair_index(self.dim, a, b);
        let cur = self.c[idx][k].clone();
        self.c[idx][k] = if sign { cur - coeff } else { cur + coeff };
    }

    /// [e_i, e_j] as a coordinate vector (any i, j; sign handled).
    pub fn of_basis(&self, i: usize, j: usize) -> Vec<F> {
        if i == j {
            return vec![F::zero(); self.dim];
        }
        if i < j {
            self.c[pair_index(self.dim, i, j)].clone()
        } else {
            self.c[pair_index(self.dim, j, i)]
                .iter()
                .map(|x| -x.clone())
                .collect()
        }
    }

    /// Bilinear extension: [u, v].
    pub fn of_vectors(&self, u: &[F], v: &[F]) -> Vec<F> {
        assert_eq!(u.len(), self.dim);
        assert_eq!(v.len(), self.dim);
        let mut out = vec![F::zero(); self.dim];
        for i in 0..self.dim {
            if u[i].is_zero() && v[i].is_zero() {
                continue;
            }
            for j in i + 1..self.dim {
                // coefficient of [e_i, e_j] in [u, v]
                let coeff = u[i].clone() * v[j].clone() - u[j].clone() * v[i].clone();
                if coeff.is_zero() {
                    continue;
                }
                let cij = &self.c[pair_index(self.dim, i, j)];
                for (o, ck) in out.iter_mut().zip(cij) {
                    if !ck.is_zero() {
                        *o = o.clone() + coeff.clone() * ck.clone();
                    }
                }
            }
        }
        out
    }

    /// Matrix of ad(e_i): column j holds [e_i, e_j].
    pub fn ad_basis(&self, i: usize) -> Matrix<F> {
        Matrix::from_fn(self.dim, self.dim, |k, j| self.of_basis(i, j)[k].clone())
    }

    pub fn is_zero(&self) -> bool {
        self.c.iter().all(|v| v.iter().all(|x| x.is_zero()))
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.dim, other.dim);
        let c = self
            .c
            .iter()
            .zip(&other.c)
            .map(|(a, b)| a.iter().zip(b).map(|(x, y)| x.clone() + y.clone()).collect())
            .collect();
        Bracket { dim: self.dim, c }
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!(self.dim, other.dim);
        let c = self
            .c
            .iter()
            .zip(&other.c)
            .map(|(a, b)| a.iter().zip(b).map(|(x, y)| x.clone() - y.clone()).collect())
            .collect();
        Bracket { dim: self.dim, c }
    }

    pub fn scale(&self, s: &F) -> Self {
        let c = self
            .c
            .iter()
            .map(|v| v.iter().map(|x| x.clone() * s.clone()).collect())
            .collect();
        Bracket { dim: self.dim, c }
    }

    /// The GL action (g.λ)(X, Y) = g[g^{-1}X, g^{-1}Y].
    pub fn act_gl(&self, g: &Matrix<F>) -> Result<Self, BracketError> {
        if g.rows() != self.dim || g.cols() != self.dim {
            return Err(BracketError::DimensionMismatch(self.dim, g.rows(), g.cols()));
        }
        let ginv = g.inverse().ok_or(BracketError::SingularMatrix)?;
        let mut out = Bracket::zero(self.dim);
        for i in 0..self.dim {
            for j in i + 1..self.dim {
                let u = ginv.column(i);
                let v = ginv.column(j);
                let w = self.of_vectors(&u, &v);
                out.set_pair(i, j, g.mul_vec(&w));
            }
        }
        Ok(out)
    }

    /// First violated Jacobi triple, if any, with the nonzero cyclic sum
    /// [[e_i,e_j],e_k] + [[e_j,e_k],e_i] + [[e_k,e_i],e_j].
    pub fn jacobi_violation(&self) -> Option<JacobiViolation<F>> {
        let basis: Vec<Vec<F>> = (0..self.dim)
            .map(|i| {
                let mut v = vec![F::zero(); self.dim];
                v[i] = F::one();
                v
            })
            .collect();
        for i in 0..self.dim {
            for j in i + 1..self.dim {
                let bij = self.of_basis(i, j);
                for k in j + 1..self.dim {
                    let bjk = self.of_basis(j, k);
                    let bki = self.of_basis(k, i);
                    let mut sum = self.of_vectors(&bij, &basis[k]);
                    let t2 = self.of_vectors(&bjk, &basis[i]);
                    let t3 = self.of_vectors(&bki, &basis[j]);
                    for ((s, a), b) in sum.iter_mut().zip(t2).zip(t3) {
                        *s = s.clone() + a + b;
                    }
                    if sum.iter().any(|x| !x.is_zero()) {
                        return Some(JacobiViolation {
                            triple: (i, j, k),
                            cyclic_sum: sum,
                        });
                    }
                }
            }
        }
        None
    }
}

impl Bracket<Rational> {
    /// Same structure constants viewed over Q(i).
    pub fn promote(&self) -> Bracket<GaussianRational> {
        Bracket {
            dim: self.dim,
            c: self
                .c
                .iter()
                .map(|v| v.iter().map(|x| x.clone().into_gaussian()).collect())
                .collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JacobiViolation<F> {
    pub triple: (usize, usize, usize),
    pub cyclic_sum: Vec<F>,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{rat_int, Rational};

    pub(crate) fn h3_bracket() -> Bracket<Rational> {
        let mut b = Bracket::zero(3);
        b.add_to_pair(0, 1, 2, rat_int(1));
        b
    }

    #[test]
    fn antisymmetry_by_storage() {
        let b = h3_bracket();
        assert_eq!(b.of_basis(0, 1)[2], rat_int(1));
        assert_eq!(b.of_basis(1, 0)[2], rat_int(-1));
        assert!(b.of_basis(1, 1).iter().all(|x| x.is_zero()));
    }

    #[test]
    fn bilinearity() {
        let b = h3_bracket();
        let u = vec![rat_int(2), rat_int(3), rat_int(0)];
        let v = vec![rat_int(1), rat_int(-1), rat_int(5)];
        // [2e0 + 3e1, e0 - e1 + 5e2] = (2*(-1) - 3*1) e2
        assert_eq!(b.of_vectors(&u, &v)[2], rat_int(-5));
    }

    #[test]
    fn jacobi_violation_reported() {
        // [X1,X2]=X3, [X1,X3]=X1 violates Jacobi on (0,1,2)
        let mut b = Bracket::zero(3);
        b.add_to_pair(0, 1, 2, rat_int(1));
        b.add_to_pair(0, 2, 0, rat_int(1));
        let v = b.jacobi_violation().unwrap();
        assert_eq!(v.triple, (0, 1, 2));
        // cyclic sum = [[e0,e1],e2] + [[e1,e2],e0] + [[e2,e0],e1] = -e2
        assert_eq!(v.cyclic_sum, vec![rat_int(0), rat_int(0), rat_int(-1)]);
    }

    #[test]
    fn gl_action_group_law() {
        use crate::lie::test_algebras::random_invertible;
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
        let b = h3_bracket();
        for _ in 0..10 {
            let g = random_invertible(&mut rng, 3);
            let h = random_invertible(&mut rng, 3);
            let gh = g.mul(&h);
            let lhs = b.act_gl(&gh).unwrap();
            let rhs = b.act_gl(&h).unwrap().act_gl(&g).unwrap();
            assert_eq!(lhs, rhs);
        }
    }
}
