//! The Levi-Civita connection on left-invariant fields through the Koszul
//! formula 2<D_X Y, Z> = <[X,Y],Z> - <[Y,Z],X> + <[Z,X],Y>.

use crate::exact::{rat, Field, Rational};
use crate::lie::LieAlgebra;

use super::{InnerProduct, MetricError};

/// Connection coefficients: `gamma[i][j]` holds the coordinates of
/// D_{e_i} e_j. Metric compatibility and torsion-freeness hold exactly.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Connection {
    n: usize,
    gamma: Vec<Vec<Vec<Rational>>>,
}

impl Connection {
    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn of_basis(&self, i: usize, j: usize) -> &Vec<Rational> {
        &self.gamma[i][j]
    }

    /// Bilinear extension D_u v for constant (left-invariant) coordinates.
    pub fn derivative(&self, u: &[Rational], v: &[Rational]) -> Vec<Rational> {
        let mut out = vec![Rational::from_int(0); self.n];
        for i in 0..self.n {
            if u[i].is_zero() {
                continue;
            }
            for j in 0..self.n {
                if v[j].is_zero() {
                    continue;
                }
                let coeff = u[i].clone() * v[j].clone();
                for (o, g) in out.iter_mut().zip(&self.gamma[i][j]) {
                    if !g.is_zero() {
                        *o = o.clone() + coeff.clone() * g.clone();
                    }
                }
            }
        }
        out
    }
}

pub fn levi_civita(a: &LieAlgebra<Rational>, ip: &InnerProduct) -> Result<Connection, MetricError> {
    let n = a.dim();
    if ip.dim() != n {
        return Err(MetricError::DimensionMismatch(n, ip.dim()));
    }
    let ginv = ip.inverse_gram();
    let half = rat(1, 2);
    let mut gamma = vec![vec![Vec::new(); n]; n];
    let basis: Vec<Vec<Rational>> = (0..n)
        .map(|i| {
            let mut v = vec![Rational::from_int(0); n];
            v[i] = Rational::from_int(1);
            v
        })
        .collect();
    for i in 0..n {
        for j in 0..n {
            // w_m = (<[e_i,e_j],e_m> - <[e_j,e_m],e_i> + <[e_m,e_i],e_j>)/2
            let bij = a.bracket().of_basis(i, j);
            let w: Vec<Rational> = (0..n)
                .map(|m| {
                    let t1 = ip.inner(&bij, &basis[m]);
                    let t2 = ip.inner(&a.bracket().of_basis(j, m), &basis[i]);
                    let t3 = ip.inner(&a.bracket().of_basis(m, i), &basis[j]);
                    (t1 - t2 + t3) * half.clone()
                })
                .collect();
            gamma[i][j] = ginv.mul_vec(&w);
        }
    }
    Ok(Connection { n, gamma })
}
