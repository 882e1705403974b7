//! Full curvature tensor of a left-invariant metric and the three Gray
//! identities in their real form. Sign convention:
//! R(X,Y) = D_X D_Y - D_Y D_X - D_{[X,Y]} and R(X,Y,Z,W) = <R(X,Y)Z, W>.

use crate::acs::AlmostComplexStructure;
use crate::exact::{Field, Matrix, Rational};
use crate::lie::LieAlgebra;

use super::connection::levi_civita;
use super::{InnerProduct, MetricError};

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CurvatureTensor {
    n: usize,
    /// coordinates of R(e_a, e_b) e_c, indexed (a*n + b)*n + c
    vecs: Vec<Vec<Rational>>,
    /// lowered components R(a,b,c,d), indexed ((a*n + b)*n + c)*n + d
    lowered: Vec<Rational>,
}

impl CurvatureTensor {
    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn r_vec(&self, a: usize, b: usize, c: usize) -> &Vec<Rational> {
        &self.vecs[(a * self.n + b) * self.n + c]
    }

    pub fn r(&self, a: usize, b: usize, c: usize, d: usize) -> &Rational {
        &self.lowered[((a * self.n + b) * self.n + c) * self.n + d]
    }

    pub fn lowered(&self) -> &[Rational] {
        &self.lowered
    }

    /// Sectional-style component <R(X,Y)Y, X> for basis directions.
    pub fn basis_sectional(&self, a: usize, b: usize) -> &Rational {
        self.r(a, b, b, a)
    }
}

pub fn curvature(a: &LieAlgebra<Rational>, ip: &InnerProduct) -> Result<CurvatureTensor, MetricError> {
    let n = a.dim();
    let conn = levi_civita(a, ip)?;
    let mut vecs = Vec::with_capacity(n * n * n);
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                let dyz = conn.of_basis(y, z);
                let dxz = conn.of_basis(x, z);
                let t1 = {
                    let mut e = vec![Rational::from_int(0); n];
                    e[x] = Rational::from_int(1);
                    conn.derivative(&e, dyz)
                };
                let t2 = {
                    let mut e = vec![Rational::from_int(0); n];
                    e[y] = Rational::from_int(1);
                    conn.derivative(&e, dxz)
                };
                let bxy = a.bracket().of_basis(x, y);
                let mut ez = vec![Rational::from_int(0); n];
                ez[z] = Rational::from_int(1);
                let t3 = conn.derivative(&bxy, &ez);
                let v: Vec<Rational> = t1
                    .into_iter()
                    .zip(t2)
                    .zip(t3)
                    .map(|((p, q), r)| p - q - r)
                    .collect();
                vecs.push(v);
            }
        }
    }
    let mut lowered = Vec::with_capacity(n * n * n * n);
    for abc in 0..n * n * n {
        let gv = ip.gram().mul_vec(&vecs[abc]);
        lowered.extend(gv);
    }
    Ok(CurvatureTensor { n, vecs, lowered })
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum GrayIdentity {
    G1,
    G2,
    G3,
}

impl std::fmt::Display for GrayIdentity {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            GrayIdentity::G1 => write!(f, "G1"),
            GrayIdentity::G2 => write!(f, "G2"),
            GrayIdentity::G3 => write!(f, "G3"),
        }
    }
}

/// Contract J into one tensor slot: out(.., a, ..) = sum_m J[m][a] t(.., m, ..).
fn transform_slot(t: &[Rational], n: usize, slot: usize, jm: &Matrix<Rational>) -> Vec<Rational> {
    let strides = [n * n * n, n * n, n, 1];
    let mut out = vec![Rational::from_int(0); t.len()];
    for (idx, o) in out.iter_mut().enumerate() {
        let pos = (idx / strides[slot]) % n;
        let base = idx - pos * strides[slot];
        let mut acc = Rational::from_int(0);
        for m in 0..n {
            let c = &jm[(m, pos)];
            if c.is_zero() {
                continue;
            }
            let src = &t[base + m * strides[slot]];
            if !src.is_zero() {
                acc = acc + c.clone() * src.clone();
            }
        }
        *o = acc;
    }
    out
}

/// Exact check of a Gray identity over all basis 4-tuples; on failure the
/// lexicographically first violating tuple is returned.
pub fn gray_check(
    r: &CurvatureTensor,
    j: &AlmostComplexStructure,
    which: GrayIdentity,
) -> (bool, Option<[usize; 4]>) {
    let n = r.n;
    assert_eq!(j.dim(), n, "dimension mismatch");
    let jm = j.matrix();
    let t = &r.lowered;
    let residual: Vec<Rational> = match which {
        GrayIdentity::G1 => {
            // R(JX, JY, Z, T) - R(X, Y, Z, T)
            let t12 = transform_slot(&transform_slot(t, n, 0, jm), n, 1, jm);
            t12.iter().zip(t).map(|(a, b)| a.clone() - b.clone()).collect()
        }
        GrayIdentity::G2 => {
            // R(X,Y,Z,W) - R(JX,JY,Z,W) - R(JX,Y,JZ,W) - R(JX,Y,Z,JW)
            let t1 = transform_slot(t, n, 0, jm);
            let t12 = transform_slot(&t1, n, 1, jm);
            let t13 = transform_slot(&t1, n, 2, jm);
            let t14 = transform_slot(&t1, n, 3, jm);
            t.iter()
                .zip(&t12)
                .zip(&t13)
                .zip(&t14)
                .map(|(((a, b), c), d)| a.clone() - b.clone() - c.clone() - d.clone())
                .collect()
        }
        GrayIdentity::G3 => {
            // R(JX, JY, JZ, JT) - R(X, Y, Z, T)
            let mut cur = t.clone();
            for slot in 0..4 {
                cur = transform_slot(&cur, n, slot, jm);
            }
            cur.iter().zip(t).map(|(a, b)| a.clone() - b.clone()).collect()
        }
    };
    match residual.iter().position(|x| !x.is_zero()) {
        None => (true, None),
        Some(idx) => {
            let d = idx % n;
            let c = (idx / n) % n;
            let b = (idx / (n * n)) % n;
            let a = idx / (n * n * n);
            (false, Some([a, b, c, d]))
        }
    }
}
