//! Sparse multivariate polynomials over the Gaussian rationals, with linear
//! substitution and the Pfaffian of skew matrices with polynomial entries.

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

use super::matrix::Matrix;
use super::scalar::{Field, GaussianRational};

/// A polynomial in `num_vars` variables; keys are exponent vectors, zero
/// coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MultiPoly {
    num_vars: usize,
    terms: BTreeMap<Vec<u32>, GaussianRational>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("variable count mismatch: {0} vs {1}")]
    VarMismatch(usize, usize),
    #[error("substitution matrix must be {expected}x{expected}, got {rows}x{cols}")]
    BadSubstitution {
        expected: usize,
        rows: usize,
        cols: usize,
    },
    #[error("pfaffian needs even dimension, got {0}")]
    OddDimension(usize),
    #[error("pfaffian input is not skew-symmetric at ({0}, {1})")]
    NotSkew(usize, usize),
    #[error("pfaffian input is not square")]
    NotSquare,
}

impl MultiPoly {
    pub fn zero(num_vars: usize) -> Self {
        MultiPoly {
            num_vars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(num_vars: usize, c: GaussianRational) -> Self {
        let mut p = MultiPoly::zero(num_vars);
        if !c.is_zero() {
            p.terms.insert(vec![0; num_vars], c);
        }
        p
    }

    pub fn var(index: usize, num_vars: usize) -> Self {
        assert!(index < num_vars, "variable index out of range");
        let mut e = vec![0; num_vars];
        e[index] = 1;
        let mut p = MultiPoly::zero(num_vars);
        p.terms.insert(e, Field::one());
        p
    }

    pub fn from_terms(
        num_vars: usize,
        terms: impl IntoIterator<Item = (Vec<u32>, GaussianRational)>,
    ) -> Self {
        let mut p = MultiPoly::zero(num_vars);
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &GaussianRational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, exps: &[u32]) -> GaussianRational {
        assert_eq!(exps.len(), self.num_vars);
        self.terms.get(exps).cloned().unwrap_or_else(Field::zero)
    }

    fn add_term(&mut self, e: Vec<u32>, c: GaussianRational) {
        assert_eq!(e.len(), self.num_vars);
        if c.is_zero() {
            return;
        }
        match self.terms.remove(&e) {
            None => {
                self.terms.insert(e, c);
            }
            Some(old) => {
                let s = old + c;
                if !s.is_zero() {
                    self.terms.insert(e, s);
                }
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.num_vars, other.num_vars);
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        MultiPoly {
            num_vars: self.num_vars,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.clone(), -c.clone()))
                .collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn scale(&self, s: &GaussianRational) -> Self {
        if s.is_zero() {
            return MultiPoly::zero(self.num_vars);
        }
        MultiPoly {
            num_vars: self.num_vars,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.clone(), c.clone() * s.clone()))
                .collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.num_vars, other.num_vars);
        let mut out = MultiPoly::zero(self.num_vars);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let e: Vec<u32> = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.add_term(e, c1.clone() * c2.clone());
            }
        }
        out
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut out = MultiPoly::constant(self.num_vars, Field::one());
        for _ in 0..k {
            out = out.mul(self);
        }
        out
    }

    /// Total degree, or `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    /// `Some(d)` when every term has total degree d (zero counts as
    /// homogeneous of any degree and returns `None`).
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut degs = self.terms.keys().map(|e| e.iter().sum::<u32>());
        let first = degs.next()?;
        if degs.all(|d| d == first) {
            Some(first)
        } else {
            None
        }
    }

    pub fn evaluate(&self, point: &[GaussianRational]) -> GaussianRational {
        assert_eq!(point.len(), self.num_vars);
        let mut acc: GaussianRational = Field::zero();
        for (e, c) in &self.terms {
            let mut term = c.clone();
            for (x, &k) in point.iter().zip(e) {
                for _ in 0..k {
                    term = term * x.clone();
                }
            }
            acc = acc + term;
        }
        acc
    }

    /// f o a: substitute x_i -> sum_j a[(i, j)] x_j. Degree is preserved for
    /// invertible a.
    pub fn substitute_linear(&self, a: &Matrix<GaussianRational>) -> Result<Self, PolyError> {
        if a.rows() != self.num_vars || a.cols() != self.num_vars {
            return Err(PolyError::BadSubstitution {
                expected: self.num_vars,
                rows: a.rows(),
                cols: a.cols(),
            });
        }
        let images: Vec<MultiPoly> = (0..self.num_vars)
            .map(|i| {
                let mut p = MultiPoly::zero(self.num_vars);
                for j in 0..self.num_vars {
                    let c = a[(i, j)].clone();
                    if !c.is_zero() {
                        let mut e = vec![0; self.num_vars];
                        e[j] = 1;
                        p.add_term(e, c);
                    }
                }
                p
            })
            .collect();
        let mut out = MultiPoly::zero(self.num_vars);
        for (e, c) in &self.terms {
            let mut term = MultiPoly::constant(self.num_vars, c.clone());
            for (i, &k) in e.iter().enumerate() {
                if k > 0 {
                    term = term.mul(&images[i].pow(k));
                }
            }
            out = out.add(&term);
        }
        Ok(out)
    }

    fn var_name(&self, i: usize) -> String {
        if self.num_vars <= 3 {
            ["x", "y", "z"][i].to_string()
        } else {
            format!("x{}", i + 1)
        }
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        // descending lexicographic exponent order: x^4 prints before y^4
        let mut first = true;
        for (e, c) in self.terms.iter().rev() {
            let mono: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &k)| k > 0)
                .map(|(i, &k)| {
                    if k == 1 {
                        self.var_name(i)
                    } else {
                        format!("{}^{}", self.var_name(i), k)
                    }
                })
                .collect();
            let coeff_str = c.to_string();
            let body = if mono.is_empty() {
                coeff_str.clone()
            } else if coeff_str == "1" {
                mono.join("*")
            } else if coeff_str == "-1" {
                format!("-{}", mono.join("*"))
            } else if coeff_str.contains('+') || (coeff_str.contains('-') && !coeff_str.starts_with('-')) {
                format!("({})*{}", coeff_str, mono.join("*"))
            } else {
                format!("{}*{}", coeff_str, mono.join("*"))
            };
            if first {
                write!(f, "{body}")?;
                first = false;
            } else if let Some(stripped) = body.strip_prefix('-') {
                write!(f, " - {stripped}")?;
            } else {
                write!(f, " + {body}")?;
            }
        }
        Ok(())
    }
}

/// Pfaffian of a skew-symmetric matrix of polynomials via first-row
/// expansion: Pf(A) = sum_{j>1} (-1)^j a_{1j} Pf(A with rows/cols 1, j
/// removed); Pf([[0, 1], [-1, 0]]) = +1.
pub fn pfaffian(m: &[Vec<MultiPoly>]) -> Result<MultiPoly, PolyError> {
    let n = m.len();
    for row in m {
        if row.len() != n {
            return Err(PolyError::NotSquare);
        }
    }
    if n == 0 {
        return Err(PolyError::OddDimension(0));
    }
    if n % 2 != 0 {
        return Err(PolyError::OddDimension(n));
    }
    let nv = m[0][0].num_vars();
    for i in 0..n {
        for j in 0..=i {
            if m[i][j] != m[j][i].neg() {
                return Err(PolyError::NotSkew(i, j));
            }
        }
    }
    let active: Vec<usize> = (0..n).collect();
    Ok(pfaffian_rec(m, &active, nv))
}

fn pfaffian_rec(m: &[Vec<MultiPoly>], active: &[usize], nv: usize) -> MultiPoly {
    if active.is_empty() {
        return MultiPoly::constant(nv, Field::one());
    }
    let first = active[0];
    let mut acc = MultiPoly::zero(nv);
    for (pos, &j) in active.iter().enumerate().skip(1) {
        let entry = &m[first][j];
        if entry.is_zero() {
            continue;
        }
        let rest: Vec<usize> = active
            .iter()
            .copied()
            .filter(|&k| k != first && k != j)
            .collect();
        let sub = pfaffian_rec(m, &rest, nv);
        let term = entry.mul(&sub);
        // pos is the 0-based index of j in the active list; the textbook
        // (-1)^j sign for 1-based j = pos + 1 is +1 for even pos + 1
        if (pos + 1) % 2 == 0 {
            acc = acc.add(&term);
        } else {
            acc = acc.sub(&term);
        }
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::scalar::{rat, rat_int, GaussianRational, Rational};

    fn g(n: i64) -> GaussianRational {
        GaussianRational::from_ints(n, 0)
    }

    fn binom_square_example() -> MultiPoly {
        // x^2 in two variables
        MultiPoly::from_terms(2, [(vec![2, 0], g(1))])
    }

    #[test]
    fn substitute_shear() {
        // x -> x + y turns x^2 into x^2 + 2xy + y^2
        let f = binom_square_example();
        let a = Matrix::from_fn(2, 2, |i, j| {
            if i == 0 || j == 1 {
                g(1)
            } else {
                g(0)
            }
        });
        let fa = f.substitute_linear(&a).unwrap();
        let expect = MultiPoly::from_terms(
            2,
            [
                (vec![2, 0], g(1)),
                (vec![1, 1], g(2)),
                (vec![0, 2], g(1)),
            ],
        );
        assert_eq!(fa, expect);
    }

    #[test]
    fn substitute_identity_and_swap() {
        let f = MultiPoly::from_terms(2, [(vec![1, 1], g(1))]);
        let id = Matrix::identity(2);
        assert_eq!(f.substitute_linear(&id).unwrap(), f);
        let swap = Matrix::from_fn(2, 2, |i, j| if i != j { g(1) } else { g(0) });
        assert_eq!(f.substitute_linear(&swap).unwrap(), f);
    }

    #[test]
    fn pfaffian_base_and_block() {
        let z = MultiPoly::var(0, 2);
        let w = MultiPoly::var(1, 2);
        let o = MultiPoly::zero(2);
        let m2 = vec![vec![o.clone(), z.clone()], vec![z.neg(), o.clone()]];
        assert_eq!(pfaffian(&m2).unwrap(), z);

        let m4 = vec![
            vec![o.clone(), z.clone(), o.clone(), o.clone()],
            vec![z.neg(), o.clone(), o.clone(), o.clone()],
            vec![o.clone(), o.clone(), o.clone(), w.clone()],
            vec![o.clone(), o.clone(), w.neg(), o.clone()],
        ];
        assert_eq!(pfaffian(&m4).unwrap(), z.mul(&w));
    }

    #[test]
    fn pfaffian_rejects_bad_input() {
        let o = MultiPoly::zero(1);
        let z = MultiPoly::var(0, 1);
        assert!(matches!(
            pfaffian(&vec![vec![o.clone()]]),
            Err(PolyError::OddDimension(1))
        ));
        let bad = vec![vec![o.clone(), z.clone()], vec![z.clone(), o.clone()]];
        assert!(matches!(pfaffian(&bad), Err(PolyError::NotSkew(_, _))));
    }

    /// Test-only cofactor determinant of a polynomial matrix; independent
    /// oracle for Pf^2 = det.
    fn poly_det(m: &[Vec<MultiPoly>], active_rows: &[usize], active_cols: &[usize]) -> MultiPoly {
        let nv = m[0][0].num_vars();
        if active_rows.is_empty() {
            return MultiPoly::constant(nv, Field::one());
        }
        let r = active_rows[0];
        let mut acc = MultiPoly::zero(nv);
        for (pos, &c) in active_cols.iter().enumerate() {
            if m[r][c].is_zero() {
                continue;
            }
            let rest_r: Vec<usize> = active_rows[1..].to_vec();
            let rest_c: Vec<usize> = active_cols
                .iter()
                .copied()
                .filter(|&x| x != c)
                .collect();
            let sub = poly_det(m, &rest_r, &rest_c);
            let term = m[r][c].mul(&sub);
            if pos % 2 == 0 {
                acc = acc.add(&term);
            } else {
                acc = acc.sub(&term);
            }
        }
        acc
    }

    #[test]
    fn pfaffian_squares_to_determinant() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for &n in &[2usize, 4, 6, 8] {
            // random rational skew matrix (constant entries)
            let mut m = vec![vec![MultiPoly::zero(1); n]; n];
            for i in 0..n {
                for j in i + 1..n {
                    let c = GaussianRational::new(
                        Rational::new(rng.gen_range(-9i64..=9).into(), rng.gen_range(1i64..=4).into()),
                        rat(0, 1),
                    );
                    m[i][j] = MultiPoly::constant(1, c.clone());
                    m[j][i] = MultiPoly::constant(1, -c);
                }
            }
            let pf = pfaffian(&m).unwrap();
            let rows: Vec<usize> = (0..n).collect();
            let det = poly_det(&m, &rows, &rows);
            assert_eq!(pf.mul(&pf), det, "Pf^2 != det at n = {n}");
        }

        // once more with genuinely polynomial entries (4x4, three variables)
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        let mut m = vec![vec![MultiPoly::zero(3); 4]; 4];
        for i in 0..4 {
            for j in i + 1..4 {
                let mut p = MultiPoly::zero(3);
                for v in 0..3 {
                    let c = g(rng.gen_range(-3i64..=3));
                    p = p.add(&MultiPoly::var(v, 3).scale(&c));
                }
                m[i][j] = p.clone();
                m[j][i] = p.neg();
            }
        }
        let pf = pfaffian(&m).unwrap();
        let rows: Vec<usize> = (0..4).collect();
        assert_eq!(pf.mul(&pf), poly_det(&m, &rows, &rows));
    }

    #[test]
    fn display_is_deterministic() {
        let f = MultiPoly::from_terms(
            2,
            [
                (vec![4, 0], g(1)),
                (vec![2, 2], g(-2)),
                (vec![0, 4], g(1)),
            ],
        );
        assert_eq!(f.to_string(), "x^4 - 2*x^2*y^2 + y^4");
    }
}
