//! Exact scalar fields: arbitrary-precision rationals and Gaussian rationals.
//!
//! `Rational` is re-exported from `num-rational` (always stored reduced, with
//! positive denominator). `GaussianRational` is the field Q(i), the ground
//! field for complex structure constants and Pfaffian-form coefficients.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

pub type Rational = num_rational::BigRational;

/// Exact field scalars usable as matrix / structure-constant entries.
///
/// `conj` is complex conjugation (the identity on `Rational`); `into_gaussian`
/// is the canonical embedding into Q(i).
pub trait Field:
    Clone
    + PartialEq
    + fmt::Debug
    + fmt::Display
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
    + Send
    + Sync
    + 'static
{
    fn zero() -> Self;
    fn one() -> Self;
    fn from_int(n: i64) -> Self;
    fn is_zero(&self) -> bool;
    fn inv(&self) -> Self;
    fn conj(&self) -> Self;
    fn into_gaussian(self) -> GaussianRational;
}

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn rat_int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

impl Field for Rational {
    fn zero() -> Self {
        num_traits::Zero::zero()
    }
    fn one() -> Self {
        num_traits::One::one()
    }
    fn from_int(n: i64) -> Self {
        rat_int(n)
    }
    fn is_zero(&self) -> bool {
        num_traits::Zero::is_zero(self)
    }
    fn inv(&self) -> Self {
        self.recip()
    }
    fn conj(&self) -> Self {
        self.clone()
    }
    fn into_gaussian(self) -> GaussianRational {
        GaussianRational::real(self)
    }
}

/// An element a + b·i of Q(i), with exact rational components.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GaussianRational {
    pub re: Rational,
    pub im: Rational,
}

impl GaussianRational {
    pub fn new(re: Rational, im: Rational) -> Self {
        GaussianRational { re, im }
    }

    pub fn real(re: Rational) -> Self {
        GaussianRational {
            re,
            im: Field::zero(),
        }
    }

    pub fn i() -> Self {
        GaussianRational {
            re: Field::zero(),
            im: Field::one(),
        }
    }

    pub fn from_ints(re: i64, im: i64) -> Self {
        GaussianRational {
            re: rat_int(re),
            im: rat_int(im),
        }
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    /// |z|^2 = z * conj(z), a nonnegative rational.
    pub fn norm_sq(&self) -> Rational {
        self.re.clone() * self.re.clone() + self.im.clone() * self.im.clone()
    }

    pub fn to_f64_pair(&self) -> (f64, f64) {
        (
            self.re.to_f64().unwrap_or(f64::NAN),
            self.im.to_f64().unwrap_or(f64::NAN),
        )
    }
}

impl Add for GaussianRational {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        GaussianRational::new(self.re + rhs.re, self.im + rhs.im)
    }
}

impl Sub for GaussianRational {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        GaussianRational::new(self.re - rhs.re, self.im - rhs.im)
    }
}

impl Mul for GaussianRational {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        let re = self.re.clone() * rhs.re.clone() - self.im.clone() * rhs.im.clone();
        let im = self.re * rhs.im + self.im * rhs.re;
        GaussianRational::new(re, im)
    }
}

impl Div for GaussianRational {
    type Output = Self;
    fn div(self, rhs: Self) -> Self {
        let n = rhs.norm_sq();
        assert!(!n.is_zero(), "division by zero Gaussian rational");
        let conj = rhs.conj();
        let prod = self * conj;
        GaussianRational::new(prod.re / n.clone(), prod.im / n)
    }
}

impl Neg for GaussianRational {
    type Output = Self;
    fn neg(self) -> Self {
        GaussianRational::new(-self.re, -self.im)
    }
}

impl Field for GaussianRational {
    fn zero() -> Self {
        GaussianRational::real(Field::zero())
    }
    fn one() -> Self {
        GaussianRational::real(Field::one())
    }
    fn from_int(n: i64) -> Self {
        GaussianRational::real(rat_int(n))
    }
    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
    fn inv(&self) -> Self {
        let n = self.norm_sq();
        assert!(!n.is_zero(), "inverse of zero Gaussian rational");
        GaussianRational::new(self.re.clone() / n.clone(), -self.im.clone() / n)
    }
    fn conj(&self) -> Self {
        GaussianRational::new(self.re.clone(), -self.im.clone())
    }
    fn into_gaussian(self) -> GaussianRational {
        self
    }
}

impl fmt::Display for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            return write!(f, "{}", self.re);
        }
        if self.re.is_zero() {
            return write!(f, "{}i", self.im);
        }
        if self.im.is_negative() {
            write!(f, "{}-{}i", self.re, -self.im.clone())
        } else {
            write!(f, "{}+{}i", self.re, self.im)
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("invalid scalar literal `{literal}`: {reason}")]
pub struct ScalarParseError {
    pub literal: String,
    pub reason: String,
}

fn parse_err(lit: &str, reason: &str) -> ScalarParseError {
    ScalarParseError {
        literal: lit.to_string(),
        reason: reason.to_string(),
    }
}

/// Parse a rational literal `p` or `p/q` (optionally signed).
pub fn parse_rational(s: &str) -> Result<Rational, ScalarParseError> {
    let t = s.trim();
    if t.is_empty() {
        return Err(parse_err(s, "empty"));
    }
    match t.split_once('/') {
        None => {
            let n = BigInt::from_str(t).map_err(|_| parse_err(s, "not an integer"))?;
            Ok(Rational::from_integer(n))
        }
        Some((p, q)) => {
            let n = BigInt::from_str(p.trim()).map_err(|_| parse_err(s, "bad numerator"))?;
            let d = BigInt::from_str(q.trim()).map_err(|_| parse_err(s, "bad denominator"))?;
            if d.is_zero() {
                return Err(parse_err(s, "zero denominator"));
            }
            Ok(Rational::new(n, d))
        }
    }
}

/// Parse a Gaussian rational literal: `a`, `bi`, `a+bi`, or `a-bi`
/// with `a`, `b` rational (e.g. `3/2-1/2i`, `2i`, `-1`).
pub fn parse_gaussian(s: &str) -> Result<GaussianRational, ScalarParseError> {
    let t = s.trim();
    if t.is_empty() {
        return Err(parse_err(s, "empty"));
    }
    if !t.ends_with('i') {
        return Ok(GaussianRational::real(parse_rational(t)?));
    }
    let body = &t[..t.len() - 1];
    // find the sign splitting real and imaginary parts, skipping a leading sign
    let mut split = None;
    for (pos, ch) in body.char_indices().skip(1) {
        if (ch == '+' || ch == '-') && !matches!(&body[pos - 1..pos], "/" | "+" | "-") {
            split = Some(pos);
        }
    }
    match split {
        None => Ok(GaussianRational::new(Field::zero(), parse_rational(body)?)),
        Some(pos) => {
            let re = parse_rational(&body[..pos])?;
            let sign = &body[pos..pos + 1];
            let mag = parse_rational(&body[pos + 1..])?;
            let im = if sign == "-" { -mag } else { mag };
            Ok(GaussianRational::new(re, im))
        }
    }
}
