//! Scalar rings used throughout the crate.
//!
//! Two regimes are supported: exact arbitrary-precision rationals
//! ([`Rational`]) and double-precision complex numbers ([`Complex`]).
//! Every algebraic routine is generic over [`Scalar`]; mixing the two
//! regimes in one computation is a type error.

use std::fmt::Debug;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::atomic::{AtomicU64, Ordering};

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde_json::Value;

use crate::error::{Error, Result};

/// Exact rational scalar.
pub type Rational = num_rational::BigRational;
/// Floating complex scalar.
pub type Complex = num_complex::Complex64;

/// Default absolute tolerance for floating comparisons.
pub const DEFAULT_TOLERANCE: f64 = 1e-9;

static TOLERANCE_BITS: AtomicU64 = AtomicU64::new(0x3E11_2E0B_E826_D695); // 1e-9

/// Current global comparison tolerance for floating scalars.
pub fn tolerance() -> f64 {
    f64::from_bits(TOLERANCE_BITS.load(Ordering::Relaxed))
}

/// Replace the global comparison tolerance. Non-positive or non-finite
/// values are rejected.
pub fn set_tolerance(tol: f64) -> Result<()> {
    if !(tol.is_finite() && tol > 0.0) {
        return Err(Error::Config(format!("tolerance must be positive, got {tol}")));
    }
    TOLERANCE_BITS.store(tol.to_bits(), Ordering::Relaxed);
    Ok(())
}

/// A commutative ring element usable as octonion / matrix coefficient.
pub trait Scalar:
    Clone
    + Debug
    + PartialEq
    + Send
    + Sync
    + 'static
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    /// True for exact rings; comparisons ignore tolerances.
    const EXACT: bool;

    fn zero() -> Self;
    fn one() -> Self;
    fn from_i64(n: i64) -> Self;
    fn from_ratio(num: i64, den: i64) -> Self;
    /// Multiplicative inverse; `None` for (numerically) zero elements.
    fn inv(&self) -> Option<Self>;
    fn to_complex(&self) -> Complex;
    /// Magnitude used for residual reporting.
    fn abs_f64(&self) -> f64 {
        self.to_complex().norm()
    }
    fn is_zero_within(&self, tol: f64) -> bool;
    fn approx_eq(&self, other: &Self, tol: f64) -> bool {
        (self.clone() - other.clone()).is_zero_within(tol)
    }
    fn to_json(&self) -> Value;
    fn from_json(v: &Value) -> Result<Self>;

    fn is_zero_default(&self) -> bool {
        self.is_zero_within(tolerance())
    }
    fn square(&self) -> Self {
        self.clone() * self.clone()
    }
    fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..n {
            acc = acc * self.clone();
        }
        acc
    }
    fn div(&self, other: &Self) -> Option<Self> {
        other.inv().map(|i| self.clone() * i)
    }
    /// Divide by a nonzero integer.
    fn div_int(&self, d: i64) -> Self {
        self.clone() * Self::from_ratio(1, d)
    }
    fn scale(&self, k: i64) -> Self {
        self.clone() * Self::from_i64(k)
    }
}

impl Scalar for Rational {
    const EXACT: bool = true;

    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn from_i64(n: i64) -> Self {
        Rational::from_integer(BigInt::from(n))
    }
    fn from_ratio(num: i64, den: i64) -> Self {
        Rational::new(BigInt::from(num), BigInt::from(den))
    }
    fn inv(&self) -> Option<Self> {
        if Zero::is_zero(self) {
            None
        } else {
            Some(self.recip())
        }
    }
    fn to_complex(&self) -> Complex {
        Complex::new(self.to_f64().unwrap_or(f64::NAN), 0.0)
    }
    fn abs_f64(&self) -> f64 {
        self.abs().to_f64().unwrap_or(f64::INFINITY)
    }
    fn is_zero_within(&self, _tol: f64) -> bool {
        Zero::is_zero(self)
    }
    fn to_json(&self) -> Value {
        Value::String(format_rational(self))
    }
    fn from_json(v: &Value) -> Result<Self> {
        match v {
            Value::String(s) => parse_rational(s),
            Value::Number(n) if n.is_i64() => Ok(Self::from_i64(n.as_i64().unwrap())),
            other => Err(Error::Parse(format!("expected rational string \"p/q\", got {other}"))),
        }
    }
}

impl Scalar for Complex {
    const EXACT: bool = false;

    fn zero() -> Self {
        Complex::new(0.0, 0.0)
    }
    fn one() -> Self {
        Complex::new(1.0, 0.0)
    }
    fn from_i64(n: i64) -> Self {
        Complex::new(n as f64, 0.0)
    }
    fn from_ratio(num: i64, den: i64) -> Self {
        Complex::new(num as f64 / den as f64, 0.0)
    }
    fn inv(&self) -> Option<Self> {
        if self.norm() == 0.0 || !self.is_finite() {
            None
        } else {
            Some(self.inv())
        }
    }
    fn to_complex(&self) -> Complex {
        *self
    }
    fn is_zero_within(&self, tol: f64) -> bool {
        self.re.abs() < tol && self.im.abs() < tol
    }
    fn to_json(&self) -> Value {
        serde_json::json!([self.re, self.im])
    }
    fn from_json(v: &Value) -> Result<Self> {
        match v {
            Value::Array(a) if a.len() == 2 => {
                let re = a[0].as_f64().ok_or_else(|| Error::Parse(format!("bad real part {}", a[0])))?;
                let im = a[1].as_f64().ok_or_else(|| Error::Parse(format!("bad imaginary part {}", a[1])))?;
                Ok(Complex::new(re, im))
            }
            Value::Number(n) => Ok(Complex::new(n.as_f64().unwrap_or(f64::NAN), 0.0)),
            Value::String(s) => match parse_rational(s) {
                Ok(q) => Ok(q.to_complex()),
                Err(_) => Ok(Complex::new(parse_decimal(s)?, 0.0)),
            },
            other => Err(Error::Parse(format!("expected complex [re, im], got {other}"))),
        }
    }
}

/// Canonical `p/q` rendering (integers drop the denominator).
pub fn format_rational(q: &Rational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// Parse an integer or `p/q` string.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || Error::Parse(format!("not a rational number: {s:?}"));
    match s.split_once('/') {
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().map_err(|_| bad())?;
            let q: BigInt = q.trim().parse().map_err(|_| bad())?;
            if q.is_zero() {
                return Err(Error::Parse(format!("zero denominator in {s:?}")));
            }
            Ok(Rational::new(p, q))
        }
        None => Ok(Rational::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

/// Parse a decimal real number.
pub fn parse_decimal(s: &str) -> Result<f64> {
    s.trim()
        .parse::<f64>()
        .map_err(|_| Error::Parse(format!("not a number: {s:?}")))
}

/// Rational approximation of a float scalar, for reporting only.
pub fn rational_to_f64(q: &Rational) -> f64 {
    q.to_f64().unwrap_or(f64::NAN)
}

/// Convert an exact value into the floating regime.
pub fn to_complex_vec<S: Scalar>(v: &[S]) -> Vec<Complex> {
    v.iter().map(Scalar::to_complex).collect()
}

/// Principal square root used by numeric constructions.
pub fn csqrt(z: Complex) -> Complex {
    z.sqrt()
}

/// Is this rational a perfect square? Returns its square root if so.
pub fn rational_sqrt(q: &Rational) -> Option<Rational> {
    if q.is_negative() {
        return None;
    }
    let n = q.numer().sqrt();
    let d = q.denom().sqrt();
    if &(&n * &n) == q.numer() && &(&d * &d) == q.denom() {
        Some(Rational::new(n, d))
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_tolerance_bits() {
        assert_eq!(f64::from_bits(0x3E11_2E0B_E826_D695), 1e-9);
    }

    #[test]
    fn rationals_are_normalized() {
        let q = parse_rational("6/-4").unwrap();
        assert_eq!(format_rational(&q), "-3/2");
        assert_eq!(format_rational(&parse_rational("8/4").unwrap()), "2");
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("0.5").is_err());
    }

    #[test]
    fn json_round_trip() {
        let q = Rational::from_ratio(-7, 3);
        assert_eq!(Rational::from_json(&q.to_json()).unwrap(), q);
        let z = Complex::new(1.5, -0.25);
        assert_eq!(Complex::from_json(&z.to_json()).unwrap(), z);
    }

    #[test]
    fn complex_tolerance_is_componentwise() {
        let a = Complex::new(1.0, 1.0);
        let b = Complex::new(1.0 + 5e-10, 1.0 - 5e-10);
        assert!(a.approx_eq(&b, 1e-9));
        assert!(!a.approx_eq(&Complex::new(1.0, 1.0 + 2e-9), 1e-9));
    }

    #[test]
    fn perfect_square_rationals() {
        assert_eq!(rational_sqrt(&Rational::from_ratio(9, 4)), Some(Rational::from_ratio(3, 2)));
        assert_eq!(rational_sqrt(&Rational::from_i64(21)), None);
        assert_eq!(rational_sqrt(&Rational::from_i64(-4)), None);
    }
}
