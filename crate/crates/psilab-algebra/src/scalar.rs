//! Scalar coefficient fields: exact big rationals and complex doubles.
//!
//! Every polynomial and ring element in this workspace is generic over a
//! [`Scalar`]. The exact suites instantiate with [`Rat`] so every identity
//! check is literal equality; the numeric Weierstrass layer instantiates
//! with [`C64`] and works to documented tolerances.

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::fmt;

/// Arbitrary-precision rational, always in lowest terms with positive denominator.
pub type Rat = BigRational;

/// Complex double used by the numeric lattice layer.
pub type C64 = Complex64;

/// Field operations needed by the polynomial and curve-ring layers.
///
/// Implementations must satisfy the usual field axioms; `EXACT` records
/// whether equality of values is meaningful (rationals) or only approximate
/// (floating complex).
pub trait Scalar: Clone + PartialEq + fmt::Debug + fmt::Display {
    /// True when arithmetic is exact and `is_zero` is a decision procedure.
    const EXACT: bool;

    fn zero() -> Self;
    fn one() -> Self;
    fn from_i64(v: i64) -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    /// Field division. Callers must not pass a zero divisor.
    fn div(&self, other: &Self) -> Self;
    /// Magnitude as f64, used for residual norms and reports.
    fn abs_f64(&self) -> f64;
}

impl Scalar for Rat {
    const EXACT: bool = true;

    fn zero() -> Self {
        <BigRational as Zero>::zero()
    }
    fn one() -> Self {
        <BigRational as One>::one()
    }
    fn from_i64(v: i64) -> Self {
        BigRational::from_integer(BigInt::from(v))
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn div(&self, other: &Self) -> Self {
        self / other
    }
    fn abs_f64(&self) -> f64 {
        self.abs().to_f64().unwrap_or(f64::INFINITY)
    }
}

impl Scalar for C64 {
    const EXACT: bool = false;

    fn zero() -> Self {
        Complex64::new(0.0, 0.0)
    }
    fn one() -> Self {
        Complex64::new(1.0, 0.0)
    }
    fn from_i64(v: i64) -> Self {
        Complex64::new(v as f64, 0.0)
    }
    fn is_zero(&self) -> bool {
        self.re == 0.0 && self.im == 0.0
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn div(&self, other: &Self) -> Self {
        self / other
    }
    fn abs_f64(&self) -> f64 {
        self.norm()
    }
}

/// Error for malformed rational literals.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("malformed rational `{input}`: {reason}")]
pub struct ParseRatError {
    pub input: String,
    pub reason: String,
}

/// Parses an exact rational from `"p"` or `"p/q"` with optional leading sign.
pub fn parse_rational(text: &str) -> Result<Rat, ParseRatError> {
    let err = |reason: &str| ParseRatError {
        input: text.to_string(),
        reason: reason.to_string(),
    };
    let trimmed = text.trim();
    if trimmed.is_empty() {
        return Err(err("empty string"));
    }
    let (num_str, den_str) = match trimmed.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (trimmed, "1"),
    };
    let numer: BigInt = num_str
        .parse()
        .map_err(|_| err("numerator is not an integer"))?;
    let denom: BigInt = den_str
        .parse()
        .map_err(|_| err("denominator is not an integer"))?;
    if denom.is_zero() {
        return Err(err("denominator is zero"));
    }
    Ok(BigRational::new(numer, denom))
}

/// Renders a rational as `"p"` or `"p/q"`, the exact wire form used in reports.
pub fn rational_string(value: &Rat) -> String {
    if value.denom().is_one() {
        value.numer().to_string()
    } else {
        format!("{}/{}", value.numer(), value.denom())
    }
}

/// Convenience constructor for small rationals.
pub fn rat(n: i64, d: i64) -> Rat {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_plain_and_fraction() {
        assert_eq!(parse_rational("3").unwrap(), rat(3, 1));
        assert_eq!(parse_rational("-4/6").unwrap(), rat(-2, 3));
        assert_eq!(parse_rational(" 7 / 2 ").unwrap(), rat(7, 2));
    }

    #[test]
    fn rejects_garbage_and_zero_denominator() {
        assert!(parse_rational("").is_err());
        assert!(parse_rational("x").is_err());
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("1/2/3").is_err());
    }

    #[test]
    fn round_trips_exact_strings() {
        for s in ["0", "5", "-3/7", "22/7"] {
            assert_eq!(rational_string(&parse_rational(s).unwrap()), s);
        }
    }
}
