//! Dense univariate polynomials with scalar coefficients.
//!
//! Coefficients are stored lowest degree first. The representation is
//! canonical: the coefficient vector is empty for the zero polynomial and
//! never has a trailing zero otherwise, so the degree of the zero polynomial
//! is the sentinel `None`.

use crate::scalar::Scalar;
use crate::AlgebraError;
use std::fmt;

#[derive(Clone, PartialEq)]
pub struct DensePolynomial<S: Scalar> {
    coeffs: Vec<S>,
}

impl<S: Scalar> DensePolynomial<S> {
    pub fn zero() -> Self {
        DensePolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(S::one())
    }

    pub fn constant(c: S) -> Self {
        if c.is_zero() {
            Self::zero()
        } else {
            DensePolynomial { coeffs: vec![c] }
        }
    }

    /// The indeterminate x.
    pub fn x() -> Self {
        DensePolynomial {
            coeffs: vec![S::zero(), S::one()],
        }
    }

    /// The monomial c·x^deg.
    pub fn monomial(c: S, deg: usize) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![S::zero(); deg + 1];
        coeffs[deg] = c;
        DensePolynomial { coeffs }
    }

    /// Construct from ascending coefficients, stripping trailing zeros.
    pub fn from_coeffs(coeffs: Vec<S>) -> Self {
        let mut p = DensePolynomial { coeffs };
        p.normalize();
        p
    }

    pub fn from_i64_coeffs(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| S::from_i64(c)).collect())
    }

    fn normalize(&mut self) {
        while self.coeffs.last().map_or(false, |c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, i: usize) -> S {
        self.coeffs.get(i).cloned().unwrap_or_else(S::zero)
    }

    pub fn coeffs(&self) -> &[S] {
        &self.coeffs
    }

    pub fn leading_coeff(&self) -> Option<&S> {
        self.coeffs.last()
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(self.coeff(i).add(&other.coeff(i)));
        }
        Self::from_coeffs(out)
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(self.coeff(i).sub(&other.coeff(i)));
        }
        Self::from_coeffs(out)
    }

    pub fn neg(&self) -> Self {
        DensePolynomial {
            coeffs: self.coeffs.iter().map(|c| c.neg()).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![S::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].add(&a.mul(b));
            }
        }
        Self::from_coeffs(out)
    }

    pub fn scale(&self, c: &S) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|a| a.mul(c)).collect())
    }

    pub fn pow(&self, mut exp: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc.mul(&base);
            }
            exp >>= 1;
            if exp > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Euclidean division. Errors on a zero divisor.
    pub fn div_rem(&self, divisor: &Self) -> Result<(Self, Self), AlgebraError> {
        if divisor.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        let dd = divisor.degree().unwrap();
        let lead = divisor.leading_coeff().unwrap().clone();
        let mut rem = self.clone();
        let mut quot = vec![S::zero(); self.coeffs.len().saturating_sub(dd)];
        while let Some(rd) = rem.degree() {
            if rd < dd {
                break;
            }
            let factor = rem.leading_coeff().unwrap().div(&lead);
            let shift = rd - dd;
            quot[shift] = factor.clone();
            // rem -= factor * x^shift * divisor
            for (i, c) in divisor.coeffs.iter().enumerate() {
                let idx = i + shift;
                rem.coeffs[idx] = rem.coeffs[idx].sub(&factor.mul(c));
            }
            // Force the cancellation of the leading term even with inexact scalars.
            rem.coeffs[rd] = S::zero();
            rem.normalize();
        }
        Ok((Self::from_coeffs(quot), rem))
    }

    /// Exact division: `None` when the remainder is nonzero.
    ///
    /// For inexact scalars the quotient is returned unconditionally; the
    /// remainder is an artifact of rounding there and callers validate
    /// results against their own tolerances.
    pub fn exact_div(&self, divisor: &Self) -> Option<Self> {
        match self.div_rem(divisor) {
            Ok((q, r)) => {
                if r.is_zero() || !S::EXACT {
                    Some(q)
                } else {
                    None
                }
            }
            Err(_) => None,
        }
    }

    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return Self::zero();
        }
        let mut out = Vec::with_capacity(self.coeffs.len() - 1);
        for (i, c) in self.coeffs.iter().enumerate().skip(1) {
            out.push(c.mul(&S::from_i64(i as i64)));
        }
        Self::from_coeffs(out)
    }

    /// Monic gcd by the Euclidean algorithm; gcd(0, 0) = 0.
    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b).expect("nonzero divisor");
            a = b;
            b = r;
        }
        a.into_monic()
    }

    /// Divides by the leading coefficient; zero stays zero.
    pub fn into_monic(self) -> Self {
        match self.leading_coeff() {
            None => self,
            Some(lead) => {
                let inv = S::one().div(lead);
                self.scale(&inv)
            }
        }
    }

    pub fn eval(&self, x: &S) -> S {
        let mut acc = S::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(x).add(c);
        }
        acc
    }

    /// Maps the coefficients into another scalar field.
    pub fn map_scalars<T: Scalar>(&self, f: impl Fn(&S) -> T) -> DensePolynomial<T> {
        DensePolynomial::from_coeffs(self.coeffs.iter().map(f).collect())
    }
}

impl<S: Scalar> fmt::Debug for DensePolynomial<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl<S: Scalar> fmt::Display for DensePolynomial<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "{}", c)?,
                1 => write!(f, "({})*x", c)?,
                _ => write!(f, "({})*x^{}", c, i)?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{rat, Rat};

    type P = DensePolynomial<Rat>;

    #[test]
    fn derivative_power_rule() {
        // d/dx (x^5 + x) = 5x^4 + 1
        let p = P::from_i64_coeffs(&[0, 1, 0, 0, 0, 1]);
        assert_eq!(p.derivative(), P::from_i64_coeffs(&[1, 0, 0, 0, 5]));
    }

    #[test]
    fn gcd_of_x5_plus_x_and_its_derivative_is_one() {
        let p = P::from_i64_coeffs(&[0, 1, 0, 0, 0, 1]);
        let q = p.derivative();
        assert_eq!(p.gcd(&q), P::one());
    }

    #[test]
    fn division_with_zero_remainder() {
        // (x^2 - 1) / (x - 1) = x + 1 rem 0
        let num = P::from_i64_coeffs(&[-1, 0, 1]);
        let den = P::from_i64_coeffs(&[-1, 1]);
        let (q, r) = num.div_rem(&den).unwrap();
        assert_eq!(q, P::from_i64_coeffs(&[1, 1]));
        assert!(r.is_zero());
    }

    #[test]
    fn division_by_zero_polynomial_errors() {
        let p = P::x();
        assert!(matches!(
            p.div_rem(&P::zero()),
            Err(AlgebraError::DivisionByZero)
        ));
    }

    #[test]
    fn zero_polynomial_degree_is_sentinel() {
        assert_eq!(P::zero().degree(), None);
        assert_eq!(P::from_i64_coeffs(&[0, 0, 0]).degree(), None);
        assert_eq!(P::one().degree(), Some(0));
    }

    #[test]
    fn gcd_is_monic() {
        let a = P::from_i64_coeffs(&[2, 4]).mul(&P::from_i64_coeffs(&[1, 0, 3]));
        let b = P::from_i64_coeffs(&[2, 4]).mul(&P::from_i64_coeffs(&[5, 1]));
        let g = a.gcd(&b);
        assert_eq!(g, P::from_coeffs(vec![rat(1, 2), rat(1, 1)]));
    }

    #[test]
    fn eval_horner() {
        let p = P::from_i64_coeffs(&[1, -2, 1]); // (x-1)^2
        assert_eq!(p.eval(&rat(3, 1)), rat(4, 1));
    }
}
