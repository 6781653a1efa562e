//! The Weierstrass-form elliptic curve y² = 4x³ − g₂x − g₃.

use psilab_algebra::{CurveEquation, DensePolynomial, Scalar};
use std::sync::Arc;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum EllipticError {
    #[error("degenerate curve: discriminant g2^3 - 27 g3^2 vanishes")]
    SingularCurve,
    #[error("index out of tabulated range: {0}")]
    IndexOutOfRange(i64),
    #[error("zero denominator at index {0} while forming a ratio sequence")]
    ZeroDenominator(i64),
}

#[derive(Clone, Debug, PartialEq)]
pub struct EllipticCurveW<S: Scalar> {
    g2: S,
    g3: S,
    equation: Arc<CurveEquation<S>>,
}

impl<S: Scalar> EllipticCurveW<S> {
    pub fn new(g2: S, g3: S) -> Result<Self, EllipticError> {
        let disc = g2
            .mul(&g2)
            .mul(&g2)
            .sub(&S::from_i64(27).mul(&g3).mul(&g3));
        if disc.is_zero() {
            return Err(EllipticError::SingularCurve);
        }
        // f(x) = -g3 - g2 x + 4 x^3
        let f = DensePolynomial::from_coeffs(vec![
            g3.neg(),
            g2.neg(),
            S::zero(),
            S::from_i64(4),
        ]);
        Ok(EllipticCurveW {
            g2,
            g3,
            equation: CurveEquation::new(f),
        })
    }

    pub fn g2(&self) -> &S {
        &self.g2
    }

    pub fn g3(&self) -> &S {
        &self.g3
    }

    pub fn equation(&self) -> Arc<CurveEquation<S>> {
        Arc::clone(&self.equation)
    }

    pub fn f(&self) -> &DensePolynomial<S> {
        self.equation.f()
    }

    /// True when y₀² = 4x₀³ − g₂x₀ − g₃ holds exactly.
    pub fn contains(&self, x0: &S, y0: &S) -> bool {
        self.f().eval(x0) == y0.mul(y0)
    }

    /// Solves g₃ so the curve passes through (x₀, y₀) with the given g₂.
    pub fn through_point(g2: S, x0: &S, y0: &S) -> Result<Self, EllipticError> {
        let g3 = S::from_i64(4)
            .mul(&x0.mul(x0).mul(x0))
            .sub(&g2.mul(x0))
            .sub(&y0.mul(y0));
        Self::new(g2, g3)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use psilab_algebra::{rat, Rat};

    #[test]
    fn discriminant_gate() {
        assert!(EllipticCurveW::<Rat>::new(rat(4, 1), rat(0, 1)).is_ok());
        // g2 = 3, g3 = 1: 27 - 27 = 0
        assert!(matches!(
            EllipticCurveW::<Rat>::new(rat(3, 1), rat(1, 1)),
            Err(EllipticError::SingularCurve)
        ));
    }

    #[test]
    fn through_point_is_exact() {
        let c = EllipticCurveW::through_point(rat(4, 1), &rat(1, 1), &rat(2, 1)).unwrap();
        assert!(c.contains(&rat(1, 1), &rat(2, 1)));
        assert_eq!(c.g3(), &rat(-4, 1));
    }
}
