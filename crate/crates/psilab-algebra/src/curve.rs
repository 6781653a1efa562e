//! Curve equations y² = f(x) and the genus-2 coefficient record.

use crate::poly::DensePolynomial;
use crate::scalar::{Rat, Scalar};
use crate::AlgebraError;
use std::fmt;
use std::sync::Arc;

/// The defining equation y² = f(x) of a hyperelliptic (or elliptic) curve.
///
/// Shared behind an `Arc` by every ring element over the curve; two elements
/// are compatible exactly when their equations compare equal.
#[derive(Clone, PartialEq)]
pub struct CurveEquation<S: Scalar> {
    f: DensePolynomial<S>,
}

impl<S: Scalar> CurveEquation<S> {
    pub fn new(f: DensePolynomial<S>) -> Arc<Self> {
        Arc::new(CurveEquation { f })
    }

    /// The right-hand side f(x) of y² = f(x).
    pub fn f(&self) -> &DensePolynomial<S> {
        &self.f
    }
}

impl<S: Scalar> fmt::Debug for CurveEquation<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "y^2 = {}", self.f)
    }
}

/// Genus-2 curve y² = λ₀ + λ₁x + λ₂x² + λ₃x³ + λ₄x⁴ + x⁵ with exact
/// rational coefficients and λ₅ fixed to 1.
#[derive(Clone, Debug, PartialEq)]
pub struct HyperellipticCurveG2 {
    lambda: [Rat; 5],
    equation: Arc<CurveEquation<Rat>>,
}

impl HyperellipticCurveG2 {
    /// Builds the curve and rejects singular ones (gcd(f, f') ≠ 1).
    pub fn new(lambda: [Rat; 5]) -> Result<Self, AlgebraError> {
        let mut coeffs: Vec<Rat> = lambda.to_vec();
        coeffs.push(Rat::one());
        let f = DensePolynomial::from_coeffs(coeffs);
        let g = f.gcd(&f.derivative());
        if g.degree() != Some(0) {
            return Err(AlgebraError::SingularCurve {
                detail: format!("gcd(f, f') = {} is nonconstant", g),
            });
        }
        Ok(HyperellipticCurveG2 {
            lambda,
            equation: CurveEquation::new(f),
        })
    }

    pub fn from_i64(lambda: [i64; 5]) -> Result<Self, AlgebraError> {
        Self::new(lambda.map(|v| Rat::from_i64(v)))
    }

    /// Chooses λ₀ so the curve passes exactly through (x₀, y₀).
    pub fn through_point(
        lambda1_to_4: [Rat; 4],
        x0: &Rat,
        y0: &Rat,
    ) -> Result<Self, AlgebraError> {
        let [l1, l2, l3, l4] = lambda1_to_4.clone();
        let mut coeffs = vec![Rat::zero(), l1, l2, l3, l4];
        coeffs.push(Rat::one());
        let partial = DensePolynomial::from_coeffs(coeffs);
        let lambda0 = y0.mul(y0).sub(&partial.eval(x0));
        let [l1, l2, l3, l4] = lambda1_to_4;
        Self::new([lambda0, l1, l2, l3, l4])
    }

    pub fn lambda(&self) -> &[Rat; 5] {
        &self.lambda
    }

    pub fn equation(&self) -> Arc<CurveEquation<Rat>> {
        Arc::clone(&self.equation)
    }

    pub fn f(&self) -> &DensePolynomial<Rat> {
        self.equation.f()
    }

    /// True when (x₀, y₀) satisfies y₀² = f(x₀) exactly.
    pub fn contains(&self, x0: &Rat, y0: &Rat) -> bool {
        self.f().eval(x0) == y0.mul(y0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat;

    #[test]
    fn accepts_x5_plus_x() {
        let c = HyperellipticCurveG2::from_i64([0, 1, 0, 0, 0]).unwrap();
        assert_eq!(c.f().degree(), Some(5));
        assert!(c.contains(&rat(0, 1), &rat(0, 1)));
    }

    #[test]
    fn rejects_x5() {
        assert!(matches!(
            HyperellipticCurveG2::from_i64([0, 0, 0, 0, 0]),
            Err(AlgebraError::SingularCurve { .. })
        ));
    }

    #[test]
    fn through_point_lands_on_curve() {
        let c = HyperellipticCurveG2::through_point(
            [rat(1, 1), rat(-2, 1), rat(0, 1), rat(1, 1)],
            &rat(2, 1),
            &rat(3, 1),
        )
        .unwrap();
        assert!(c.contains(&rat(2, 1), &rat(3, 1)));
    }
}
