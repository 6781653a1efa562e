//! Elements of the coordinate ring R = F[x, y] / (y² − f(x)).
//!
//! Every element has a canonical representative a(x) + b(x)·y obtained by
//! replacing y² with f(x). R is an integral domain when f is squarefree,
//! which the curve constructors guarantee.

use crate::curve::CurveEquation;
use crate::poly::DensePolynomial;
use crate::scalar::Scalar;
use crate::AlgebraError;
use std::fmt;
use std::sync::Arc;

#[derive(Clone)]
pub struct CurveRingElement<S: Scalar> {
    even: DensePolynomial<S>,
    odd: DensePolynomial<S>,
    curve: Arc<CurveEquation<S>>,
}

impl<S: Scalar> PartialEq for CurveRingElement<S> {
    fn eq(&self, other: &Self) -> bool {
        self.same_curve(other) && self.even == other.even && self.odd == other.odd
    }
}

impl<S: Scalar> CurveRingElement<S> {
    pub fn new(
        even: DensePolynomial<S>,
        odd: DensePolynomial<S>,
        curve: Arc<CurveEquation<S>>,
    ) -> Self {
        CurveRingElement { even, odd, curve }
    }

    pub fn zero(curve: &Arc<CurveEquation<S>>) -> Self {
        Self::new(DensePolynomial::zero(), DensePolynomial::zero(), Arc::clone(curve))
    }

    pub fn one(curve: &Arc<CurveEquation<S>>) -> Self {
        Self::new(DensePolynomial::one(), DensePolynomial::zero(), Arc::clone(curve))
    }

    pub fn from_even(p: DensePolynomial<S>, curve: &Arc<CurveEquation<S>>) -> Self {
        Self::new(p, DensePolynomial::zero(), Arc::clone(curve))
    }

    /// b(x)·y as a ring element.
    pub fn from_odd(b: DensePolynomial<S>, curve: &Arc<CurveEquation<S>>) -> Self {
        Self::new(DensePolynomial::zero(), b, Arc::clone(curve))
    }

    pub fn from_scalar(c: S, curve: &Arc<CurveEquation<S>>) -> Self {
        Self::from_even(DensePolynomial::constant(c), curve)
    }

    pub fn x(curve: &Arc<CurveEquation<S>>) -> Self {
        Self::from_even(DensePolynomial::x(), curve)
    }

    pub fn y(curve: &Arc<CurveEquation<S>>) -> Self {
        Self::from_odd(DensePolynomial::one(), curve)
    }

    pub fn even_part(&self) -> &DensePolynomial<S> {
        &self.even
    }

    pub fn odd_part(&self) -> &DensePolynomial<S> {
        &self.odd
    }

    pub fn curve(&self) -> &Arc<CurveEquation<S>> {
        &self.curve
    }

    pub fn same_curve(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.curve, &other.curve) || *self.curve == *other.curve
    }

    fn assert_same_curve(&self, other: &Self) {
        assert!(
            self.same_curve(other),
            "curve mismatch between ring elements"
        );
    }

    pub fn is_zero(&self) -> bool {
        self.even.is_zero() && self.odd.is_zero()
    }

    pub fn add(&self, other: &Self) -> Self {
        self.assert_same_curve(other);
        Self::new(
            self.even.add(&other.even),
            self.odd.add(&other.odd),
            Arc::clone(&self.curve),
        )
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.assert_same_curve(other);
        Self::new(
            self.even.sub(&other.even),
            self.odd.sub(&other.odd),
            Arc::clone(&self.curve),
        )
    }

    pub fn neg(&self) -> Self {
        Self::new(self.even.neg(), self.odd.neg(), Arc::clone(&self.curve))
    }

    /// Product with y² replaced by f(x); the result is canonical.
    pub fn mul(&self, other: &Self) -> Self {
        self.assert_same_curve(other);
        let f = self.curve.f();
        // (a + by)(c + dy) = (ac + bd f) + (ad + bc) y
        let even = self
            .even
            .mul(&other.even)
            .add(&self.odd.mul(&other.odd).mul(f));
        let odd = self.even.mul(&other.odd).add(&self.odd.mul(&other.even));
        Self::new(even, odd, Arc::clone(&self.curve))
    }

    pub fn scale(&self, c: &S) -> Self {
        Self::new(self.even.scale(c), self.odd.scale(c), Arc::clone(&self.curve))
    }

    pub fn mul_poly(&self, p: &DensePolynomial<S>) -> Self {
        Self::new(self.even.mul(p), self.odd.mul(p), Arc::clone(&self.curve))
    }

    pub fn pow(&self, mut exp: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(&self.curve);
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

    pub fn mul_y(&self) -> Self {
        let f = self.curve.f();
        // (a + by)·y = bf + ay
        Self::new(self.odd.mul(f), self.even.clone(), Arc::clone(&self.curve))
    }

    /// Exact division by y: requires f | even part.
    pub fn div_y_exact(&self) -> Result<Self, AlgebraError> {
        let f = self.curve.f();
        // (a + by)/y = b + (a/f)·y
        match self.even.exact_div(f) {
            Some(q) => Ok(Self::new(self.odd.clone(), q, Arc::clone(&self.curve))),
            None => Err(AlgebraError::NotDivisible {
                detail: "even part not divisible by f(x) in division by y".into(),
            }),
        }
    }

    /// y-conjugate a − by.
    pub fn conj(&self) -> Self {
        Self::new(self.even.clone(), self.odd.neg(), Arc::clone(&self.curve))
    }

    /// Norm (a + by)(a − by) = a² − b²f, a plain polynomial in x.
    pub fn norm(&self) -> DensePolynomial<S> {
        let f = self.curve.f();
        self.even
            .mul(&self.even)
            .sub(&self.odd.mul(&self.odd).mul(f))
    }

    /// Exact quotient in R, if it exists: multiply by the conjugate and
    /// divide both parts by the divisor's polynomial norm.
    pub fn exact_div(&self, divisor: &Self) -> Option<Self> {
        self.assert_same_curve(divisor);
        if divisor.is_zero() {
            return None;
        }
        let norm = divisor.norm();
        let scaled = self.mul(&divisor.conj());
        let even = scaled.even.exact_div(&norm)?;
        let odd = scaled.odd.exact_div(&norm)?;
        Some(Self::new(even, odd, Arc::clone(&self.curve)))
    }

    /// If `self == c · other` for a scalar c, returns c.
    pub fn scalar_ratio_to(&self, other: &Self) -> Option<S> {
        self.assert_same_curve(other);
        if other.is_zero() {
            return if self.is_zero() { Some(S::zero()) } else { None };
        }
        let (num, den) = if let Some(d) = other.even.degree() {
            (self.even.coeff(d), other.even.coeff(d))
        } else {
            let d = other.odd.degree()?;
            (self.odd.coeff(d), other.odd.coeff(d))
        };
        let c = num.div(&den);
        if *self == other.scale(&c) {
            Some(c)
        } else {
            None
        }
    }

    /// Evaluates at a point (x₀, y₀); the point need not lie on the curve,
    /// but all identity checks only use on-curve points.
    pub fn eval(&self, x0: &S, y0: &S) -> S {
        self.even.eval(x0).add(&self.odd.eval(x0).mul(y0))
    }

    pub fn map_scalars<T: Scalar>(
        &self,
        curve: &Arc<CurveEquation<T>>,
        f: impl Fn(&S) -> T,
    ) -> CurveRingElement<T> {
        CurveRingElement::new(
            self.even.map_scalars(&f),
            self.odd.map_scalars(&f),
            Arc::clone(curve),
        )
    }
}

impl<S: Scalar> fmt::Debug for CurveRingElement<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) + ({})*y", self.even, self.odd)
    }
}

impl<S: Scalar> fmt::Display for CurveRingElement<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        if self.odd.is_zero() {
            write!(f, "{}", self.even)
        } else if self.even.is_zero() {
            write!(f, "({})*y", self.odd)
        } else {
            write!(f, "{} + ({})*y", self.even, self.odd)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Rat;

    type P = DensePolynomial<Rat>;

    fn demo_curve() -> Arc<CurveEquation<Rat>> {
        // y^2 = x^5 + x
        CurveEquation::new(P::from_i64_coeffs(&[0, 1, 0, 0, 0, 1]))
    }

    #[test]
    fn y_squared_reduces_to_f() {
        let c = demo_curve();
        let y = CurveRingElement::y(&c);
        let prod = y.mul(&y);
        assert_eq!(prod.even_part(), c.f());
        assert!(prod.odd_part().is_zero());
    }

    #[test]
    fn difference_of_squares_with_y() {
        let c = demo_curve();
        let one = CurveRingElement::one(&c);
        let y = CurveRingElement::y(&c);
        let prod = one.add(&y).mul(&one.sub(&y));
        assert_eq!(prod.even_part(), &P::one().sub(c.f()));
        assert!(prod.odd_part().is_zero());
    }

    #[test]
    fn x_plus_y_squared_expands_and_reduces() {
        let c = demo_curve();
        let x = CurveRingElement::x(&c);
        let y = CurveRingElement::y(&c);
        let sq = x.add(&y).pow(2);
        // (x + y)^2 = (x^2 + f) + 2x y
        assert_eq!(sq.even_part(), &P::from_i64_coeffs(&[0, 0, 1]).add(c.f()));
        assert_eq!(sq.odd_part(), &P::from_i64_coeffs(&[0, 2]));
    }

    #[test]
    fn exact_division_round_trip() {
        let c = demo_curve();
        let a = CurveRingElement::x(&c).add(&CurveRingElement::y(&c).scale(&Rat::from_i64(3)));
        let b = CurveRingElement::y(&c).add(&CurveRingElement::one(&c));
        let prod = a.mul(&b);
        assert_eq!(prod.exact_div(&b).unwrap(), a);
        assert_eq!(prod.exact_div(&a).unwrap(), b);
        // x does not divide y + 1
        assert!(b.exact_div(&CurveRingElement::x(&c)).is_none());
    }

    #[test]
    fn div_y_needs_f_divisible_even_part() {
        let c = demo_curve();
        let y = CurveRingElement::y(&c);
        let fy = y.mul(&y).mul(&y); // f·y
        let q = fy.div_y_exact().unwrap();
        assert_eq!(q.even_part(), c.f());
        assert!(CurveRingElement::one(&c).div_y_exact().is_err());
    }

    #[test]
    fn scalar_ratio_detects_proportionality() {
        let c = demo_curve();
        let a = CurveRingElement::x(&c).add(&CurveRingElement::y(&c));
        let b = a.scale(&crate::scalar::rat(-7, 3));
        assert_eq!(b.scalar_ratio_to(&a), Some(crate::scalar::rat(-7, 3)));
        assert_eq!(a.scalar_ratio_to(&b), Some(crate::scalar::rat(-3, 7)));
        let unrelated = CurveRingElement::x(&c);
        assert_eq!(unrelated.scalar_ratio_to(&a), None);
    }
}
