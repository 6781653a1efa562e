//! Elements of the localization R[1/y]: a ring element divided by a power of y.
//!
//! The canonical form has minimal y-power: while the numerator is divisible
//! by y (its even part divisible by f), the division is performed. Values of
//! the derivative tower y⁽ᵏ⁾ = pₖ(x)/y^(2k−1) live here.

use crate::curve::CurveEquation;
use crate::ring::CurveRingElement;
use crate::scalar::Scalar;
use std::fmt;
use std::sync::Arc;

#[derive(Clone, PartialEq)]
pub struct YLaurentElement<S: Scalar> {
    num: CurveRingElement<S>,
    pow: u32,
}

impl<S: Scalar> YLaurentElement<S> {
    /// num / y^pow, brought to canonical minimal power.
    pub fn new(num: CurveRingElement<S>, pow: u32) -> Self {
        let mut elem = YLaurentElement { num, pow };
        elem.canonicalize();
        elem
    }

    pub fn from_ring(num: CurveRingElement<S>) -> Self {
        YLaurentElement { num, pow: 0 }
    }

    pub fn zero(curve: &Arc<CurveEquation<S>>) -> Self {
        Self::from_ring(CurveRingElement::zero(curve))
    }

    pub fn one(curve: &Arc<CurveEquation<S>>) -> Self {
        Self::from_ring(CurveRingElement::one(curve))
    }

    fn canonicalize(&mut self) {
        if self.num.is_zero() {
            self.pow = 0;
            return;
        }
        while self.pow > 0 {
            match self.num.div_y_exact() {
                Ok(q) => {
                    self.num = q;
                    self.pow -= 1;
                }
                Err(_) => break,
            }
        }
    }

    pub fn numerator(&self) -> &CurveRingElement<S> {
        &self.num
    }

    pub fn y_power(&self) -> u32 {
        self.pow
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// The element as a plain ring element, if its canonical power is zero.
    pub fn as_ring_element(&self) -> Option<&CurveRingElement<S>> {
        (self.pow == 0).then_some(&self.num)
    }

    fn raise(&self, extra: u32) -> CurveRingElement<S> {
        let mut out = self.num.clone();
        for _ in 0..extra {
            out = out.mul_y();
        }
        out
    }

    pub fn add(&self, other: &Self) -> Self {
        let pow = self.pow.max(other.pow);
        let a = self.raise(pow - self.pow);
        let b = other.raise(pow - other.pow);
        Self::new(a.add(&b), pow)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        YLaurentElement {
            num: self.num.neg(),
            pow: self.pow,
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        Self::new(self.num.mul(&other.num), self.pow + other.pow)
    }

    pub fn scale(&self, c: &S) -> Self {
        Self::new(self.num.scale(c), self.pow)
    }

    pub fn mul_y_power(&self, k: u32) -> Self {
        if k >= self.pow {
            Self::new(self.raise(k - self.pow), 0)
        } else {
            YLaurentElement {
                num: self.num.clone(),
                pow: self.pow - k,
            }
        }
    }

    /// Exact quotient in R[1/y], if it exists.
    pub fn exact_div(&self, other: &Self) -> Option<Self> {
        if other.is_zero() {
            return None;
        }
        // self/other = (num1 · conj(num2) · y^{pow2}) / (norm2 · y^{pow1})
        let norm = other.num.norm();
        let mut scaled = self.num.mul(&other.num.conj());
        for _ in 0..other.pow {
            scaled = scaled.mul_y();
        }
        let even = scaled.even_part().exact_div(&norm)?;
        let odd = scaled.odd_part().exact_div(&norm)?;
        Some(Self::new(
            CurveRingElement::new(even, odd, Arc::clone(self.num.curve())),
            self.pow,
        ))
    }
}

impl<S: Scalar> fmt::Debug for YLaurentElement<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.pow == 0 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / y^{}", self.num, self.pow)
        }
    }
}
