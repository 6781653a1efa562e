//! The Wronskian route to the raw (uncalibrated) genus-2 ψ-function:
//! ψₙ ∝ y^(n(n−1)/2) · det[(dʲ/dxʲ)φᵢ] over the monomial basis.
//!
//! The determinant is computed over the plain polynomial ring: multiplying
//! row j by y^(2j−1) clears every y denominator, after which each x-column
//! carries one common factor y. Bookkeeping leaves
//!     raw(n) = det(M′) · y^E,   E = p − (n−1)(n−2)/2,
//! where M′ is the cleared matrix below; negative E means exact division by
//! y, which must succeed for the construction to be sound — failure aborts.

use crate::basis::{Monomial, MonomialBasis};
use crate::derivs::derivative_numerators;
use crate::G2Error;
use psilab_algebra::{
    CurveRingElement, DensePolynomial, HyperellipticCurveG2, Rat, RingMatrix, Scalar,
};

fn binomial(n: usize, k: usize) -> Rat {
    let mut acc = Rat::one();
    for i in 0..k {
        acc = acc
            .mul(&Rat::from_i64((n - i) as i64))
            .div(&Rat::from_i64((i + 1) as i64));
    }
    acc
}

/// dʲ/dxʲ x^s as (coefficient, power); zero when j > s.
fn monomial_derivative(s: usize, j: usize) -> Option<(Rat, usize)> {
    if j > s {
        return None;
    }
    let mut c = Rat::one();
    for i in 0..j {
        c = c.mul(&Rat::from_i64((s - i) as i64));
    }
    Some((c, s - j))
}

/// Entry of the cleared Wronskian matrix for row j (1-based derivative
/// order) and one basis monomial.
fn cleared_entry(
    f: &DensePolynomial<Rat>,
    q: &[DensePolynomial<Rat>],
    j: usize,
    monomial: &Monomial,
) -> DensePolynomial<Rat> {
    let s = monomial.x_power;
    if !monomial.has_y {
        // y^(2j−1)·dʲ(x^s) = (dʲx^s)·f^(j−1)·y; the common y is factored out
        // of the whole column, leaving (dʲx^s)·f^(j−1).
        match monomial_derivative(s, j) {
            None => DensePolynomial::zero(),
            Some((c, pow)) => DensePolynomial::monomial(c, pow).mul(&f.pow(j as u32 - 1)),
        }
    } else {
        // y^(2j−1)·dʲ(x^s·y) = Σ_t C(j,t)·(dᵗx^s)·q_(j−t)·fᵗ with q₀ = 1.
        let mut acc = DensePolynomial::zero();
        for t in 0..=j.min(s) {
            let Some((c, pow)) = monomial_derivative(s, t) else {
                continue;
            };
            let coeff = binomial(j, t).mul(&c);
            let term = DensePolynomial::monomial(coeff, pow)
                .mul(&q[j - t])
                .mul(&f.pow(t as u32));
            acc = acc.add(&term);
        }
        acc
    }
}

/// Raw Wronskian-route ψₙ before calibration; ψ₀ and ψ₁ are zero by
/// convention.
pub fn psi_wronskian_raw(
    curve: &HyperellipticCurveG2,
    n: usize,
) -> Result<CurveRingElement<Rat>, G2Error> {
    let eq = curve.equation();
    if n < 2 {
        return Ok(CurveRingElement::zero(&eq));
    }
    let basis = MonomialBasis::for_index(n)?;
    let dim = n - 1;
    let f = curve.f();
    let q = derivative_numerators(f, dim);
    let mut entries = Vec::with_capacity(dim * dim);
    for j in 1..=dim {
        for monomial in basis.monomials() {
            entries.push(cleared_entry(f, &q, j, monomial));
        }
    }
    let det = RingMatrix::from_entries(dim, entries)
        .expect("square by construction")
        .det_bareiss()
        .map_err(|e| G2Error::NonPolynomialDeterminant {
            n,
            detail: e.to_string(),
        })?;
    let exponent = basis.p as i64 - ((n - 1) * (n - 2) / 2) as i64;
    let mut element = CurveRingElement::from_even(det, &eq);
    if exponent >= 0 {
        for _ in 0..exponent {
            element = element.mul_y();
        }
    } else {
        for _ in 0..(-exponent) {
            element = element.div_y_exact().map_err(|e| {
                G2Error::NonPolynomialDeterminant {
                    n,
                    detail: e.to_string(),
                }
            })?;
        }
    }
    Ok(element)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn curve() -> HyperellipticCurveG2 {
        HyperellipticCurveG2::from_i64([0, 1, 0, 0, 0]).unwrap()
    }

    #[test]
    fn raw_psi2_is_y() {
        let raw = psi_wronskian_raw(&curve(), 2).unwrap();
        assert_eq!(raw, CurveRingElement::y(&curve().equation()));
    }

    #[test]
    fn raw_psi3_is_2y_cubed() {
        let raw = psi_wronskian_raw(&curve(), 3).unwrap();
        let eq = curve().equation();
        let expected = CurveRingElement::y(&eq).pow(3).scale(&Rat::from_i64(2));
        assert_eq!(raw, expected);
    }

    #[test]
    fn raw_psi4_matches_derivative_tower() {
        // det over (x, x², y) reduces to 2y‴ scaled by row clearing:
        // raw₄ = 2·q₃·y with q₃ the third derivative numerator.
        let c = curve();
        let raw = psi_wronskian_raw(&c, 4).unwrap();
        let q = derivative_numerators(c.f(), 3);
        assert!(raw.even_part().is_zero());
        assert_eq!(raw.odd_part(), &q[3].scale(&Rat::from_i64(2)));
    }

    #[test]
    fn clears_y_denominators_up_to_12() {
        let c = curve();
        for n in 2..=12 {
            let raw = psi_wronskian_raw(&c, n).unwrap();
            assert!(!raw.is_zero(), "raw psi_{} vanished", n);
            // parity structure: even n ⇒ pure odd part; odd n ⇒ also odd part
            // (y·poly), since every genus-2 psi carries a single y factor.
            assert!(raw.even_part().is_zero(), "psi_{} has an even component", n);
        }
    }

    #[test]
    fn zero_convention_below_two() {
        assert!(psi_wronskian_raw(&curve(), 0).unwrap().is_zero());
        assert!(psi_wronskian_raw(&curve(), 1).unwrap().is_zero());
    }
}
