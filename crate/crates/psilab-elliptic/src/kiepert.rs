//! The Hankel-determinant route to ψₙ: the (n−1)×(n−1) determinant of
//! ℘ derivatives ℘′, ℘″, …, ℘^(2n−3), each expressed as an element of the
//! curve ring via the rewriting dx/du = y, dy/du = 6x² − g₂/2.
//!
//! The determinant equals the recursion ψₙ up to a per-n scalar that does
//! not depend on the curve; the scalar table is computed by comparison, not
//! taken from any printed prefactor.

use crate::curve::EllipticCurveW;
use crate::psi::DivisionPolynomialSeq;
use psilab_algebra::{CurveRingElement, DensePolynomial, RingMatrix, Scalar};

/// ℘^(k)(u) as a polynomial in (x, y) = (℘, ℘′), k ≥ 1.
pub fn wp_derivative_tower<S: Scalar>(
    curve: &EllipticCurveW<S>,
    k: usize,
) -> CurveRingElement<S> {
    assert!(k >= 1, "tower starts at the first derivative");
    let eq = curve.equation();
    let mut current = CurveRingElement::y(&eq); // ℘′ = y
    // dy/du = ℘″ = 6x² − g₂/2
    let ddy = DensePolynomial::from_coeffs(vec![
        curve.g2().div(&S::from_i64(2)).neg(),
        S::zero(),
        S::from_i64(6),
    ]);
    for _ in 1..k {
        // d/du (a(x) + b(x) y) = b′f + b·(6x² − g₂/2) + a′ y
        let a = current.even_part();
        let b = current.odd_part();
        let even = b
            .derivative()
            .mul(curve.f())
            .add(&b.mul(&ddy));
        let odd = a.derivative();
        current = CurveRingElement::new(even, odd, eq.clone());
    }
    current
}

/// The raw (n−1)×(n−1) Hankel determinant of ℘ derivatives for n ≥ 2.
pub fn kiepert_det<S: Scalar>(curve: &EllipticCurveW<S>, n: usize) -> CurveRingElement<S> {
    assert!(n >= 2);
    let dim = n - 1;
    let tower: Vec<CurveRingElement<S>> = (1..=2 * n - 3)
        .map(|k| wp_derivative_tower(curve, k))
        .collect();
    let mut entries = Vec::with_capacity(dim * dim);
    for i in 0..dim {
        for j in 0..dim {
            entries.push(tower[i + j].clone());
        }
    }
    RingMatrix::from_entries(dim, entries)
        .expect("square")
        .det_bareiss()
        .expect("integral domain")
}

/// Scalar sₙ with kiepert_det(n) = sₙ·ψₙ, if the proportionality holds.
pub fn kiepert_scalar<S: Scalar>(
    seq: &DivisionPolynomialSeq<S>,
    n: usize,
) -> Option<S> {
    let det = kiepert_det(seq.curve(), n);
    det.scalar_ratio_to(seq.psi(n))
}

#[cfg(test)]
mod tests {
    use super::*;
    use psilab_algebra::{rat, Rat};

    fn curve() -> EllipticCurveW<Rat> {
        EllipticCurveW::new(rat(5, 1), rat(-2, 1)).unwrap()
    }

    #[test]
    fn tower_base_cases() {
        let c = curve();
        let eq = c.equation();
        // ℘′ = y
        assert_eq!(wp_derivative_tower(&c, 1), CurveRingElement::y(&eq));
        // ℘″ = 6x² − g₂/2, by the chain-rule oracle y·(dy/dx) = f′/2
        let wp2 = wp_derivative_tower(&c, 2);
        let oracle = CurveRingElement::from_even(c.f().derivative(), &eq)
            .scale(&rat(1, 2));
        assert_eq!(wp2, oracle);
        // ℘‴ = 12xy
        let wp3 = wp_derivative_tower(&c, 3);
        let twelve_xy = CurveRingElement::from_odd(
            psilab_algebra::DensePolynomial::from_i64_coeffs(&[0, 12]),
            &eq,
        );
        assert_eq!(wp3, twelve_xy);
    }

    #[test]
    fn kiepert_small_shapes() {
        let c = curve();
        // n = 2: 1×1 determinant is ℘′ = y itself.
        assert_eq!(kiepert_det(&c, 2), CurveRingElement::y(&c.equation()));
        // n = 3: ℘′℘‴ − ℘″² expands through the tower.
        let d3 = kiepert_det(&c, 3);
        let expected = wp_derivative_tower(&c, 1)
            .mul(&wp_derivative_tower(&c, 3))
            .sub(&wp_derivative_tower(&c, 2).pow(2));
        assert_eq!(d3, expected);
    }

    #[test]
    fn scalar_table_small() {
        let seq = DivisionPolynomialSeq::new(curve(), 8);
        // s₂ = det/ψ₂ = y/(−y) = −1; s₃ = 4 by direct expansion.
        assert_eq!(kiepert_scalar(&seq, 2), Some(rat(-1, 1)));
        assert_eq!(kiepert_scalar(&seq, 3), Some(rat(4, 1)));
        // n = 4 is proportional with a curve-independent scalar.
        let s4 = kiepert_scalar(&seq, 4).expect("proportional");
        let other = DivisionPolynomialSeq::new(
            EllipticCurveW::new(rat(7, 2), rat(3, 1)).unwrap(),
            8,
        );
        assert_eq!(kiepert_scalar(&other, 4), Some(s4));
    }
}
