//! The elliptic ψ-table: σ-normalized division polynomials on
//! y² = 4x³ − g₂x − g₃, built by the two-term determinant recursion from
//! the seeds ψ₂, ψ₃, ψ₄.
//!
//! The seeds below are pinned by the σ power-series oracle (see the
//! `sigma_series` integration test): with ψₙ(u) = σ(nu)/σ(u)^{n²} and
//! (x, y) = (℘, ℘′), the sign convention is ψ₂ = −y.

use crate::curve::{EllipticCurveW, EllipticError};
use psilab_algebra::{CurveRingElement, DensePolynomial, RingMatrix, Scalar};
use psilab_seq::{ResidualReport, ResidualValue};

#[derive(Clone, Debug)]
pub struct DivisionPolynomialSeq<S: Scalar> {
    curve: EllipticCurveW<S>,
    table: Vec<CurveRingElement<S>>,
}

fn seed_psi2<S: Scalar>(curve: &EllipticCurveW<S>) -> CurveRingElement<S> {
    // ψ₂ = −y
    CurveRingElement::from_odd(
        DensePolynomial::constant(S::from_i64(-1)),
        &curve.equation(),
    )
}

fn seed_psi3<S: Scalar>(curve: &EllipticCurveW<S>) -> CurveRingElement<S> {
    // ψ₃ = 3x⁴ − (3/2)g₂x² − 3g₃x − (1/16)g₂²
    let g2 = curve.g2();
    let g3 = curve.g3();
    let half = S::one().div(&S::from_i64(2));
    let sixteenth = S::one().div(&S::from_i64(16));
    let coeffs = vec![
        g2.mul(g2).mul(&sixteenth).neg(),
        g3.mul(&S::from_i64(3)).neg(),
        g2.mul(&S::from_i64(3)).mul(&half).neg(),
        S::zero(),
        S::from_i64(3),
    ];
    CurveRingElement::from_even(DensePolynomial::from_coeffs(coeffs), &curve.equation())
}

fn seed_psi4<S: Scalar>(curve: &EllipticCurveW<S>) -> CurveRingElement<S> {
    // ψ₄ = y·(−2x⁶ + (5/2)g₂x⁴ + 10g₃x³ + (5/8)g₂²x² + (1/2)g₂g₃x
    //        − (1/32)g₂³ + g₃²)
    let g2 = curve.g2();
    let g3 = curve.g3();
    let frac = |n: i64, d: i64| S::from_i64(n).div(&S::from_i64(d));
    let coeffs = vec![
        g3.mul(g3).sub(&g2.mul(g2).mul(g2).mul(&frac(1, 32))),
        g2.mul(g3).mul(&frac(1, 2)),
        g2.mul(g2).mul(&frac(5, 8)),
        g3.mul(&S::from_i64(10)),
        g2.mul(&frac(5, 2)),
        S::zero(),
        S::from_i64(-2),
    ];
    CurveRingElement::from_odd(DensePolynomial::from_coeffs(coeffs), &curve.equation())
}

impl<S: Scalar> DivisionPolynomialSeq<S> {
    /// Builds ψ₀..ψ_{n_max}.
    pub fn new(curve: EllipticCurveW<S>, n_max: usize) -> Self {
        let mut seq = DivisionPolynomialSeq {
            table: Vec::new(),
            curve,
        };
        seq.extend_to(n_max);
        seq
    }

    pub fn curve(&self) -> &EllipticCurveW<S> {
        &self.curve
    }

    pub fn n_max(&self) -> usize {
        self.table.len().saturating_sub(1)
    }

    pub fn extend_to(&mut self, n_max: usize) {
        let eq = self.curve.equation();
        if self.table.is_empty() {
            self.table.push(CurveRingElement::zero(&eq)); // ψ₀
            self.table.push(CurveRingElement::one(&eq)); // ψ₁
            self.table.push(seed_psi2(&self.curve));
            self.table.push(seed_psi3(&self.curve));
            self.table.push(seed_psi4(&self.curve));
        }
        while self.table.len() <= n_max {
            let n = self.table.len();
            let next = if n % 2 == 1 {
                // n = 2k+1 via pair (m, n) = (k+1, k): ψ₁-normalized determinant.
                let k = n / 2;
                self.pair_determinant(k + 1, k)
            } else {
                // n = 2k via pair (m, n) = (k+1, k−1): divide the determinant by ψ₂ = −y.
                let k = n / 2;
                let det = self.pair_determinant(k + 1, k - 1);
                det.div_y_exact()
                    .expect("division polynomial recursion stays polynomial")
                    .neg()
            };
            self.table.push(next);
        }
    }

    /// Determinant of the 2×2 matrix of ψ-products for the recursion pair (m, n).
    fn pair_determinant(&self, m: usize, n: usize) -> CurveRingElement<S> {
        let entries = vec![
            self.psi(m - 1).mul(self.psi(n)),
            self.psi(m).mul(self.psi(n + 1)),
            self.psi(m).mul(self.psi(n - 1)),
            self.psi(m + 1).mul(self.psi(n)),
        ];
        RingMatrix::from_entries(2, entries)
            .expect("2x2")
            .det_bareiss()
            .expect("integral domain")
    }

    pub fn psi(&self, n: usize) -> &CurveRingElement<S> {
        &self.table[n]
    }

    /// ψ with the sign convention ψ₋ₙ = −ψₙ.
    pub fn psi_signed(&self, n: i64) -> CurveRingElement<S> {
        if n >= 0 {
            self.table[n as usize].clone()
        } else {
            self.table[(-n) as usize].neg()
        }
    }

    /// Residual of the recursion ψₙ₊ₘψₘ₋ₙ = ψₘ₋₁ψₘ₊₁ψₙ² − ψₘ²ψₙ₊₁ψₙ₋₁
    /// as a ring element, via the 2×2 determinant form.
    pub fn recursion_residual(&mut self, m: i64, n: i64) -> CurveRingElement<S> {
        let needed = (m + n).max(m + 1).unsigned_abs() as usize;
        if needed >= self.table.len() {
            self.extend_to(needed);
        }
        let lhs = self.psi_signed(m + n).mul(&self.psi_signed(m - n));
        let entries = vec![
            self.psi_signed(m - 1).mul(&self.psi_signed(n)),
            self.psi_signed(m).mul(&self.psi_signed(n + 1)),
            self.psi_signed(m).mul(&self.psi_signed(n - 1)),
            self.psi_signed(m + 1).mul(&self.psi_signed(n)),
        ];
        let det = RingMatrix::from_entries(2, entries)
            .expect("2x2")
            .det_bareiss()
            .expect("integral domain");
        lhs.sub(&det)
    }

    /// Residual of the bilinear form ψₙ₊₂ψₙ₋₂ − ψ₂²ψₙ₋₁ψₙ₊₁ + ψ₃ψ₁ψₙ².
    pub fn bilinear_residual(&mut self, n: i64) -> CurveRingElement<S> {
        let needed = (n + 2).unsigned_abs() as usize;
        if needed >= self.table.len() {
            self.extend_to(needed);
        }
        let psi2 = self.psi_signed(2);
        let psi3 = self.psi_signed(3);
        let psi1 = self.psi_signed(1);
        self.psi_signed(n + 2)
            .mul(&self.psi_signed(n - 2))
            .sub(
                &psi2
                    .mul(&psi2)
                    .mul(&self.psi_signed(n - 1))
                    .mul(&self.psi_signed(n + 1)),
            )
            .add(
                &psi3
                    .mul(&psi1)
                    .mul(&self.psi_signed(n))
                    .mul(&self.psi_signed(n)),
            )
    }
}

/// Exact sweep of the recursion identity over 0 ≤ n < m ≤ m_max.
pub fn verify_recursion_2_4<S: Scalar>(
    seq: &mut DivisionPolynomialSeq<S>,
    m: i64,
    n: i64,
) -> Result<ResidualReport, EllipticError> {
    if !(m > n && n >= 0) {
        return Err(EllipticError::IndexOutOfRange(n));
    }
    let r = seq.recursion_residual(m, n);
    Ok(ResidualReport::from_exact(
        format!("elliptic-recursion(m={},n={})", m, n),
        vec![(m, residual_value(&r))],
    ))
}

/// Exact check of the bilinear difference equation at index n ≥ 2.
pub fn verify_bilinear_2_5<S: Scalar>(
    seq: &mut DivisionPolynomialSeq<S>,
    n: i64,
) -> Result<ResidualReport, EllipticError> {
    if n < 2 {
        return Err(EllipticError::IndexOutOfRange(n));
    }
    let r = seq.bilinear_residual(n);
    Ok(ResidualReport::from_exact(
        format!("elliptic-bilinear(n={})", n),
        vec![(n, residual_value(&r))],
    ))
}

pub(crate) fn residual_value<S: Scalar>(r: &CurveRingElement<S>) -> ResidualValue {
    if r.is_zero() {
        ResidualValue::ExactZero
    } else {
        ResidualValue::ExactNonzero(format!("{}", r))
    }
}

pub(crate) fn scalar_residual_value<S: Scalar>(v: &S) -> ResidualValue {
    if v.is_zero() {
        ResidualValue::ExactZero
    } else {
        ResidualValue::ExactNonzero(format!("{}", v))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use psilab_algebra::{rat, Rat};

    fn curve() -> EllipticCurveW<Rat> {
        EllipticCurveW::new(rat(4, 1), rat(1, 1)).unwrap()
    }

    #[test]
    fn base_values() {
        let seq = DivisionPolynomialSeq::new(curve(), 4);
        assert!(seq.psi(0).is_zero());
        assert_eq!(seq.psi(1), &CurveRingElement::one(&curve().equation()));
        // ψ₂² = f
        let sq = seq.psi(2).mul(seq.psi(2));
        assert_eq!(sq.even_part(), curve().f());
        assert!(sq.odd_part().is_zero());
    }

    #[test]
    fn parity_structure_up_to_12() {
        let seq = DivisionPolynomialSeq::new(curve(), 12);
        for n in 1..=12usize {
            if n % 2 == 1 {
                assert!(seq.psi(n).odd_part().is_zero(), "psi_{} should be even", n);
            } else {
                assert!(seq.psi(n).even_part().is_zero(), "psi_{} should be odd", n);
            }
        }
    }

    #[test]
    fn recursion_residuals_vanish_small() {
        let mut seq = DivisionPolynomialSeq::new(curve(), 12);
        for (m, n) in [(2, 1), (5, 3), (4, 0), (6, 2)] {
            let r = seq.recursion_residual(m, n);
            assert!(r.is_zero(), "residual (m={}, n={}) = {:?}", m, n, r);
        }
    }

    #[test]
    fn bilinear_residuals_vanish_small() {
        let mut seq = DivisionPolynomialSeq::new(curve(), 12);
        for n in 2..=10 {
            assert!(seq.bilinear_residual(n).is_zero(), "n = {}", n);
        }
    }

    #[test]
    fn degenerate_pair_with_n_zero() {
        let mut seq = DivisionPolynomialSeq::new(curve(), 8);
        assert!(seq.recursion_residual(5, 0).is_zero());
    }
}
