//! The Toeplitz-determinant route to ψₙ over the derivative tower
//! g⁽ᵏ⁾ = y⁽ᵏ⁾/k!, cross-checking the Wronskian construction.
//!
//! The printed matrix pattern is internally inconsistent (the first-column
//! superscripts of two rows jump by 2 while a neighboring row's do not), so
//! three readings are implemented. Exactly one — the pure Toeplitz pattern,
//! the one the triangular reduction of the Wronskian actually produces —
//! clears its y denominators and matches the Wronskian route; the others
//! are rejected by the polynomiality test.

use crate::basis::MonomialBasis;
use crate::derivs::y_derivative_series;
use crate::table::PsiTableG2;
use crate::G2Error;
use psilab_algebra::{CurveRingElement, HyperellipticCurveG2, Rat, RingMatrix, Scalar, YLaurentElement};

/// Resolution of the printed index-pattern ambiguity.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum IndexVariant {
    /// entry(i, j) = g⁽ᵐ⁺ᵏ⁻¹⁺ⁱ⁻ʲ⁾ — constant along diagonals.
    PureToeplitz,
    /// First column advances by 2 per row; remaining columns as printed rows.
    FirstColumnAdvanced,
    /// Last row advances by 2 per column from the left.
    LastRowAdvanced,
}

impl IndexVariant {
    pub const ALL: [IndexVariant; 3] = [
        IndexVariant::PureToeplitz,
        IndexVariant::FirstColumnAdvanced,
        IndexVariant::LastRowAdvanced,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            IndexVariant::PureToeplitz => "pure-toeplitz",
            IndexVariant::FirstColumnAdvanced => "first-column-advanced",
            IndexVariant::LastRowAdvanced => "last-row-advanced",
        }
    }

    /// Superscript of the entry at (i, j), 1-based, for block parameters
    /// (m, k) = (lowest superscript, dimension).
    fn superscript(&self, m: usize, k: usize, i: usize, j: usize) -> usize {
        let base = (m + k - 1 + i).saturating_sub(j);
        match self {
            IndexVariant::PureToeplitz => base,
            IndexVariant::FirstColumnAdvanced => {
                if j == 1 {
                    m + k - 1 + 2 * (i - 1)
                } else {
                    base
                }
            }
            IndexVariant::LastRowAdvanced => {
                if i == k && j < k {
                    m + 2 * k - 1 - 2 * (j - 1)
                } else {
                    base
                }
            }
        }
    }
}

/// The scaled Toeplitz determinant y^(n(n−1)/2)·det T for n ≥ 4, as an
/// exact ring element. Errors when the chosen variant leaves a y
/// denominator standing.
pub fn psi_toeplitz(
    curve: &HyperellipticCurveG2,
    n: usize,
    variant: IndexVariant,
) -> Result<CurveRingElement<Rat>, G2Error> {
    if n < 4 {
        return Err(G2Error::IndexOutOfRange(n as i64));
    }
    let basis = MonomialBasis::for_index(n)?;
    let (m, k) = basis.toeplitz_shape().expect("n >= 4 has a y block");
    let eq = curve.equation();
    let max_super = m + 2 * k; // covers every variant's largest index
    let tower = y_derivative_series(&eq, max_super);
    let mut entries = Vec::with_capacity(k * k);
    for i in 1..=k {
        for j in 1..=k {
            entries.push(tower[variant.superscript(m, k, i, j)].clone());
        }
    }
    let det = RingMatrix::new(k, entries, YLaurentElement::one(&eq))
        .expect("square")
        .det_cofactor();
    let scaled = det.mul_y_power((n * (n - 1) / 2) as u32);
    match scaled.as_ring_element() {
        Some(elem) => Ok(elem.clone()),
        None => Err(G2Error::VariantRejected {
            variant: variant.name(),
            n,
            detail: format!(
                "y^{} remains in the denominator after scaling",
                scaled.y_power()
            ),
        }),
    }
}

/// The per-n scalar relating the Toeplitz and Wronskian routes, if the two
/// are proportional: psi_toeplitz(n) · sₙ⁻¹... returned as
/// raw_wronskian(n) = sₙ · psi_toeplitz(n).
pub fn toeplitz_wronskian_scalar(
    table: &PsiTableG2,
    n: usize,
    variant: IndexVariant,
) -> Result<Option<Rat>, G2Error> {
    let t = psi_toeplitz(table.curve(), n, variant)?;
    Ok(table.raw(n).scalar_ratio_to(&t))
}

/// True when the variant both clears its y denominators at n and is
/// scalar-proportional to the Wronskian route there. (Odd n carries enough
/// y-powers that a wrong pattern can still clear; proportionality is the
/// second gate.)
pub fn variant_survives(table: &PsiTableG2, n: usize, variant: IndexVariant) -> bool {
    match toeplitz_wronskian_scalar(table, n, variant) {
        Ok(Some(_)) => true,
        _ => false,
    }
}

/// 1!·2!···(n−1)!, the scalar the triangular reduction predicts between the
/// two routes.
pub fn factorial_scalar(n: usize) -> Rat {
    let mut acc = Rat::one();
    let mut fact = Rat::one();
    for j in 1..n {
        fact = fact.mul(&Rat::from_i64(j as i64));
        acc = acc.mul(&fact);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    fn curve() -> HyperellipticCurveG2 {
        HyperellipticCurveG2::from_i64([0, 1, 0, 0, 0]).unwrap()
    }

    #[test]
    fn n4_is_1x1_third_derivative() {
        // T is the single entry g⁽³⁾; scaled by y⁶ it is y·q₃/3!.
        let t = psi_toeplitz(&curve(), 4, IndexVariant::PureToeplitz).unwrap();
        let q = crate::derivs::derivative_numerators(curve().f(), 3);
        assert!(t.even_part().is_zero());
        assert_eq!(t.odd_part(), &q[3].scale(&Rat::one().div(&Rat::from_i64(6))));
    }

    #[test]
    fn pure_variant_clears_through_10() {
        for n in 4..=10 {
            psi_toeplitz(&curve(), n, IndexVariant::PureToeplitz).unwrap();
        }
    }

    #[test]
    fn even_n_rejects_printed_variants_by_polynomiality() {
        // At even n the scaling power is too small to absorb the wrong
        // pattern's denominators.
        for n in [6usize, 8] {
            for variant in [IndexVariant::FirstColumnAdvanced, IndexVariant::LastRowAdvanced] {
                match psi_toeplitz(&curve(), n, variant) {
                    Err(G2Error::VariantRejected { .. }) => {}
                    other => panic!("variant {:?} at n = {} gave {:?}", variant, n, other),
                }
            }
        }
    }
}
