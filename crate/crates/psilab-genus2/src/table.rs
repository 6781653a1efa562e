//! The calibrated genus-2 ψ-table and its α-polynomials.

use crate::calibrate::{calibrate, Calibration};
use crate::wronskian::psi_wronskian_raw;
use crate::G2Error;
use psilab_algebra::{
    rational_string, CurveRingElement, DensePolynomial, HyperellipticCurveG2, Rat, Scalar,
};

#[derive(Clone, Debug)]
pub struct PsiTableG2 {
    curve: HyperellipticCurveG2,
    calibration: Calibration,
    raw: Vec<CurveRingElement<Rat>>,
    psi: Vec<CurveRingElement<Rat>>,
}

impl PsiTableG2 {
    /// Builds and calibrates ψ₀..ψ_{n_max} (n_max ≥ 8).
    pub fn build(curve: HyperellipticCurveG2, n_max: usize) -> Result<Self, G2Error> {
        let calibration = calibrate(&curve, n_max)?;
        let mut raw = Vec::with_capacity(n_max + 1);
        let mut psi = Vec::with_capacity(n_max + 1);
        for n in 0..=n_max {
            let r = psi_wronskian_raw(&curve, n)?;
            let scaled = if n >= 2 {
                r.scale(calibration.kappa(n))
            } else {
                r.clone()
            };
            raw.push(r);
            psi.push(scaled);
        }
        Ok(PsiTableG2 {
            curve,
            calibration,
            raw,
            psi,
        })
    }

    pub fn curve(&self) -> &HyperellipticCurveG2 {
        &self.curve
    }

    pub fn n_max(&self) -> usize {
        self.psi.len() - 1
    }

    pub fn calibration(&self) -> &Calibration {
        &self.calibration
    }

    /// The uncalibrated Wronskian-route element.
    pub fn raw(&self, n: usize) -> &CurveRingElement<Rat> {
        &self.raw[n]
    }

    pub fn psi(&self, n: usize) -> &CurveRingElement<Rat> {
        &self.psi[n]
    }

    /// ψ with the sign convention ψ₋ₙ = −ψₙ.
    pub fn psi_signed(&self, n: i64) -> CurveRingElement<Rat> {
        if n >= 0 {
            self.psi[n as usize].clone()
        } else {
            self.psi[(-n) as usize].neg()
        }
    }

    /// αₙ(x) with ψₙ = 2y·αₙ (n even) or 8y³·αₙ (n odd ≥ 3).
    /// The division must be exact; failure signals a construction bug.
    pub fn alpha(&self, n: usize) -> Result<DensePolynomial<Rat>, G2Error> {
        if n < 2 {
            // ψ₀ = ψ₁ = 0: the α convention extends with zero.
            return Ok(DensePolynomial::zero());
        }
        let psi = &self.psi[n];
        if !psi.even_part().is_zero() {
            return Err(G2Error::AlphaDivisionFailed { n });
        }
        let odd = psi.odd_part();
        if n % 2 == 0 {
            // ψ = 2y·α ⇒ odd part = 2α
            Ok(odd.scale(&Rat::one().div(&Rat::from_i64(2))))
        } else {
            // ψ = 8y³·α = 8f·α·y ⇒ odd part = 8fα
            let scaled = odd.scale(&Rat::one().div(&Rat::from_i64(8)));
            scaled
                .exact_div(self.curve.f())
                .ok_or(G2Error::AlphaDivisionFailed { n })
        }
    }

    /// α-values at x₀ for n = 0..=n_max.
    pub fn alpha_values_at(&self, x0: &Rat) -> Result<Vec<Rat>, G2Error> {
        (0..=self.n_max())
            .map(|n| self.alpha(n).map(|a| a.eval(x0)))
            .collect()
    }

    /// ψ-values at a point of the curve.
    pub fn psi_values_at(&self, x0: &Rat, y0: &Rat) -> Result<Vec<Rat>, G2Error> {
        if !self.curve.contains(x0, y0) {
            return Err(G2Error::PointOffCurve {
                x: rational_string(x0),
                y: rational_string(y0),
            });
        }
        Ok((0..=self.n_max())
            .map(|n| self.psi[n].eval(x0, y0))
            .collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use psilab_algebra::rat;

    fn table() -> PsiTableG2 {
        let curve = HyperellipticCurveG2::from_i64([0, 1, 0, 0, 0]).unwrap();
        PsiTableG2::build(curve, 8).unwrap()
    }

    #[test]
    fn anchors_hold() {
        let t = table();
        let eq = t.curve().equation();
        assert_eq!(t.psi(2), &CurveRingElement::y(&eq).scale(&rat(2, 1)));
        assert_eq!(t.psi(3), &CurveRingElement::y(&eq).pow(3).scale(&rat(8, 1)));
        assert!(t.psi(0).is_zero());
        assert!(t.psi(1).is_zero());
    }

    #[test]
    fn alpha_structure() {
        let t = table();
        assert_eq!(t.alpha(2).unwrap(), DensePolynomial::one());
        assert_eq!(t.alpha(3).unwrap(), DensePolynomial::one());
        let a4 = t.alpha(4).unwrap();
        assert!(a4.degree().unwrap() > 0);
        // α₄ coprime to f
        assert_eq!(a4.gcd(t.curve().f()).degree(), Some(0));
        // exact division works through n = 8
        for n in 4..=8 {
            t.alpha(n).unwrap();
        }
    }

    #[test]
    fn alpha_degrees_follow_weight() {
        // deg αₙ = n² − 4 (even) or n² − 9 (odd ≥ 3) on a generic curve.
        let t = table();
        for n in 4..=8usize {
            let expect = if n % 2 == 0 { n * n - 4 } else { n * n - 9 };
            assert_eq!(
                t.alpha(n).unwrap().degree(),
                Some(expect),
                "alpha_{} degree",
                n
            );
        }
    }
}
