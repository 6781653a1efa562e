//! Forward iteration of the difference equations.
//!
//! Sign conventions: the discrete Painlevé I step is
//! βₙ₊₁ = (z/βₙ + a/βₙ²)/βₙ₋₁ exactly as in the paper's introductory form;
//! the elliptic closed form supplies z = ψ₂² and a = −ψ₃ψ₁, the Weierstrass
//! point form supplies z = α₄² and a = −α₆. Stating the mapping once here
//! keeps the sign from drifting between modules.

use crate::sequence::{Provenance, RatioSequence, SequenceKind};
use psilab_algebra::scalar::Scalar;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SeqError {
    #[error("zero seed at index {index}")]
    ZeroSeed { index: i64 },
    #[error("sixth-order constants sit in the psi4 = 0 regime of the fourth-order equation; the sixth-order step is undefined")]
    Psi4Zero,
    #[error("sequences have disjoint index ranges")]
    DisjointRanges,
}

/// Parameters of the discrete Painlevé I equation βₙ₊₁βₙ₋₁ = z/βₙ + a/βₙ².
#[derive(Clone, Debug, PartialEq)]
pub struct DP1Params<S: Scalar> {
    pub z: S,
    pub a: S,
}

/// Parameters of the third-order equation
/// dₘ₊₂dₘ₋₁ = α₅/(dₘ₊₁dₘ) − α₄(1/dₘ₊₁ + 1/dₘ).
#[derive(Clone, Debug, PartialEq)]
pub struct ThirdOrderParams<S: Scalar> {
    pub alpha4: S,
    pub alpha5: S,
}

/// The five ψ-values at a fixed generic point that parameterize the
/// sixth-order equation for bₙ = ψₙ₊₂ψₙ₋₂/ψₙ².
#[derive(Clone, Debug, PartialEq)]
pub struct SixthOrderConstants<S: Scalar> {
    pub psi2: S,
    pub psi3: S,
    pub psi4: S,
    pub psi5: S,
    pub psi6: S,
}

/// Coefficients of the five-term bilinear relation
/// c4·ψₙ₊₄ψₙ₋₄ − c3·ψₙ₊₃ψₙ₋₃ + c2·ψₙ₊₂ψₙ₋₂ − c1·ψₙ₊₁ψₙ₋₁ + c0·ψₙ² = 0.
#[derive(Clone, Debug, PartialEq)]
pub struct BilinearCoeffs<S: Scalar> {
    pub c4: S,
    pub c3: S,
    pub c2: S,
    pub c1: S,
    pub c0: S,
}

impl<S: Scalar> SixthOrderConstants<S> {
    pub fn bilinear_coeffs(&self) -> BilinearCoeffs<S> {
        let p2 = &self.psi2;
        let p3 = &self.psi3;
        let p4 = &self.psi4;
        let p5 = &self.psi5;
        let p6 = &self.psi6;
        let p2sq = p2.mul(p2);
        let p2cu = p2sq.mul(p2);
        BilinearCoeffs {
            c4: p4.mul(&p2cu),
            c3: p5.mul(p3).mul(&p2sq),
            c2: p5.mul(&p3.mul(p3).mul(p3)).sub(&p4.mul(p4).mul(p4).mul(p2)),
            c1: p6.mul(&p3.mul(p3)).mul(p2),
            c0: p6.mul(p4).mul(&p2sq),
        }
    }
}

impl<S: Scalar> BilinearCoeffs<S> {
    /// Numerator of Qₙ = ψₙ₊₁ψₙ₋₁/ψₙ² as a function of the b-window:
    /// c4·bₙ₊₂bₙ²bₙ₋₂ + c2·bₙ + c0.
    pub fn q_numerator(&self, b_m2: &S, b_0: &S, b_p2: &S) -> S {
        self.c4
            .mul(b_p2)
            .mul(&b_0.mul(b_0))
            .mul(b_m2)
            .add(&self.c2.mul(b_0))
            .add(&self.c0)
    }

    /// Denominator of Qₙ: c3·bₙ₊₁bₙ₋₁ + c1.
    pub fn q_denominator(&self, b_m1: &S, b_p1: &S) -> S {
        self.c3.mul(b_p1).mul(b_m1).add(&self.c1)
    }
}

fn check_seeds<S: Scalar>(seeds: &[S], start: i64, step: i64) -> Result<(), SeqError> {
    for (k, s) in seeds.iter().enumerate() {
        if s.is_zero() {
            return Err(SeqError::ZeroSeed {
                index: start + step * k as i64,
            });
        }
    }
    Ok(())
}

/// Iterates dP-I forward from two consecutive seeds at `start`, producing
/// values up to index `start + n_steps + 1`. Stops early (recording the
/// truncation index) if a zero value would be divided by.
pub fn iterate_dp1<S: Scalar>(
    params: &DP1Params<S>,
    seeds: [S; 2],
    start: i64,
    n_steps: usize,
) -> Result<RatioSequence<S>, SeqError> {
    check_seeds(&seeds, start, 1)?;
    let mut values = vec![seeds[0].clone(), seeds[1].clone()];
    let mut truncated_at = None;
    for k in 0..n_steps {
        let prev = &values[k];
        let cur = &values[k + 1];
        if cur.is_zero() || prev.is_zero() {
            truncated_at = Some(start + k as i64 + 2);
            break;
        }
        let cur_sq = cur.mul(cur);
        let next = params
            .z
            .div(cur)
            .add(&params.a.div(&cur_sq))
            .div(prev);
        values.push(next);
    }
    let mut seq = RatioSequence::new(SequenceKind::Beta, start, 1, values)
        .with_provenance(Provenance::Iterated);
    seq.truncated_at = truncated_at;
    Ok(seq)
}

/// Iterates the third-order equation from three consecutive seeds.
pub fn iterate_third_order<S: Scalar>(
    params: &ThirdOrderParams<S>,
    seeds: [S; 3],
    start: i64,
    n_steps: usize,
) -> Result<RatioSequence<S>, SeqError> {
    check_seeds(&seeds, start, 1)?;
    let mut values = seeds.to_vec();
    let mut truncated_at = None;
    for k in 0..n_steps {
        // d_{m+2} = [α₅/(d_{m+1} d_m) − α₄(1/d_{m+1} + 1/d_m)] / d_{m−1}
        let d_m1 = &values[k]; // d_{m-1}
        let d_m = &values[k + 1];
        let d_p1 = &values[k + 2];
        if d_m1.is_zero() || d_m.is_zero() || d_p1.is_zero() {
            truncated_at = Some(start + k as i64 + 3);
            break;
        }
        let prod = d_p1.mul(d_m);
        let inv_sum = S::one().div(d_p1).add(&S::one().div(d_m));
        let next = params
            .alpha5
            .div(&prod)
            .sub(&params.alpha4.mul(&inv_sum))
            .div(d_m1);
        values.push(next);
    }
    let mut seq =
        RatioSequence::new(SequenceKind::D, start, 1, values).with_provenance(Provenance::Iterated);
    seq.truncated_at = truncated_at;
    Ok(seq)
}

/// Step-2 iteration of the Weierstrass-point dP-I form
/// cₙ₊₂cₙ₋₂ = z/cₙ + a/cₙ² on one parity sublattice.
pub fn iterate_c_lattice<S: Scalar>(
    params: &DP1Params<S>,
    seeds: [S; 2],
    start: i64,
    n_steps: usize,
) -> Result<RatioSequence<S>, SeqError> {
    check_seeds(&seeds, start, 2)?;
    let mut values = vec![seeds[0].clone(), seeds[1].clone()];
    let mut truncated_at = None;
    for k in 0..n_steps {
        let prev = &values[k];
        let cur = &values[k + 1];
        if cur.is_zero() || prev.is_zero() {
            truncated_at = Some(start + 2 * (k as i64 + 2));
            break;
        }
        let cur_sq = cur.mul(cur);
        let next = params.z.div(cur).add(&params.a.div(&cur_sq)).div(prev);
        values.push(next);
    }
    let mut seq =
        RatioSequence::new(SequenceKind::C, start, 2, values).with_provenance(Provenance::Iterated);
    seq.truncated_at = truncated_at;
    Ok(seq)
}

/// Solves the sixth-order equation forward: given six consecutive seeds
/// bₙ₋₃..bₙ₊₂ (window centered between), produces bₙ₊₃ onward.
///
/// The step uses the constraint Qₙ₋₁Qₙ²Qₙ₊₁ = bₙ, where
/// Qₙ = (c4·bₙ₊₂bₙ²bₙ₋₂ + c2·bₙ + c0)/(c3·bₙ₊₁bₙ₋₁ + c1) is the square-free
/// ratio ψₙ₊₁ψₙ₋₁/ψₙ² eliminated from the bilinear five-term relation.
pub fn iterate_sixth_order<S: Scalar>(
    constants: &SixthOrderConstants<S>,
    seeds: [S; 6],
    start: i64,
    n_steps: usize,
) -> Result<RatioSequence<S>, SeqError> {
    if constants.psi4.is_zero() || constants.psi2.is_zero() {
        return Err(SeqError::Psi4Zero);
    }
    check_seeds(&seeds, start, 1)?;
    let coeffs = constants.bilinear_coeffs();
    let mut values = seeds.to_vec();
    let mut truncated_at = None;
    for k in 0..n_steps {
        // window indices: values[k..k+6] are b_{n-3}..b_{n+2}, n = start+k+3
        let b = &values[k..k + 6];
        let center = start + k as i64 + 3;
        if b.iter().any(|v| v.is_zero()) {
            truncated_at = Some(center + 3);
            break;
        }
        // Q_{n-1} from window (b_{n-3}, b_{n-1}, b_{n+1}) and (b_{n-2}, b_n):
        let q_nm1_num = coeffs.q_numerator(&b[0], &b[2], &b[4]);
        let q_nm1_den = coeffs.q_denominator(&b[1], &b[3]);
        // Q_n from (b_{n-2}, b_n, b_{n+2}) and (b_{n-1}, b_{n+1}):
        let q_n_num = coeffs.q_numerator(&b[1], &b[3], &b[5]);
        let q_n_den = coeffs.q_denominator(&b[2], &b[4]);
        if q_nm1_num.is_zero() || q_nm1_den.is_zero() || q_n_num.is_zero() || q_n_den.is_zero() {
            truncated_at = Some(center + 3);
            break;
        }
        let q_nm1 = q_nm1_num.div(&q_nm1_den);
        let q_n = q_n_num.div(&q_n_den);
        // Q_{n+1} = b_n / (Q_{n-1} Q_n²)
        let q_np1 = b[3].div(&q_nm1.mul(&q_n).mul(&q_n));
        // b_{n+3} = [Q_{n+1}(c3·b_{n+2}b_n + c1) − c2·b_{n+1} − c0] / (c4·b_{n+1}²·b_{n-1})
        let den = coeffs.c4.mul(&b[4].mul(&b[4])).mul(&b[2]);
        if den.is_zero() {
            truncated_at = Some(center + 3);
            break;
        }
        let next = q_np1
            .mul(&coeffs.q_denominator(&b[3], &b[5]))
            .sub(&coeffs.c2.mul(&b[4]))
            .sub(&coeffs.c0)
            .div(&den);
        values.push(next);
    }
    let mut seq =
        RatioSequence::new(SequenceKind::B, start, 1, values).with_provenance(Provenance::Iterated);
    seq.truncated_at = truncated_at;
    Ok(seq)
}
