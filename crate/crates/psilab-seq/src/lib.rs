//! Generic forward iterators for the difference equations and exact/numeric
//! comparison of iterated orbits against closed-form ψ-ratio sequences.

pub mod compare;
pub mod iterate;
pub mod sequence;

pub use compare::compare;
pub use iterate::{
    iterate_c_lattice, iterate_dp1, iterate_sixth_order, iterate_third_order, BilinearCoeffs,
    DP1Params, SeqError, SixthOrderConstants, ThirdOrderParams,
};
pub use sequence::{Provenance, RatioSequence, ResidualReport, ResidualValue, SequenceKind};

#[cfg(test)]
mod tests {
    use super::*;
    use psilab_algebra::{rat, Rat};

    #[test]
    fn dp1_constant_orbit() {
        // z = 1, a = 0, seeds (1, 1): βₙ₊₁ = (1/1 + 0)/1 = 1 forever.
        let params = DP1Params {
            z: rat(1, 1),
            a: rat(0, 1),
        };
        let seq = iterate_dp1(&params, [rat(1, 1), rat(1, 1)], 1, 10).unwrap();
        assert_eq!(seq.len(), 12);
        assert!(seq.values.iter().all(|v| *v == rat(1, 1)));
        assert!(seq.truncated_at.is_none());
    }

    #[test]
    fn dp1_zero_seed_rejected() {
        let params = DP1Params {
            z: rat(1, 1),
            a: rat(0, 1),
        };
        let err = iterate_dp1(&params, [rat(0, 1), rat(1, 1)], 1, 4).unwrap_err();
        assert_eq!(err, SeqError::ZeroSeed { index: 1 });
    }

    #[test]
    fn third_order_constant_orbit() {
        // α₄ = 1, α₅ = 3, seeds (1,1,1): d = (3/1 − 1·(1+1))/1 = 1.
        let params = ThirdOrderParams {
            alpha4: rat(1, 1),
            alpha5: rat(3, 1),
        };
        let seq = iterate_third_order(&params, [rat(1, 1), rat(1, 1), rat(1, 1)], 2, 8).unwrap();
        assert!(seq.values.iter().all(|v| *v == rat(1, 1)));
    }

    #[test]
    fn third_order_zero_seed_rejected() {
        let params = ThirdOrderParams {
            alpha4: rat(1, 1),
            alpha5: rat(3, 1),
        };
        assert!(matches!(
            iterate_third_order(&params, [rat(1, 1), rat(0, 1), rat(1, 1)], 2, 4),
            Err(SeqError::ZeroSeed { index: 3 })
        ));
    }

    #[test]
    fn sixth_order_rejects_psi4_zero() {
        let constants = SixthOrderConstants::<Rat> {
            psi2: rat(1, 1),
            psi3: rat(1, 1),
            psi4: rat(0, 1),
            psi5: rat(1, 1),
            psi6: rat(1, 1),
        };
        assert!(matches!(
            iterate_sixth_order(&constants, std::array::from_fn(|_| rat(1, 1)), 4, 2),
            Err(SeqError::Psi4Zero)
        ));
    }

    #[test]
    fn dp1_truncates_on_zero_value_keeping_prefix() {
        // z = 1, a = -1, seeds (1, 1): β₃ = (1/1 - 1/1)/1 = 0, then stop.
        let params = DP1Params {
            z: rat(1, 1),
            a: rat(-1, 1),
        };
        let seq = iterate_dp1(&params, [rat(1, 1), rat(1, 1)], 1, 10).unwrap();
        assert_eq!(seq.truncated_at, Some(4));
        assert_eq!(seq.values, vec![rat(1, 1), rat(1, 1), rat(0, 1)]);
    }
}
