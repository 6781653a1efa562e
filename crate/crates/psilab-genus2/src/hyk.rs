//! Embedding of the third-order equation into the two-parameter rational
//! step map x_{m+2}x_{m−1} = (a₀ + a₁(xₘ + xₘ₊₁) + a₃xₘxₘ₊₁)
//!                           /(a₃ + b₁(xₘ + xₘ₊₁) + b₃xₘxₘ₊₁).

use psilab_algebra::{Rat, Scalar};
use psilab_seq::ThirdOrderParams;

/// Parameter record of the general rational step map.
#[derive(Clone, Debug, PartialEq)]
pub struct HykParams {
    pub a0: Rat,
    pub a1: Rat,
    pub a3: Rat,
    pub b1: Rat,
    pub b3: Rat,
}

/// The specialization carrying the third-order equation:
/// a₃ = b₁ = 0, a₁ = −α₄, a₀ = α₅, b₃ = 1.
pub fn hyk_parameter_map(alpha4: &Rat, alpha5: &Rat) -> HykParams {
    HykParams {
        a0: alpha5.clone(),
        a1: alpha4.neg(),
        a3: Rat::zero(),
        b1: Rat::zero(),
        b3: Rat::one(),
    }
}

impl HykParams {
    /// One step of the rational map: x_{m+2} from (x_{m−1}, xₘ, xₘ₊₁).
    /// Returns `None` on a vanishing denominator.
    pub fn step(&self, x_prev: &Rat, x_m: &Rat, x_next: &Rat) -> Option<Rat> {
        let sum = x_m.add(x_next);
        let prod = x_m.mul(x_next);
        let num = self
            .a0
            .add(&self.a1.mul(&sum))
            .add(&self.a3.mul(&prod));
        let den = self
            .a3
            .add(&self.b1.mul(&sum))
            .add(&self.b3.mul(&prod))
            .mul(x_prev);
        if den.is_zero() {
            None
        } else {
            Some(num.div(&den))
        }
    }
}

/// Checks at a sample of rational triples that the specialized map agrees
/// with the third-order step dₘ₊₂ = [α₅/(dₘ₊₁dₘ) − α₄(1/dₘ₊₁ + 1/dₘ)]/dₘ₋₁.
pub fn verify_reduces_to_third_order(alpha4: &Rat, alpha5: &Rat) -> bool {
    let map = hyk_parameter_map(alpha4, alpha5);
    let samples: [(i64, i64, i64); 5] = [(1, 2, 3), (2, -1, 5), (-3, 7, 2), (5, 5, 1), (4, -2, -3)];
    let params = ThirdOrderParams {
        alpha4: alpha4.clone(),
        alpha5: alpha5.clone(),
    };
    samples.into_iter().all(|(a, b, c)| {
        let (p, m, n) = (Rat::from_i64(a), Rat::from_i64(b), Rat::from_i64(c));
        let via_map = map.step(&p, &m, &n);
        let direct = {
            let prod = n.mul(&m);
            let inv_sum = Rat::one().div(&n).add(&Rat::one().div(&m));
            params
                .alpha5
                .div(&prod)
                .sub(&params.alpha4.mul(&inv_sum))
                .div(&p)
        };
        via_map == Some(direct)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use psilab_algebra::rat;

    #[test]
    fn parameters_of_example_pair() {
        let p = hyk_parameter_map(&rat(1, 1), &rat(3, 1));
        assert_eq!(
            p,
            HykParams {
                a0: rat(3, 1),
                a1: rat(-1, 1),
                a3: rat(0, 1),
                b1: rat(0, 1),
                b3: rat(1, 1),
            }
        );
    }

    #[test]
    fn reduces_to_third_order_step() {
        assert!(verify_reduces_to_third_order(&rat(1, 1), &rat(3, 1)));
        assert!(verify_reduces_to_third_order(&rat(-7, 3), &rat(2, 5)));
    }

    #[test]
    fn constant_solution_at_one() {
        // α₄ = 1, α₅ = 3: x ≡ 1 since (3 − 1·2)/1 = 1.
        let map = hyk_parameter_map(&rat(1, 1), &rat(3, 1));
        assert_eq!(
            map.step(&rat(1, 1), &rat(1, 1), &rat(1, 1)),
            Some(rat(1, 1))
        );
    }
}
