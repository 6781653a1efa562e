//! The y-derivative tower on y² = f(x): with y′ = f′/(2y), the k-th
//! derivative is y⁽ᵏ⁾ = qₖ(x)/y^(2k−1) for polynomials qₖ obeying
//! qₖ₊₁ = qₖ′·f − (2k−1)/2·qₖ·f′, q₀ = 1 (so that y⁽⁰⁾ = y), q₁ = f′/2.

use psilab_algebra::{
    CurveEquation, CurveRingElement, DensePolynomial, Rat, Scalar, YLaurentElement,
};
use std::sync::Arc;

/// qₖ for k = 0..=k_max.
pub fn derivative_numerators(
    f: &DensePolynomial<Rat>,
    k_max: usize,
) -> Vec<DensePolynomial<Rat>> {
    let mut q = Vec::with_capacity(k_max + 1);
    q.push(DensePolynomial::one());
    if k_max == 0 {
        return q;
    }
    let fp = f.derivative();
    q.push(fp.scale(&Rat::one().div(&Rat::from_i64(2))));
    for k in 1..k_max {
        let prev: &DensePolynomial<Rat> = &q[k];
        let half_odd = Rat::from_i64(2 * k as i64 - 1).div(&Rat::from_i64(2));
        let next = prev
            .derivative()
            .mul(f)
            .sub(&prev.mul(&fp).scale(&half_odd));
        q.push(next);
    }
    q
}

/// The normalized tower g⁽ᵏ⁾ = y⁽ᵏ⁾/k! = qₖ/(k!·y^(2k−1)) for k = 0..=k_max,
/// as canonical y-Laurent elements (for k = 0 this is y itself).
pub fn y_derivative_series(
    curve: &Arc<CurveEquation<Rat>>,
    k_max: usize,
) -> Vec<YLaurentElement<Rat>> {
    let q = derivative_numerators(curve.f(), k_max);
    let mut out = Vec::with_capacity(k_max + 1);
    out.push(YLaurentElement::from_ring(CurveRingElement::y(curve)));
    let mut factorial = Rat::one();
    for (k, qk) in q.iter().enumerate().skip(1) {
        factorial = factorial.mul(&Rat::from_i64(k as i64));
        let num = CurveRingElement::from_even(qk.scale(&Rat::one().div(&factorial)), curve);
        out.push(YLaurentElement::new(num, (2 * k - 1) as u32));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use psilab_algebra::{rat, HyperellipticCurveG2};

    fn curve() -> HyperellipticCurveG2 {
        HyperellipticCurveG2::from_i64([0, 1, 0, 0, 0]).unwrap()
    }

    #[test]
    fn tower_base_cases() {
        let c = curve();
        let eq = c.equation();
        let g = y_derivative_series(&eq, 2);
        // k = 0: y
        assert_eq!(g[0].y_power(), 0);
        assert_eq!(g[0].numerator(), &CurveRingElement::y(&eq));
        // k = 1: f′/(2y)
        assert_eq!(g[1].y_power(), 1);
        assert_eq!(
            g[1].numerator().even_part(),
            &c.f().derivative().scale(&rat(1, 2))
        );
        // k = 2: (2 f f″ − f′²)/(8 y³), the quotient-rule oracle divided by 2!.
        let f = c.f();
        let oracle = f
            .mul(&f.derivative().derivative())
            .scale(&rat(2, 1))
            .sub(&f.derivative().mul(&f.derivative()))
            .scale(&rat(1, 8));
        assert_eq!(g[2].y_power(), 3);
        assert_eq!(g[2].numerator().even_part(), &oracle);
    }

    #[test]
    fn quotient_rule_oracle_via_laurent_arithmetic() {
        // Differentiate g[k] once more with the product/quotient rules implemented
        // directly on Laurent elements and compare with g[k+1]·(k+1).
        let c = curve();
        let eq = c.equation();
        let g = y_derivative_series(&eq, 5);
        let f = c.f();
        for k in 1..5usize {
            // d/dx [q/(y^{2k-1})] = q′/y^{2k-1} − (2k−1)·q·f′/(2·y^{2k+1})
            let qk = g[k].numerator().even_part();
            let d_num = qk.derivative().mul(f).sub(
                &qk.mul(&f.derivative())
                    .scale(&Rat::from_i64(2 * k as i64 - 1).div(&rat(2, 1))),
            );
            let derived = YLaurentElement::new(
                CurveRingElement::from_even(d_num, &eq),
                (2 * k + 1) as u32,
            );
            let expected = g[k + 1].scale(&Rat::from_i64(k as i64 + 1));
            assert_eq!(derived, expected, "k = {}", k);
        }
    }
}
