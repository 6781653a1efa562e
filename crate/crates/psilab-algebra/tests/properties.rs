//! Property tests for the algebra kernel: ring axioms on random inputs and
//! agreement of the two determinant strategies.

use proptest::prelude::*;
use psilab_algebra::{
    rat, CurveEquation, CurveRingElement, DensePolynomial, Rat, RingMatrix,
};
use std::sync::Arc;

type P = DensePolynomial<Rat>;

fn arb_rat() -> impl Strategy<Value = Rat> {
    (-40i64..40, 1i64..12).prop_map(|(n, d)| rat(n, d))
}

fn arb_poly(max_deg: usize) -> impl Strategy<Value = P> {
    prop::collection::vec(arb_rat(), 0..=max_deg + 1).prop_map(P::from_coeffs)
}

fn curve() -> Arc<CurveEquation<Rat>> {
    // y^2 = x^5 + 2x^2 - x + 3; squarefree right-hand side.
    CurveEquation::new(P::from_i64_coeffs(&[3, -1, 2, 0, 0, 1]))
}

fn arb_ring_elem() -> impl Strategy<Value = CurveRingElement<Rat>> {
    (arb_poly(8), arb_poly(8)).prop_map(|(even, odd)| {
        let c = curve();
        CurveRingElement::new(even, odd, c)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn poly_mul_is_associative(p in arb_poly(6), q in arb_poly(6), r in arb_poly(6)) {
        prop_assert_eq!(p.mul(&q).mul(&r), p.mul(&q.mul(&r)));
    }

    #[test]
    fn derivative_satisfies_product_rule(p in arb_poly(6), q in arb_poly(6)) {
        let lhs = p.mul(&q).derivative();
        let rhs = p.derivative().mul(&q).add(&p.mul(&q.derivative()));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn ring_mul_is_commutative(a in arb_ring_elem(), b in arb_ring_elem()) {
        prop_assert_eq!(a.mul(&b), b.mul(&a));
    }

    #[test]
    fn ring_mul_is_associative(a in arb_ring_elem(), b in arb_ring_elem(), c in arb_ring_elem()) {
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
    }

    #[test]
    fn bareiss_agrees_with_cofactor(
        dim in 1usize..=4,
        coeffs in prop::collection::vec(arb_poly(3), 16),
    ) {
        let entries: Vec<P> = coeffs.into_iter().take(dim * dim).collect();
        prop_assume!(entries.len() == dim * dim);
        let m = RingMatrix::from_entries(dim, entries).unwrap();
        prop_assert_eq!(m.det_bareiss().unwrap(), m.det_cofactor());
    }

    #[test]
    fn det_is_multiplicative_on_3x3_scalars(
        a in prop::collection::vec(arb_rat(), 9),
        b in prop::collection::vec(arb_rat(), 9),
    ) {
        let prod: Vec<Rat> = (0..3)
            .flat_map(|i| (0..3).map(move |j| (i, j)))
            .map(|(i, j)| {
                (0..3)
                    .map(|k| (&a[i * 3 + k] * &b[k * 3 + j]))
                    .fold(rat(0, 1), |acc, v| acc + v)
            })
            .collect();
        let ma = RingMatrix::from_entries(3, a).unwrap();
        let mb = RingMatrix::from_entries(3, b).unwrap();
        let mab = RingMatrix::from_entries(3, prod).unwrap();
        let lhs = mab.det_bareiss().unwrap();
        let rhs = ma.det_bareiss().unwrap() * mb.det_bareiss().unwrap();
        prop_assert_eq!(lhs, rhs);
    }
}
