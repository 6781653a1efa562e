//! Exact identity sweeps on calibrated ψ-tables over several curves.

use num_traits::Signed;
use psilab_algebra::{rat, HyperellipticCurveG2, Rat, Scalar};
use psilab_genus2::{
    d_ratio_equivalence, factorial_form_magnitude, factorial_scalar, recursion_residual,
    residual_3_11, residual_3_12, residual_3_13, toeplitz_wronskian_scalar, variant_survives,
    IndexVariant, PsiTableG2,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn random_curve(rng: &mut ChaCha8Rng, lambda0_zero: bool) -> HyperellipticCurveG2 {
    loop {
        let l0 = if lambda0_zero { 0 } else { rng.gen_range(-3i64..=3) };
        let l = [
            l0,
            rng.gen_range(-3i64..=3),
            rng.gen_range(-3i64..=3),
            rng.gen_range(-3i64..=3),
            rng.gen_range(-3i64..=3),
        ];
        if lambda0_zero && l[1] == 0 {
            continue; // keep x = 0 a simple root of f
        }
        if let Ok(c) = HyperellipticCurveG2::new(l.map(Rat::from_i64)) {
            return c;
        }
    }
}

fn test_tables(n_max: usize, count: usize) -> Vec<PsiTableG2> {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_61);
    (0..count)
        .map(|_| PsiTableG2::build(random_curve(&mut rng, false), n_max).unwrap())
        .collect()
}

#[test]
fn recursion_vanishes_for_all_admissible_pairs() {
    for table in test_tables(12, 3) {
        for m in 3..=9i64 {
            for n in 2..m {
                if m + n > 12 || n < 2 {
                    continue;
                }
                let r = recursion_residual(&table, m, n);
                assert!(r.is_zero(), "recursion residual nonzero at ({}, {})", m, n);
            }
        }
    }
}

#[test]
fn calibration_is_curve_independent() {
    let tables = test_tables(10, 3);
    let reference: Vec<Rat> = (2..=10).map(|n| tables[0].calibration().kappa(n).clone()).collect();
    for t in &tables[1..] {
        for (i, n) in (2..=10).enumerate() {
            assert_eq!(
                t.calibration().kappa(n),
                &reference[i],
                "kappa_{} differs between curves",
                n
            );
        }
    }
    assert!(tables[0].calibration().factorial_magnitude);
}

#[test]
fn calibration_is_rigid_against_single_rescaling() {
    // Scaling any single κ breaks some recursion instance: the solution is
    // unique, not merely consistent.
    let table = &test_tables(10, 1)[0];
    for scaled in 4..=8usize {
        let psi = |k: i64| -> psilab_algebra::CurveRingElement<Rat> {
            let base = table.psi_signed(k);
            if k.unsigned_abs() as usize == scaled {
                base.scale(&rat(2, 1))
            } else {
                base
            }
        };
        let mut any_nonzero = false;
        'outer: for m in 3..=7i64 {
            for n in 3..m - 1 {
                if m + n > 10 {
                    continue;
                }
                let lhs = psi(2)
                    .pow(2)
                    .mul(&psi(m))
                    .mul(&psi(n))
                    .mul(&psi(n + m))
                    .mul(&psi(m - n));
                let e = |i: i64, j: i64| psi(m + i + j - 4).mul(&psi(n - i + j));
                let det = e(1, 1)
                    .mul(&e(2, 2).mul(&e(3, 3)).sub(&e(2, 3).mul(&e(3, 2))))
                    .sub(&e(1, 2).mul(&e(2, 1).mul(&e(3, 3)).sub(&e(2, 3).mul(&e(3, 1)))))
                    .add(&e(1, 3).mul(&e(2, 1).mul(&e(3, 2)).sub(&e(2, 2).mul(&e(3, 1)))));
                if !lhs.sub(&det).is_zero() {
                    any_nonzero = true;
                    break 'outer;
                }
            }
        }
        assert!(any_nonzero, "rescaling kappa_{} went undetected", scaled);
    }
}

#[test]
fn six_term_families_vanish() {
    for table in test_tables(12, 3) {
        for m in 4..=8i64 {
            assert!(residual_3_11(&table, m).exact, "n=3 family fails at m={}", m);
        }
        for m in 5..=8i64 {
            assert!(residual_3_12(&table, m).exact, "n=4 family fails at m={}", m);
        }
    }
}

#[test]
fn bilinear_five_term_vanishes() {
    for table in test_tables(12, 3) {
        for n in 4..=8i64 {
            assert!(residual_3_13(&table, n).exact, "bilinear fails at n={}", n);
        }
    }
}

#[test]
fn bilinear_n4_degenerate_case_is_three_terms() {
    // At n = 4 the ψ₀/ψ₁ products drop and the remaining three-term
    // combination still cancels identically.
    let table = &test_tables(8, 1)[0];
    let p = |k: i64| table.psi_signed(k);
    let remaining = p(5)
        .mul(&p(3).pow(3))
        .sub(&p(4).pow(3).mul(&p(2)))
        .mul(&p(6))
        .mul(&p(2))
        .sub(&p(6).mul(&p(3).pow(2)).mul(&p(2)).mul(&p(5)).mul(&p(3)))
        .add(&p(6).mul(&p(4)).mul(&p(2).pow(2)).mul(&p(4).pow(2)));
    assert!(remaining.is_zero());
}

#[test]
fn d_ratio_routes_agree() {
    for table in test_tables(10, 2) {
        for m in 4..=8i64 {
            assert!(d_ratio_equivalence(&table, m).exact, "(m={})", m);
        }
    }
}

#[test]
fn toeplitz_route_matches_wronskian_up_to_factorials() {
    for table in test_tables(10, 2) {
        for n in 4..=10usize {
            let s = toeplitz_wronskian_scalar(&table, n, IndexVariant::PureToeplitz)
                .unwrap()
                .expect("proportional");
            assert_eq!(s, factorial_scalar(n), "scalar at n = {}", n);
        }
    }
}

#[test]
fn exactly_one_variant_survives_from_n6() {
    let table = &test_tables(10, 1)[0];
    for n in 6..=10usize {
        let survivors: Vec<_> = IndexVariant::ALL
            .into_iter()
            .filter(|v| variant_survives(table, n, *v))
            .collect();
        assert_eq!(
            survivors,
            vec![IndexVariant::PureToeplitz],
            "survivors at n = {}",
            n
        );
    }
    // The 1×1 blocks coincide for every variant, so all survive there.
    for n in [4usize, 5] {
        assert!(IndexVariant::ALL
            .into_iter()
            .all(|v| variant_survives(table, n, v)));
    }
}

#[test]
fn kappa_magnitudes_follow_factorial_form() {
    let table = &test_tables(10, 1)[0];
    for n in 2..=10usize {
        assert_eq!(
            table.calibration().kappa(n).abs(),
            factorial_form_magnitude(n),
            "magnitude at n = {}",
            n
        );
    }
    // Signs follow the period-8 pattern +,+,+,−,−,−,− repeating from n = 2.
    let signs: Vec<i64> = table.calibration().signs.clone();
    let expected: Vec<i64> = (2..=10)
        .map(|n: usize| if n % 8 == 0 || n % 8 >= 5 { -1 } else { 1 })
        .collect();
    assert_eq!(signs, expected);
}
