//! Property tests for the series ring, the mod-2 reduction homomorphism,
//! and the parity-analysis primitives.

use proptest::prelude::*;

use qparity_core::builders::catalog::identity_catalog;
use qparity_core::parity::{
    scan_zero_progressions, verify_congruence, CongruenceClaim, JDomain, QuadraticFamily,
};
use qparity_core::partitions::{gf_parity, gf_series, PartitionId};
use qparity_core::series::{ParitySeries, Series, Sign};

fn series_strategy(order: usize) -> impl Strategy<Value = Series> {
    prop::collection::vec(-9i64..=9, order + 1).prop_map(move |coeffs| {
        let terms: Vec<(usize, i64)> = coeffs.into_iter().enumerate().collect();
        Series::make(order, &terms).expect("exponents in range")
    })
}

fn sign_strategy() -> impl Strategy<Value = Sign> {
    prop_oneof![Just(Sign::Plus), Just(Sign::Minus)]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn mul_is_commutative(
        (a, b) in (0usize..=64).prop_flat_map(|n| (series_strategy(n), series_strategy(n)))
    ) {
        prop_assert_eq!(a.mul(&b).unwrap(), b.mul(&a).unwrap());
    }

    #[test]
    fn mul_is_associative(
        (a, b, c) in (0usize..=48).prop_flat_map(|n| {
            (series_strategy(n), series_strategy(n), series_strategy(n))
        })
    ) {
        let left = a.mul(&b).unwrap().mul(&c).unwrap();
        let right = a.mul(&b.mul(&c).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn mul_distributes_over_add(
        (a, b, c) in (0usize..=48).prop_flat_map(|n| {
            (series_strategy(n), series_strategy(n), series_strategy(n))
        })
    ) {
        let left = a.mul(&b.add(&c).unwrap()).unwrap();
        let right = a.mul(&b).unwrap().add(&a.mul(&c).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn div_binomial_is_a_two_sided_inverse(
        (s, e, sign) in (1usize..=64).prop_flat_map(|n| {
            (series_strategy(n), 1usize..=n, sign_strategy())
        })
    ) {
        let through_mul = s.mul_binomial(sign, e).unwrap().div_binomial(sign, e).unwrap();
        prop_assert_eq!(&through_mul, &s);
        let through_div = s.div_binomial(sign, e).unwrap().mul_binomial(sign, e).unwrap();
        prop_assert_eq!(&through_div, &s);
    }

    #[test]
    fn reduction_is_a_ring_homomorphism(
        (a, b, e, sign) in (1usize..=64).prop_flat_map(|n| {
            (series_strategy(n), series_strategy(n), 1usize..=n, sign_strategy())
        })
    ) {
        let (pa, pb) = (a.to_parity(), b.to_parity());
        prop_assert_eq!(a.add(&b).unwrap().to_parity(), pa.add(&pb).unwrap());
        prop_assert_eq!(a.mul(&b).unwrap().to_parity(), pa.mul(&pb).unwrap());
        prop_assert_eq!(
            a.mul_binomial(sign, e).unwrap().to_parity(),
            pa.mul_binomial(sign, e).unwrap()
        );
        prop_assert_eq!(
            a.div_binomial(sign, e).unwrap().to_parity(),
            pa.div_binomial(sign, e).unwrap()
        );
    }

    #[test]
    fn family_members_agree_with_naive_j_scan(
        alpha in 1i64..=20,
        beta in -30i64..=30,
        gamma in -30i64..=30,
        delta in 1i64..=10,
        order in 0usize..=10_000,
        domain_pick in 0u8..3,
    ) {
        let domain = match domain_pick {
            0 => JDomain::AllIntegers,
            1 => JDomain::NonNegative,
            _ => JDomain::Positive,
        };
        let family = QuadraticFamily::new(alpha, beta, gamma, delta, domain);
        let span = 300 + (delta * order as i64 / alpha).isqrt() + beta.abs() + gamma.abs();
        let naive: std::collections::BTreeSet<usize> = (-span..=span)
            .filter(|&j| domain.contains(j))
            .filter_map(|j| {
                let v = alpha * j * j + beta * j + gamma;
                (v >= 0 && v % delta == 0 && v / delta <= order as i64)
                    .then(|| (v / delta) as usize)
            })
            .collect();
        prop_assert_eq!(family.members(order), naive);
    }

    #[test]
    fn scanner_outputs_reverify_and_nothing_is_missed(
        support in prop::collection::btree_set(0usize..=400, 0..=60),
        modulus in 2usize..=50,
        min_support in 1usize..=20,
    ) {
        let order = 400;
        let terms: Vec<(usize, i64)> = support.iter().map(|&s| (s, 1)).collect();
        let parity = Series::make(order, &terms).unwrap().to_parity();
        let found = scan_zero_progressions(&parity, modulus, min_support);
        for &r in &found {
            let report = verify_congruence(&parity, &CongruenceClaim::new(modulus, r));
            prop_assert!(report.passed(), "scanner reported r={r} but re-check fails");
        }
        // completeness: every residue outside the output either meets an odd
        // coefficient or has too few checked indices
        for r in 0..modulus {
            if found.contains(&r) {
                continue;
            }
            let checked = (order - r) / modulus + 1;
            let hit = support.iter().any(|&s| s % modulus == r);
            prop_assert!(
                hit || checked < min_support,
                "scanner missed residue {r} (checked={checked}, hit={hit})"
            );
        }
    }
}

/// The bit-packed pipeline must agree with exact-then-reduce on every
/// catalog side and every partition generating function at order 512.
#[test]
fn parity_pipeline_equals_exact_reduction_at_512() {
    const ORDER: usize = 512;
    for entry in identity_catalog() {
        for (side, expr) in [("lhs", &entry.lhs), ("rhs", &entry.rhs)] {
            let exact: Series = expr.eval(ORDER).expect("catalog side expands");
            let packed: ParitySeries = expr.eval(ORDER).expect("catalog side expands");
            assert_eq!(
                exact.to_parity(),
                packed,
                "pipelines disagree on {} {side}",
                entry.id
            );
        }
    }
    for id in PartitionId::ALL {
        assert_eq!(
            gf_series(id, ORDER).to_parity(),
            gf_parity(id, ORDER),
            "pipelines disagree on {id}"
        );
    }
}
