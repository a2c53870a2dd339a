use proptest::prelude::*;

use monocert::brute::{cert_complexity, is_certificate, is_minimal, CheckMode};
use monocert::certifier::binary_query_bound;
use monocert::{angluin_certify, certify_binary, random_monotone_dnf, CountingOracle, Point};

fn instance() -> impl Strategy<Value = (monocert::MonotoneFunction, Point)> {
    (3usize..=10, 1usize..=6, 1usize..=5, any::<u64>(), any::<u64>()).prop_map(|(n, m, w, seed, mask)| {
        let f = random_monotone_dnf(n, m, w.min(n), seed).unwrap();
        let x = Point::from_mask(n, mask & ((1 << n) - 1));
        (f, x)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn binary_certificate_is_valid_minimal_and_small((f, x) in instance()) {
        let mut oracle = CountingOracle::new(f.clone());
        let r = certify_binary(&mut oracle, &x).unwrap();
        let a = r.certificate.indices();
        prop_assert!(is_certificate(&f, &x, a, CheckMode::Exhaustive).unwrap());
        prop_assert!(is_minimal(&f, &x, a, CheckMode::Exhaustive).unwrap());
        prop_assert!(a.len() <= cert_complexity(&f).unwrap().value);
        prop_assert_eq!(r.queries_used, oracle.count());
        prop_assert!(r.queries_used <= binary_query_bound(a.len(), f.dimension()));
        prop_assert_eq!(r.certificate.value(), f.evaluate(&x).unwrap());
    }

    #[test]
    fn insertion_order_strictly_decreases((f, x) in instance()) {
        let r = certify_binary(&mut CountingOracle::new(f), &x).unwrap();
        prop_assert_eq!(r.insertion_order.len(), r.iterations);
        prop_assert!(r.insertion_order.windows(2).all(|w| w[0] > w[1]));
        let mut sorted = r.insertion_order.clone();
        sorted.sort_unstable();
        prop_assert_eq!(sorted.as_slice(), r.certificate.indices().members());
    }

    #[test]
    fn certificate_restriction_matches_reference((f, x) in instance()) {
        let r = certify_binary(&mut CountingOracle::new(f.clone()), &x).unwrap();
        let fixed = f.evaluate(&x).unwrap() != 0.0;
        for (i, b) in r.certificate.restriction() {
            prop_assert_eq!(b, fixed);
            prop_assert_eq!(x.get(i), b);
        }
    }

    #[test]
    fn angluin_agrees_on_validity_and_minimality((f, x) in instance()) {
        let r = angluin_certify(&mut CountingOracle::new(f.clone()), &x).unwrap();
        let a = r.certificate.indices();
        prop_assert!(is_certificate(&f, &x, a, CheckMode::Exhaustive).unwrap());
        prop_assert!(is_minimal(&f, &x, a, CheckMode::Exhaustive).unwrap());
    }

    #[test]
    fn repeated_runs_are_identical((f, x) in instance()) {
        let run = || {
            let mut oracle = CountingOracle::new(f.clone()).with_log();
            let r = certify_binary(&mut oracle, &x).unwrap();
            (r.certificate, r.queries_used, r.insertion_order, oracle.take_log())
        };
        prop_assert_eq!(run(), run());
    }
}
