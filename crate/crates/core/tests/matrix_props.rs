mod common;

use common::{random_element, random_hyperbolic, rng};
use goldman_core::*;
use num_bigint::BigInt;
use proptest::prelude::*;

fn word_strategy(max_len: usize) -> impl Strategy<Value = String> {
    prop::collection::vec(prop::sample::select(vec!['S', 'T', 't', 'L', 'l']), 0..=max_len)
        .prop_map(|v| v.into_iter().collect())
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 200, rng_algorithm: prop::test_runner::RngAlgorithm::ChaCha, ..ProptestConfig::default() })]

    #[test]
    fn inverse_and_powers(s in word_strategy(10), a in -8i64..=8, b in -8i64..=8) {
        let m = parse_element(&s).unwrap();
        prop_assert!(m.compose(&m.inverse()).is_identity());
        prop_assert_eq!(m.power(a + b), m.power(a).compose(&m.power(b)));
    }

    #[test]
    fn trace_of_power_matches(s in word_strategy(10), n in 0u64..=12) {
        let m = parse_element(&s).unwrap();
        prop_assert_eq!(trace_of_power(&m, n), m.power(n as i64).abs_trace());
    }

    #[test]
    fn sign_canonical(s in word_strategy(12)) {
        let m = parse_element(&s).unwrap();
        let [a, b, c, d] = m.entries().map(|e| e.clone());
        let neg = ProjectiveMatrix::new(-a.clone(), -b.clone(), -c.clone(), -d.clone()).unwrap();
        prop_assert_eq!(&neg, &m);
        let again = ProjectiveMatrix::new(a, b, c, d).unwrap();
        prop_assert_eq!(&again, &m);
        let first = m.entries().into_iter().find(|e| **e != BigInt::from(0)).unwrap().clone();
        prop_assert!(first > BigInt::from(0));
    }

    #[test]
    fn word_display_round_trip(s in word_strategy(12)) {
        let w = parse_word(&s).unwrap();
        let again = parse_word(&w.to_string()).unwrap();
        prop_assert_eq!(w.evaluate(), again.evaluate());
        prop_assert_eq!(w.inverse().evaluate(), w.evaluate().inverse());
    }
}

#[test]
fn translation_length_of_powers() {
    let mut r = rng(101);
    for _ in 0..100 {
        let (s, m) = random_hyperbolic(&mut r, 10);
        let t = translation_length(&m).unwrap();
        for n in 1..=6 {
            let tn = translation_length(&m.power(n)).unwrap();
            assert!((tn - n as f64 * t).abs() <= 1e-9 * tn, "{s}^{n}");
        }
    }
}

#[test]
fn membership_is_a_subgroup() {
    let mut r = rng(102);
    let specs = [
        SubgroupSpec::Gamma0(2),
        SubgroupSpec::Gamma0(6),
        SubgroupSpec::Gamma1(5),
        SubgroupSpec::Gamma(3),
        SubgroupSpec::Gamma(4),
    ];
    for spec in specs {
        let mut members = Vec::new();
        while members.len() < 20 {
            let (_, m) = random_element(&mut r, 12);
            if spec.is_member(&m) {
                members.push(m);
            }
        }
        for a in &members {
            assert!(spec.is_member(&a.inverse()), "{spec} {a}");
            for b in &members {
                assert!(spec.is_member(&a.compose(b)), "{spec} {a} {b}");
            }
        }
    }
}

#[test]
fn coset_keys_detect_membership() {
    let mut r = rng(103);
    for spec in [SubgroupSpec::Gamma0(4), SubgroupSpec::Gamma1(6), SubgroupSpec::Gamma(3)] {
        for _ in 0..200 {
            let (_, g) = random_element(&mut r, 8);
            let (_, h) = random_element(&mut r, 8);
            let same = spec.coset_key(&g) == spec.coset_key(&h);
            assert_eq!(same, spec.is_member(&g.compose(&h.inverse())), "{spec} {g} {h}");
        }
    }
}
