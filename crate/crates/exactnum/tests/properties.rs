use exactnum::{Polynomial, Scalar};
use proptest::prelude::*;

fn scalar() -> impl Strategy<Value = Scalar> {
    let radicands = prop::sample::select(vec![1u64, 2, 3, 5, 6, 7]);
    prop::collection::vec((radicands, -9i64..=9, 1i64..=6), 0..4).prop_map(|parts| {
        parts
            .into_iter()
            .map(|(k, n, d)| Scalar::ratio(n, d) * Scalar::sqrt_int(k))
            .sum()
    })
}

fn polynomial() -> impl Strategy<Value = Polynomial> {
    let vars = ["x", "y", "z"];
    prop::collection::vec((0usize..3, 0u32..3, scalar()), 0..4).prop_map(move |parts| {
        let mut p = Polynomial::zero_in(&vars);
        for (v, e, c) in parts {
            let mut m = Polynomial::constant(c);
            let x = Polynomial::variable(&vars, vars[v]).unwrap();
            for _ in 0..e {
                m = &m * &x;
            }
            p = &p + &m;
        }
        p
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn scalar_ring_axioms(a in scalar(), b in scalar(), c in scalar()) {
        prop_assert_eq!((&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!((&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &a * &b + &a * &c);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert!((&a - &a).is_zero());
    }

    #[test]
    fn scalar_division_inverts(a in scalar(), b in scalar()) {
        prop_assume!(!b.is_zero());
        prop_assert_eq!(&(&a / &b) * &b, a);
    }

    #[test]
    fn scalar_canon_idempotent(a in scalar()) {
        prop_assert_eq!(a.canon(), a.clone());
        prop_assert_eq!(a.canon().canon(), a.canon());
    }

    #[test]
    fn scalar_text_round_trip(a in scalar()) {
        let back: Scalar = a.to_string().parse().unwrap();
        prop_assert_eq!(back, a);
    }

    #[test]
    fn scalar_sign_matches_float(a in scalar()) {
        let f = a.to_f64();
        if f.abs() > 1e-9 {
            prop_assert_eq!(a.signum() as f64, f.signum());
        }
    }

    #[test]
    fn polynomial_ring_axioms(p in polynomial(), q in polynomial(), r in polynomial()) {
        prop_assert_eq!(&(&p + &q) + &r, &p + &(&q + &r));
        prop_assert_eq!(&(&p * &q) * &r, &p * &(&q * &r));
        prop_assert_eq!(&p * &(&q + &r), &(&p * &q) + &(&p * &r));
    }

    #[test]
    fn partial_is_a_derivation(p in polynomial(), q in polynomial()) {
        let lhs = (&p * &q).partial("y").unwrap();
        let rhs = &(&p.partial("y").unwrap() * &q) + &(&p * &q.partial("y").unwrap());
        prop_assert_eq!(lhs, rhs);
    }
}

#[test]
fn adjoined_radicals_square_to_generators() {
    for g in [2u64, 3, 5, 6, 7, 10, 11, 13, 30] {
        let r = Scalar::sqrt_int(g);
        assert!((&r * &r - Scalar::from(g as i64)).is_zero());
    }
}

#[test]
fn serde_round_trip() {
    let x: Scalar = "2*sqrt(5)/5".parse().unwrap();
    let json = serde_json::to_string(&x).unwrap();
    assert_eq!(json, "\"2*sqrt(5)/5\"");
    let back: Scalar = serde_json::from_str(&json).unwrap();
    assert_eq!(back, x);
    let from_int: Scalar = serde_json::from_str("3").unwrap();
    assert_eq!(from_int, Scalar::from(3));
}
