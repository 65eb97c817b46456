//! Ring-axiom property tests for the coefficient layer: associativity,
//! commutativity, distributivity, identities, and canonical-form
//! stability, on randomly generated Laurent polynomials and trace
//! polynomials.

use proptest::prelude::*;
use yokonuma::{LaurentU, Rational, TracePoly};

fn rational_strategy() -> impl Strategy<Value = Rational> {
    (-4i64..=4, 1i64..=4).prop_map(|(n, d)| Rational::new(n.into(), d.into()))
}

fn laurent_strategy() -> impl Strategy<Value = LaurentU> {
    prop::collection::vec((-3i64..=3, rational_strategy()), 0..4).prop_map(|terms| {
        terms
            .into_iter()
            .fold(LaurentU::zero(), |acc, (e, c)| acc + LaurentU::term(e, c))
    })
}

fn trace_poly_strategy(d: u64) -> impl Strategy<Value = TracePoly> {
    let mono = (0u32..=2, prop::collection::vec(1i64..d.max(2) as i64, 0..3));
    prop::collection::vec((mono, laurent_strategy()), 0..4).prop_map(move |terms| {
        terms
            .into_iter()
            .fold(TracePoly::zero(d), |acc, ((z_exp, xs), c)| {
                let mut m = TracePoly::one(d);
                for _ in 0..z_exp {
                    m = m.mul(&TracePoly::z(d)).unwrap();
                }
                for i in xs {
                    m = m.mul(&TracePoly::x_var(d, i)).unwrap();
                }
                acc.add(&m.scale(&c)).unwrap()
            })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn laurent_add_commutes(a in laurent_strategy(), b in laurent_strategy()) {
        prop_assert_eq!(&a + &b, &b + &a);
    }

    #[test]
    fn laurent_mul_commutes(a in laurent_strategy(), b in laurent_strategy()) {
        prop_assert_eq!(&a * &b, &b * &a);
    }

    #[test]
    fn laurent_assoc(a in laurent_strategy(), b in laurent_strategy(), c in laurent_strategy()) {
        prop_assert_eq!((&a + &b) + &c, &a + (&b + &c));
        prop_assert_eq!((&a * &b) * &c, &a * (&b * &c));
    }

    #[test]
    fn laurent_distributes(a in laurent_strategy(), b in laurent_strategy(), c in laurent_strategy()) {
        prop_assert_eq!(&a * (&b + &c), &a * &b + &a * &c);
    }

    #[test]
    fn laurent_identities(a in laurent_strategy()) {
        prop_assert_eq!(&a + &LaurentU::zero(), a.clone());
        prop_assert_eq!(&a * &LaurentU::one(), a.clone());
        prop_assert!((&a - &a).is_zero());
        prop_assert_eq!(&a + &(-&a), LaurentU::zero());
    }

    #[test]
    fn trace_poly_ring_axioms(
        a in trace_poly_strategy(4),
        b in trace_poly_strategy(4),
        c in trace_poly_strategy(4),
    ) {
        prop_assert_eq!(a.add(&b).unwrap(), b.add(&a).unwrap());
        prop_assert_eq!(a.mul(&b).unwrap(), b.mul(&a).unwrap());
        prop_assert_eq!(
            a.add(&b).unwrap().add(&c).unwrap(),
            a.add(&b.add(&c).unwrap()).unwrap()
        );
        prop_assert_eq!(
            a.mul(&b).unwrap().mul(&c).unwrap(),
            a.mul(&b.mul(&c).unwrap()).unwrap()
        );
        prop_assert_eq!(
            a.mul(&b.add(&c).unwrap()).unwrap(),
            a.mul(&b).unwrap().add(&a.mul(&c).unwrap()).unwrap()
        );
        prop_assert_eq!(a.mul(&TracePoly::one(4)).unwrap(), a.clone());
        prop_assert!(a.add(&a.neg()).unwrap().is_zero());
        prop_assert_eq!(a.add(&a.neg()).unwrap(), TracePoly::zero(4));
    }

    #[test]
    fn x_var_is_periodic(d in 1u64..=9, m in -50i64..=50, k in -5i64..=5) {
        prop_assert_eq!(
            TracePoly::x_var(d, m),
            TracePoly::x_var(d, m + k * d as i64)
        );
    }
}
