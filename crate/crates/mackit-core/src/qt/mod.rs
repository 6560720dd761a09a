//! Exact arithmetic in the coefficient field: integer polynomials in the
//! parameters q, t and their fraction field, plus the finite Pochhammer
//! products and Gaussian binomials built from them.

mod poly;
mod rat;

pub use poly::QtPoly;
pub use rat::{pochhammer, qbinom, QtRat};

#[cfg(test)]
mod proptests {
    use super::*;
    use proptest::prelude::*;

    fn arb_poly() -> impl Strategy<Value = QtPoly> {
        proptest::collection::vec(((0u32..3, 0u32..3), -4i64..5), 0..4).prop_map(|terms| {
            let mut p = QtPoly::zero();
            for ((dq, dt), c) in terms {
                p = p.add(&QtPoly::monomial(dq, dt, c.into()));
            }
            p
        })
    }

    fn arb_rat() -> impl Strategy<Value = QtRat> {
        (arb_poly(), arb_poly())
            .prop_filter("nonzero denominator", |(_, d)| !d.is_zero())
            .prop_map(|(n, d)| QtRat::new(n, d).unwrap())
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn addition_associative(a in arb_rat(), b in arb_rat(), c in arb_rat()) {
            prop_assert_eq!(a.add(&b).add(&c), a.add(&b.add(&c)));
        }

        #[test]
        fn multiplication_associative(a in arb_rat(), b in arb_rat(), c in arb_rat()) {
            prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        }

        #[test]
        fn distributivity(a in arb_rat(), b in arb_rat(), c in arb_rat()) {
            prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        }

        #[test]
        fn additive_inverse(a in arb_rat()) {
            prop_assert!(a.sub(&a).is_zero());
        }

        #[test]
        fn multiplicative_inverse(a in arb_rat()) {
            if !a.is_zero() {
                prop_assert!(a.mul(&a.inv().unwrap()).is_one());
            }
        }

        #[test]
        fn commutativity(a in arb_rat(), b in arb_rat()) {
            prop_assert_eq!(a.add(&b), b.add(&a));
            prop_assert_eq!(a.mul(&b), b.mul(&a));
        }

        #[test]
        fn poly_string_round_trip(p in arb_poly()) {
            let s = p.to_string();
            let back: QtPoly = s.parse().unwrap();
            prop_assert_eq!(back, p);
        }
    }
}
