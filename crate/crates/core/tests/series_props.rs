use num_bigint::BigInt;
use proptest::prelude::*;
use proptest::test_runner::{Config, RngSeed};

use qdissect_core::series::{Monomial, TruncatedSeries};
use qdissect_core::special::{eta_f, pochhammer_base, theta_f, theta_product};

fn config(cases: u32) -> Config {
    Config {
        cases,
        rng_seed: RngSeed::Fixed(0x7140_0035),
        failure_persistence: None,
        ..Config::default()
    }
}

fn exact(order: usize) -> impl Strategy<Value = TruncatedSeries> {
    prop::collection::vec(-50i64..50, order + 1)
        .prop_map(|c| TruncatedSeries::from_i64s(&c, 0).unwrap())
}

fn unit(order: usize) -> impl Strategy<Value = TruncatedSeries> {
    (prop::bool::ANY, prop::collection::vec(-50i64..50, order)).prop_map(|(neg, rest)| {
        let mut c = vec![if neg { -1 } else { 1 }];
        c.extend(rest);
        TruncatedSeries::from_i64s(&c, 0).unwrap()
    })
}

fn residue(order: usize, m: u64) -> impl Strategy<Value = TruncatedSeries> {
    prop::collection::vec(0..m as i64, order + 1)
        .prop_map(move |c| TruncatedSeries::from_i64s(&c, m).unwrap())
}

fn monomial() -> impl Strategy<Value = Monomial> {
    (prop::bool::ANY, 0usize..6).prop_map(|(negative, exponent)| Monomial { negative, exponent })
}

proptest! {
    #![proptest_config(config(96))]

    #[test]
    fn ring_laws_exact(a in exact(20), b in exact(20), c in exact(20)) {
        prop_assert_eq!(a.add(&b).unwrap(), b.add(&a).unwrap());
        prop_assert_eq!(a.mul(&b).unwrap(), b.mul(&a).unwrap());
        prop_assert_eq!(a.mul(&b).unwrap().mul(&c).unwrap(), a.mul(&b.mul(&c).unwrap()).unwrap());
        prop_assert_eq!(
            a.mul(&b.add(&c).unwrap()).unwrap(),
            a.mul(&b).unwrap().add(&a.mul(&c).unwrap()).unwrap()
        );
        prop_assert_eq!(a.sub(&a).unwrap(), TruncatedSeries::zero(20, 0));
        prop_assert_eq!(a.mul(&TruncatedSeries::one(20, 0)).unwrap(), a.clone());
    }

    #[test]
    fn ring_laws_residue(m in 2u64..2000, seed in exact(24)) {
        let a = seed.reduce_mod(m).unwrap();
        let b = seed.shift_mul(3).add(&TruncatedSeries::constant(7, 24, 0)).unwrap().reduce_mod(m).unwrap();
        let c = seed.negate_q().reduce_mod(m).unwrap();
        prop_assert_eq!(a.mul(&b).unwrap().mul(&c).unwrap(), a.mul(&b.mul(&c).unwrap()).unwrap());
        prop_assert_eq!(
            a.mul(&b.add(&c).unwrap()).unwrap(),
            a.mul(&b).unwrap().add(&a.mul(&c).unwrap()).unwrap()
        );
    }

    #[test]
    fn large_modulus_ring(a in residue(16, (1 << 62) + 57), b in residue(16, (1 << 62) + 57)) {
        let m = (1u64 << 62) + 57;
        // compare against exact arithmetic, reduced
        let lift = |s: &TruncatedSeries| TruncatedSeries::new(s.coefficients(), 0).unwrap();
        let want = lift(&a).mul(&lift(&b)).unwrap().reduce_mod(m).unwrap();
        prop_assert_eq!(a.mul(&b).unwrap(), want);
    }

    #[test]
    fn inverse_exact(s in unit(30)) {
        let inv = s.inverse().unwrap();
        prop_assert_eq!(s.mul(&inv).unwrap(), TruncatedSeries::one(30, 0));
        prop_assert_eq!(inv.inverse().unwrap(), s);
    }

    #[test]
    fn inverse_residue(m in 2u64..500, s in unit(30)) {
        let r = s.reduce_mod(m).unwrap();
        let inv = r.inverse().unwrap();
        prop_assert_eq!(r.mul(&inv).unwrap(), TruncatedSeries::one(30, m));
        prop_assert_eq!(inv, s.inverse().unwrap().reduce_mod(m).unwrap());
    }

    #[test]
    fn division_undoes_multiplication(a in exact(25), b in unit(25)) {
        prop_assert_eq!(a.mul(&b).unwrap().div(&b).unwrap(), a);
    }

    #[test]
    fn dissection_reassembles(s in exact(60), m in 1usize..8) {
        let n = s.order();
        let mut acc = TruncatedSeries::zero(n, 0);
        for r in 0..m {
            let part = s.dissect(m, r).unwrap().substitute_power(m).unwrap().truncate(n);
            acc = acc.add(&part.shift_mul(r)).unwrap();
        }
        // shift_mul keeps its input order, so the last few terms can drop off
        prop_assert!(acc.order() + m > n);
        prop_assert_eq!(&acc, &s.truncate(acc.order()));
    }

    #[test]
    fn pow_is_additive(s in unit(15), a in -4i64..5, b in -4i64..5) {
        let lhs = s.pow(a + b).unwrap();
        let rhs = s.pow(a).unwrap().mul(&s.pow(b).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn reduction_is_a_homomorphism(a in exact(25), b in exact(25), m in 2u64..100, k in 1u64..20) {
        let red = |s: &TruncatedSeries, m| s.reduce_mod(m).unwrap();
        prop_assert_eq!(red(&a.mul(&b).unwrap(), m), red(&a, m).mul(&red(&b, m)).unwrap());
        prop_assert_eq!(red(&a.add(&b).unwrap(), m), red(&a, m).add(&red(&b, m)).unwrap());
        // Z -> Z/(km) -> Z/m equals Z -> Z/m
        prop_assert_eq!(red(&a, k * m).reduce_mod(m).unwrap(), red(&a, m));
    }

    #[test]
    fn substitution_is_multiplicative(a in exact(20), b in exact(20), m in 1usize..5) {
        let sub = |s: &TruncatedSeries| s.substitute_power(m).unwrap();
        prop_assert_eq!(sub(&a.mul(&b).unwrap()), sub(&a).mul(&sub(&b)).unwrap());
    }

    #[test]
    fn eta_support_is_pentagonal(level in 1usize..12, order in 0usize..600) {
        let s = eta_f(level, order, 0);
        let mut expected = vec![BigInt::from(0); order + 1];
        for k in -40i64..=40 {
            let e = level as i64 * k * (3 * k - 1) / 2;
            if (e as usize) <= order {
                expected[e as usize] = BigInt::from(if k % 2 == 0 { 1 } else { -1 });
            }
        }
        prop_assert_eq!(s.coefficients(), expected);
    }

    #[test]
    fn theta_matches_triple_product(a in monomial(), b in monomial()) {
        prop_assume!(a.exponent + b.exponent > 0);
        // (a; ab) with a = +1 is the zero product; the sum vanishes there too
        let sum = theta_f(a, b, 200, 0).unwrap();
        match theta_product(a, b, 200, 0) {
            Ok(prod) => prop_assert_eq!(sum, prod),
            Err(_) => {
                prop_assert!(a.negated() == Monomial::q(0) || b.negated() == Monomial::q(0));
                prop_assert!(sum.is_zero());
            }
        }
    }

    #[test]
    fn pochhammer_matches_naive_product(a in monomial(), e in 1usize..5, neg in prop::bool::ANY) {
        let base = Monomial { negative: neg, exponent: e };
        prop_assume!(!(a.exponent == 0 && !a.negative));
        let n = 60;
        let got = pochhammer_base(a, base, n, 0).unwrap();
        let mut want = TruncatedSeries::one(n, 0);
        for k in 0..=n {
            let c = a.times(base.power(k));
            if c.exponent > n { break; }
            let f = TruncatedSeries::monomial(0, 1, n, 0)
                .sub(&TruncatedSeries::monomial(c.exponent, c.sign(), n, 0))
                .unwrap();
            want = want.mul(&f).unwrap();
        }
        prop_assert_eq!(got, want);
    }
}

#[test]
fn sixteen_theta_cases_at_order_200() {
    // every sign pattern over four exponent pairs
    let pairs = [(1, 1), (1, 2), (2, 3), (3, 7)];
    let mut checked = 0;
    for (i, j) in pairs {
        for (na, nb) in [(false, false), (false, true), (true, false), (true, true)] {
            let a = Monomial { negative: na, exponent: i };
            let b = Monomial { negative: nb, exponent: j };
            assert_eq!(
                theta_f(a, b, 200, 0).unwrap(),
                theta_product(a, b, 200, 0).unwrap(),
                "f({a}, {b})"
            );
            checked += 1;
        }
    }
    assert_eq!(checked, 16);
}
