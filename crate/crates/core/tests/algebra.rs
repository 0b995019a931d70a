mod common;

use num_traits::One;
use proptest::prelude::*;
use rand::Rng;

use su2cert::algebra::{
    cyclotomic, divisors, euler_phi, int, mobius, pth_root_zero, rat, root_of_unity_zero, LaurentPoly, Rational,
};

fn poly_strategy() -> impl Strategy<Value = LaurentPoly> {
    (-4i64..=2, prop::collection::vec((-6i64..=6, 1i64..=4), 0..7)).prop_map(|(low, cs)| {
        LaurentPoly::from_coeffs('t', low, cs.into_iter().map(|(n, d)| rat(n, d)).collect())
    })
}

fn point_strategy() -> impl Strategy<Value = Rational> {
    (-9i64..=9, 1i64..=5)
        .prop_filter("nonzero", |(n, _)| *n != 0)
        .prop_map(|(n, d)| rat(n, d))
}

proptest! {
    #[test]
    fn eval_is_multiplicative(p in poly_strategy(), q in poly_strategy(), x in point_strategy()) {
        let prod = &p * &q;
        prop_assert_eq!(prod.eval(&x).unwrap(), p.eval(&x).unwrap() * q.eval(&x).unwrap());
    }

    #[test]
    fn substitute_power_commutes_with_eval(p in poly_strategy(), k in 1u32..=4, x in point_strategy()) {
        let xk = (0..k).fold(Rational::one(), |acc, _| acc * &x);
        prop_assert_eq!(p.substitute_power(k).eval(&x).unwrap(), p.eval(&xk).unwrap());
    }

    #[test]
    fn gcd_divides_both(p in poly_strategy(), q in poly_strategy(), r in poly_strategy()) {
        prop_assume!(!p.is_zero() && !q.is_zero() && !r.is_zero());
        let (a, b) = ((&p * &r).cleared(), (&q * &r).cleared());
        let g = a.gcd(&b).unwrap();
        prop_assert!(g.divides(&a).unwrap() && g.divides(&b).unwrap());
        prop_assert!(r.cleared().divides(&g).unwrap());
    }
}

#[test]
fn divisor_sums() {
    for n in 1..=10_000u64 {
        let ds = divisors(n).unwrap();
        let phi: u64 = ds.iter().map(|&d| euler_phi(d).unwrap()).sum();
        let mu: i64 = ds.iter().map(|&d| mobius(d).unwrap() as i64).sum();
        assert_eq!(phi, n, "Σ φ(d) over d | {n}");
        assert_eq!(mu, i64::from(n == 1), "Σ μ(d) over d | {n}");
    }
}

/// `pth_root_zero` against its gcd characterization, `gcd(P, t^p - 1) ≠ 1`.
#[test]
fn pth_root_zero_matches_gcd() {
    let mut r = common::rng(21);
    for _ in 0..400 {
        let deg = r.gen_range(1..=8);
        let mut cs: Vec<Rational> = (0..=deg).map(|_| int(r.gen_range(-3..=3))).collect();
        cs[deg] = int(1);
        if r.gen_bool(0.4) {
            // plant a cyclotomic factor
            let d = r.gen_range(1..=12);
            let phi = cyclotomic('t', d).unwrap();
            let base = LaurentPoly::from_coeffs('t', 0, cs.clone());
            cs = (0..=(base.degree().unwrap() + phi.degree().unwrap()))
                .map(|e| (&base * &phi).coeff(e))
                .collect();
        }
        let poly = LaurentPoly::from_coeffs('t', r.gen_range(-3..=0), cs);
        for p in 1..=30u64 {
            let xp = LaurentPoly::from_pairs('t', [(p as i64, int(1)), (0, int(-1))]);
            let g = poly.cleared().gcd(&xp).unwrap();
            assert_eq!(pth_root_zero(&poly, p).unwrap(), g.degree().unwrap() > 0, "{poly} at p = {p}");
        }
    }
}

#[test]
fn root_of_unity_zero_is_least_order() {
    let mut r = common::rng(22);
    for _ in 0..300 {
        let coeffs: Vec<i64> = (0..=r.gen_range(1..=10)).map(|_| r.gen_range(-2..=2)).collect();
        if coeffs.iter().all(|&c| c == 0) {
            continue;
        }
        let poly = LaurentPoly::from_coeffs('t', 0, coeffs.iter().map(|&c| int(c)).collect());
        let least = root_of_unity_zero(&poly).unwrap();
        let oracle = common::cyclotomic_factors(&coeffs);
        assert_eq!(least, oracle.iter().next().copied(), "{poly}");
        if let Some(d) = least {
            assert!(pth_root_zero(&poly, d).unwrap());
            assert!(!(1..d).any(|e| d % e == 0 && oracle.contains(&e)));
        }
    }
}

#[test]
fn cyclotomic_matches_integer_oracle() {
    for d in 1..=60 {
        let lib = cyclotomic('t', d).unwrap();
        let oracle = common::cyclotomic_oracle(d);
        assert_eq!(lib.degree().unwrap() as u64, euler_phi(d).unwrap());
        for (e, c) in oracle.iter().enumerate() {
            assert_eq!(lib.coeff(e as i64), int(*c), "Φ_{d} coefficient {e}");
        }
    }
    assert!(cyclotomic('t', 0).is_err());
    assert!(root_of_unity_zero(&LaurentPoly::zero('t')).is_err());
    assert!(pth_root_zero(&LaurentPoly::one('t'), 0).is_err());
}
