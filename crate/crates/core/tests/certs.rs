mod common;

use std::collections::BTreeMap;

use su2cert::algebra::int;
use su2cert::certs::{
    boyer_nicas_dim, certify, cyclically_finite_surgery, small_h1_cyclic_finite, Conclusion, FiniteAbelianGroup, Query,
};
use su2cert::knots::KnotTable;
use su2cert::slopes::Slope;
use su2cert::stein::SeifertData;

#[test]
fn positive_surgeries_follow_the_cyclic_finiteness_test() {
    let table = KnotTable::builtin();
    let knots: Vec<_> = table.knots().filter(|k| k.sl_bar_mirror.is_some_and(|sl| sl >= 0)).collect();
    assert!(knots.len() >= 3);
    let (mut positive, mut downgraded) = (0, 0);
    for k in &knots {
        for p in 1..=50 {
            for q in 1..=5 {
                if num_integer::gcd(p, q) != 1 {
                    continue;
                }
                let r = Slope::new(p, q).unwrap();
                let c = certify(&Query::Surgery { knot: k.name.clone(), slope: r }, &table).unwrap();
                if cyclically_finite_surgery(&k.alexander, p).unwrap() {
                    assert_eq!(c.conclusion, Conclusion::IrreducibleRep, "{} at {r}: {:?}", k.name, c.nearest_failure);
                    c.validate().unwrap_or_else(|e| panic!("{} at {r}: {e}", k.name));
                    positive += 1;
                } else {
                    assert_eq!(c.conclusion, Conclusion::NoCertificate, "{} at {r}", k.name);
                    let why = c.nearest_failure.as_deref().unwrap_or_default();
                    assert!(why.contains("Boyer-Nicas"), "{} at {r}: {why}", k.name);
                    downgraded += 1;
                }
            }
        }
    }
    assert!(positive > 0 && downgraded > 0, "{positive} certified, {downgraded} downgraded");
}

#[test]
fn trefoil_downgrades_exactly_at_multiples_of_twelve() {
    let table = KnotTable::builtin();
    let delta = &table.knot("3_1m").unwrap().alexander;
    for p in 1..=120 {
        assert_eq!(cyclically_finite_surgery(delta, p).unwrap(), p % 12 != 0, "p = {p}");
    }
    let five_two = &table.knot("5_2m").unwrap().alexander;
    assert!((1..=100).all(|p| cyclically_finite_surgery(five_two, p).unwrap()));
    assert!(cyclically_finite_surgery(delta, 0).is_err());
}

#[test]
fn constant_first_betti_numbers_telescope_to_zero() {
    for n in 2..=200u64 {
        for c in [0u64, 1, 5] {
            let b1: BTreeMap<u64, u64> = (1..=n).filter(|d| n % d == 0).map(|d| (d, c)).collect();
            let dim = boyer_nicas_dim(n, &b1).unwrap();
            assert_eq!(dim.value, int(0), "n = {n}, b1 = {c}");
        }
    }
}

#[test]
fn small_groups() {
    let g = |f: &[u64]| FiniteAbelianGroup::new(f.to_vec()).unwrap();
    assert!(small_h1_cyclic_finite(&g(&[8])));
    assert!(small_h1_cyclic_finite(&g(&[2, 2])));
    assert!(small_h1_cyclic_finite(&g(&[5])));
    assert!(!small_h1_cyclic_finite(&g(&[6])));
    assert!(!small_h1_cyclic_finite(&g(&[2, 4])));
}

#[test]
fn certificates_serialize_and_revalidate() {
    let table = KnotTable::builtin();
    let queries = [
        Query::Surgery { knot: "5_2m".into(), slope: Slope::new(7, 3).unwrap() },
        Query::Surgery { knot: "P(-2,3,7)m".into(), slope: Slope::new(-9, 2).unwrap() },
        Query::Seifert { data: SeifertData::from_pairs(-2, &[(1, 2), (2, 3), (9, 11)]).unwrap() },
        Query::Seifert { data: SeifertData::poincare_sphere() },
    ];
    for q in &queries {
        let a = certify(q, &table).unwrap();
        let b = certify(q, &table).unwrap();
        assert_eq!(a.to_json(), b.to_json());
        let json: serde_json::Value = serde_json::from_str(&a.to_json().to_string()).unwrap();
        for field in ["conclusion", "chain", "subject"] {
            assert!(json.get(field).is_some(), "{field} missing from {json}");
        }
        if a.conclusion != Conclusion::NoCertificate {
            a.validate().unwrap();
            for step in json["chain"].as_array().unwrap() {
                assert!(step["citation"].as_str().is_some_and(|c| !c.is_empty()));
            }
        }
    }
}

proptest::proptest! {
    /// For any normalized Alexander polynomial the test passes at p = 3 and 4:
    /// `Φ_3 | Δ` would force `3 | Δ(1) = 1`, and `Δ(±1)` are both odd.
    #[test]
    fn small_p_is_always_cyclically_finite(cs in proptest::collection::vec(-6i64..=6, 1..6)) {
        // Δ = c_0 + Σ c_i (t^i + t^-i), shifted so that Δ(1) = 1
        let tail: i64 = cs[1..].iter().sum();
        let mut pairs = vec![(0i64, int(1 - 2 * tail))];
        for (i, &c) in cs.iter().enumerate().skip(1) {
            pairs.push((i as i64, int(c)));
            pairs.push((-(i as i64), int(c)));
        }
        let delta = su2cert::algebra::LaurentPoly::from_pairs('t', pairs);
        proptest::prop_assert!(cyclically_finite_surgery(&delta, 3).unwrap());
        proptest::prop_assert!(cyclically_finite_surgery(&delta, 4).unwrap());
        proptest::prop_assert!(cyclically_finite_surgery(&delta, -4).unwrap());
    }
}
