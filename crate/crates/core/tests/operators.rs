mod common;

use num_traits::{One, Zero};
use proptest::prelude::*;
use rand::Rng;

use common::*;
use su2cert::algebra::{int, rat, GaussianRational as G, LaurentPoly, Rational};
use su2cert::operators::{
    apply_weyl, build_di, distinct_pairing_vector, extract_gi, orthogonality_matrix, pbot, BasicClass,
    DonaldsonSeriesModel, GaussExpSum, GaussExpTerm, SquareMatrix,
};

/// Idempotent lift of `e` by `e ↦ 3e² - 2e³`; exact once the nilpotent
/// error has been squared past the dimension.
fn idempotent_lift(mut e: SquareMatrix) -> SquareMatrix {
    let three = G::real(int(3));
    let two = G::real(int(2));
    for _ in 0..5 {
        let sq = &e * &e;
        e = &sq.scale(&three) - &(&sq * &e).scale(&two);
    }
    e
}

#[test]
fn pbot_agrees_with_independent_projection() {
    let spectrum: Vec<G> = (-2..=2).map(|v| G::real(int(2 * v))).collect();
    let mut r = rng(31);
    let lagrange = LaurentPoly::from_coeffs('t', 0, lagrange_pbot(3));
    for trial in 0..80 {
        let n = r.gen_range(1..=6);
        let (a, _) = random_spectral_matrix(&mut r, n, &spectrum);
        let p = a.eval_poly(&pbot(&a, 3).unwrap()).unwrap();
        let q = idempotent_lift(a.eval_poly(&lagrange).unwrap());
        assert_eq!(&q * &q, q, "matrix {trial}: lift not idempotent");
        assert_eq!(&p * &q, p, "matrix {trial}");
        assert_eq!(p, q, "matrix {trial}");
    }
}

#[test]
fn di_is_a_kronecker_delta() {
    let mut r = rng(32);
    for _ in 0..200 {
        let n = r.gen_range(1..=4);
        let q = small_rational(&mut r, 6, 3);
        let mut ks: Vec<Rational> = Vec::new();
        while ks.len() < n {
            let k = small_rational(&mut r, 9, 3);
            if !ks.contains(&k) {
                ks.push(k);
            }
        }
        for i in 0..n {
            let d = build_di(i, &ks, &q).unwrap();
            for (j, kj) in ks.iter().enumerate() {
                let a = small_rational(&mut r, 5, 1);
                let term = GaussExpTerm::new(Rational::one(), q.clone(), a, kj.clone());
                let got = apply_weyl(&d, &term);
                let mut want = GaussExpSum::new();
                if i == j {
                    want.push(term.clone());
                }
                assert_eq!(got, want, "d_{i} on exp(Qt²/2 + k_{j} t)");
            }
        }
    }
    assert!(build_di(0, &[int(1), int(1)], &int(0)).is_err());
}

/// `Σ_l c_{0,l} ∂_t^l p_bot(∂_s) F_j` at the origin, read from power series.
fn gi_pairing(gi: &LaurentPoly, model: &DonaldsonSeriesModel, pbot_coeffs: &[Rational], deg: usize) -> Rational {
    let f = model.classes.iter().fold(Series::zero(deg), |acc, c| {
        acc.add(&Series::gauss_exp(deg, &[((0, 0), c.alpha.clone())], &model.q, &c.a, &c.k))
    });
    let fact = |m: usize| (1..=m).fold(Rational::one(), |acc, i| acc * int(i as i64));
    let mut total = Rational::zero();
    for (l, gl) in gi.terms() {
        for (m, pm) in pbot_coeffs.iter().enumerate() {
            total += gl * pm * fact(l as usize) * fact(m) * f.get(m, l as usize);
        }
    }
    total
}

#[test]
fn extracted_gi_reproduces_the_matrix() {
    let mut r = rng(33);
    for trial in 0..60 {
        let fam = random_family(&mut r, 4, 4);
        let ks: Vec<Rational> = fam.iter().map(|m| m.canonical_class().k.clone()).collect();
        let p = lagrange_pbot(fam[0].genus);
        let deg = p.len() + fam.len() + 1;
        let matrix = orthogonality_matrix(&fam).unwrap();
        for i in 0..fam.len() {
            let gi = extract_gi(&build_di(i, &ks, &fam[0].q).unwrap());
            for (j, model) in fam.iter().enumerate() {
                assert_eq!(gi_pairing(&gi, model, &p, deg), matrix[i][j], "family {trial} entry ({i},{j})");
            }
        }
    }
}

#[test]
fn single_model_gives_alpha() {
    let m = DonaldsonSeriesModel::new(3, rat(1, 2), vec![BasicClass::new(rat(7, 5), int(-4), int(2))]).unwrap();
    assert_eq!(orthogonality_matrix(&[m]).unwrap(), vec![vec![rat(7, 5)]]);
}

#[test]
fn invalid_families_are_rejected() {
    let c = |k: i64| BasicClass::new(int(1), int(-2), int(k));
    let m1 = DonaldsonSeriesModel::new(2, int(1), vec![c(1)]).unwrap();
    let m2 = DonaldsonSeriesModel::new(2, int(1), vec![c(1)]).unwrap();
    assert!(orthogonality_matrix(&[m1.clone(), m2]).is_err());
    let m3 = DonaldsonSeriesModel::new(2, int(2), vec![c(3)]).unwrap();
    assert!(orthogonality_matrix(&[m1, m3]).is_err());
    assert!(orthogonality_matrix(&[]).is_err());
}

proptest! {
    #[test]
    fn pairing_vector_separates(vs in prop::collection::btree_set(prop::collection::vec(-5i64..=5, 3), 1..7)) {
        let cs: Vec<Vec<Rational>> = vs.iter().map(|v| v.iter().map(|&x| int(x)).collect()).collect();
        let x = distinct_pairing_vector(&cs).unwrap();
        let pairings: std::collections::BTreeSet<Rational> = cs
            .iter()
            .map(|c| c.iter().zip(&x).fold(Rational::zero(), |acc, (ci, xi)| acc + ci * int(*xi)))
            .collect();
        prop_assert_eq!(pairings.len(), cs.len());
    }
}
