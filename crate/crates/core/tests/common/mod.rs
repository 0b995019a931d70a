//! Test-only oracles. Nothing here calls into the library's algorithms for
//! the quantity being checked; each oracle recomputes it by a different
//! (usually brute-force) route.
#![allow(dead_code)]

use std::collections::BTreeSet;

use num_traits::{One, Signed, Zero};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use su2cert::algebra::{int, rat, GaussianRational as G, Rational};
use su2cert::operators::{BasicClass, DonaldsonSeriesModel, GaussExpSum, GaussExpTerm, SquareMatrix, WeylOperator};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn small_rational(r: &mut impl Rng, num: i64, den: i64) -> Rational {
    rat(r.gen_range(-num..=num), r.gen_range(1..=den))
}

pub fn nonzero_rational(r: &mut impl Rng, num: i64, den: i64) -> Rational {
    loop {
        let x = small_rational(r, num, den);
        if !x.is_zero() {
            return x;
        }
    }
}

// ---------------------------------------------------------------------------
// Truncated bivariate power series in (s, t).

/// Coefficients `c[i][j]` of `s^i t^j` for `i + j <= deg`.
///
/// Exactness: every operator applied below is a polynomial in `∂/∂s`,
/// `∂/∂t` and multiplication by `t`. Differentiation lowers the degree of
/// the lowest affected coefficient by one and multiplication raises it, so
/// after applying operators with total derivative order `r` the coefficients
/// of total degree `<= deg - r` are exact. Evaluation at the origin needs
/// degree 0 only, hence `deg >= r` suffices; callers take two extra degrees.
#[derive(Clone, Debug, PartialEq)]
pub struct Series {
    pub deg: usize,
    pub c: Vec<Vec<Rational>>,
}

impl Series {
    pub fn zero(deg: usize) -> Self {
        Self { deg, c: (0..=deg).map(|i| vec![Rational::zero(); deg + 1 - i]).collect() }
    }

    pub fn get(&self, i: usize, j: usize) -> Rational {
        if i + j > self.deg {
            Rational::zero()
        } else {
            self.c[i][j].clone()
        }
    }

    fn exp_coeffs(x: &Rational, n: usize) -> Vec<Rational> {
        let mut out = vec![Rational::one()];
        for m in 1..=n {
            let next = &out[m - 1] * x / int(m as i64);
            out.push(next);
        }
        out
    }

    /// `prefactor(s,t) · exp(Q t²/2 + a s + k t)`.
    pub fn gauss_exp(deg: usize, prefactor: &[((u32, u32), Rational)], q: &Rational, a: &Rational, k: &Rational) -> Self {
        let es = Self::exp_coeffs(a, deg);
        // exp(k t) * exp(Q t^2 / 2), truncated in t.
        let ekt = Self::exp_coeffs(k, deg);
        let eq = Self::exp_coeffs(&(q / int(2)), deg / 2);
        let mut et = vec![Rational::zero(); deg + 1];
        for (m, cq) in eq.iter().enumerate() {
            for (j, ck) in ekt.iter().enumerate() {
                if 2 * m + j <= deg {
                    et[2 * m + j] += cq * ck;
                }
            }
        }
        let mut base = Self::zero(deg);
        for i in 0..=deg {
            for j in 0..=deg - i {
                base.c[i][j] = &es[i] * &et[j];
            }
        }
        let mut out = Self::zero(deg);
        for ((pi, pj), coef) in prefactor {
            let (pi, pj) = (*pi as usize, *pj as usize);
            for i in 0..=deg {
                for j in 0..=deg - i {
                    if i + pi + j + pj <= deg {
                        out.c[i + pi][j + pj] += coef * &base.c[i][j];
                    }
                }
            }
        }
        out
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut out = self.clone();
        for i in 0..=self.deg {
            for j in 0..=self.deg - i {
                out.c[i][j] += &o.c[i][j];
            }
        }
        out
    }

    pub fn scale(&self, x: &Rational) -> Self {
        let mut out = self.clone();
        out.c.iter_mut().flatten().for_each(|c| *c *= x);
        out
    }

    pub fn dt(&self) -> Self {
        let mut out = Self::zero(self.deg);
        for i in 0..=self.deg {
            for j in 1..=self.deg - i {
                out.c[i][j - 1] = &self.c[i][j] * int(j as i64);
            }
        }
        out
    }

    pub fn ds(&self) -> Self {
        let mut out = Self::zero(self.deg);
        for i in 1..=self.deg {
            for j in 0..=self.deg - i {
                out.c[i - 1][j] = &self.c[i][j] * int(i as i64);
            }
        }
        out
    }

    pub fn mul_t(&self) -> Self {
        let mut out = Self::zero(self.deg);
        for i in 0..=self.deg {
            for j in 0..self.deg - i {
                out.c[i][j + 1] = self.c[i][j].clone();
            }
        }
        out
    }

    pub fn at_origin(&self) -> Rational {
        self.c[0][0].clone()
    }

    /// Agreement on all coefficients of total degree `<= upto`.
    pub fn agrees_to(&self, o: &Self, upto: usize) -> bool {
        (0..=upto).all(|i| (0..=upto - i).all(|j| self.get(i, j) == o.get(i, j)))
    }
}

pub fn term_series(t: &GaussExpTerm, deg: usize) -> Series {
    let pre: Vec<_> = t.prefactor.iter().map(|(&k, c)| (k, c.clone())).collect();
    Series::gauss_exp(deg, &pre, &t.exponent.q, &t.exponent.a, &t.exponent.k)
}

pub fn sum_series(s: &GaussExpSum, deg: usize) -> Series {
    s.terms().iter().fold(Series::zero(deg), |acc, t| acc.add(&term_series(t, deg)))
}

/// Applies `Σ c t^k ∂^l` literally: differentiate, then multiply.
pub fn weyl_on_series(w: &WeylOperator, f: &Series) -> Series {
    let mut out = Series::zero(f.deg);
    for ((k, l), c) in w.terms() {
        let mut g = f.clone();
        for _ in 0..l {
            g = g.dt();
        }
        for _ in 0..k {
            g = g.mul_t();
        }
        out = out.add(&g.scale(c));
    }
    out
}

pub fn max_derivative_order(w: &WeylOperator) -> usize {
    w.terms().map(|((_, l), _)| l as usize).max().unwrap_or(0)
}

/// `p_bot` by Lagrange interpolation: 1 at `2-2g`, 0 at `3-2g, …, 2g-2`.
/// Coefficients in increasing degree.
pub fn lagrange_pbot(g: u32) -> Vec<Rational> {
    let g = g as i64;
    let x0 = int(2 - 2 * g);
    let mut poly = vec![Rational::one()];
    for m in 3 - 2 * g..=2 * g - 2 {
        // multiply by (x - m) / (x0 - m)
        let d = &x0 - int(m);
        let mut next = vec![Rational::zero(); poly.len() + 1];
        for (i, c) in poly.iter().enumerate() {
            next[i + 1] += c / &d;
            next[i] -= c * int(m) / &d;
        }
        poly = next;
    }
    poly
}

/// `[p_bot(∂/∂s) d_i F_j](0,0)` with `d_i` applied factor by factor (never
/// normal-ordered) on truncated power series.
pub fn donaldson_oracle(models: &[DonaldsonSeriesModel]) -> Vec<Vec<Rational>> {
    let g = models[0].genus;
    let q = models[0].q.clone();
    let n = models.len();
    let p = lagrange_pbot(g);
    let deg = (p.len() - 1) + n + 2;
    let ks: Vec<Rational> = models.iter().map(|m| m.canonical_class().k.clone()).collect();
    let series: Vec<Series> = models
        .iter()
        .map(|m| {
            m.classes.iter().fold(Series::zero(deg), |acc, c| {
                acc.add(&Series::gauss_exp(deg, &[((0, 0), c.alpha.clone())], &q, &c.a, &c.k))
            })
        })
        .collect();
    let mut out = vec![vec![Rational::zero(); n]; n];
    for i in 0..n {
        for (j, f) in series.iter().enumerate() {
            let mut h = f.clone();
            for (l, kl) in ks.iter().enumerate() {
                if l == i {
                    continue;
                }
                // (∂/∂t - Q t - k_l) / (k_i - k_l)
                let next = h.dt().add(&h.mul_t().scale(&-q.clone())).add(&h.scale(&-kl.clone()));
                h = next.scale(&(Rational::one() / (&ks[i] - kl)));
            }
            // p(∂/∂s) at the origin: Σ p_m · m! · [s^m] h.
            let mut acc = Rational::zero();
            let mut fact = Rational::one();
            for (m, pm) in p.iter().enumerate() {
                if m > 0 {
                    fact *= int(m as i64);
                }
                acc += pm * &fact * h.get(m, 0);
            }
            out[i][j] = acc;
        }
    }
    out
}

/// A random valid family: shared `g` and `Q`, distinct canonical pairings.
pub fn random_family(r: &mut impl Rng, max_n: usize, max_g: u32) -> Vec<DonaldsonSeriesModel> {
    let g = r.gen_range(2..=max_g);
    let n = r.gen_range(1..=max_n);
    let q = small_rational(r, 6, 3);
    let mut ks: Vec<Rational> = Vec::new();
    while ks.len() < n {
        let k = small_rational(r, 9, 3);
        if !ks.contains(&k) {
            ks.push(k);
        }
    }
    let bottom = 2 - 2 * g as i64;
    ks.into_iter()
        .map(|k| {
            let mut classes = vec![BasicClass::new(nonzero_rational(r, 5, 3), int(bottom), k)];
            for _ in 0..r.gen_range(0..=3) {
                let a = r.gen_range(bottom + 1..=-bottom);
                classes.push(BasicClass::new(nonzero_rational(r, 5, 3), int(a), small_rational(r, 9, 3)));
            }
            DonaldsonSeriesModel::new(g, q.clone(), classes).expect("valid by construction")
        })
        .collect()
}

// ---------------------------------------------------------------------------
// Linear algebra over ℚ[i] by plain Gaussian elimination.

pub fn g_rank(mut rows: Vec<Vec<G>>) -> usize {
    let n = rows.len();
    if n == 0 {
        return 0;
    }
    let m = rows[0].len();
    let mut rank = 0;
    for col in 0..m {
        let Some(p) = (rank..n).find(|&i| !rows[i][col].is_zero()) else { continue };
        rows.swap(rank, p);
        let inv = rows[rank][col].checked_inv().unwrap();
        for i in 0..n {
            if i != rank && !rows[i][col].is_zero() {
                let f = &rows[i][col] * &inv;
                for j in col..m {
                    let v = &rows[i][j] - &(&f * &rows[rank][j]);
                    rows[i][j] = v;
                }
            }
        }
        rank += 1;
    }
    rank
}

pub fn matrix_rows(a: &SquareMatrix) -> Vec<Vec<G>> {
    (0..a.dim()).map(|i| (0..a.dim()).map(|j| a[(i, j)].clone()).collect()).collect()
}

/// `dim ker (A - λ)^N`, the generalized eigenspace dimension.
pub fn generalized_eigenspace_dim(a: &SquareMatrix, lambda: &G) -> usize {
    let n = a.dim();
    let shifted = a - &SquareMatrix::identity(n).scale(lambda);
    let mut power = SquareMatrix::identity(n);
    for _ in 0..n {
        power = &power * &shifted;
    }
    n - g_rank(matrix_rows(&power))
}

/// A random `n×n` matrix `P J P⁻¹` with `J` a Jordan matrix whose
/// eigenvalues are drawn from `spectrum`, together with the multiplicity of
/// each eigenvalue.
pub fn random_spectral_matrix(r: &mut impl Rng, n: usize, spectrum: &[G]) -> (SquareMatrix, Vec<(G, usize)>) {
    let mut j = SquareMatrix::zero(n);
    let mut mult: Vec<(G, usize)> = Vec::new();
    let mut i = 0;
    while i < n {
        let size = r.gen_range(1..=(n - i).min(3));
        let lambda = spectrum[r.gen_range(0..spectrum.len())].clone();
        for d in i..i + size {
            j[(d, d)] = lambda.clone();
            if d + 1 < i + size {
                j[(d, d + 1)] = G::one();
            }
        }
        match mult.iter_mut().find(|(l, _)| *l == lambda) {
            Some(e) => e.1 += size,
            None => mult.push((lambda, size)),
        }
        i += size;
    }
    // Random unimodular P as a product of elementary row operations; P⁻¹ is
    // the product of the inverse operations in reverse order.
    let mut p = SquareMatrix::identity(n);
    let mut p_inv = SquareMatrix::identity(n);
    for _ in 0..3 * n {
        let a = r.gen_range(0..n);
        let b = r.gen_range(0..n);
        if a == b {
            continue;
        }
        let c = int(r.gen_range(-2..=2));
        let mut e = SquareMatrix::identity(n);
        e[(a, b)] = G::real(c.clone());
        let mut e_inv = SquareMatrix::identity(n);
        e_inv[(a, b)] = G::real(-c);
        p = &e * &p;
        p_inv = &p_inv * &e_inv;
    }
    let a = &(&p * &j) * &p_inv;
    (a, mult)
}

// ---------------------------------------------------------------------------
// Integer matrices.

pub fn rational_det(m: &[Vec<i64>]) -> Rational {
    let n = m.len();
    let mut a: Vec<Vec<Rational>> = m.iter().map(|r| r.iter().map(|&x| int(x)).collect()).collect();
    let mut det = Rational::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&i| !a[i][c].is_zero()) else { return Rational::zero() };
        if p != c {
            a.swap(p, c);
            det = -det;
        }
        det *= &a[c][c];
        for i in c + 1..n {
            let f = &a[i][c] / &a[c][c];
            for j in c..n {
                let v = &a[i][j] - &f * &a[c][j];
                a[i][j] = v;
            }
        }
    }
    det
}

/// Sylvester's criterion: negative definite iff the leading minors
/// alternate in sign starting negative.
pub fn negative_definite_by_minors(m: &[Vec<i64>]) -> bool {
    (1..=m.len()).all(|k| {
        let minor: Vec<Vec<i64>> = m[..k].iter().map(|r| r[..k].to_vec()).collect();
        let d = rational_det(&minor);
        if k % 2 == 1 {
            d.is_negative()
        } else {
            d.is_positive()
        }
    })
}

// ---------------------------------------------------------------------------
// Finite abelian groups and characters.

/// Every invariant-factor chain `d1 | d2 | …` with each `d_i >= 2` and
/// product at most `max`.
pub fn all_groups(max: u64) -> Vec<Vec<u64>> {
    fn extend(chain: &mut Vec<u64>, prod: u64, max: u64, out: &mut Vec<Vec<u64>>) {
        out.push(chain.clone());
        let start = *chain.last().unwrap_or(&1);
        let mut d = if chain.is_empty() { 2 } else { start };
        while prod * d <= max {
            if d % start == 0 {
                chain.push(d);
                extend(chain, prod * d, max, out);
                chain.pop();
            }
            d += 1;
        }
    }
    let mut out = Vec::new();
    extend(&mut Vec::new(), 1, max, &mut out);
    out
}

/// Conjugacy classes of characters `H → U(1)` under `χ ↦ χ⁻¹`, and the
/// number of characters, by listing them.
pub fn brute_force_character_classes(factors: &[u64]) -> (u64, u64) {
    // A character is a tuple (x_1, …, x_m), x_i mod d_i, sending the i-th
    // generator to exp(2πi x_i / d_i). Its inverse is (-x_i).
    let mut chars: Vec<Vec<u64>> = vec![vec![]];
    for &d in factors {
        chars = chars
            .into_iter()
            .flat_map(|c| {
                (0..d).map(move |x| {
                    let mut c = c.clone();
                    c.push(x);
                    c
                })
            })
            .collect();
    }
    let total = chars.len() as u64;
    let mut seen = BTreeSet::new();
    let mut classes = 0;
    for c in &chars {
        if seen.contains(c) {
            continue;
        }
        let inv: Vec<u64> = c.iter().zip(factors).map(|(&x, &d)| (d - x) % d).collect();
        seen.insert(c.clone());
        seen.insert(inv);
        classes += 1;
    }
    (classes, total)
}

// ---------------------------------------------------------------------------
// Cyclotomic polynomials on integer coefficient vectors (index = degree).

fn trim(mut p: Vec<i64>) -> Vec<i64> {
    while p.len() > 1 && *p.last().unwrap() == 0 {
        p.pop();
    }
    p
}

/// Exact division by a monic polynomial; `None` if the remainder is nonzero.
pub fn div_monic(p: &[i64], f: &[i64]) -> Option<Vec<i64>> {
    let mut rem: Vec<i64> = trim(p.to_vec());
    let f = trim(f.to_vec());
    let df = f.len() - 1;
    assert_eq!(f[df], 1);
    if rem.len() - 1 < df {
        return if rem.iter().all(|&c| c == 0) { Some(vec![0]) } else { None };
    }
    let mut q = vec![0; rem.len() - df];
    for i in (0..q.len()).rev() {
        let c = rem[i + df];
        q[i] = c;
        for (j, &fj) in f.iter().enumerate() {
            rem[i + j] -= c * fj;
        }
    }
    rem.iter().all(|&c| c == 0).then_some(q)
}

/// `Φ_d` from `t^d - 1 = Π_{e | d} Φ_e`.
pub fn cyclotomic_oracle(d: u64) -> Vec<i64> {
    let mut num = vec![0i64; d as usize + 1];
    num[0] = -1;
    num[d as usize] = 1;
    for e in 1..d {
        if d.is_multiple_of(e) {
            num = div_monic(&num, &cyclotomic_oracle(e)).expect("Φ_e divides t^d - 1");
        }
    }
    num
}

pub fn euler_phi_oracle(n: u64) -> u64 {
    (1..=n).filter(|&k| num_integer::gcd(k, n) == 1).count() as u64
}

/// All `d` with `Φ_d | p`, for a nonzero integer polynomial.
pub fn cyclotomic_factors(p: &[i64]) -> BTreeSet<u64> {
    let p = trim(p.to_vec());
    let deg = (p.len() - 1) as u64;
    let mut out = BTreeSet::new();
    // φ(d) <= deg; φ(d) >= sqrt(d/2) bounds the search.
    for d in 1..=(2 * deg * deg).max(2) {
        if euler_phi_oracle(d) <= deg && div_monic(&p, &cyclotomic_oracle(d)).is_some() {
            out.insert(d);
        }
    }
    out
}

// ---------------------------------------------------------------------------
// Legendrian stabilization tree.

/// Rotation numbers reached from `(tb, rot)` after exactly `n`
/// stabilizations, by walking every sign sequence.
pub fn stabilization_tree(rot: i64, n: u32) -> BTreeSet<i64> {
    let mut level = BTreeSet::from([rot]);
    for _ in 0..n {
        level = level.iter().flat_map(|&r| [r + 1, r - 1]).collect();
    }
    level
}
