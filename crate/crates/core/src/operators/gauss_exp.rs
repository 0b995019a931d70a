//! Closed-form calculus on `q(s,t) · exp(Q t²/2 + a s + k t)`.

use std::collections::BTreeMap;

use num_traits::Zero;

use super::weyl::WeylOperator;
use crate::algebra::{int, LaurentPoly, Rational};
use crate::error::{Error, Result};

/// Polynomial in `s, t`; key `(i, j)` is `s^i t^j`.
pub type BivariatePoly = BTreeMap<(u32, u32), Rational>;

fn add_into(p: &mut BivariatePoly, key: (u32, u32), c: Rational) {
    if c.is_zero() {
        return;
    }
    let e = p.entry(key).or_insert_with(Rational::zero);
    *e += c;
    if e.is_zero() {
        p.remove(&key);
    }
}

/// The exponent data `(Q, a, k)` of a term.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Exponent {
    pub q: Rational,
    pub a: Rational,
    pub k: Rational,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GaussExpTerm {
    pub prefactor: BivariatePoly,
    pub exponent: Exponent,
}

impl GaussExpTerm {
    /// `c · exp(Q t²/2 + a s + k t)`.
    pub fn new(c: Rational, q: Rational, a: Rational, k: Rational) -> Self {
        let mut prefactor = BivariatePoly::new();
        add_into(&mut prefactor, (0, 0), c);
        Self { prefactor, exponent: Exponent { q, a, k } }
    }

    pub fn with_prefactor(prefactor: BivariatePoly, exponent: Exponent) -> Self {
        let mut p = BivariatePoly::new();
        for (key, c) in prefactor {
            add_into(&mut p, key, c);
        }
        Self { prefactor: p, exponent }
    }

    pub fn is_zero(&self) -> bool {
        self.prefactor.is_empty()
    }

    /// `∂/∂t`: `q ↦ ∂q/∂t + (Q t + k) q`.
    pub fn dt(&self) -> Self {
        let Exponent { q, k, .. } = &self.exponent;
        let mut out = BivariatePoly::new();
        for (&(i, j), c) in &self.prefactor {
            if j > 0 {
                add_into(&mut out, (i, j - 1), c * int(j as i64));
            }
            add_into(&mut out, (i, j + 1), c * q);
            add_into(&mut out, (i, j), c * k);
        }
        Self { prefactor: out, exponent: self.exponent.clone() }
    }

    /// `∂/∂s`: `q ↦ ∂q/∂s + a q`.
    pub fn ds(&self) -> Self {
        let a = &self.exponent.a;
        let mut out = BivariatePoly::new();
        for (&(i, j), c) in &self.prefactor {
            if i > 0 {
                add_into(&mut out, (i - 1, j), c * int(i as i64));
            }
            add_into(&mut out, (i, j), c * a);
        }
        Self { prefactor: out, exponent: self.exponent.clone() }
    }

    pub fn mul_t(&self, power: u32) -> Self {
        let prefactor = self.prefactor.iter().map(|(&(i, j), c)| ((i, j + power), c.clone())).collect();
        Self { prefactor, exponent: self.exponent.clone() }
    }

    pub fn mul_s(&self, power: u32) -> Self {
        let prefactor = self.prefactor.iter().map(|(&(i, j), c)| ((i + power, j), c.clone())).collect();
        Self { prefactor, exponent: self.exponent.clone() }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        let mut p = BivariatePoly::new();
        for (&key, v) in &self.prefactor {
            add_into(&mut p, key, v * c);
        }
        Self { prefactor: p, exponent: self.exponent.clone() }
    }

    /// Value at `s = t = 0`, where the exponential is 1.
    pub fn value_at_origin(&self) -> Rational {
        self.prefactor.get(&(0, 0)).cloned().unwrap_or_else(Rational::zero)
    }
}

/// A finite sum of terms, merged by exponent.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct GaussExpSum {
    parts: BTreeMap<Exponent, BivariatePoly>,
}

impl GaussExpSum {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push(&mut self, term: GaussExpTerm) {
        let entry = self.parts.entry(term.exponent.clone()).or_default();
        for (key, c) in term.prefactor {
            add_into(entry, key, c);
        }
        if entry.is_empty() {
            self.parts.remove(&term.exponent);
        }
    }

    pub fn extend(&mut self, other: GaussExpSum) {
        for t in other.terms() {
            self.push(t);
        }
    }

    pub fn terms(&self) -> Vec<GaussExpTerm> {
        self.parts
            .iter()
            .map(|(e, p)| GaussExpTerm { prefactor: p.clone(), exponent: e.clone() })
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn value_at_origin(&self) -> Rational {
        self.parts.values().fold(Rational::zero(), |acc, p| {
            acc + p.get(&(0, 0)).cloned().unwrap_or_else(Rational::zero)
        })
    }
}

impl FromIterator<GaussExpTerm> for GaussExpSum {
    fn from_iter<I: IntoIterator<Item = GaussExpTerm>>(iter: I) -> Self {
        let mut s = Self::new();
        for t in iter {
            s.push(t);
        }
        s
    }
}

/// Applies a normal-ordered operator in `t`: each `t^k ∂^l` differentiates
/// `l` times and then multiplies by `t^k`.
pub fn apply_weyl(w: &WeylOperator, term: &GaussExpTerm) -> GaussExpSum {
    let max_l = w.terms().map(|((_, l), _)| l).max().unwrap_or(0);
    let mut derivs = vec![term.clone()];
    for _ in 0..max_l {
        let next = derivs.last().unwrap().dt();
        derivs.push(next);
    }
    w.terms().map(|((k, l), c)| derivs[l as usize].mul_t(k).scale(c)).collect()
}

pub fn apply_weyl_sum(w: &WeylOperator, sum: &GaussExpSum) -> GaussExpSum {
    let mut out = GaussExpSum::new();
    for t in sum.terms() {
        out.extend(apply_weyl(w, &t));
    }
    out
}

/// Applies `p(∂/∂s)` for an ordinary polynomial `p`.
pub fn apply_ds_poly(p: &LaurentPoly, term: &GaussExpTerm) -> Result<GaussExpSum> {
    if !p.is_polynomial() {
        return Err(Error::NotPolynomial);
    }
    let mut out = GaussExpSum::new();
    let mut current = term.clone();
    let mut e = 0;
    for (exp, c) in p.terms() {
        while e < exp {
            current = current.ds();
            e += 1;
        }
        out.push(current.scale(c));
    }
    Ok(out)
}

pub fn apply_ds_poly_sum(p: &LaurentPoly, sum: &GaussExpSum) -> Result<GaussExpSum> {
    let mut out = GaussExpSum::new();
    for t in sum.terms() {
        out.extend(apply_ds_poly(p, &t)?);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat;
    use crate::operators::weyl::{build_di, LinearFactor};

    #[test]
    fn dt_on_pure_exponential() {
        let term = GaussExpTerm::new(int(1), int(3), int(0), int(5));
        let d = term.dt();
        assert_eq!(d.prefactor.get(&(0, 1)), Some(&int(3)));
        assert_eq!(d.prefactor.get(&(0, 0)), Some(&int(5)));
    }

    #[test]
    fn single_factor_scales() {
        let (q, ki, kj, kl) = (rat(2, 3), int(1), int(4), int(-2));
        let s = rat(1, 1) / (&ki - &kl);
        let w = WeylOperator::from_factor(&LinearFactor::new(s.clone(), -(&s * &q), -(&s * &kl)));
        let out = apply_weyl(&w, &GaussExpTerm::new(int(1), q.clone(), int(0), kj.clone()));
        let expected: GaussExpSum =
            [GaussExpTerm::new((&kj - &kl) / (&ki - &kl), q, int(0), kj)].into_iter().collect();
        assert_eq!(out, expected);
    }

    #[test]
    fn di_is_kronecker_delta() {
        let ks = [int(0), int(1), int(3), rat(-5, 2)];
        let q = rat(-3, 7);
        for i in 0..ks.len() {
            let d = build_di(i, &ks, &q).unwrap();
            for (j, kj) in ks.iter().enumerate() {
                let term = GaussExpTerm::new(int(1), q.clone(), int(2), kj.clone());
                let out = apply_weyl(&d, &term);
                if i == j {
                    assert_eq!(out, [term].into_iter().collect());
                } else {
                    assert!(out.is_zero());
                }
            }
        }
    }

    #[test]
    fn ds_poly_on_exponential_is_evaluation() {
        let p = LaurentPoly::from_pairs('t', [(3, int(1)), (1, int(-2)), (0, int(5))]);
        let out = apply_ds_poly(&p, &GaussExpTerm::new(int(1), int(0), int(2), int(0))).unwrap();
        assert_eq!(out.value_at_origin(), p.eval(&int(2)).unwrap());
    }
}
