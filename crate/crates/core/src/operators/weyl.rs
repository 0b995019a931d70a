//! Differential operators `Σ c_{k,l} t^k ∂^l` in one variable.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use crate::algebra::{binomial, falling, LaurentPoly, Rational};
use crate::error::{Error, Result};

/// An element of the Weyl algebra, stored in normal form: every `t` sits to
/// the left of every `∂`. Key `(k, l)` is the monomial `t^k ∂^l`.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct WeylOperator {
    coeffs: BTreeMap<(u32, u32), Rational>,
}

/// The linear factor `α ∂ + β t + γ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearFactor {
    pub alpha: Rational,
    pub beta: Rational,
    pub gamma: Rational,
}

impl LinearFactor {
    pub fn new(alpha: Rational, beta: Rational, gamma: Rational) -> Self {
        Self { alpha, beta, gamma }
    }
}

impl WeylOperator {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn identity() -> Self {
        Self::monomial(0, 0, Rational::one())
    }

    pub fn monomial(k: u32, l: u32, c: Rational) -> Self {
        let mut w = Self::zero();
        w.add_term(k, l, c);
        w
    }

    pub fn from_factor(f: &LinearFactor) -> Self {
        let mut w = Self::zero();
        w.add_term(0, 1, f.alpha.clone());
        w.add_term(1, 0, f.beta.clone());
        w.add_term(0, 0, f.gamma.clone());
        w
    }

    pub fn add_term(&mut self, k: u32, l: u32, c: Rational) {
        if c.is_zero() {
            return;
        }
        let e = self.coeffs.entry((k, l)).or_insert_with(Rational::zero);
        *e += c;
        if e.is_zero() {
            self.coeffs.remove(&(k, l));
        }
    }

    pub fn coeff(&self, k: u32, l: u32) -> Rational {
        self.coeffs.get(&(k, l)).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = ((u32, u32), &Rational)> {
        self.coeffs.iter().map(|(&kl, c)| (kl, c))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn scale(&self, c: &Rational) -> Self {
        let mut w = Self::zero();
        for (&(k, l), v) in &self.coeffs {
            w.add_term(k, l, v * c);
        }
        w
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut w = self.clone();
        for (&(k, l), v) in &o.coeffs {
            w.add_term(k, l, v.clone());
        }
        w
    }

    /// `self ∘ other`, normal ordered with `∂^l t^m = Σ_j C(l,j) m!/(m-j)! t^{m-j} ∂^{l-j}`.
    pub fn compose(&self, other: &Self) -> Self {
        let mut w = Self::zero();
        for (&(k1, l1), c1) in &self.coeffs {
            for (&(k2, l2), c2) in &other.coeffs {
                let c = c1 * c2;
                for j in 0..=l1.min(k2) {
                    let mult = binomial(l1 as u64, j as u64) * falling(k2 as u64, j as u64);
                    w.add_term(k1 + k2 - j, l1 - j + l2, &c * Rational::from_integer(mult));
                }
            }
        }
        w
    }
}

/// Normal form of the ordered product of linear factors.
pub fn weyl_normal_order(factors: &[LinearFactor]) -> WeylOperator {
    factors
        .iter()
        .fold(WeylOperator::identity(), |acc, f| acc.compose(&WeylOperator::from_factor(f)))
}

/// `d_i = Π_{j≠i} (∂ - Q t - k_j) / (k_i - k_j)`, with `i` a 0-based index into `ks`.
pub fn build_di(i: usize, ks: &[Rational], q: &Rational) -> Result<WeylOperator> {
    if i >= ks.len() {
        return Err(Error::Precondition(format!("index {i} out of range for {} pairings", ks.len())));
    }
    for a in 0..ks.len() {
        for b in a + 1..ks.len() {
            if ks[a] == ks[b] {
                return Err(Error::RepeatedPairing(format!("k = {} appears twice", ks[a])));
            }
        }
    }
    let factors: Vec<LinearFactor> = ks
        .iter()
        .enumerate()
        .filter(|&(j, _)| j != i)
        .map(|(_, kj)| {
            let s = Rational::one() / (&ks[i] - kj);
            LinearFactor::new(s.clone(), -(&s * q), -(&s * kj))
        })
        .collect();
    Ok(weyl_normal_order(&factors))
}

/// `g(t) = Σ_l c_{0,l} t^l`: the `t`-free part of `d`, with `∂` read as a variable.
pub fn extract_gi(d: &WeylOperator) -> LaurentPoly {
    LaurentPoly::from_pairs('t', d.terms().filter(|((k, _), _)| *k == 0).map(|((_, l), c)| (l as i64, c.clone())))
}

impl fmt::Display for WeylOperator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (&(k, l), c) in self.coeffs.iter().rev() {
            let mut mono = String::new();
            match k {
                0 => {}
                1 => mono.push('t'),
                _ => mono.push_str(&format!("t^{k}")),
            }
            match l {
                0 => {}
                1 => mono.push('∂'),
                _ => mono.push_str(&format!("∂^{l}")),
            }
            let neg = c < &Rational::zero();
            let mag = if neg { -c.clone() } else { c.clone() };
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            if mono.is_empty() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{mono}")?;
            } else {
                write!(f, "{mag}{mono}")?;
            }
            first = false;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{int, rat};

    fn d() -> LinearFactor {
        LinearFactor::new(int(1), int(0), int(0))
    }
    fn t() -> LinearFactor {
        LinearFactor::new(int(0), int(1), int(0))
    }

    #[test]
    fn commutator() {
        let w = weyl_normal_order(&[d(), t()]);
        let expected = WeylOperator::monomial(1, 1, int(1)).add(&WeylOperator::identity());
        assert_eq!(w, expected);
    }

    #[test]
    fn square_of_d_minus_t() {
        let f = LinearFactor::new(int(1), int(-1), int(0));
        let w = weyl_normal_order(&[f.clone(), f]);
        let mut expected = WeylOperator::zero();
        expected.add_term(0, 2, int(1));
        expected.add_term(1, 1, int(-2));
        expected.add_term(2, 0, int(1));
        expected.add_term(0, 0, int(-1));
        assert_eq!(w, expected);
        assert_eq!(extract_gi(&w), LaurentPoly::from_pairs('t', [(2, int(1)), (0, int(-1))]));
    }

    #[test]
    fn single_factor() {
        assert_eq!(weyl_normal_order(&[d()]), WeylOperator::monomial(0, 1, int(1)));
    }

    #[test]
    fn build_di_examples() {
        let q = rat(7, 3);
        let w = build_di(0, &[int(0), int(2)], &q).unwrap();
        let expected = WeylOperator::from_factor(&LinearFactor::new(int(1), -q.clone(), int(-2))).scale(&rat(-1, 2));
        assert_eq!(w, expected);

        assert_eq!(build_di(0, &[int(4)], &q).unwrap(), WeylOperator::identity());

        let w = build_di(1, &[int(0), int(1), int(3)], &int(0)).unwrap();
        let mut expected = WeylOperator::zero();
        expected.add_term(0, 2, rat(-1, 2));
        expected.add_term(0, 1, rat(3, 2));
        assert_eq!(w, expected);

        assert!(build_di(0, &[int(1), int(1)], &q).is_err());
    }

    #[test]
    fn extract_examples() {
        let w = WeylOperator::monomial(1, 1, int(1)).add(&WeylOperator::identity());
        assert_eq!(extract_gi(&w), LaurentPoly::one('t'));
        assert_eq!(extract_gi(&WeylOperator::identity()), LaurentPoly::one('t'));
    }

    #[test]
    fn display() {
        let f = LinearFactor::new(int(1), int(-1), int(0));
        assert_eq!(weyl_normal_order(&[f.clone(), f]).to_string(), "t^2 - 2t∂ + ∂^2 - 1");
    }
}
