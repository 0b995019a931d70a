//! Continued fractions `a₀ - 1/(a₁ - 1/(… - 1/a_k))`.

use num_traits::{One, Zero};

use super::slope::Slope;
use crate::algebra::{floor_i64, int, Rational};
use crate::error::{Error, Result};

/// Evaluates `[a₀; a₁, …, a_k]` in the minus convention.
pub fn eval_cf(terms: &[i64]) -> Result<Rational> {
    let (last, rest) = terms.split_last().ok_or_else(|| Error::InvalidSlope("empty continued fraction".into()))?;
    let mut acc = int(*last);
    for &a in rest.iter().rev() {
        if acc.is_zero() {
            return Err(Error::DivisionByZero);
        }
        acc = int(a) - Rational::one() / acc;
    }
    Ok(acc)
}

fn expand(mut x: Rational, step: impl Fn(&Rational) -> i64) -> Vec<i64> {
    let mut out = Vec::new();
    loop {
        let a = step(&x);
        out.push(a);
        let rest = int(a) - &x;
        if rest.is_zero() {
            return out;
        }
        x = Rational::one() / rest;
    }
}

fn ceil_i64(x: &Rational) -> i64 {
    -floor_i64(&-x.clone()).expect("fits in i64")
}

/// Expansion of `r > n` with `a₀ ≥ n+1` and `a₁, …, a_k ≥ 2`.
pub fn positive_cf(r: &Slope, n: i64) -> Result<Vec<i64>> {
    let x = r.to_rational().ok_or_else(|| Error::SlopeRange("∞ has no continued fraction".into()))?;
    if x <= int(n) {
        return Err(Error::SlopeRange(format!("{r} is not greater than {n}")));
    }
    Ok(expand(x, ceil_i64))
}

/// Expansion of `r < -1` with every term `≤ -2`.
pub fn negative_cf(r: &Slope) -> Result<Vec<i64>> {
    let x = r.to_rational().ok_or_else(|| Error::SlopeRange("∞ has no continued fraction".into()))?;
    if x >= int(-1) {
        return Err(Error::SlopeRange(format!("{r} is not below -1")));
    }
    Ok(expand(x, |x| floor_i64(x).expect("fits in i64")))
}
