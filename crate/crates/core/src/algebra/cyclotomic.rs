//! Cyclotomic polynomials and root-of-unity zero detection.
//!
//! A Laurent polynomial is first cleared to an ordinary polynomial (zeros
//! are unchanged because `0` is never a root of unity). A primitive `d`th
//! root of unity is a zero iff the irreducible `Φ_d` divides the cleared
//! polynomial, and that can only happen when `φ(d) ≤ deg`.

use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::arith::{divisors, euler_phi, mobius};
use super::laurent::LaurentPoly;
use super::rational::{int, Rational};
use crate::error::{Error, Result};

/// `Φ_d(var) = ∏_{e | d} (var^e - 1)^{μ(d/e)}`.
pub fn cyclotomic(var: char, d: u64) -> Result<LaurentPoly> {
    if d == 0 {
        return Err(Error::NonPositive("cyclotomic"));
    }
    Ok(cyclotomic_uncached(d)?.with_var(var))
}

fn cyclotomic_uncached(d: u64) -> Result<LaurentPoly> {
    let var = 't';
    let mut num = LaurentPoly::one(var);
    let mut den = LaurentPoly::one(var);
    for e in divisors(d)? {
        match mobius(d / e)? {
            1 => num = &num * &x_pow_minus_one(var, e),
            -1 => den = &den * &x_pow_minus_one(var, e),
            _ => {}
        }
    }
    let (q, r) = num.div_rem(&den)?;
    debug_assert!(r.is_zero());
    Ok(q)
}

fn x_pow_minus_one(var: char, d: u64) -> LaurentPoly {
    LaurentPoly::from_pairs(var, [(d as i64, int(1)), (0, int(-1))])
}

/// Dense integer coefficients (low to high) of the cleared polynomial,
/// scaled by the lcm of the denominators. Scaling by a nonzero constant
/// leaves divisibility by the monic `Φ_d` unchanged.
fn integer_coeffs(p: &LaurentPoly<Rational>) -> Vec<BigInt> {
    let cleared = p.cleared();
    let lcm = cleared.terms().fold(BigInt::one(), |acc, (_, c)| acc.lcm(c.denom()));
    let deg = cleared.degree().unwrap_or(0) as usize;
    let mut out = vec![BigInt::zero(); deg + 1];
    for (e, c) in cleared.terms() {
        out[e as usize] = c.numer() * (&lcm / c.denom());
    }
    out
}

fn phi_integer(d: u64) -> Result<Vec<BigInt>> {
    static CACHE: OnceLock<Mutex<HashMap<u64, Vec<BigInt>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(v) = cache.lock().unwrap_or_else(|e| e.into_inner()).get(&d) {
        return Ok(v.clone());
    }
    let phi = cyclotomic_uncached(d)?;
    let deg = phi.degree().unwrap_or(0) as usize;
    let v: Vec<BigInt> = (0..=deg).map(|e| phi.coeff(e as i64).numer().clone()).collect();
    cache.lock().unwrap_or_else(|e| e.into_inner()).insert(d, v.clone());
    Ok(v)
}

/// `Φ_d | f` by long division over ℤ, valid because `Φ_d` is monic.
fn phi_divides(f: &[BigInt], d: u64) -> Result<bool> {
    let g = phi_integer(d)?;
    let m = g.len() - 1;
    if f.len() <= m {
        return Ok(f.iter().all(Zero::is_zero));
    }
    let mut r = f.to_vec();
    for top in (m..r.len()).rev() {
        let lead = std::mem::take(&mut r[top]);
        if lead.is_zero() {
            continue;
        }
        for (i, gi) in g[..m].iter().enumerate() {
            r[top - m + i] -= &lead * gi;
        }
    }
    Ok(r[..m].iter().all(Zero::is_zero))
}

/// Least `d` such that a primitive `d`th root of unity is a zero of `p`.
pub fn root_of_unity_zero(p: &LaurentPoly<Rational>) -> Result<Option<u64>> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let f = integer_coeffs(p);
    let deg = (f.len() - 1) as u64;
    if deg == 0 {
        return Ok(None);
    }
    // φ(d) ≥ sqrt(d/2), so φ(d) ≤ deg forces d ≤ 2·deg².
    let bound = 2 * deg * deg;
    for d in 1..=bound.max(2) {
        if euler_phi(d)? <= deg && phi_divides(&f, d)? {
            return Ok(Some(d));
        }
    }
    Ok(None)
}

/// True iff some `p`th root of unity is a zero, i.e. `Φ_d` divides the
/// cleared polynomial for some `d | p`. Only `d` with `φ(d) ≤ deg` can occur.
pub fn pth_root_zero(poly: &LaurentPoly<Rational>, p: u64) -> Result<bool> {
    if poly.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if p == 0 {
        return Err(Error::NonPositive("pth_root_zero"));
    }
    let f = integer_coeffs(poly);
    let deg = (f.len() - 1) as u64;
    for d in divisors(p)? {
        if euler_phi(d)? <= deg && phi_divides(&f, d)? {
            return Ok(true);
        }
    }
    Ok(false)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(pairs: &[(i64, i64)]) -> LaurentPoly {
        LaurentPoly::from_pairs('t', pairs.iter().map(|&(e, c)| (e, int(c))))
    }

    #[test]
    fn small_cyclotomics() {
        assert_eq!(cyclotomic('t', 1).unwrap(), t(&[(1, 1), (0, -1)]));
        assert_eq!(cyclotomic('t', 6).unwrap(), t(&[(2, 1), (1, -1), (0, 1)]));
        assert_eq!(cyclotomic('t', 12).unwrap(), t(&[(4, 1), (2, -1), (0, 1)]));
    }

    #[test]
    fn trefoil_squared_is_phi12() {
        let d = t(&[(2, 1), (0, -1), (-2, 1)]);
        assert_eq!(d.cleared(), cyclotomic('t', 12).unwrap());
        assert_eq!(root_of_unity_zero(&d).unwrap(), Some(12));
        assert!(pth_root_zero(&d, 12).unwrap());
        assert!(pth_root_zero(&d, 24).unwrap());
        assert!(!pth_root_zero(&d, 3).unwrap());
        assert!(!pth_root_zero(&d, 4).unwrap());
    }

    #[test]
    fn five_two_has_no_root_of_unity_zero() {
        let d = t(&[(4, 2), (2, -3), (0, 2)]);
        assert_eq!(root_of_unity_zero(&d).unwrap(), None);
        for p in 1..=100 {
            assert!(!pth_root_zero(&d, p).unwrap());
        }
    }

    #[test]
    fn edge_cases() {
        assert_eq!(root_of_unity_zero(&t(&[(1, 1), (0, -1)])).unwrap(), Some(1));
        assert_eq!(root_of_unity_zero(&t(&[(0, 5)])).unwrap(), None);
        assert_eq!(root_of_unity_zero(&LaurentPoly::zero('t')), Err(Error::ZeroPolynomial));
    }
}
