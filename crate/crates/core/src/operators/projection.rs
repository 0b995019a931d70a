//! Polynomials that project onto a generalized eigenspace.

use num_traits::{One, Zero};

use super::matrix::SquareMatrix;
use crate::algebra::{int, GaussianRational, LaurentPoly, Rational};
use crate::error::{Error, Result};

type G = GaussianRational;

/// A polynomial `p ∈ ℚ[t]` with `p(λ1) = 1`, `p(d) = 0` for every `d` in
/// `avoid`, and `p(A)` the projection onto the generalized `λ1`-eigenspace
/// along the remaining generalized eigenspaces.
///
/// With `m1` the algebraic multiplicity of `λ1`, let
/// `f = Π(t - d) · χ_A(t) / (t - λ1)^m1` and `g = f · f̄`, which has rational
/// coefficients. Then `p = h · g` where `h` inverts `g` modulo `(t - λ1)^m1`.
pub fn projection_polynomial(a: &SquareMatrix, lambda1: &Rational, avoid: &[G]) -> Result<LaurentPoly> {
    let l1 = G::real(lambda1.clone());
    if avoid.contains(&l1) {
        return Err(Error::Precondition(format!("avoid set contains the eigenvalue {lambda1}")));
    }
    let (rest, m1) = split_charpoly(a, &l1);
    if m1 == 0 {
        return Err(Error::NotAnEigenvalue(lambda1.to_string()));
    }
    Ok(build(rest, avoid, lambda1, m1))
}

/// Like [`projection_polynomial`] but also accepts a `λ1` that is not an
/// eigenvalue, in which case `p(A) = 0` and `p` is normalized with `m1 = 1`.
fn projection_allow_absent(a: &SquareMatrix, lambda1: &Rational, avoid: &[G]) -> LaurentPoly {
    let (rest, m1) = split_charpoly(a, &G::real(lambda1.clone()));
    build(rest, avoid, lambda1, m1.max(1))
}

/// Divides `(t - λ)` out of the characteristic polynomial as often as possible.
fn split_charpoly(a: &SquareMatrix, lambda: &G) -> (LaurentPoly<G>, usize) {
    let lin = LaurentPoly::from_pairs('t', [(1, G::one()), (0, -lambda)]);
    let mut rest = a.charpoly();
    let mut m = 0;
    loop {
        let (q, r) = rest.div_rem(&lin).expect("nonzero divisor");
        if !r.is_zero() {
            return (rest, m);
        }
        rest = q;
        m += 1;
    }
}

fn build(rest: LaurentPoly<G>, avoid: &[G], lambda1: &Rational, m1: usize) -> LaurentPoly {
    let mut f = rest;
    for d in avoid {
        f = &f * &LaurentPoly::from_pairs('t', [(1, G::one()), (0, -d)]);
    }
    let fbar = f.map_coeffs(G::conj);
    let g: LaurentPoly<Rational> = (&f * &fbar).map_coeffs(|c| {
        debug_assert!(c.is_real());
        c.re.clone()
    });

    // Taylor coefficients of g at λ1, then the power-series inverse.
    let mut taylor = Vec::with_capacity(m1);
    let mut deriv = g.clone();
    let mut fact = Rational::one();
    for k in 0..m1 {
        if k > 0 {
            fact *= int(k as i64);
        }
        taylor.push(deriv.eval(lambda1).expect("polynomial") / &fact);
        deriv = deriv.derivative();
    }
    let g0_inv = Rational::one() / &taylor[0];
    let mut inv: Vec<Rational> = vec![g0_inv.clone()];
    for k in 1..m1 {
        let s = (1..=k).fold(Rational::zero(), |acc, i| acc + &taylor[i] * &inv[k - i]);
        inv.push(-(&g0_inv * s));
    }

    let shift = LaurentPoly::from_pairs('t', [(1, int(1)), (0, -lambda1.clone())]);
    let mut h = LaurentPoly::zero('t');
    let mut power = LaurentPoly::one('t');
    for c in inv {
        h = &h + &power.scale(&c);
        power = &power * &shift;
    }
    &h * &g
}

/// The admissible spectrum `{±2k, ±2ki : 0 ≤ k ≤ g-1}`.
pub fn admissible_eigenvalues(genus: u32) -> Vec<G> {
    let mut out = vec![G::zero()];
    for k in 1..genus as i64 {
        for v in [2 * k, -2 * k] {
            out.push(G::real(int(v)));
            out.push(G::imag(int(v)));
        }
    }
    out
}

/// The integers `3 - 2g, …, 2g - 2` killed by `p_bot`.
pub fn pbot_zeros(genus: u32) -> Vec<G> {
    let g = genus as i64;
    (3 - 2 * g..=2 * g - 2).map(|m| G::real(int(m))).collect()
}

/// `p_bot` for `A`: projects onto the generalized `(2-2g)`-eigenspace and
/// vanishes at `3-2g, …, 2g-2`.
pub fn pbot(a: &SquareMatrix, genus: u32) -> Result<LaurentPoly> {
    if genus < 2 {
        return Err(Error::Precondition(format!("genus must be at least 2, got {genus}")));
    }
    let allowed = admissible_eigenvalues(genus);
    let found: usize = allowed.iter().map(|l| a.generalized_multiplicity(l)).sum();
    if found != a.dim() {
        return Err(Error::Spectrum(format!(
            "{} of {} generalized eigenvectors lie outside {{±2k, ±2ki : k < {genus}}}",
            a.dim() - found,
            a.dim()
        )));
    }
    Ok(projection_allow_absent(a, &int(2 - 2 * genus as i64), &pbot_zeros(genus)))
}

/// A matrix-independent `p_bot`: `p(2-2g) = 1` and `p(m) = 0` for
/// `m = 3-2g, …, 2g-2`.
pub fn pbot_for_genus(genus: u32) -> Result<LaurentPoly> {
    pbot(&SquareMatrix::from_rational_rows(vec![vec![int(2 - 2 * genus as i64)]])?, genus)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(n: i64) -> G {
        G::real(int(n))
    }

    fn assert_projection(a: &SquareMatrix, p: &LaurentPoly, lambda: &G) {
        let pa = a.eval_poly(p).unwrap();
        assert_eq!(&pa * &pa, pa);
        assert_eq!(&pa * a, a * &pa);
        assert_eq!(pa.rank(), a.generalized_multiplicity(lambda));
    }

    #[test]
    fn diag_two_minus_two() {
        let a = SquareMatrix::diagonal(vec![g(2), g(-2)]);
        let p = projection_polynomial(&a, &int(2), &[]).unwrap();
        assert_eq!(a.eval_poly(&p).unwrap(), SquareMatrix::diagonal(vec![g(1), g(0)]));
    }

    #[test]
    fn one_by_one_is_constant_one() {
        let a = SquareMatrix::diagonal(vec![g(7)]);
        let p = projection_polynomial(&a, &int(7), &[]).unwrap();
        assert_eq!(p, LaurentPoly::one('t'));
    }

    #[test]
    fn avoid_forces_zero() {
        let a = SquareMatrix::diagonal(vec![g(2), g(0)]);
        let p = projection_polynomial(&a, &int(2), &[g(0)]).unwrap();
        assert_eq!(p.eval(&int(2)).unwrap(), int(1));
        assert_eq!(p.eval(&int(0)).unwrap(), int(0));
        assert_projection(&a, &p, &g(2));
    }

    #[test]
    fn jordan_block_projection() {
        let mut a = SquareMatrix::diagonal(vec![g(2), g(2), g(-4), G::imag(int(2))]);
        a[(0, 1)] = g(1);
        a[(2, 3)] = g(5);
        let p = projection_polynomial(&a, &int(2), &[g(1), G::imag(int(4))]).unwrap();
        assert_projection(&a, &p, &g(2));
        let pa = a.eval_poly(&p).unwrap();
        assert!((&a.shifted(&g(2)).pow(2) * &pa).is_zero());
    }

    #[test]
    fn not_an_eigenvalue() {
        let a = SquareMatrix::diagonal(vec![g(2)]);
        assert!(matches!(projection_polynomial(&a, &int(3), &[]), Err(Error::NotAnEigenvalue(_))));
    }

    #[test]
    fn pbot_genus_two_example() {
        let a = SquareMatrix::diagonal(vec![g(-2), g(0), g(2), G::imag(int(2)), G::imag(int(-2))]);
        let p = pbot(&a, 2).unwrap();
        assert_eq!(a.eval_poly(&p).unwrap(), SquareMatrix::diagonal(vec![g(1), g(0), g(0), g(0), g(0)]));
        assert_eq!(p.eval(&int(-2)).unwrap(), int(1));
        for m in -1..=2 {
            assert_eq!(p.eval(&int(m)).unwrap(), int(0));
        }
    }

    #[test]
    fn pbot_rejects_bad_spectrum() {
        let a = SquareMatrix::diagonal(vec![g(-2), g(4)]);
        assert!(matches!(pbot(&a, 2), Err(Error::Spectrum(_))));
    }

    #[test]
    fn pbot_without_bottom_eigenvalue_is_zero_map() {
        let a = SquareMatrix::diagonal(vec![g(0), g(2)]);
        let p = pbot(&a, 2).unwrap();
        assert!(a.eval_poly(&p).unwrap().is_zero());
        assert_eq!(p.eval(&int(-2)).unwrap(), int(1));
    }

    #[test]
    fn pbot_for_genus_values() {
        for genus in 2..=6u32 {
            let p = pbot_for_genus(genus).unwrap();
            let gi = genus as i64;
            assert_eq!(p.eval(&int(2 - 2 * gi)).unwrap(), int(1));
            for m in 3 - 2 * gi..=2 * gi - 2 {
                assert!(p.eval(&int(m)).unwrap().is_zero());
            }
        }
    }
}
