//! Conway ↔ Alexander conversion and the Casson-invariant formulas built on
//! Conway coefficients.

use num_traits::One;

use crate::algebra::{int, rat, LaurentPoly, Rational};
use crate::error::{Error, Result};

/// `z² ↦ t - 2 + t⁻¹` for a knot's Conway polynomial.
pub fn conway_to_alexander(conway: &LaurentPoly) -> Result<LaurentPoly> {
    check_normal_form(conway, 1)?;
    let z2 = LaurentPoly::from_pairs('t', [(1, int(1)), (0, int(-2)), (-1, int(1))]);
    let mut out = LaurentPoly::zero('t');
    for (e, c) in conway.terms() {
        out = &out + &z2.pow((e / 2) as u32).scale(c);
    }
    Ok(out)
}

/// Inverse of [`conway_to_alexander`] for symmetric `Δ`.
///
/// Writes `Δ = c₀ + Σ c_j (t^j + t^-j)` and expands `t^j + t^-j` as a
/// polynomial in `x = t + t⁻¹ = z² + 2` by the recursion
/// `T_{j+1} = x T_j - T_{j-1}`, `T_0 = 2`, `T_1 = x`.
pub fn alexander_to_conway(alexander: &LaurentPoly) -> Result<LaurentPoly> {
    if !alexander.is_symmetric() {
        return Err(Error::ConwayNormalForm(format!("Alexander polynomial {alexander} is not symmetric")));
    }
    let x = LaurentPoly::from_pairs('z', [(2, int(1)), (0, int(2))]);
    let mut out = LaurentPoly::constant('z', alexander.coeff(0));
    let top = alexander.degree().unwrap_or(0);
    let mut prev = LaurentPoly::constant('z', int(2));
    let mut cur = x.clone();
    for j in 1..=top {
        out = &out + &cur.scale(&alexander.coeff(j));
        let next = &(&x * &cur) - &prev;
        prev = cur;
        cur = next;
    }
    Ok(out)
}

/// Checks `∇ = z^{k-1}(a₀ + a₁ z² + …)`.
pub fn check_normal_form(conway: &LaurentPoly, components: u32) -> Result<()> {
    if components == 0 {
        return Err(Error::ConwayNormalForm("a link has at least one component".into()));
    }
    let low = components as i64 - 1;
    for (e, _) in conway.terms() {
        if e < low || (e - low) % 2 != 0 {
            return Err(Error::ConwayNormalForm(format!(
                "term z^{e} not allowed for a {components}-component link"
            )));
        }
    }
    Ok(())
}

/// `φ₁`, the coefficient of `z^{k+1}`.
pub fn phi1(conway: &LaurentPoly, components: u32) -> Result<Rational> {
    check_normal_form(conway, components)?;
    Ok(conway.coeff(components as i64 + 1))
}

/// Casson invariant of `(-1/m, -1/n)` surgery on a two-component link with
/// linking number zero: `-m φ₁(K₁) - n φ₁(K₂) + m n φ₁(L)`.
pub fn hoste_casson(m: i64, n: i64, phi_k1: &Rational, phi_k2: &Rational, phi_l: &Rational) -> Rational {
    -(int(m) * phi_k1) - int(n) * phi_k2 + int(m) * int(n) * phi_l
}

/// `λ(S³₊₁(K)) = Δ″(1) / 2`.
pub fn casson_plus_one_surgery(alexander: &LaurentPoly) -> Rational {
    alexander.second_derivative_at_one() * rat(1, 2)
}

/// `a t - (2a - 1) + a t⁻¹`, the Alexander polynomial of a genus-one knot.
pub fn genus1_alexander(a: i64) -> LaurentPoly {
    LaurentPoly::from_pairs('t', [(1, int(a)), (0, int(1 - 2 * a)), (-1, int(a))])
}

/// Rescales `Δ` by `±1` so that `Δ(1) = 1`.
pub fn normalize_alexander(alexander: &LaurentPoly) -> Result<LaurentPoly> {
    let v = alexander.eval(&Rational::one())?;
    if v == Rational::one() {
        Ok(alexander.clone())
    } else if v == -Rational::one() {
        Ok(-alexander)
    } else {
        Err(Error::ConwayNormalForm(format!("Δ(1) = {v}, expected ±1")))
    }
}

pub fn is_trivial_alexander(alexander: &LaurentPoly) -> bool {
    alexander.is_constant() && !alexander.is_zero()
}
