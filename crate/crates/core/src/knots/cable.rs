use crate::algebra::rational::gcd_i64;
use crate::algebra::{int, LaurentPoly};
use crate::error::{Error, Result};

fn t_power_minus_one(n: i64) -> LaurentPoly {
    LaurentPoly::from_pairs('t', [(n, int(1)), (0, int(-1))])
}

/// Shifts `p` so that its exponents are centred on zero.
fn centre(p: &LaurentPoly) -> LaurentPoly {
    match (p.order(), p.degree()) {
        (Some(lo), Some(hi)) => p.shift(-(lo + hi) / 2),
        _ => p.clone(),
    }
}

/// Alexander polynomial of the torus knot `T(p,q)`:
/// `(t^{pq} - 1)(t - 1) / ((t^p - 1)(t^q - 1))`, symmetrized.
pub fn torus_alexander(p: i64, q: i64) -> Result<LaurentPoly> {
    if gcd_i64(p, q) != 1 {
        return Err(Error::NotCoprime(p, q));
    }
    let (p, q) = (p.abs(), q.abs());
    if p <= 1 || q <= 1 {
        return Ok(LaurentPoly::one('t'));
    }
    let num = &t_power_minus_one(p * q) * &t_power_minus_one(1);
    let den = &t_power_minus_one(p) * &t_power_minus_one(q);
    let (quot, rem) = num.div_rem(&den)?;
    debug_assert!(rem.is_zero());
    Ok(centre(&quot))
}

/// `Δ_{C_{p,q}(K)}(t) = Δ_K(t^q) · Δ_{T(p,q)}(t)` for the cable with
/// longitudinal winding `q`.
pub fn cable_alexander(alexander: &LaurentPoly, p: i64, q: i64) -> Result<LaurentPoly> {
    if q < 1 {
        return Err(Error::Precondition(format!("cable winding q must be positive, got {q}")));
    }
    let torus = torus_alexander(p, q)?;
    Ok(&alexander.clone().with_var('t').substitute_power(q as u32) * &torus)
}

/// Seifert genus of the `(p,q)` cable of a genus-`g` knot: `q g + (|p|-1)(q-1)/2`.
pub fn cable_genus(g: u32, p: i64, q: i64) -> Result<u32> {
    if q < 1 {
        return Err(Error::Precondition(format!("cable winding q must be positive, got {q}")));
    }
    if gcd_i64(p, q) != 1 {
        return Err(Error::NotCoprime(p, q));
    }
    let torus = if p == 0 { 0 } else { (p.abs() - 1) * (q - 1) / 2 };
    Ok((q * g as i64 + torus) as u32)
}
