//! Counting reducible representations and the dimension formulas around them.

use std::collections::BTreeMap;

use num_traits::Signed;

use super::group::FiniteAbelianGroup;
use crate::algebra::{divisors, euler_phi, int, mobius, pth_root_zero, LaurentPoly, Rational};
use crate::error::{Error, Result};

/// Conjugacy classes of representations `π₁ → SU(2)` through `H₁ = h`, and
/// the total rank of their homology (points for `χ = χ⁻¹`, 2-spheres
/// otherwise).
pub fn reducible_classes(h: &FiniteAbelianGroup) -> (u64, u64) {
    let t = h.two_torsion();
    let n = h.order();
    (t + (n - t) / 2, n)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AdjointDimension {
    pub value: Rational,
    /// Pairs `(d, n)` where `b₁(Y_d) > b₁(Y_n)`, which a transfer argument rules out.
    pub warnings: Vec<String>,
}

/// `dim H₁(Y; ad ρ) = (2/φ(n)) Σ_{d|n} μ(n/d) b₁(Y_d)` for `ρ` with image of
/// order `n`, where `Y_d` is the `d`-fold cyclic cover (`Y_1 = Y`).
pub fn boyer_nicas_dim(n: u64, b1: &BTreeMap<u64, u64>) -> Result<AdjointDimension> {
    if n < 2 {
        return Err(Error::Precondition(format!("n = {n} must be at least 2")));
    }
    let divs = divisors(n)?;
    let mut sum = 0i64;
    for &d in &divs {
        let b = *b1.get(&d).ok_or_else(|| Error::Precondition(format!("b1 of the {d}-fold cover is missing")))?;
        sum += mobius(n / d)? as i64 * b as i64;
    }
    let top = b1[&n];
    let warnings = divs
        .iter()
        .filter(|&&d| b1[&d] > top)
        .map(|&d| format!("b1(Y_{d}) = {} exceeds b1(Y_{n}) = {top}", b1[&d]))
        .collect();
    let value = int(2 * sum) / int(euler_phi(n)? as i64);
    if value.is_negative() || !value.is_integer() {
        return Err(Error::Inconsistent(format!("b1 data gives dim H1(Y; ad ρ) = {value}")));
    }
    Ok(AdjointDimension { value, warnings })
}

/// `dim T_ρ R(Y) = 3 - dim Z(ρ) + dim H¹(Y; ad ρ)`.
pub fn tangent_dim(dim_centralizer: u32, dim_h1: u64) -> Result<i64> {
    if dim_centralizer != 1 && dim_centralizer != 3 {
        return Err(Error::Precondition(format!(
            "a reducible SU(2) representation has centralizer of dimension 1 or 3, got {dim_centralizer}"
        )));
    }
    Ok(3 - dim_centralizer as i64 + dim_h1 as i64)
}

/// `π₁(S³_{p/q}(K))` is cyclically finite iff no zero of `Δ_K(t²)` is a
/// `|p|`th root of unity.
pub fn cyclically_finite_surgery(alexander: &LaurentPoly, p: i64) -> Result<bool> {
    if p == 0 {
        return Err(Error::NonPositive("cyclically_finite_surgery"));
    }
    Ok(!pth_root_zero(&alexander.substitute_power(2), p.unsigned_abs())?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::knots::genus1_alexander;

    #[test]
    fn classes() {
        assert_eq!(reducible_classes(&FiniteAbelianGroup::trivial()), (1, 1));
        assert_eq!(reducible_classes(&FiniteAbelianGroup::cyclic(5).unwrap()), (3, 5));
        assert_eq!(reducible_classes(&FiniteAbelianGroup::new(vec![2, 2]).unwrap()), (4, 4));
    }

    #[test]
    fn adjoint_dimension() {
        let m = |pairs: &[(u64, u64)]| pairs.iter().copied().collect::<BTreeMap<_, _>>();
        assert_eq!(boyer_nicas_dim(3, &m(&[(1, 0), (3, 0)])).unwrap().value, int(0));
        assert_eq!(boyer_nicas_dim(3, &m(&[(1, 0), (3, 2)])).unwrap().value, int(2));
        assert_eq!(boyer_nicas_dim(4, &m(&[(1, 0), (2, 0), (4, 1)])).unwrap().value, int(1));
        assert!(boyer_nicas_dim(4, &m(&[(1, 0), (4, 1)])).is_err());
        let w = boyer_nicas_dim(2, &m(&[(1, 1), (2, 1)])).unwrap();
        assert!(w.warnings.is_empty());
        assert!(boyer_nicas_dim(2, &m(&[(1, 2), (2, 0)])).is_err());
    }

    #[test]
    fn tangent() {
        assert_eq!(tangent_dim(3, 0).unwrap(), 0);
        assert_eq!(tangent_dim(1, 0).unwrap(), 2);
        assert_eq!(tangent_dim(1, 2).unwrap(), 4);
        assert!(tangent_dim(2, 0).is_err());
    }

    #[test]
    fn surgery_criterion() {
        let trefoil = genus1_alexander(1);
        assert!(!cyclically_finite_surgery(&trefoil, 12).unwrap());
        assert!(cyclically_finite_surgery(&trefoil, 3).unwrap());
        let five_two = genus1_alexander(2);
        for p in 1..=100 {
            assert!(cyclically_finite_surgery(&five_two, p).unwrap());
        }
        assert!(cyclically_finite_surgery(&trefoil, 0).is_err());
    }
}
