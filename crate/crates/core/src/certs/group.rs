//! Finite abelian groups in invariant-factor form.

use std::fmt;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::algebra::{factorize, is_prime_power};
use crate::error::{Error, Result};

/// `ℤ/d₁ ⊕ … ⊕ ℤ/d_m` with `d₁ | d₂ | … | d_m` and every `d_i ≥ 2`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<u64>", into = "Vec<u64>")]
pub struct FiniteAbelianGroup {
    factors: Vec<u64>,
}

impl FiniteAbelianGroup {
    pub fn trivial() -> Self {
        Self::default()
    }

    pub fn cyclic(n: u64) -> Result<Self> {
        Self::from_orders(&[n])
    }

    /// Checks the divisibility chain.
    pub fn new(factors: Vec<u64>) -> Result<Self> {
        if factors.iter().any(|&d| d < 2) {
            return Err(Error::Precondition(format!("invariant factors must be at least 2, got {factors:?}")));
        }
        if factors.windows(2).any(|w| w[1] % w[0] != 0) {
            return Err(Error::Precondition(format!("{factors:?} is not a divisibility chain")));
        }
        Ok(Self { factors })
    }

    /// `⊕ ℤ/n_i` for arbitrary positive `n_i`, put into invariant-factor form.
    pub fn from_orders(orders: &[u64]) -> Result<Self> {
        if orders.contains(&0) {
            return Err(Error::Precondition("ℤ/0 is infinite".into()));
        }
        // Collect prime-power parts, then build the chain from the top.
        let mut parts: std::collections::BTreeMap<u64, Vec<u64>> = Default::default();
        for &n in orders {
            for (p, e) in factorize(n) {
                parts.entry(p).or_default().push(p.pow(e));
            }
        }
        for v in parts.values_mut() {
            v.sort_unstable_by(|a, b| b.cmp(a));
        }
        let len = parts.values().map(Vec::len).max().unwrap_or(0);
        let mut factors: Vec<u64> = (0..len).map(|i| parts.values().map(|v| v.get(i).copied().unwrap_or(1)).product()).collect();
        factors.reverse();
        Self::new(factors)
    }

    pub fn factors(&self) -> &[u64] {
        &self.factors
    }

    pub fn order(&self) -> u64 {
        self.factors.iter().product()
    }

    pub fn is_trivial(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn is_cyclic(&self) -> bool {
        self.factors.len() <= 1
    }

    /// `#{x : 2x = 0} = ∏ gcd(d_i, 2)`.
    pub fn two_torsion(&self) -> u64 {
        self.factors.iter().map(|d| d.gcd(&2)).product()
    }
}

impl TryFrom<Vec<u64>> for FiniteAbelianGroup {
    type Error = Error;

    fn try_from(v: Vec<u64>) -> Result<Self> {
        Self::from_orders(&v)
    }
}

impl From<FiniteAbelianGroup> for Vec<u64> {
    fn from(g: FiniteAbelianGroup) -> Self {
        g.factors
    }
}

impl fmt::Display for FiniteAbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.factors.iter().map(|d| format!("Z/{d}")).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// Cyclic of prime-power order, `ℤ/2 ⊕ ℤ/2`, or of order at most 5: in each
/// case every reducible representation has a rational-homology-sphere cover.
pub fn small_h1_cyclic_finite(h: &FiniteAbelianGroup) -> bool {
    (h.is_cyclic() && (h.is_trivial() || is_prime_power(h.order()))) || h.factors() == [2, 2] || h.order() <= 5
}
