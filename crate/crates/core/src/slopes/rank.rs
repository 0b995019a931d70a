//! Rank bookkeeping for framed instanton homology: Euler-characteristic
//! decomposition, exact-triangle intervals, Künneth and lens-space ranks.

use std::fmt;

use serde::Serialize;

use super::slope::Slope;
use crate::error::{Error, Result};

/// `rank = p + 2e`; returns `e`, which vanishes exactly for L-spaces.
pub fn rank_decompose(p: u64, rank: u64) -> Result<u64> {
    if rank < p {
        return Err(Error::Rank(format!("rank {rank} is below the Euler characteristic {p}")));
    }
    if !(rank - p).is_multiple_of(2) {
        return Err(Error::Rank(format!("rank {rank} and |H1| = {p} have different parity")));
    }
    Ok((rank - p) / 2)
}

/// Ranks compatible with an exact triangle whose other two groups have
/// ranks `a` and `b`: `|a - b| ≤ c ≤ a + b` with `c ≡ a + b (mod 2)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct RankInterval {
    pub min: u64,
    pub max: u64,
}

impl RankInterval {
    pub fn contains(&self, c: u64) -> bool {
        self.min <= c && c <= self.max && (c - self.min).is_multiple_of(2)
    }

    pub fn values(&self) -> impl Iterator<Item = u64> {
        (self.min..=self.max).step_by(2)
    }
}

pub fn triangle_rank_interval(a: u64, b: u64) -> RankInterval {
    RankInterval { min: a.abs_diff(b), max: a + b }
}

pub fn kunneth_rank(a: u64, b: u64) -> u64 {
    a * b
}

/// `I#(L(p,q))` has rank `p`.
pub fn lens_rank(p: u64) -> u64 {
    p
}

pub fn rp3_rank() -> u64 {
    lens_rank(2)
}

/// A closed 3-manifold assembled from surgeries on a named knot, lens spaces
/// and connected sums.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ManifoldTag {
    S3,
    Surgery { knot: String, slope: Slope },
    Lens { p: u64, q: i64 },
    ConnectedSum { summands: Vec<ManifoldTag> },
}

impl ManifoldTag {
    /// `|H₁|`, with `0` standing for infinite.
    pub fn h1_order(&self) -> u64 {
        match self {
            Self::S3 => 1,
            Self::Surgery { slope, .. } => {
                if slope.is_infinity() {
                    1
                } else {
                    slope.h1_order()
                }
            }
            Self::Lens { p, .. } => *p,
            Self::ConnectedSum { summands } => summands.iter().map(Self::h1_order).product(),
        }
    }
}

impl fmt::Display for ManifoldTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::S3 => write!(f, "S^3"),
            Self::Surgery { knot, slope } => write!(f, "S^3_{slope}({knot})"),
            Self::Lens { p: 2, q: 1 } => write!(f, "RP^3"),
            Self::Lens { p, q } => write!(f, "L({p},{q})"),
            Self::ConnectedSum { summands } => {
                let parts: Vec<String> = summands.iter().map(|s| s.to_string()).collect();
                write!(f, "{}", parts.join(" # "))
            }
        }
    }
}
