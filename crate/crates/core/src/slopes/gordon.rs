//! Surgeries on cables that split off a lens space or become surgeries on
//! the companion.

use serde::Serialize;

use super::rank::ManifoldTag;
use super::slope::Slope;
use crate::algebra::rational::gcd_i64;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CableSurgery {
    /// Slope on the companion `K`.
    pub companion_slope: Slope,
    /// `L(q, p)` summand when `m = pq`.
    pub lens_summand: Option<(u64, i64)>,
}

impl CableSurgery {
    pub fn manifold(&self, knot: &str) -> ManifoldTag {
        let surgery = ManifoldTag::Surgery { knot: knot.to_string(), slope: self.companion_slope };
        match self.lens_summand {
            None => surgery,
            Some((p, q)) => ManifoldTag::ConnectedSum { summands: vec![surgery, ManifoldTag::Lens { p, q }] },
        }
    }
}

/// `S³_m(C_{p,q}(K))` for integral `m` with `|m - pq| ≤ 1`:
/// `S³_{p/q}(K) # L(q,p)` when `m = pq`, and `S³_{m/q²}(K)` when `|m - pq| = 1`.
pub fn gordon_cable(p: i64, q: i64, m: &Slope) -> Result<CableSurgery> {
    if q < 1 {
        return Err(Error::Precondition(format!("cable winding q must be positive, got {q}")));
    }
    if gcd_i64(p, q) != 1 {
        return Err(Error::NotCoprime(p, q));
    }
    if !m.is_integer() {
        return Err(Error::CableSlope(format!("{m} is not an integer")));
    }
    let pq = p.checked_mul(q).ok_or_else(|| Error::CableSlope("p·q overflows".into()))?;
    match m.p() - pq {
        0 => Ok(CableSurgery { companion_slope: Slope::new(p, q)?, lens_summand: Some((q as u64, p)) }),
        1 | -1 => Ok(CableSurgery { companion_slope: Slope::new(m.p(), q * q)?, lens_summand: None }),
        _ => Err(Error::CableSlope(format!("slope {m} is not within 1 of pq = {pq}"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        let r = gordon_cable(1, 2, &Slope::integer(2)).unwrap();
        assert_eq!(r.companion_slope, Slope::new(1, 2).unwrap());
        assert_eq!(r.manifold("K").to_string(), "S^3_1/2(K) # RP^3");
        let r = gordon_cable(2, 3, &Slope::integer(6)).unwrap();
        assert_eq!(r.manifold("K").to_string(), "S^3_2/3(K) # L(3,2)");
        let r = gordon_cable(1, 2, &Slope::integer(3)).unwrap();
        assert_eq!(r.companion_slope, Slope::new(3, 4).unwrap());
        assert!(r.lens_summand.is_none());
        assert!(gordon_cable(1, 2, &Slope::integer(5)).is_err());
        assert!(gordon_cable(2, 4, &Slope::integer(8)).is_err());
    }

    #[test]
    fn preserves_h1() {
        for p in 1..=12 {
            for q in 1..=12 {
                if gcd_i64(p, q) != 1 {
                    continue;
                }
                for d in -1..=1 {
                    let m = Slope::integer(p * q + d);
                    let r = gordon_cable(p, q, &m).unwrap();
                    assert_eq!(r.manifold("K").h1_order(), m.h1_order());
                }
            }
        }
    }
}
