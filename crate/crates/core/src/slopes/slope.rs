use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::algebra::rational::gcd_i64;
use crate::algebra::Rational;
use crate::error::{Error, Result};

/// A surgery slope `p/q` in lowest terms with `q ≥ 0`; `1/0` is `∞`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Slope {
    p: i64,
    q: i64,
}

impl Slope {
    pub const INFINITY: Slope = Slope { p: 1, q: 0 };

    pub fn new(p: i64, q: i64) -> Result<Self> {
        if p == 0 && q == 0 {
            return Err(Error::InvalidSlope("0/0".into()));
        }
        if q == 0 {
            return Ok(Self::INFINITY);
        }
        let g = gcd_i64(p, q);
        let s = if q < 0 { -1 } else { 1 };
        Ok(Self { p: s * p / g, q: s * q / g })
    }

    pub fn integer(n: i64) -> Self {
        Self { p: n, q: 1 }
    }

    pub fn p(&self) -> i64 {
        self.p
    }

    pub fn q(&self) -> i64 {
        self.q
    }

    pub fn is_infinity(&self) -> bool {
        self.q == 0
    }

    pub fn is_integer(&self) -> bool {
        self.q == 1
    }

    pub fn to_rational(&self) -> Option<Rational> {
        (!self.is_infinity()).then(|| Rational::new(BigInt::from(self.p), BigInt::from(self.q)))
    }

    pub fn from_rational(r: &Rational) -> Result<Self> {
        use num_traits::ToPrimitive;
        match (r.numer().to_i64(), r.denom().to_i64()) {
            (Some(p), Some(q)) => Self::new(p, q),
            _ => Err(Error::InvalidSlope(format!("{r} does not fit in 64-bit integers"))),
        }
    }

    /// `⌊p/q⌋`; `None` for `∞`.
    pub fn floor(&self) -> Option<i64> {
        (!self.is_infinity()).then(|| self.p.div_euclid(self.q))
    }

    /// `|H₁(S³_{p/q}(K))| = |p|`.
    pub fn h1_order(&self) -> u64 {
        self.p.unsigned_abs()
    }

    pub fn is_positive(&self) -> bool {
        self.p > 0
    }

    /// Mediant `(p+p')/(q+q')`.
    pub fn mediant(&self, o: &Slope) -> Result<Slope> {
        Slope::new(self.p + o.p, self.q + o.q)
    }

    /// `|p q' - q p'|`.
    pub fn distance(&self, o: &Slope) -> u64 {
        (self.p as i128 * o.q as i128 - self.q as i128 * o.p as i128).unsigned_abs() as u64
    }

    pub fn negate(&self) -> Slope {
        if self.is_infinity() {
            *self
        } else {
            Slope { p: -self.p, q: self.q }
        }
    }
}

impl Ord for Slope {
    /// `∞` sits above every rational.
    fn cmp(&self, o: &Self) -> Ordering {
        match (self.is_infinity(), o.is_infinity()) {
            (true, true) => Ordering::Equal,
            (true, false) => Ordering::Greater,
            (false, true) => Ordering::Less,
            _ => (self.p as i128 * o.q as i128).cmp(&(o.p as i128 * self.q as i128)),
        }
    }
}

impl PartialOrd for Slope {
    fn partial_cmp(&self, o: &Self) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}

impl fmt::Display for Slope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.q == 1 {
            write!(f, "{}", self.p)
        } else {
            write!(f, "{}/{}", self.p, self.q)
        }
    }
}

impl FromStr for Slope {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if matches!(s, "inf" | "infinity" | "∞") {
            return Ok(Self::INFINITY);
        }
        let bad = || Error::InvalidSlope(format!("cannot parse {s:?}"));
        match s.split_once('/') {
            Some((p, q)) => Slope::new(p.trim().parse().map_err(|_| bad())?, q.trim().parse().map_err(|_| bad())?),
            None => Ok(Slope::integer(s.parse().map_err(|_| bad())?)),
        }
    }
}

impl Serialize for Slope {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Slope {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Int(i64),
            Str(String),
        }
        match Raw::deserialize(d)? {
            Raw::Int(n) => Ok(Slope::integer(n)),
            Raw::Str(s) => s.parse().map_err(serde::de::Error::custom),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn normalization_and_order() {
        assert_eq!(Slope::new(4, -6).unwrap(), Slope::new(-2, 3).unwrap());
        assert_eq!(Slope::new(-5, 0).unwrap(), Slope::INFINITY);
        assert!(Slope::new(0, 0).is_err());
        assert!(Slope::INFINITY > Slope::integer(i64::MAX / 2));
        assert!(Slope::new(10, 7).unwrap() < Slope::new(3, 2).unwrap());
        assert_eq!(Slope::new(-7, 2).unwrap().floor(), Some(-4));
    }

    #[test]
    fn parsing() {
        assert_eq!("7/2".parse::<Slope>().unwrap(), Slope::new(7, 2).unwrap());
        assert_eq!("-3".parse::<Slope>().unwrap(), Slope::integer(-3));
        assert_eq!("1/0".parse::<Slope>().unwrap(), Slope::INFINITY);
        assert!("x/2".parse::<Slope>().is_err());
        assert_eq!(Slope::INFINITY.to_string(), "1/0");
    }
}
