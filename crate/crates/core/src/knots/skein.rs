//! Conway-polynomial recombination: registered values, formal unknowns and
//! the skein relation `∇₊ = ∇₋ + z∇₀`.

use std::collections::BTreeMap;
use std::fmt;

use super::table::KnotTable;
use crate::algebra::{int, LaurentPoly, Rational};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SkeinExpr {
    /// Conway polynomial of a registered knot.
    Knot(String),
    /// Conway polynomial of a registered link.
    Link(String),
    /// A fixed polynomial in `z`.
    Poly(LaurentPoly),
    /// An unknown Conway polynomial `X`, known to be divisible by `z^d`.
    Unknown { name: String, z_divisibility: u32 },
    Sum(Vec<SkeinExpr>),
    Scale(LaurentPoly, Box<SkeinExpr>),
    /// Connected sum: Conway polynomials multiply.
    ConnectedSum(Vec<SkeinExpr>),
    /// Adds a meridian of sign `±`, multiplying by `±z`.
    Meridian { positive: bool, inner: Box<SkeinExpr> },
    /// Split union: the Conway polynomial vanishes.
    Split(Vec<SkeinExpr>),
}

fn z_poly(c: i64, e: i64) -> LaurentPoly {
    LaurentPoly::monomial('z', int(c), e)
}

impl SkeinExpr {
    pub fn knot(name: &str) -> Self {
        Self::Knot(name.to_string())
    }

    pub fn unknown(name: &str, z_divisibility: u32) -> Self {
        Self::Unknown { name: name.to_string(), z_divisibility }
    }

    pub fn scaled(self, c: LaurentPoly) -> Self {
        Self::Scale(c, Box::new(self))
    }

    /// `z^e · c · self`.
    pub fn times_z(self, c: i64, e: i64) -> Self {
        self.scaled(z_poly(c, e))
    }

    pub fn meridian(self, positive: bool) -> Self {
        Self::Meridian { positive, inner: Box::new(self) }
    }

    /// `∇₊ = ∇₋ + z ∇₀`.
    pub fn skein_plus(minus: SkeinExpr, zero: SkeinExpr) -> Self {
        Self::Sum(vec![minus, zero.times_z(1, 1)])
    }

    /// `∇₋ = ∇₊ - z ∇₀`.
    pub fn skein_minus(plus: SkeinExpr, zero: SkeinExpr) -> Self {
        Self::Sum(vec![plus, zero.times_z(-1, 1)])
    }

    pub fn eval(&self, table: &KnotTable) -> Result<SkeinValue> {
        Ok(match self {
            Self::Knot(n) => SkeinValue::known(table.knot(n)?.conway.clone()),
            Self::Link(n) => SkeinValue::known(table.link(n)?.conway.clone()),
            Self::Poly(p) => SkeinValue::known(p.clone().with_var('z')),
            Self::Unknown { name, z_divisibility } => SkeinValue::unknown(name, *z_divisibility),
            Self::Sum(xs) => {
                let mut acc = SkeinValue::known(LaurentPoly::zero('z'));
                for x in xs {
                    acc = acc.add(&x.eval(table)?)?;
                }
                acc
            }
            Self::Scale(c, x) => x.eval(table)?.scale(&c.clone().with_var('z')),
            Self::ConnectedSum(xs) => {
                let mut acc = SkeinValue::known(LaurentPoly::one('z'));
                for x in xs {
                    acc = acc.mul(&x.eval(table)?)?;
                }
                acc
            }
            Self::Meridian { positive, inner } => inner.eval(table)?.scale(&z_poly(if *positive { 1 } else { -1 }, 1)),
            Self::Split(xs) => {
                for x in xs {
                    x.eval(table)?;
                }
                SkeinValue::known(LaurentPoly::zero('z'))
            }
        })
    }

    /// `∇₀ = (∇₊ - ∇₋) / z`, failing if the division is not exact.
    pub fn solve_zero(plus: &SkeinValue, minus: &SkeinValue) -> Result<SkeinValue> {
        plus.add(&minus.scale(&z_poly(-1, 0)))?.divide_by_z()
    }
}

/// `known(z) + Σ_u c_u(z) · X_u`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SkeinValue {
    pub known: LaurentPoly,
    /// Unknown name ↦ (guaranteed power of `z` dividing it, coefficient).
    pub unknowns: BTreeMap<String, (u32, LaurentPoly)>,
}

impl SkeinValue {
    pub fn known(p: LaurentPoly) -> Self {
        Self { known: p, unknowns: BTreeMap::new() }
    }

    pub fn unknown(name: &str, d: u32) -> Self {
        let mut unknowns = BTreeMap::new();
        unknowns.insert(name.to_string(), (d, LaurentPoly::one('z')));
        Self { known: LaurentPoly::zero('z'), unknowns }
    }

    pub fn is_determined(&self) -> bool {
        self.unknowns.is_empty()
    }

    pub fn add(&self, o: &Self) -> Result<Self> {
        let mut out = self.clone();
        out.known = &out.known + &o.known;
        for (name, (d, c)) in &o.unknowns {
            match out.unknowns.get_mut(name) {
                Some((d0, c0)) => {
                    if d0 != d {
                        return Err(Error::Precondition(format!("unknown {name} used with two divisibility bounds")));
                    }
                    *c0 = &*c0 + c;
                }
                None => {
                    out.unknowns.insert(name.clone(), (*d, c.clone()));
                }
            }
        }
        out.unknowns.retain(|_, (_, c)| !c.is_zero());
        Ok(out)
    }

    pub fn scale(&self, c: &LaurentPoly) -> Self {
        let mut out = Self::known(&self.known * c);
        for (name, (d, u)) in &self.unknowns {
            let v = u * c;
            if !v.is_zero() {
                out.unknowns.insert(name.clone(), (*d, v));
            }
        }
        out
    }

    /// Product; at most one factor may involve unknowns.
    pub fn mul(&self, o: &Self) -> Result<Self> {
        match (self.is_determined(), o.is_determined()) {
            (true, _) => Ok(o.scale(&self.known)),
            (_, true) => Ok(self.scale(&o.known)),
            _ => Err(Error::Precondition("product of two expressions with unknowns is not linear".into())),
        }
    }

    fn divide_by_z(&self) -> Result<Self> {
        let check = |p: &LaurentPoly, d: u32| p.order().is_none_or(|o| o + d as i64 >= 1);
        if !check(&self.known, 0) || self.unknowns.values().any(|(d, c)| !check(c, *d)) {
            return Err(Error::Precondition("skein combination is not divisible by z".into()));
        }
        // A coefficient may keep a negative power of z: the unknown supplies the
        // missing powers.
        let mut out = Self::known(self.known.shift(-1));
        for (name, (d, c)) in &self.unknowns {
            out.unknowns.insert(name.clone(), (*d, c.shift(-1)));
        }
        Ok(out)
    }

    /// The `z^e` coefficient when no unknown can contribute to it.
    pub fn coefficient_if_determined(&self, e: i64) -> Option<Rational> {
        let blocked = self
            .unknowns
            .values()
            .any(|(d, c)| c.order().is_some_and(|o| o + *d as i64 <= e));
        if blocked {
            None
        } else {
            Some(self.known.coeff(e))
        }
    }

    /// `φ₁` of a `k`-component link, if determined.
    pub fn phi1_if_determined(&self, components: u32) -> Option<Rational> {
        self.coefficient_if_determined(components as i64 + 1)
    }

    pub fn value(&self) -> Option<&LaurentPoly> {
        self.is_determined().then_some(&self.known)
    }
}

impl fmt::Display for SkeinValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        if !self.known.is_zero() || self.unknowns.is_empty() {
            parts.push(self.known.to_string());
        }
        for (name, (_, c)) in &self.unknowns {
            parts.push(format!("({c})·{name}"));
        }
        write!(f, "{}", parts.join(" + "))
    }
}

fn y_mn_link_first_part() -> SkeinExpr {
    let n = || SkeinExpr::knot("11a20m");
    let inner = SkeinExpr::Sum(vec![
        n(),
        SkeinExpr::ConnectedSum(vec![SkeinExpr::knot("3_1"), SkeinExpr::knot("5_2m").meridian(false)]).times_z(-1, 1),
    ]);
    SkeinExpr::Sum(vec![n().times_z(-1, 1), inner.times_z(1, 1)])
}

/// Skein resolution of the two-component link `8̄₂₁ ∪ 1̄1̄a₂₀` whose surgeries
/// give `Y(m,n)`. The four-component link `L4` reached by the last crossing
/// change stays a formal unknown; it is divisible by `z³`.
pub fn y_mn_link() -> SkeinExpr {
    let l2 = SkeinExpr::Sum(vec![SkeinExpr::knot("11a20m").times_z(-1, 2), SkeinExpr::unknown("L4", 3).times_z(1, 1)]);
    SkeinExpr::Sum(vec![y_mn_link_first_part(), l2.times_z(1, 1)])
}
