//! Seifert fibered spaces `M(e; r₁, …, r_k)` over S².

use std::fmt;
use std::str::FromStr;

use num_traits::{One, Signed, ToPrimitive, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::forms::IntMatrix;
use super::gompf::SteinHandlebodyModel;
use super::legendrian::LegendrianComponent;
use crate::algebra::{floor_i64, int, parse_rational, rat, Rational};
use crate::error::{Error, Result};
use crate::slopes::{negative_cf, Slope};

/// Normal form: every `r_i` lies strictly between 0 and 1, sorted ascending,
/// with integer parts absorbed into `e`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SeifertData {
    e: i64,
    fractions: Vec<Rational>,
}

impl SeifertData {
    pub fn new(e: i64, fractions: Vec<Rational>) -> Result<Self> {
        let mut e = e;
        let mut out = Vec::new();
        for r in fractions {
            let f = floor_i64(&r).ok_or_else(|| Error::Parse(format!("fraction {r} is too large")))?;
            e = e.checked_add(f).ok_or_else(|| Error::Parse("Euler number overflows".into()))?;
            let rest = r - int(f);
            if !rest.is_zero() {
                out.push(rest);
            }
        }
        out.sort();
        Ok(Self { e, fractions: out })
    }

    pub fn from_pairs(e: i64, pairs: &[(i64, i64)]) -> Result<Self> {
        let fr = pairs
            .iter()
            .map(|&(q, p)| if p == 0 { Err(Error::DivisionByZero) } else { Ok(rat(q, p)) })
            .collect::<Result<Vec<_>>>()?;
        Self::new(e, fr)
    }

    pub fn e(&self) -> i64 {
        self.e
    }

    pub fn fractions(&self) -> &[Rational] {
        &self.fractions
    }

    pub fn num_fibers(&self) -> usize {
        self.fractions.len()
    }

    fn denominators(&self) -> impl Iterator<Item = i64> + '_ {
        self.fractions.iter().map(|r| r.denom().to_i64().expect("fits"))
    }

    /// `e + Σ r_i`.
    pub fn euler(&self) -> Rational {
        self.fractions.iter().fold(int(self.e), |s, r| s + r)
    }

    /// `|H₁| = p₁⋯p_k·|e + Σ r_i|`; zero means `b₁ > 0`.
    pub fn h1_order(&self) -> u64 {
        let p: i64 = self.denominators().product();
        let v = (self.euler() * int(p)).abs();
        debug_assert!(v.is_integer());
        v.to_integer().to_u64().expect("fits")
    }

    pub fn is_homology_sphere(&self) -> bool {
        self.h1_order() == 1
    }

    /// `-M(e; r₁, …, r_k) = M(-e-k; 1-r_k, …, 1-r₁)`.
    pub fn reverse(&self) -> Self {
        let k = self.fractions.len() as i64;
        let fr = self.fractions.iter().rev().map(|r| Rational::one() - r).collect();
        Self::new(-self.e - k, fr).expect("normal form is preserved")
    }

    /// `M(-2; 1/2, 2/3, 4/5)`.
    pub fn poincare_sphere() -> Self {
        Self::from_pairs(-2, &[(1, 2), (2, 3), (4, 5)]).expect("valid")
    }

    pub fn sigma_237() -> Self {
        Self::from_pairs(-2, &[(1, 2), (2, 3), (6, 7)]).expect("valid")
    }

    /// The star-shaped plumbing: central framing `e`, and a chain with the
    /// continued fraction of `-1/r_i` for each fiber.
    pub fn plumbing(&self) -> Plumbing {
        let chains = self
            .fractions
            .iter()
            .map(|r| {
                let s = Slope::from_rational(&(-Rational::one() / r)).expect("small");
                negative_cf(&s).expect("-1/r < -1")
            })
            .collect();
        Plumbing { central: self.e, chains }
    }
}

impl fmt::Display for SeifertData {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "M({}", self.e)?;
        for (i, r) in self.fractions.iter().enumerate() {
            write!(f, "{}{r}", if i == 0 { "; " } else { ", " })?;
        }
        write!(f, ")")
    }
}

impl FromStr for SeifertData {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("expected Seifert data like \"M(-2; 1/2, 2/3, 4/5)\", got {s:?}"));
        let body = s.trim().strip_prefix('M').ok_or_else(bad)?.trim();
        let body = body.strip_prefix('(').and_then(|b| b.strip_suffix(')')).ok_or_else(bad)?;
        let (e, rest) = match body.split_once(';') {
            Some((e, rest)) => (e, rest),
            None => (body, ""),
        };
        let e: i64 = e.trim().parse().map_err(|_| bad())?;
        let fractions = rest
            .split(',')
            .map(str::trim)
            .filter(|t| !t.is_empty())
            .map(|t| parse_rational(t).ok_or_else(bad))
            .collect::<Result<Vec<_>>>()?;
        Self::new(e, fractions)
    }
}

impl Serialize for SeifertData {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for SeifertData {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Plumbing {
    pub central: i64,
    pub chains: Vec<Vec<i64>>,
}

impl Plumbing {
    /// Framings in vertex order: centre, then each chain outward.
    pub fn framings(&self) -> Vec<i64> {
        std::iter::once(self.central).chain(self.chains.iter().flatten().copied()).collect()
    }

    /// Whether some Legendrian realization has a component with nonzero
    /// rotation number: an unknot with framing `a = tb - 1` admits
    /// `rot ≠ 0` exactly when `a < -2`.
    pub fn c1_nonzero(&self) -> bool {
        self.framings().iter().any(|&a| a < -2)
    }

    pub fn is_legendrian(&self) -> bool {
        self.framings().iter().all(|&a| a <= -2)
    }

    pub fn linking_matrix(&self) -> IntMatrix {
        let f = self.framings();
        let n = f.len();
        let mut m = vec![vec![0; n]; n];
        for i in 0..n {
            m[i][i] = f[i];
        }
        let mut idx = 1;
        for chain in &self.chains {
            let mut prev = 0;
            for _ in chain {
                m[prev][idx] = 1;
                m[idx][prev] = 1;
                prev = idx;
                idx += 1;
            }
        }
        m
    }

    /// Legendrian unknots realizing the plumbing, with the largest allowed
    /// rotation number on every vertex.
    pub fn stein_model(&self) -> Result<SteinHandlebodyModel> {
        if !self.is_legendrian() {
            return Err(Error::Precondition("every framing must be at most -2".into()));
        }
        let m = self.linking_matrix();
        let components = self
            .framings()
            .iter()
            .map(|&a| LegendrianComponent::new(a + 1, -a - 2))
            .collect();
        let mut linking = m;
        for (i, row) in linking.iter_mut().enumerate() {
            row[i] = 0;
        }
        SteinHandlebodyModel::new(components, linking)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum SteinDiagram {
    /// `e ≤ -2`: the plumbing of `Y` itself is Legendrian.
    Direct { plumbing: Plumbing, c1_nonzero: bool },
    /// `e ≥ -1`: use `-Y` instead.
    Reversed { data: SeifertData, plumbing: Plumbing, c1_nonzero: bool },
}

impl SteinDiagram {
    pub fn c1_nonzero(&self) -> bool {
        match self {
            Self::Direct { c1_nonzero, .. } | Self::Reversed { c1_nonzero, .. } => *c1_nonzero,
        }
    }
}

pub fn seifert_stein_diagram(data: &SeifertData) -> Result<SteinDiagram> {
    if data.e <= -2 {
        let plumbing = data.plumbing();
        let c1_nonzero = plumbing.c1_nonzero();
        return Ok(SteinDiagram::Direct { plumbing, c1_nonzero });
    }
    if data.num_fibers() >= 3 {
        let rev = data.reverse();
        debug_assert!(rev.e <= -2);
        let plumbing = rev.plumbing();
        let c1_nonzero = plumbing.c1_nonzero();
        return Ok(SteinDiagram::Reversed { data: rev, plumbing, c1_nonzero });
    }
    Err(Error::LensSpace)
}

/// A Legendrian filling of one orientation known independently of the plumbing.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FillingOverride {
    /// The orientation that the filling bounds.
    pub bounds: SeifertData,
    pub description: &'static str,
    pub model: SteinHandlebodyModel,
}

/// Curated fillings: `-Σ(2,3,7)` is Legendrian surgery on a right-handed
/// trefoil with `tb = 0` and rotation number `±1`.
pub fn filling_override(data: &SeifertData) -> Option<FillingOverride> {
    let target = SeifertData::sigma_237().reverse();
    if *data != target && data.reverse() != target {
        return None;
    }
    let model = SteinHandlebodyModel::new(vec![LegendrianComponent::new(0, 1)], vec![vec![0]]).expect("valid");
    Some(FillingOverride {
        bounds: target,
        description: "Legendrian right-handed trefoil with tb = 0, rot = 1",
        model,
    })
}

/// Whether `Y` or `-Y` has a Legendrian plumbing with `c₁ ≠ 0`.
pub fn c1_nonzero_plumbing(data: &SeifertData) -> bool {
    [data.clone(), data.reverse()].iter().any(|d| d.e <= -2 && d.plumbing().c1_nonzero())
}

/// Instanton L-space classification of a nontrivial Seifert homology sphere:
/// true exactly for `±Σ(2,3,5)`.
pub fn sfs_lspace_classify(data: &SeifertData) -> Result<bool> {
    if !data.is_homology_sphere() {
        return Err(Error::NotHomologySphere(format!("{data} has |H1| = {}", data.h1_order())));
    }
    if data.num_fibers() <= 2 {
        return Err(Error::LensSpace);
    }
    let p = SeifertData::poincare_sphere();
    Ok(*data == p || data.reverse() == p)
}

/// Representative of `{Y, -Y}`: the smaller of the two in (e, fractions) order.
pub fn orientation_class(data: &SeifertData) -> SeifertData {
    data.clone().min(data.reverse())
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SweepResult {
    /// Normalized homology spheres found (both orientations counted).
    pub homology_spheres: usize,
    /// Orientation classes without a `c₁ ≠ 0` plumbing on either side.
    pub exceptions: Vec<SeifertData>,
    /// Orientation classes classified as instanton L-spaces.
    pub lspaces: Vec<SeifertData>,
}

fn coprime_tuples(max_p: i64) -> Vec<Vec<i64>> {
    fn go(start: i64, max_p: i64, cur: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if cur.len() >= 3 {
            out.push(cur.clone());
        }
        for p in start..=max_p {
            if cur.iter().all(|&c| num_integer::gcd(c, p) == 1) {
                cur.push(p);
                go(p + 1, max_p, cur, out);
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(2, max_p, &mut Vec::new(), &mut out);
    out
}

fn homology_spheres_for(ps: &[i64]) -> Vec<SeifertData> {
    let mut out = Vec::new();
    let mut qs = vec![1i64; ps.len()];
    let big_p: i64 = ps.iter().product();
    loop {
        if qs.iter().zip(ps).all(|(&q, &p)| num_integer::gcd(q, p) == 1) {
            let s: Rational = qs.iter().zip(ps).map(|(&q, &p)| rat(q, p)).fold(Rational::zero(), |a, b| a + b);
            for sign in [1, -1] {
                let e = -&s + rat(sign, big_p);
                if e.is_integer() {
                    let fr = qs.iter().zip(ps).map(|(&q, &p)| rat(q, p)).collect();
                    out.push(SeifertData::new(e.to_integer().to_i64().expect("small"), fr).expect("valid"));
                }
            }
        }
        let mut i = 0;
        loop {
            if i == qs.len() {
                return out;
            }
            qs[i] += 1;
            if qs[i] < ps[i] {
                break;
            }
            qs[i] = 1;
            i += 1;
        }
    }
}

/// Every normalized Seifert homology sphere with at least three fibers and
/// all `p_i ≤ max_p`.
pub fn seifert_homology_spheres(max_p: i64) -> Vec<SeifertData> {
    let mut all: Vec<SeifertData> = coprime_tuples(max_p).par_iter().flat_map_iter(|ps| homology_spheres_for(ps)).collect();
    all.sort();
    all.dedup();
    all
}

pub fn seifert_sweep(max_p: i64) -> SweepResult {
    let spheres = seifert_homology_spheres(max_p);
    let mut exceptions: Vec<SeifertData> =
        spheres.par_iter().filter(|d| !c1_nonzero_plumbing(d)).map(orientation_class).collect();
    let mut lspaces: Vec<SeifertData> = spheres
        .par_iter()
        .filter(|d| sfs_lspace_classify(d).unwrap_or(false))
        .map(orientation_class)
        .collect();
    for v in [&mut exceptions, &mut lspaces] {
        v.sort();
        v.dedup();
    }
    SweepResult { homology_spheres: spheres.len(), exceptions, lspaces }
}
