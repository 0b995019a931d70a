use serde::{Deserialize, Serialize};

use super::conway::{check_normal_form, conway_to_alexander};
use crate::algebra::rational::serde_rational;
use crate::algebra::{int, LaurentPoly, Rational};
use crate::error::{Error, Result};
use crate::format::{poly_from_triples, poly_to_triples, Triple};

/// Invariants of a knot `K` in S³.
///
/// The contact-geometric fields describe the mirror `K̄`, because the
/// surgery theorems for `S³_r(K)` are phrased through Legendrian
/// representatives of `K̄`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KnotRecord {
    pub name: String,
    /// Conway polynomial in `z`, even powers only.
    pub conway: LaurentPoly,
    /// Symmetric Alexander polynomial in `t` with `Δ(1) = 1`.
    pub alexander: LaurentPoly,
    pub genus: Option<u32>,
    /// Maximal self-linking number of `K̄`.
    pub sl_bar_mirror: Option<i64>,
    /// Maximal Thurston–Bennequin number of `K̄`.
    pub tb_bar_mirror: Option<i64>,
    /// Whether `K̄` is a positive knot.
    pub mirror_positive: Option<bool>,
    pub notes: Option<String>,
}

impl KnotRecord {
    /// A record with only polynomial data; the Alexander polynomial is
    /// derived from `conway`.
    pub fn from_conway(name: &str, conway: LaurentPoly) -> Result<Self> {
        let alexander = conway_to_alexander(&conway)?;
        let r = Self {
            name: name.to_string(),
            conway,
            alexander,
            genus: None,
            sl_bar_mirror: None,
            tb_bar_mirror: None,
            mirror_positive: None,
            notes: None,
        };
        r.validate()?;
        Ok(r)
    }

    pub fn is_unknot_polynomial(&self) -> bool {
        self.alexander.is_constant()
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::ConwayNormalForm(format!("{}: {msg}", self.name)));
        check_normal_form(&self.conway, 1)?;
        if self.conway.coeff(0) != int(1) {
            return bad("a knot's Conway polynomial has constant term 1".into());
        }
        if !self.alexander.is_symmetric() {
            return bad(format!("Alexander polynomial {} is not symmetric", self.alexander));
        }
        if conway_to_alexander(&self.conway)? != self.alexander {
            return bad(format!(
                "Alexander polynomial {} does not match Conway polynomial {}",
                self.alexander, self.conway
            ));
        }
        if let Some(g) = self.genus {
            let span = self.alexander.degree().unwrap_or(0);
            if span > g as i64 {
                return bad(format!("genus {g} is below the Alexander bound {span}"));
            }
            let bennequin = 2 * g as i64 - 1;
            if let Some(sl) = self.sl_bar_mirror {
                if sl > bennequin {
                    return bad(format!("self-linking {sl} exceeds 2g-1 = {bennequin}"));
                }
            }
            if let Some(tb) = self.tb_bar_mirror {
                if tb > bennequin {
                    return bad(format!("Thurston-Bennequin number {tb} exceeds 2g-1 = {bennequin}"));
                }
                if self.mirror_positive == Some(true) && tb != bennequin {
                    return bad(format!("a positive knot has maximal tb = 2g-1 = {bennequin}, got {tb}"));
                }
            }
        }
        if let Some(sl) = self.sl_bar_mirror {
            if sl.rem_euclid(2) != 1 {
                return bad(format!("self-linking numbers are odd, got {sl}"));
            }
        }
        if let (Some(sl), Some(tb)) = (self.sl_bar_mirror, self.tb_bar_mirror) {
            // A tb-maximizing Legendrian or its reverse has sl = tb + |rot|.
            if sl < tb {
                return bad(format!("self-linking {sl} is below tb = {tb}"));
            }
        }
        Ok(())
    }
}

/// A link with its Conway polynomial in Hoste's normal form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinkRecord {
    pub name: String,
    pub components: Vec<String>,
    /// Linking numbers `lk(i,j)` for `i < j`, in lexicographic order.
    pub linking: Vec<i64>,
    pub conway: LaurentPoly,
    pub phi1: Rational,
}

impl LinkRecord {
    pub fn new(name: &str, components: Vec<String>, linking: Vec<i64>, conway: LaurentPoly) -> Result<Self> {
        let k = components.len() as u32;
        let phi1 = super::conway::phi1(&conway, k)?;
        let r = Self { name: name.to_string(), components, linking, conway, phi1 };
        r.validate()?;
        Ok(r)
    }

    pub fn validate(&self) -> Result<()> {
        let k = self.components.len();
        if self.linking.len() != k * k.saturating_sub(1) / 2 {
            return Err(Error::Parse(format!(
                "{}: expected {} pairwise linking numbers, got {}",
                self.name,
                k * k.saturating_sub(1) / 2,
                self.linking.len()
            )));
        }
        if super::conway::phi1(&self.conway, k as u32)? != self.phi1 {
            return Err(Error::ConwayNormalForm(format!("{}: φ₁ disagrees with the Conway polynomial", self.name)));
        }
        Ok(())
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct KnotEntry {
    pub name: String,
    pub conway: Vec<Triple>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub alexander: Option<Vec<Triple>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub genus: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub sl_bar_mirror: Option<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub tb_bar_mirror: Option<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mirror_positive: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub notes: Option<String>,
}

impl KnotEntry {
    pub fn into_record(self) -> Result<KnotRecord> {
        let conway = poly_from_triples('z', &self.conway)?;
        let alexander = match &self.alexander {
            Some(t) => poly_from_triples('t', t)?,
            None => conway_to_alexander(&conway)?,
        };
        let r = KnotRecord {
            name: self.name,
            conway,
            alexander,
            genus: self.genus,
            sl_bar_mirror: self.sl_bar_mirror,
            tb_bar_mirror: self.tb_bar_mirror,
            mirror_positive: self.mirror_positive,
            notes: self.notes,
        };
        r.validate()?;
        Ok(r)
    }

    pub fn from_record(r: &KnotRecord) -> Result<Self> {
        Ok(Self {
            name: r.name.clone(),
            conway: poly_to_triples(&r.conway)?,
            alexander: Some(poly_to_triples(&r.alexander)?),
            genus: r.genus,
            sl_bar_mirror: r.sl_bar_mirror,
            tb_bar_mirror: r.tb_bar_mirror,
            mirror_positive: r.mirror_positive,
            notes: r.notes.clone(),
        })
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LinkEntry {
    pub name: String,
    pub components: Vec<String>,
    pub linking: Vec<i64>,
    pub conway: Vec<Triple>,
    #[serde(default, skip_serializing_if = "Option::is_none", with = "opt_rational")]
    pub phi1: Option<Rational>,
}

mod opt_rational {
    use super::*;
    use serde::{Deserializer, Serializer};

    #[derive(Serialize, Deserialize)]
    struct Wrap(#[serde(with = "serde_rational")] Rational);

    pub fn serialize<S: Serializer>(x: &Option<Rational>, s: S) -> std::result::Result<S::Ok, S::Error> {
        x.clone().map(Wrap).serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<Option<Rational>, D::Error> {
        Ok(Option::<Wrap>::deserialize(d)?.map(|w| w.0))
    }
}

impl LinkEntry {
    pub fn into_record(self) -> Result<LinkRecord> {
        let conway = poly_from_triples('z', &self.conway)?;
        let r = LinkRecord::new(&self.name, self.components, self.linking, conway)?;
        if let Some(p) = self.phi1 {
            if p != r.phi1 {
                return Err(Error::ConwayNormalForm(format!(
                    "{}: stated φ₁ = {p} but the Conway polynomial gives {}",
                    r.name, r.phi1
                )));
            }
        }
        Ok(r)
    }
}
