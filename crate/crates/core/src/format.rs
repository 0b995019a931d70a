//! Structured-text (TOML) conventions shared by the data files and CLI inputs.
//!
//! Polynomials are lists of `[exponent, numerator, denominator]` triples.
//! Every input document carries `schema_version`; unknown keys are rejected.

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::de::DeserializeOwned;
use serde::Serialize;

use crate::algebra::{LaurentPoly, Rational};
use crate::error::{Error, Result};

pub const SCHEMA_VERSION: u32 = 1;

pub type Triple = [i64; 3];

pub fn poly_from_triples(var: char, triples: &[Triple]) -> Result<LaurentPoly> {
    let mut p = LaurentPoly::zero(var);
    for &[e, n, d] in triples {
        if d == 0 {
            return Err(Error::Parse(format!("zero denominator in coefficient of {var}^{e}")));
        }
        p.add_term(e, Rational::new(BigInt::from(n), BigInt::from(d)));
    }
    Ok(p)
}

pub fn poly_to_triples(p: &LaurentPoly) -> Result<Vec<Triple>> {
    p.terms()
        .map(|(e, c)| match (c.numer().to_i64(), c.denom().to_i64()) {
            (Some(n), Some(d)) => Ok([e, n, d]),
            _ => Err(Error::Parse(format!("coefficient {c} does not fit the triple format"))),
        })
        .collect()
}

/// Reads a TOML document and checks its `schema_version`.
pub fn from_toml<T: DeserializeOwned>(text: &str) -> Result<T> {
    let table: toml::Table = toml::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    match table.get("schema_version").map(|v| v.as_integer()) {
        Some(Some(v)) if v == SCHEMA_VERSION as i64 => {}
        Some(Some(v)) => return Err(Error::Parse(format!("unsupported schema_version {v}, expected {SCHEMA_VERSION}"))),
        Some(None) => return Err(Error::Parse("schema_version must be an integer".into())),
        None => return Err(Error::Parse("missing schema_version".into())),
    }
    toml::from_str(text).map_err(|e| Error::Parse(e.to_string()))
}

/// Serializable polynomial: triples plus a human-readable rendering.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PolyView {
    pub text: String,
    pub triples: Vec<(i64, String)>,
}

impl From<&LaurentPoly> for PolyView {
    fn from(p: &LaurentPoly) -> Self {
        Self { text: p.to_string(), triples: p.terms().map(|(e, c)| (e, c.to_string())).collect() }
    }
}

pub fn rational_json(x: &Rational) -> serde_json::Value {
    if x.denom() == &BigInt::from(1) {
        if let Some(n) = x.numer().to_i64() {
            return serde_json::Value::from(n);
        }
    }
    serde_json::Value::from(x.to_string())
}
