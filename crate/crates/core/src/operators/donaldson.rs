//! Symbolic Donaldson series and the pairing matrix that isolates canonical
//! classes.

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use super::gauss_exp::{apply_ds_poly_sum, apply_weyl_sum, GaussExpSum, GaussExpTerm};
use super::projection::pbot_for_genus;
use super::weyl::build_di;
use crate::algebra::rational::serde_rational;
use crate::algebra::{int, is_integral, LaurentPoly, Rational};
use crate::error::{Error, Result};

/// One summand `α · exp(a s + k t)` of the series.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BasicClass {
    #[serde(with = "serde_rational")]
    pub alpha: Rational,
    #[serde(with = "serde_rational")]
    pub a: Rational,
    #[serde(with = "serde_rational")]
    pub k: Rational,
}

impl BasicClass {
    pub fn new(alpha: Rational, a: Rational, k: Rational) -> Self {
        Self { alpha, a, k }
    }
}

/// `F(s,t) = exp(Q t²/2) · Σ_r α_r exp(a_r s + k_r t)`.
///
/// Here `a_r` is the pairing of the r-th basic class with `-R` for a surface
/// `R` of genus `g`, and `k_r` its pairing with `Σ`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DonaldsonSeriesModel {
    pub genus: u32,
    #[serde(with = "serde_rational")]
    pub q: Rational,
    pub classes: Vec<BasicClass>,
}

impl DonaldsonSeriesModel {
    pub fn new(genus: u32, q: Rational, classes: Vec<BasicClass>) -> Result<Self> {
        let m = Self { genus, q, classes };
        m.validate()?;
        Ok(m)
    }

    /// Checks the adjunction bound, integrality of the `a_r`, and that
    /// exactly one class pairs with `-R` as `2 - 2g`.
    ///
    /// Integrality matters: `p_bot(∂/∂s)` only kills `exp(a s)` for the
    /// integers `a = 3-2g, …, 2g-2`.
    pub fn validate(&self) -> Result<()> {
        if self.genus < 2 {
            return Err(Error::InvalidModel(format!("genus must be at least 2, got {}", self.genus)));
        }
        let bound = int(2 * self.genus as i64 - 2);
        let bottom = -bound.clone();
        let mut canonical = 0;
        for c in &self.classes {
            if c.alpha.is_zero() {
                return Err(Error::InvalidModel("basic-class coefficient α must be nonzero".into()));
            }
            if !is_integral(&c.a) {
                return Err(Error::InvalidModel(format!("pairing a = {} is not an integer", c.a)));
            }
            if c.a > bound || c.a < bottom {
                return Err(Error::InvalidModel(format!("|a| = |{}| exceeds 2g-2 = {bound}", c.a)));
            }
            if c.a == bottom {
                canonical += 1;
            }
        }
        if canonical != 1 {
            return Err(Error::InvalidModel(format!(
                "expected exactly one class with a = {bottom}, found {canonical}"
            )));
        }
        Ok(())
    }

    pub fn canonical_class(&self) -> &BasicClass {
        let bottom = int(2 - 2 * self.genus as i64);
        self.classes.iter().find(|c| c.a == bottom).expect("validated model has a canonical class")
    }

    pub fn series(&self) -> GaussExpSum {
        self.classes
            .iter()
            .map(|c| GaussExpTerm::new(c.alpha.clone(), self.q.clone(), c.a.clone(), c.k.clone()))
            .collect()
    }
}

/// Checks the shared data of a family and returns `(g, Q, [k_1..k_n])`.
pub fn family_data(models: &[DonaldsonSeriesModel]) -> Result<(u32, Rational, Vec<Rational>)> {
    let first = models.first().ok_or_else(|| Error::InvalidModel("empty family".into()))?;
    for m in models {
        m.validate()?;
        if m.genus != first.genus || m.q != first.q {
            return Err(Error::InvalidModel("models must share g and Q".into()));
        }
    }
    let ks: Vec<Rational> = models.iter().map(|m| m.canonical_class().k.clone()).collect();
    for i in 0..ks.len() {
        for j in i + 1..ks.len() {
            if ks[i] == ks[j] {
                return Err(Error::RepeatedPairing(format!(
                    "canonical classes of models {} and {} both pair with Σ as {}",
                    i + 1,
                    j + 1,
                    ks[i]
                )));
            }
        }
    }
    Ok((first.genus, first.q.clone(), ks))
}

/// Entry `(i,j)` is `[p_bot(∂/∂s) d_i F_j](0,0)`, computed in closed form.
pub fn orthogonality_matrix(models: &[DonaldsonSeriesModel]) -> Result<Vec<Vec<Rational>>> {
    let (genus, q, _) = family_data(models)?;
    orthogonality_matrix_with(models, &pbot_for_genus(genus)?, &q)
}

/// As [`orthogonality_matrix`] with a caller-supplied `p_bot`.
pub fn orthogonality_matrix_with(
    models: &[DonaldsonSeriesModel],
    pbot: &LaurentPoly,
    q: &Rational,
) -> Result<Vec<Vec<Rational>>> {
    let (_, _, ks) = family_data(models)?;
    let series: Vec<GaussExpSum> = models.iter().map(DonaldsonSeriesModel::series).collect();
    let mut out = Vec::with_capacity(models.len());
    for i in 0..models.len() {
        let di = build_di(i, &ks, q)?;
        let row = series
            .iter()
            .map(|f| Ok(apply_ds_poly_sum(pbot, &apply_weyl_sum(&di, f))?.value_at_origin()))
            .collect::<Result<Vec<_>>>()?;
        out.push(row);
    }
    Ok(out)
}
