//! Stein handlebodies without 1-handles, described by a Legendrian link.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use super::forms::{b_k, block_sum, check_symmetric, h1_order, invariant_factors, IntMatrix};
use super::legendrian::LegendrianComponent;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SteinHandlebodyModel {
    pub components: Vec<LegendrianComponent>,
    /// Smooth linking numbers between components; the diagonal is ignored.
    pub linking: IntMatrix,
}

impl SteinHandlebodyModel {
    pub fn new(components: Vec<LegendrianComponent>, linking: IntMatrix) -> Result<Self> {
        let m = Self { components, linking };
        m.validate()?;
        Ok(m)
    }

    pub fn validate(&self) -> Result<()> {
        let k = self.components.len();
        if self.linking.len() != k {
            return Err(Error::Dimension(format!("{k} components but {} linking rows", self.linking.len())));
        }
        check_symmetric(&self.linking)?;
        for (i, c) in self.components.iter().enumerate() {
            // tb + rot is odd for every Legendrian knot in S³; equivalently the
            // rotation vector is characteristic for the linking form.
            if (c.tb + c.rot).rem_euclid(2) != 1 {
                return Err(Error::Precondition(format!(
                    "component {i}: tb + rot = {} + {} must be odd",
                    c.tb, c.rot
                )));
            }
        }
        Ok(())
    }

    /// Linking matrix with diagonal `tb - 1`: the intersection form of `W`.
    pub fn framed_matrix(&self) -> IntMatrix {
        let mut m = self.linking.clone();
        for (i, c) in self.components.iter().enumerate() {
            m[i][i] = c.framing();
        }
        m
    }

    pub fn b2(&self) -> usize {
        self.components.len()
    }

    pub fn h1_order(&self) -> Result<Option<u64>> {
        h1_order(&self.framed_matrix())
    }

    pub fn h1_invariant_factors(&self) -> Vec<u64> {
        invariant_factors(&self.framed_matrix())
    }

    /// Same handlebody with different rotation numbers, i.e. another Stein
    /// structure on the same smooth 4-manifold.
    pub fn with_rotations(&self, rots: &[i64]) -> Result<Self> {
        if rots.len() != self.components.len() {
            return Err(Error::Dimension(format!("{} rotation numbers for {} components", rots.len(), self.components.len())));
        }
        let components = self.components.iter().zip(rots).map(|(c, &r)| LegendrianComponent { rot: r, ..*c }).collect();
        Self::new(components, self.linking.clone())
    }
}

/// `⟨c₁(J), Σ_i⟩ = rot(L_i)`.
pub fn gompf_chern(model: &SteinHandlebodyModel) -> Vec<i64> {
    model.components.iter().map(|c| c.rot).collect()
}

pub fn is_zero(v: &[i64]) -> bool {
    v.iter().all(|&x| x == 0)
}

/// Number of pairwise-distinct Chern vectors among Stein structures on one
/// 4-manifold; a lower bound for `rank I#` of its boundary.
pub fn rank_lower_bound_from_stein(chern_vectors: &[Vec<i64>], torsion_free: bool) -> Result<u64> {
    if !torsion_free {
        return Err(Error::Precondition(
            "distinct integral vectors only give distinct real classes when H²(W) is torsion-free".into(),
        ));
    }
    if let Some(first) = chern_vectors.first() {
        if chern_vectors.iter().any(|v| v.len() != first.len()) {
            return Err(Error::Dimension("Chern vectors of different lengths".into()));
        }
    }
    Ok(chern_vectors.iter().collect::<BTreeSet<_>>().len() as u64)
}

/// The handlebody bounding `Y(m, n)`: once-stabilized tb = 1 representatives
/// of the two link components, each followed by a chain of tb = -1 unknots.
pub fn y_mn_model(m: usize, n: usize) -> Result<SteinHandlebodyModel> {
    if m == 0 || n == 0 {
        return Err(Error::Precondition("Y(m, n) needs m, n >= 1".into()));
    }
    let mut components = Vec::new();
    for len in [m, n] {
        components.push(LegendrianComponent::new(0, 1));
        components.extend(std::iter::repeat_n(LegendrianComponent::new(-1, 0), len - 1));
    }
    let mut linking = block_sum(&b_k(m), &b_k(n));
    for (i, row) in linking.iter_mut().enumerate() {
        row[i] = 0;
    }
    SteinHandlebodyModel::new(components, linking)
}
