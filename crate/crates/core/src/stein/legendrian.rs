//! Legendrian knots up to the data that matters here: `tb` and rotation.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum StabilizationSign {
    Positive,
    Negative,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LegendrianComponent {
    pub tb: i64,
    pub rot: i64,
    #[serde(default)]
    pub reversed: bool,
}

impl LegendrianComponent {
    pub fn new(tb: i64, rot: i64) -> Self {
        Self { tb, rot, reversed: false }
    }

    /// Smooth framing of the Weinstein handle attached along this component.
    pub fn framing(&self) -> i64 {
        self.tb - 1
    }

    pub fn self_linking(&self) -> i64 {
        self.tb - self.rot
    }

    pub fn reverse(&self) -> Self {
        Self { tb: self.tb, rot: -self.rot, reversed: !self.reversed }
    }

    pub fn stabilize(&self, sign: StabilizationSign) -> Self {
        let d = match sign {
            StabilizationSign::Positive => 1,
            StabilizationSign::Negative => -1,
        };
        Self { tb: self.tb - 1, rot: self.rot + d, reversed: self.reversed }
    }

    /// Rotation numbers after `s` stabilizations, `k` of them positive, for `k = 0..=s`.
    pub fn stabilized_rotations(&self, s: u64) -> Vec<i64> {
        (0..=s as i64).map(|k| self.rot - s as i64 + 2 * k).collect()
    }
}

/// Rotation numbers available at `tb = 1 - n` starting from a representative
/// with `tb - rot = s̄l`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RotationSpectrum {
    pub tb: i64,
    pub self_linking: i64,
    /// Every rotation number reachable by stabilizing and reversing.
    pub exact: BTreeSet<i64>,
    /// Whether `n > 1 - tb_max - rot_at_max`, so the direct range and its
    /// negation overlap.
    pub overlap: bool,
    /// Count the certificate machinery relies on.
    pub guaranteed: u64,
}

pub fn rotation_spectrum(tb_max: i64, rot_at_max: i64, n: i64) -> Result<RotationSpectrum> {
    let sl = tb_max - rot_at_max;
    if sl < 0 {
        return Err(Error::Precondition(format!("self-linking number {sl} is negative")));
    }
    if rot_at_max > 0 {
        return Err(Error::Precondition(format!(
            "orient the representative so that its rotation number is <= 0, got {rot_at_max}"
        )));
    }
    if n < (1 - tb_max).max(0) {
        return Err(Error::Precondition(format!("n = {n} is below max(1 - tb, 0) = {}", (1 - tb_max).max(0))));
    }
    let start = LegendrianComponent::new(tb_max, rot_at_max);
    let s = (n + tb_max - 1) as u64;
    let direct = start.stabilized_rotations(s);
    let mut exact: BTreeSet<i64> = direct.iter().copied().collect();
    exact.extend(direct.iter().map(|r| -r));
    let overlap = n > 1 - tb_max - rot_at_max;
    let guaranteed = if overlap { (sl + n) as u64 } else { direct.len() as u64 };
    debug_assert!(exact.len() as u64 >= guaranteed);
    Ok(RotationSpectrum { tb: 1 - n, self_linking: sl, exact, overlap, guaranteed })
}

/// Smallest `n ≥ floor` at which [`rotation_spectrum`] guarantees `s̄l + n`
/// rotation numbers.
pub fn overlap_threshold(tb_max: i64, rot_at_max: i64, floor: i64) -> i64 {
    floor.max(1 - tb_max).max(0).max(2 - tb_max - rot_at_max)
}

/// For a positive knot of genus `g` (so `t̄b = 2g - 1`): `g - 1` stabilizations
/// of a `tb`-maximizing representative give `g` rotation numbers at `tb = g`.
pub fn positive_knot_spectrum(genus: u32, rot_at_max: i64) -> Result<RotationSpectrum> {
    if genus == 0 {
        return Err(Error::Precondition("positive knot of genus 0 is the unknot".into()));
    }
    let g = genus as i64;
    let start = LegendrianComponent::new(2 * g - 1, rot_at_max);
    let rots = start.stabilized_rotations(genus as u64 - 1);
    let exact: BTreeSet<i64> = rots.iter().copied().collect();
    Ok(RotationSpectrum {
        tb: g,
        self_linking: start.self_linking(),
        guaranteed: exact.len() as u64,
        exact,
        overlap: false,
    })
}
