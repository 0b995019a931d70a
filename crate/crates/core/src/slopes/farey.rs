use super::slope::Slope;
use crate::error::{Error, Result};

/// One term `r_i` of the mediant sequence ending at `r`, with the index `j_i`
/// of the earlier term it was formed from (`r_i = r_{j_i} ⊕ r_{i-1}`).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FareyStep {
    pub slope: Slope,
    pub j: Option<usize>,
}

/// The sequence `1/0, n/1, (n+1)/1, …, r` for positive non-integral `r`,
/// `n = ⌊r⌋`. Each new term is the mediant of the previous term and whichever
/// earlier neighbour keeps `r` bracketed.
pub fn farey_sequence(r: &Slope) -> Result<Vec<FareyStep>> {
    if r.is_infinity() || r.is_integer() || !r.is_positive() {
        return Err(Error::SlopeRange(format!("{r} must be positive and non-integral")));
    }
    let n = r.floor().expect("finite");
    let mut seq = vec![
        FareyStep { slope: Slope::INFINITY, j: None },
        FareyStep { slope: Slope::integer(n), j: None },
        FareyStep { slope: Slope::integer(n + 1), j: Some(0) },
    ];
    while seq.last().unwrap().slope != *r {
        let i = seq.len();
        let prev = seq[i - 1].slope;
        let before = seq[i - 2].slope;
        let (lo, hi) = if prev < before { (prev, before) } else { (before, prev) };
        let j = if lo < *r && *r < hi { i - 2 } else { seq[i - 1].j.expect("j defined from index 2") };
        let next = seq[j].slope.mediant(&prev)?;
        seq.push(FareyStep { slope: next, j: Some(j) });
    }
    Ok(seq)
}

/// The three unimodularity conditions at every step `i ≥ 2`.
pub fn check_farey(seq: &[FareyStep]) -> bool {
    seq.iter().enumerate().skip(2).all(|(i, step)| {
        let Some(j) = step.j else { return false };
        let (ri, rp, rj) = (step.slope, seq[i - 1].slope, seq[j].slope);
        rj.distance(&rp) == 1 && ri.distance(&rp) == 1 && ri.distance(&rj) == 1
    })
}
