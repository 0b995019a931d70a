use num_traits::Zero;

use crate::algebra::{int, Rational};
use crate::error::{Error, Result};

/// An integer vector `x` with the pairings `c_i · x` pairwise distinct.
///
/// Tries `x = (1, M, M², …)` for `M = 1, 2, …` and returns the first success.
/// Each pair of distinct vectors rules out at most `m - 1` values of `M` (the
/// roots of a nonzero polynomial of degree `< m`), so the search terminates.
pub fn distinct_pairing_vector(cs: &[Vec<Rational>]) -> Result<Vec<i64>> {
    let m = cs.first().map_or(0, Vec::len);
    if cs.iter().any(|c| c.len() != m) {
        return Err(Error::Dimension("pairing vectors must share a dimension".into()));
    }
    for i in 0..cs.len() {
        for j in i + 1..cs.len() {
            if cs[i] == cs[j] {
                return Err(Error::RepeatedPairing(format!("vectors {i} and {j} coincide")));
            }
        }
    }
    if cs.len() <= 1 {
        return Ok(vec![0; m]);
    }
    for big_m in 1i64.. {
        let mut x = Vec::with_capacity(m);
        let mut p = 1i64;
        for _ in 0..m {
            x.push(p);
            p = p.checked_mul(big_m).ok_or_else(|| Error::Precondition("pairing search overflowed".into()))?;
        }
        let pairings: Vec<Rational> = cs
            .iter()
            .map(|c| c.iter().zip(&x).fold(Rational::zero(), |acc, (ci, &xi)| acc + ci * int(xi)))
            .collect();
        let distinct = (0..pairings.len()).all(|i| (i + 1..pairings.len()).all(|j| pairings[i] != pairings[j]));
        if distinct {
            return Ok(x);
        }
    }
    unreachable!()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(xs: &[i64]) -> Vec<Rational> {
        xs.iter().map(|&x| int(x)).collect()
    }

    #[test]
    fn examples() {
        assert_eq!(distinct_pairing_vector(&[v(&[1, 0]), v(&[0, 1])]).unwrap(), vec![1, 2]);
        assert_eq!(distinct_pairing_vector(&[v(&[3, 4])]).unwrap(), vec![0, 0]);
        assert_eq!(distinct_pairing_vector(&[v(&[1, 1]), v(&[1, -1]), v(&[0, 0])]).unwrap(), vec![1, 2]);
    }

    #[test]
    fn rejects_duplicates() {
        assert!(distinct_pairing_vector(&[v(&[1]), v(&[1])]).is_err());
    }
}
