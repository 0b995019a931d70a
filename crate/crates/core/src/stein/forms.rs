//! Integral symmetric bilinear forms: inertia, determinant, invariant factors
//! and short vectors.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::algebra::{floor_i64, int, Rational};
use crate::error::{Error, Result};

pub type IntMatrix = Vec<Vec<i64>>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Definiteness {
    NegativeDefinite,
    PositiveDefinite,
    Indefinite,
    Degenerate,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Inertia {
    pub positive: usize,
    pub negative: usize,
    pub zero: usize,
}

pub fn check_symmetric(m: &IntMatrix) -> Result<()> {
    let n = m.len();
    for (i, row) in m.iter().enumerate() {
        if row.len() != n {
            return Err(Error::Dimension(format!("row {i} has length {}, expected {n}", row.len())));
        }
        for j in 0..i {
            if m[i][j] != m[j][i] {
                return Err(Error::Dimension(format!("entries ({i},{j}) and ({j},{i}) differ")));
            }
        }
    }
    Ok(())
}

fn to_rational(m: &IntMatrix) -> Vec<Vec<Rational>> {
    m.iter().map(|r| r.iter().map(|&x| int(x)).collect()).collect()
}

/// Sylvester inertia by exact congruence diagonalization over ℚ.
///
/// When every remaining diagonal entry vanishes but some off-diagonal entry
/// `a_ij` does not, adding row/column `j` to row/column `i` makes the new
/// diagonal entry `2a_ij` nonzero.
pub fn inertia(m: &IntMatrix) -> Result<Inertia> {
    check_symmetric(m)?;
    let mut a = to_rational(m);
    let n = a.len();
    let mut out = Inertia { positive: 0, negative: 0, zero: 0 };
    let mut active: Vec<usize> = (0..n).collect();
    while !active.is_empty() {
        let pivot = active.iter().copied().find(|&i| !a[i][i].is_zero());
        let p = match pivot {
            Some(p) => p,
            None => {
                let pair = active
                    .iter()
                    .flat_map(|&i| active.iter().map(move |&j| (i, j)))
                    .find(|&(i, j)| i != j && !a[i][j].is_zero());
                match pair {
                    Some((i, j)) => {
                        for k in 0..n {
                            let v = a[j][k].clone();
                            a[i][k] += v;
                        }
                        for k in 0..n {
                            let v = a[k][j].clone();
                            a[k][i] += v;
                        }
                        i
                    }
                    None => {
                        out.zero += active.len();
                        break;
                    }
                }
            }
        };
        let d = a[p][p].clone();
        if d.is_positive() {
            out.positive += 1;
        } else {
            out.negative += 1;
        }
        active.retain(|&i| i != p);
        for &i in &active {
            let f = &a[i][p] / &d;
            if f.is_zero() {
                continue;
            }
            for &j in &active {
                let v = &f * &a[p][j];
                a[i][j] -= v;
            }
        }
        for &i in &active {
            a[i][p] = Rational::zero();
            a[p][i] = Rational::zero();
        }
    }
    Ok(out)
}

pub fn definiteness(m: &IntMatrix) -> Result<Definiteness> {
    let n = m.len();
    let i = inertia(m)?;
    Ok(if i.zero > 0 {
        Definiteness::Degenerate
    } else if i.negative == n {
        Definiteness::NegativeDefinite
    } else if i.positive == n {
        Definiteness::PositiveDefinite
    } else {
        Definiteness::Indefinite
    })
}

/// Fraction-free (Bareiss) determinant.
pub fn determinant(m: &IntMatrix) -> Result<BigInt> {
    let n = m.len();
    if m.iter().any(|r| r.len() != n) {
        return Err(Error::Dimension("matrix is not square".into()));
    }
    if n == 0 {
        return Ok(BigInt::one());
    }
    let mut a: Vec<Vec<BigInt>> = m.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect();
    let mut sign = 1;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                Some(i) => {
                    a.swap(i, k);
                    sign = -sign;
                }
                None => return Ok(BigInt::zero()),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = v / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    Ok(&a[n - 1][n - 1] * sign)
}

/// `|H₁|` of the boundary of the plumbing/handlebody with linking matrix `m`,
/// or `None` when `det m = 0` (positive first Betti number).
pub fn h1_order(m: &IntMatrix) -> Result<Option<u64>> {
    let d = determinant(m)?.abs();
    if d.is_zero() {
        return Ok(None);
    }
    d.to_u64().map(Some).ok_or_else(|| Error::Precondition(format!("|det| = {d} does not fit in 64 bits")))
}

/// Invariant factors `d₁ | d₂ | …` of `coker m`, with units dropped and `0`
/// standing for a free summand.
pub fn invariant_factors(m: &IntMatrix) -> Vec<u64> {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut a: Vec<Vec<BigInt>> = m.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect();
    let mut diag = Vec::new();
    let mut t = 0;
    while t < rows.min(cols) {
        let Some((pi, pj)) = (t..rows)
            .flat_map(|i| (t..cols).map(move |j| (i, j)))
            .filter(|&(i, j)| !a[i][j].is_zero())
            .min_by_key(|&(i, j)| a[i][j].abs())
        else {
            break;
        };
        a.swap(t, pi);
        for row in a.iter_mut() {
            row.swap(t, pj);
        }
        loop {
            let mut done = true;
            for i in t + 1..rows {
                let q = a[i][t].div_floor(&a[t][t]);
                if !q.is_zero() {
                    for j in t..cols {
                        let v = &q * &a[t][j];
                        a[i][j] -= v;
                    }
                }
                if !a[i][t].is_zero() {
                    done = false;
                }
            }
            for j in t + 1..cols {
                let q = a[t][j].div_floor(&a[t][t]);
                if !q.is_zero() {
                    for i in t..rows {
                        let v = &q * &a[i][t];
                        a[i][j] -= v;
                    }
                }
                if !a[t][j].is_zero() {
                    done = false;
                }
            }
            if done {
                // Divisibility: fold in any entry not divisible by the pivot.
                let bad = (t + 1..rows)
                    .flat_map(|i| (t + 1..cols).map(move |j| (i, j)))
                    .find(|&(i, j)| !a[i][j].is_multiple_of(&a[t][t]));
                match bad {
                    Some((i, _)) => {
                        for j in t..cols {
                            let v = a[i][j].clone();
                            a[t][j] += v;
                        }
                        continue;
                    }
                    None => break,
                }
            }
            let (pi, pj) = (t..rows)
                .flat_map(|i| (t..cols).map(move |j| (i, j)))
                .filter(|&(i, j)| (i == t || j == t) && !a[i][j].is_zero())
                .min_by_key(|&(i, j)| a[i][j].abs())
                .expect("pivot row or column is nonzero");
            a.swap(t, pi);
            for row in a.iter_mut() {
                row.swap(t, pj);
            }
        }
        diag.push(a[t][t].abs());
        t += 1;
    }
    let mut out: Vec<u64> = diag.into_iter().filter(|d| !d.is_one()).map(|d| d.to_u64().expect("fits")).collect();
    out.extend(std::iter::repeat_n(0, rows.saturating_sub(t)));
    out
}

/// The `k × k` tridiagonal matrix with diagonal `-1, -2, …, -2` and ones off
/// the diagonal.
pub fn b_k(k: usize) -> IntMatrix {
    let mut m = vec![vec![0; k]; k];
    for i in 0..k {
        m[i][i] = if i == 0 { -1 } else { -2 };
        if i + 1 < k {
            m[i][i + 1] = 1;
            m[i + 1][i] = 1;
        }
    }
    m
}

pub fn block_sum(a: &IntMatrix, b: &IntMatrix) -> IntMatrix {
    let (n, m) = (a.len(), b.len());
    let mut out = vec![vec![0; n + m]; n + m];
    for i in 0..n {
        out[i][..n].copy_from_slice(&a[i]);
    }
    for i in 0..m {
        out[n + i][n..].copy_from_slice(&b[i]);
    }
    out
}

/// A form is even iff every diagonal entry is even, i.e. `0` is characteristic.
pub fn is_even(m: &IntMatrix) -> bool {
    m.iter().enumerate().all(|(i, r)| r[i] % 2 == 0)
}

/// All `x ∈ ℤⁿ` with `xᵀ A x = c`, where `A = sign·m` is positive definite.
/// Uses exact Fincke–Pohst enumeration on the completed-square form.
pub fn vectors_of_norm(m: &IntMatrix, c: u64, negate: bool) -> Result<Vec<Vec<i64>>> {
    let n = m.len();
    let a: IntMatrix = if negate { m.iter().map(|r| r.iter().map(|x| -x).collect()).collect() } else { m.clone() };
    if definiteness(&a)? != Definiteness::PositiveDefinite {
        return Err(Error::Precondition("short-vector enumeration needs a definite form".into()));
    }
    // A = Σ d_i (x_i + Σ_{j>i} mu_ij x_j)²
    let mut q = to_rational(&a);
    let mut d = vec![Rational::zero(); n];
    let mut mu = vec![vec![Rational::zero(); n]; n];
    for i in 0..n {
        d[i] = q[i][i].clone();
        for j in i + 1..n {
            mu[i][j] = &q[i][j] / &d[i];
        }
        for j in i + 1..n {
            for k in i + 1..n {
                let v = &mu[i][j] * &q[i][k];
                q[j][k] -= v;
            }
        }
    }
    let mut out = Vec::new();
    let mut x = vec![0i64; n];
    search(n, &d, &mu, &mut x, int(c as i64), &mut out);
    Ok(out)
}

fn search(
    level: usize,
    d: &[Rational],
    mu: &[Vec<Rational>],
    x: &mut Vec<i64>,
    remaining: Rational,
    out: &mut Vec<Vec<i64>>,
) {
    if level == 0 {
        if remaining.is_zero() {
            out.push(x.clone());
        }
        return;
    }
    let i = level - 1;
    let n = x.len();
    let centre: Rational = -(i + 1..n).map(|j| &mu[i][j] * int(x[j])).fold(Rational::zero(), |s, t| s + t);
    let bound = &remaining / &d[i];
    let s = floor_i64(&bound).unwrap_or(0).max(0);
    let root = (s as f64).sqrt() as i64 + 2;
    let lo = floor_i64(&centre).unwrap() - root;
    let hi = floor_i64(&centre).unwrap() + root + 1;
    for xi in lo..=hi {
        let off = int(xi) - &centre;
        let used = &d[i] * &off * &off;
        if used <= remaining {
            x[i] = xi;
            search(level - 1, d, mu, x, &remaining - used, out);
        }
    }
    x[i] = 0;
}

/// Whether a definite unimodular form is diagonalizable over ℤ, i.e.
/// isomorphic to `±I`. `None` when the form is odd and of rank above 8.
pub fn diagonalizable_over_z(m: &IntMatrix) -> Result<Option<bool>> {
    let n = m.len();
    if n == 0 {
        return Ok(Some(true));
    }
    let def = definiteness(m)?;
    let negate = match def {
        Definiteness::NegativeDefinite => true,
        Definiteness::PositiveDefinite => false,
        _ => return Err(Error::Precondition("diagonalizability is only decided for definite forms".into())),
    };
    if !determinant(m)?.abs().is_one() {
        return Err(Error::Precondition("form is not unimodular".into()));
    }
    if is_even(m) {
        return Ok(Some(false));
    }
    if n > 8 {
        return Ok(None);
    }
    // A unimodular lattice splits as I_r ⊕ L' with L' free of norm-one
    // vectors, and there are exactly 2r norm-one vectors.
    let ones = vectors_of_norm(m, 1, negate)?;
    Ok(Some(ones.len() == 2 * n))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn e8() -> IntMatrix {
        // Negative definite E8 plumbing: a chain of seven -2 vertices with an
        // extra -2 vertex attached to the third one.
        let mut m = vec![vec![0; 8]; 8];
        for i in 0..8 {
            m[i][i] = -2;
        }
        for i in 0..6 {
            m[i][i + 1] = 1;
            m[i + 1][i] = 1;
        }
        m[2][7] = 1;
        m[7][2] = 1;
        m
    }

    #[test]
    fn bk_matrices() {
        for k in 1..=50 {
            let b = b_k(k);
            assert_eq!(definiteness(&b).unwrap(), Definiteness::NegativeDefinite, "k = {k}");
            assert_eq!(h1_order(&b).unwrap(), Some(1));
        }
        assert_eq!(h1_order(&block_sum(&b_k(5), &b_k(4))).unwrap(), Some(1));
    }

    #[test]
    fn classification() {
        let id = vec![vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]];
        assert_eq!(definiteness(&id).unwrap(), Definiteness::PositiveDefinite);
        assert_eq!(definiteness(&vec![vec![1, 0], vec![0, -1]]).unwrap(), Definiteness::Indefinite);
        assert_eq!(definiteness(&vec![vec![0, 1], vec![1, 0]]).unwrap(), Definiteness::Indefinite);
        assert_eq!(definiteness(&vec![vec![1, 1], vec![1, 1]]).unwrap(), Definiteness::Degenerate);
        assert_eq!(h1_order(&vec![vec![1, 1], vec![1, 1]]).unwrap(), None);
        assert!(definiteness(&vec![vec![1, 2], vec![0, 1]]).is_err());
    }

    #[test]
    fn determinant_and_factors() {
        assert_eq!(determinant(&e8()).unwrap(), BigInt::from(1));
        assert_eq!(determinant(&vec![vec![0, 2], vec![3, 0]]).unwrap(), BigInt::from(-6));
        assert_eq!(invariant_factors(&vec![vec![2, 0], vec![0, 2]]), vec![2, 2]);
        assert_eq!(invariant_factors(&vec![vec![2, 0], vec![0, 3]]), vec![6]);
        assert_eq!(invariant_factors(&vec![vec![4, 6], vec![6, 4]]), vec![2, 10]);
        assert_eq!(invariant_factors(&vec![vec![1, 1], vec![1, 1]]), vec![0]);
        assert_eq!(invariant_factors(&vec![vec![-5]]), vec![5]);
    }

    #[test]
    fn diagonalizability() {
        assert_eq!(diagonalizable_over_z(&e8()).unwrap(), Some(false));
        assert_eq!(diagonalizable_over_z(&b_k(6)).unwrap(), Some(true));
        let neg_id: IntMatrix = (0..3).map(|i| (0..3).map(|j| if i == j { -1 } else { 0 }).collect()).collect();
        assert_eq!(vectors_of_norm(&neg_id, 1, true).unwrap().len(), 6);
        assert_eq!(vectors_of_norm(&e8(), 2, true).unwrap().len(), 240);
    }
}
