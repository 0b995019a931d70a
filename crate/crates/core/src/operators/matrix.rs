use std::fmt;
use std::ops::{Add, Mul, Sub};

use num_traits::{One, Zero};

use crate::algebra::{GaussianRational, LaurentPoly, Rational};
use crate::error::{Error, Result};

type G = GaussianRational;

/// Dense square matrix over ℚ[i].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SquareMatrix {
    n: usize,
    data: Vec<G>,
}

impl SquareMatrix {
    pub fn from_rows(rows: Vec<Vec<G>>) -> Result<Self> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::Dimension("rows must all have length equal to the row count".into()));
        }
        Ok(Self { n, data: rows.into_iter().flatten().collect() })
    }

    pub fn from_rational_rows(rows: Vec<Vec<Rational>>) -> Result<Self> {
        Self::from_rows(rows.into_iter().map(|r| r.into_iter().map(G::real).collect()).collect())
    }

    pub fn zero(n: usize) -> Self {
        Self { n, data: vec![G::zero(); n * n] }
    }

    pub fn identity(n: usize) -> Self {
        Self::diagonal(vec![G::one(); n])
    }

    pub fn diagonal(diag: Vec<G>) -> Self {
        let n = diag.len();
        let mut m = Self::zero(n);
        for (i, d) in diag.into_iter().enumerate() {
            m[(i, i)] = d;
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn scale(&self, c: &G) -> Self {
        Self { n: self.n, data: self.data.iter().map(|x| x * c).collect() }
    }

    /// `A - λ I`.
    pub fn shifted(&self, lambda: &G) -> Self {
        let mut m = self.clone();
        for i in 0..self.n {
            m[(i, i)] = &m[(i, i)] - lambda;
        }
        m
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::identity(self.n);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    pub fn trace(&self) -> G {
        (0..self.n).fold(G::zero(), |acc, i| acc + &self[(i, i)])
    }

    /// `p(A)` by Horner's rule; `p` must be an ordinary polynomial.
    pub fn eval_poly(&self, p: &LaurentPoly<Rational>) -> Result<Self> {
        if !p.is_polynomial() {
            return Err(Error::NotPolynomial);
        }
        let mut acc = Self::zero(self.n);
        let Some(deg) = p.degree() else { return Ok(acc) };
        for e in (0..=deg).rev() {
            acc = &(&acc * self) + &Self::identity(self.n).scale(&G::real(p.coeff(e)));
        }
        Ok(acc)
    }

    pub fn rank(&self) -> usize {
        let n = self.n;
        let mut m = self.data.clone();
        let mut rank = 0;
        for col in 0..n {
            let Some(piv) = (rank..n).find(|&r| !m[r * n + col].is_zero()) else { continue };
            for c in 0..n {
                m.swap(rank * n + c, piv * n + c);
            }
            let inv = m[rank * n + col].checked_inv().unwrap();
            for r in 0..n {
                if r != rank && !m[r * n + col].is_zero() {
                    let f = &m[r * n + col] * &inv;
                    for c in col..n {
                        let v = &f * &m[rank * n + c];
                        m[r * n + c] = &m[r * n + c] - &v;
                    }
                }
            }
            rank += 1;
        }
        rank
    }

    /// Dimension of the generalized eigenspace of `λ`: `dim ker (A - λ)^N`.
    pub fn generalized_multiplicity(&self, lambda: &G) -> usize {
        self.n - self.shifted(lambda).pow(self.n as u32).rank()
    }

    /// Characteristic polynomial `det(t I - A)` by Faddeev–LeVerrier.
    pub fn charpoly(&self) -> LaurentPoly<G> {
        let n = self.n;
        let mut coeffs = vec![G::zero(); n + 1];
        coeffs[n] = G::one();
        let mut m = Self::zero(n);
        for k in 1..=n {
            m = &(self * &m) + &Self::identity(n).scale(&coeffs[n - k + 1]);
            let tr = (self * &m).trace();
            coeffs[n - k] = -(tr / G::real(Rational::from_integer((k as i64).into())));
        }
        LaurentPoly::from_coeffs('t', 0, coeffs)
    }
}

impl std::ops::Index<(usize, usize)> for SquareMatrix {
    type Output = G;
    fn index(&self, (r, c): (usize, usize)) -> &G {
        &self.data[r * self.n + c]
    }
}

impl std::ops::IndexMut<(usize, usize)> for SquareMatrix {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut G {
        &mut self.data[r * self.n + c]
    }
}

impl<'a> Mul<&'a SquareMatrix> for &'a SquareMatrix {
    type Output = SquareMatrix;
    fn mul(self, o: &SquareMatrix) -> SquareMatrix {
        assert_eq!(self.n, o.n, "dimension mismatch");
        let n = self.n;
        let mut out = SquareMatrix::zero(n);
        for i in 0..n {
            for k in 0..n {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    if !o[(k, j)].is_zero() {
                        out[(i, j)] = &out[(i, j)] + &(a * &o[(k, j)]);
                    }
                }
            }
        }
        out
    }
}

impl<'a> Add<&'a SquareMatrix> for &'a SquareMatrix {
    type Output = SquareMatrix;
    fn add(self, o: &SquareMatrix) -> SquareMatrix {
        assert_eq!(self.n, o.n, "dimension mismatch");
        SquareMatrix { n: self.n, data: self.data.iter().zip(&o.data).map(|(a, b)| a + b).collect() }
    }
}

impl<'a> Sub<&'a SquareMatrix> for &'a SquareMatrix {
    type Output = SquareMatrix;
    fn sub(self, o: &SquareMatrix) -> SquareMatrix {
        assert_eq!(self.n, o.n, "dimension mismatch");
        SquareMatrix { n: self.n, data: self.data.iter().zip(&o.data).map(|(a, b)| a - b).collect() }
    }
}

impl fmt::Display for SquareMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.n {
            let row: Vec<String> = (0..self.n).map(|c| self[(r, c)].to_string()).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::int;

    fn g(n: i64) -> G {
        G::real(int(n))
    }

    #[test]
    fn rank_and_multiplicity() {
        let mut a = SquareMatrix::diagonal(vec![g(2), g(2), g(0)]);
        a[(0, 1)] = g(1);
        assert_eq!(a.rank(), 2);
        assert_eq!(a.generalized_multiplicity(&g(2)), 2);
        assert_eq!(a.generalized_multiplicity(&g(0)), 1);
        assert_eq!(a.generalized_multiplicity(&g(5)), 0);
    }

    #[test]
    fn charpoly_of_diagonal() {
        let a = SquareMatrix::diagonal(vec![g(2), g(-2), G::imag(int(2))]);
        let chi = a.charpoly();
        for root in [g(2), g(-2), G::imag(int(2))] {
            assert!(chi.eval(&root).unwrap().is_zero());
        }
        assert_eq!(chi.degree(), Some(3));
    }

    #[test]
    fn eval_poly_matches_direct() {
        let mut a = SquareMatrix::diagonal(vec![g(1), g(3)]);
        a[(0, 1)] = g(4);
        let p = LaurentPoly::from_pairs('t', [(2, int(1)), (0, int(-1))]);
        let direct = &(&a * &a) - &SquareMatrix::identity(2);
        assert_eq!(a.eval_poly(&p).unwrap(), direct);
    }
}
