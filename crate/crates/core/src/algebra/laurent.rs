use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use super::gaussian::GaussianRational;
use super::rational::{int, Rational};
use crate::error::{Error, Result};

/// Coefficient field for [`LaurentPoly`]: ℚ or ℚ[i].
pub trait Coeff:
    Clone
    + PartialEq
    + fmt::Debug
    + fmt::Display
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
    + Send
    + Sync
{
}

impl<T> Coeff for T where
    T: Clone
        + PartialEq
        + fmt::Debug
        + fmt::Display
        + Zero
        + One
        + Add<Output = T>
        + Sub<Output = T>
        + Mul<Output = T>
        + Div<Output = T>
        + Neg<Output = T>
        + Send
        + Sync
{
}

/// Exact Laurent polynomial in one named variable.
///
/// Zero coefficients are never stored, so `terms` is empty exactly for the
/// zero polynomial. Ordinary polynomials are the Laurent polynomials whose
/// order is nonnegative; gcd and division are only defined on those.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LaurentPoly<C = Rational> {
    var: char,
    terms: BTreeMap<i64, C>,
}

impl<C: Coeff> LaurentPoly<C> {
    pub fn zero(var: char) -> Self {
        Self { var, terms: BTreeMap::new() }
    }

    pub fn constant(var: char, c: C) -> Self {
        Self::monomial(var, c, 0)
    }

    pub fn one(var: char) -> Self {
        Self::constant(var, C::one())
    }

    /// The variable itself.
    pub fn x(var: char) -> Self {
        Self::monomial(var, C::one(), 1)
    }

    pub fn monomial(var: char, c: C, exp: i64) -> Self {
        let mut p = Self::zero(var);
        p.add_term(exp, c);
        p
    }

    pub fn from_pairs<I: IntoIterator<Item = (i64, C)>>(var: char, pairs: I) -> Self {
        let mut p = Self::zero(var);
        for (e, c) in pairs {
            p.add_term(e, c);
        }
        p
    }

    /// Coefficients in ascending exponent order starting at `low`.
    pub fn from_coeffs(var: char, low: i64, coeffs: Vec<C>) -> Self {
        Self::from_pairs(var, coeffs.into_iter().enumerate().map(|(i, c)| (low + i as i64, c)))
    }

    pub fn var(&self) -> char {
        self.var
    }

    pub fn with_var(mut self, var: char) -> Self {
        self.var = var;
        self
    }

    pub fn add_term(&mut self, exp: i64, c: C) {
        if c.is_zero() {
            return;
        }
        let sum = match self.terms.remove(&exp) {
            Some(old) => old + c,
            None => c,
        };
        if !sum.is_zero() {
            self.terms.insert(exp, sum);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|&e| e == 0)
    }

    pub fn coeff(&self, exp: i64) -> C {
        self.terms.get(&exp).cloned().unwrap_or_else(C::zero)
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i64, &C)> {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn degree(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    pub fn order(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn leading_coeff(&self) -> Option<&C> {
        self.terms.values().next_back()
    }

    pub fn is_polynomial(&self) -> bool {
        self.order().is_none_or(|o| o >= 0)
    }

    pub fn scale(&self, c: &C) -> Self {
        Self::from_pairs(self.var, self.terms().map(|(e, x)| (e, x.clone() * c.clone())))
    }

    /// Multiply by `var^k`.
    pub fn shift(&self, k: i64) -> Self {
        Self { var: self.var, terms: self.terms.iter().map(|(e, c)| (e + k, c.clone())).collect() }
    }

    /// Multiply by the power of the variable that makes the order zero.
    pub fn cleared(&self) -> Self {
        match self.order() {
            Some(o) => self.shift(-o),
            None => self.clone(),
        }
    }

    pub fn map_coeffs<D: Coeff>(&self, f: impl Fn(&C) -> D) -> LaurentPoly<D> {
        LaurentPoly::from_pairs(self.var, self.terms().map(|(e, c)| (e, f(c))))
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one(self.var);
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Exact value at `x`. Fails for `x = 0` when a negative exponent is present.
    pub fn eval(&self, x: &C) -> Result<C> {
        if x.is_zero() && self.order().is_some_and(|o| o < 0) {
            return Err(Error::ZeroEvaluation);
        }
        let mut acc = C::zero();
        for (e, c) in self.terms() {
            acc = acc + c.clone() * power(x, e);
        }
        Ok(acc)
    }

    /// `P(var^k)`.
    pub fn substitute_power(&self, k: u32) -> Self {
        Self { var: self.var, terms: self.terms.iter().map(|(e, c)| (e * k as i64, c.clone())).collect() }
    }

    /// `P(var^-1)`.
    pub fn reflect(&self) -> Self {
        Self { var: self.var, terms: self.terms.iter().map(|(e, c)| (-e, c.clone())).collect() }
    }

    pub fn is_symmetric(&self) -> bool {
        *self == self.reflect()
    }

    pub fn derivative(&self) -> Self {
        Self::from_pairs(self.var, self.terms().map(|(e, c)| (e - 1, c.clone() * from_i64::<C>(e))))
    }

    /// Polynomial long division; both operands must be ordinary polynomials.
    pub fn div_rem(&self, divisor: &Self) -> Result<(Self, Self)> {
        if divisor.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if !self.is_polynomial() || !divisor.is_polynomial() {
            return Err(Error::NotPolynomial);
        }
        let dd = divisor.degree().unwrap();
        let lead = divisor.leading_coeff().unwrap().clone();
        let mut q = Self::zero(self.var);
        let mut r = self.clone();
        while let Some(rd) = r.degree() {
            if rd < dd {
                break;
            }
            let c = r.leading_coeff().unwrap().clone() / lead.clone();
            let m = Self::monomial(self.var, c.clone(), rd - dd);
            r = &r - &(&m * divisor);
            q.add_term(rd - dd, c);
        }
        Ok((q, r))
    }

    pub fn divides(&self, other: &Self) -> Result<bool> {
        Ok(other.div_rem(self)?.1.is_zero())
    }

    pub fn monic(&self) -> Self {
        match self.leading_coeff() {
            Some(l) => {
                let inv = C::one() / l.clone();
                self.scale(&inv)
            }
            None => self.clone(),
        }
    }

    /// Monic greatest common divisor of two ordinary polynomials.
    pub fn gcd(&self, other: &Self) -> Result<Self> {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b)?;
            a = b;
            b = r;
        }
        Ok(a.monic())
    }
}

impl LaurentPoly<Rational> {
    /// Exact `P''(1)`.
    pub fn second_derivative_at_one(&self) -> Rational {
        self.terms().fold(Rational::zero(), |acc, (e, c)| acc + c * int(e * (e - 1)))
    }

    pub fn eval_gaussian(&self, x: &GaussianRational) -> Result<GaussianRational> {
        self.to_gaussian().eval(x)
    }

    pub fn to_gaussian(&self) -> LaurentPoly<GaussianRational> {
        self.map_coeffs(|c| GaussianRational::real(c.clone()))
    }
}

fn from_i64<C: Coeff>(n: i64) -> C {
    let mut acc = C::zero();
    let unit = if n >= 0 { C::one() } else { -C::one() };
    for _ in 0..n.unsigned_abs() {
        acc = acc + unit.clone();
    }
    acc
}

fn power<C: Coeff>(x: &C, e: i64) -> C {
    let base = if e < 0 { C::one() / x.clone() } else { x.clone() };
    let mut acc = C::one();
    let mut b = base;
    let mut n = e.unsigned_abs();
    while n > 0 {
        if n & 1 == 1 {
            acc = acc * b.clone();
        }
        b = b.clone() * b;
        n >>= 1;
    }
    acc
}

impl<'a, C: Coeff> Add<&'a LaurentPoly<C>> for &'a LaurentPoly<C> {
    type Output = LaurentPoly<C>;
    fn add(self, o: &LaurentPoly<C>) -> LaurentPoly<C> {
        let mut out = self.clone();
        if self.is_constant() {
            out.var = o.var;
        }
        for (e, c) in o.terms() {
            out.add_term(e, c.clone());
        }
        out
    }
}

impl<'a, C: Coeff> Sub<&'a LaurentPoly<C>> for &'a LaurentPoly<C> {
    type Output = LaurentPoly<C>;
    fn sub(self, o: &LaurentPoly<C>) -> LaurentPoly<C> {
        self + &(-o)
    }
}

impl<'a, C: Coeff> Mul<&'a LaurentPoly<C>> for &'a LaurentPoly<C> {
    type Output = LaurentPoly<C>;
    fn mul(self, o: &LaurentPoly<C>) -> LaurentPoly<C> {
        let var = if self.is_constant() { o.var } else { self.var };
        let mut out = LaurentPoly::zero(var);
        for (e1, c1) in self.terms() {
            for (e2, c2) in o.terms() {
                out.add_term(e1 + e2, c1.clone() * c2.clone());
            }
        }
        out
    }
}

impl<C: Coeff> Neg for &LaurentPoly<C> {
    type Output = LaurentPoly<C>;
    fn neg(self) -> LaurentPoly<C> {
        LaurentPoly { var: self.var, terms: self.terms.iter().map(|(e, c)| (*e, -c.clone())).collect() }
    }
}

macro_rules! forward_owned_poly {
    ($($tr:ident $f:ident),*) => {$(
        impl<C: Coeff> $tr for LaurentPoly<C> {
            type Output = LaurentPoly<C>;
            fn $f(self, o: LaurentPoly<C>) -> LaurentPoly<C> { (&self).$f(&o) }
        }
    )*};
}
forward_owned_poly!(Add add, Sub sub, Mul mul);

impl<C: Coeff> Neg for LaurentPoly<C> {
    type Output = LaurentPoly<C>;
    fn neg(self) -> LaurentPoly<C> {
        -&self
    }
}

impl fmt::Display for LaurentPoly<Rational> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.terms().rev().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            match (i, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let show_coeff = e == 0 || !mag.is_one();
            if show_coeff {
                write!(f, "{mag}")?;
            }
            match e {
                0 => {}
                1 => write!(f, "{}", self.var)?,
                _ => write!(f, "{}^{}", self.var, e)?,
            }
        }
        Ok(())
    }
}

impl fmt::Display for LaurentPoly<GaussianRational> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> =
            self.terms().rev().map(|(e, c)| format!("({c}){}^{e}", self.var)).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::rat;

    fn t(pairs: &[(i64, i64)]) -> LaurentPoly {
        LaurentPoly::from_pairs('t', pairs.iter().map(|&(e, c)| (e, int(c))))
    }

    #[test]
    fn eval_examples() {
        let d52 = t(&[(1, 2), (0, -3), (-1, 2)]);
        assert_eq!(d52.eval(&int(1)).unwrap(), int(1));
        let tref = t(&[(1, 1), (0, -1), (-1, 1)]);
        assert_eq!(tref.eval(&int(-1)).unwrap(), int(-3));
        assert_eq!(t(&[(0, 1)]).eval(&rat(7, 3)).unwrap(), int(1));
        assert_eq!(tref.eval(&int(0)), Err(Error::ZeroEvaluation));
        assert_eq!(t(&[(2, 1)]).eval(&int(0)).unwrap(), int(0));
    }

    #[test]
    fn second_derivative_examples() {
        assert_eq!(t(&[(1, 1), (0, -1), (-1, 1)]).second_derivative_at_one(), int(2));
        // a t^2 - (2a-1) + a t^-2 at a = 1
        assert_eq!(t(&[(2, 1), (0, -1), (-2, 1)]).second_derivative_at_one(), int(8));
        assert_eq!(t(&[(0, 1)]).second_derivative_at_one(), int(0));
    }

    #[test]
    fn substitute_power_examples() {
        let tref = t(&[(1, 1), (0, -1), (-1, 1)]);
        assert_eq!(tref.substitute_power(2), t(&[(2, 1), (0, -1), (-2, 1)]));
        let d52 = t(&[(1, 2), (0, -3), (-1, 2)]);
        assert_eq!(d52.substitute_power(2), t(&[(2, 2), (0, -3), (-2, 2)]));
        assert_eq!(t(&[(0, 1)]).substitute_power(5), t(&[(0, 1)]));
    }

    #[test]
    fn division_and_gcd() {
        // (t^2 - 1) / (t - 1) = t + 1
        let (q, r) = t(&[(2, 1), (0, -1)]).div_rem(&t(&[(1, 1), (0, -1)])).unwrap();
        assert_eq!(q, t(&[(1, 1), (0, 1)]));
        assert!(r.is_zero());
        let g = t(&[(4, 1), (2, -1), (0, 1)]).gcd(&t(&[(3, 1), (0, -1)])).unwrap();
        assert_eq!(g, t(&[(0, 1)]));
        let g = t(&[(2, 1), (0, -1)]).gcd(&t(&[(2, 2), (1, -2)])).unwrap();
        assert_eq!(g, t(&[(1, 1), (0, -1)]));
        assert_eq!(t(&[(1, 1)]).div_rem(&LaurentPoly::zero('t')), Err(Error::DivisionByZero));
    }

    #[test]
    fn display_is_readable() {
        assert_eq!(t(&[(1, 2), (0, -3), (-1, 2)]).to_string(), "2t - 3 + 2t^-1");
        assert_eq!(t(&[(2, -1), (0, 1)]).to_string(), "-t^2 + 1");
        assert_eq!(LaurentPoly::<Rational>::zero('z').to_string(), "0");
    }
}
