//! Exact rational, Gaussian-rational and Laurent-polynomial arithmetic.

pub mod arith;
pub mod cyclotomic;
pub mod gaussian;
pub mod laurent;
pub mod rational;

pub use num_bigint::BigInt;
pub use arith::{divisors, euler_phi, factorize, is_prime_power, mobius};
pub use cyclotomic::{cyclotomic, pth_root_zero, root_of_unity_zero};
pub use gaussian::GaussianRational;
pub use laurent::{Coeff, LaurentPoly};
pub use rational::{
    binomial, factorial, falling, floor_i64, int, is_integral, parse_rational, rat, to_i64, Rational,
};
