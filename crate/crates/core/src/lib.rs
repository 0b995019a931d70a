//! Exact-arithmetic toolkit for certifying nontrivial and irreducible SU(2)
//! representations of closed 3-manifolds built by Dehn surgery, Seifert
//! fibrations and Stein handlebodies.
//!
//! Nothing here uses floating point. Gauge-theoretic theorems enter as
//! deduction rules with citations; everything that can be computed is
//! computed exactly.

pub mod algebra;
pub mod certs;
pub mod cli;
pub mod error;
pub mod format;
pub mod knots;
pub mod operators;
pub mod slopes;
pub mod stein;

pub use error::{Error, Result};

pub const VERSION: &str = env!("CARGO_PKG_VERSION");
