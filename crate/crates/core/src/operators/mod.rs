//! Generalized-eigenspace projections, the Weyl algebra in one variable, and
//! the closed-form evaluation of Donaldson-series pairings.

pub mod donaldson;
pub mod gauss_exp;
pub mod matrix;
pub mod pairing;
pub mod projection;
pub mod weyl;

pub use donaldson::{orthogonality_matrix, BasicClass, DonaldsonSeriesModel};
pub use gauss_exp::{apply_ds_poly, apply_weyl, GaussExpSum, GaussExpTerm};
pub use matrix::SquareMatrix;
pub use pairing::distinct_pairing_vector;
pub use projection::{pbot, pbot_for_genus, projection_polynomial};
pub use weyl::{build_di, extract_gi, weyl_normal_order, LinearFactor, WeylOperator};
