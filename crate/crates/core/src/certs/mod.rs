//! SU(2) representation certificates.

pub mod certify;
pub mod group;
pub mod reps;

pub use certify::{certify, Certificate, Conclusion, HomologySource, Query, RefutationKnot, Step};
pub use group::{small_h1_cyclic_finite, FiniteAbelianGroup};
pub use reps::{boyer_nicas_dim, cyclically_finite_surgery, reducible_classes, tangent_dim, AdjointDimension};
