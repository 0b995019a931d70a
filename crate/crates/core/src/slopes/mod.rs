//! Surgery slopes and the instanton L-space deduction system.

pub mod cf;
pub mod farey;
pub mod gordon;
pub mod kb;
pub mod rank;
pub mod slope;

pub use cf::{eval_cf, negative_cf, positive_cf};
pub use farey::{check_farey, farey_sequence, FareyStep};
pub use gordon::{gordon_cable, CableSurgery};
pub use kb::{Contradiction, Fact, KnotAttributes, LSpaceKB, Refutation, Rule, Statement};
pub use rank::{kunneth_rank, lens_rank, rank_decompose, rp3_rank, triangle_rank_interval, ManifoldTag, RankInterval};
pub use slope::Slope;
