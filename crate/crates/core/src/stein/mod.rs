//! Legendrian and Stein handlebody combinatorics, integral forms and Seifert
//! fibered homology spheres.

pub mod forms;
pub mod gompf;
pub mod legendrian;
pub mod seifert;

pub use forms::{
    b_k, block_sum, definiteness, determinant, diagonalizable_over_z, h1_order, inertia, invariant_factors, is_even,
    Definiteness, Inertia, IntMatrix,
};
pub use gompf::{gompf_chern, is_zero, rank_lower_bound_from_stein, y_mn_model, SteinHandlebodyModel};
pub use legendrian::{
    overlap_threshold, positive_knot_spectrum, rotation_spectrum, LegendrianComponent, RotationSpectrum,
    StabilizationSign,
};
pub use seifert::{
    c1_nonzero_plumbing, filling_override, orientation_class, seifert_homology_spheres, seifert_stein_diagram,
    seifert_sweep, sfs_lspace_classify, FillingOverride, Plumbing, SeifertData, SteinDiagram, SweepResult,
};
