//! Conway and Alexander polynomials of knots and links, skein
//! recombination, cabling, and Casson-invariant formulas.

pub mod cable;
pub mod conway;
pub mod record;
pub mod skein;
pub mod table;

pub use cable::{cable_alexander, cable_genus, torus_alexander};
pub use conway::{
    alexander_to_conway, casson_plus_one_surgery, conway_to_alexander, genus1_alexander, hoste_casson, phi1,
};
pub use record::{KnotEntry, KnotRecord, LinkEntry, LinkRecord};
pub use skein::{y_mn_link, SkeinExpr, SkeinValue};
pub use table::{KnotRegistry, KnotTable};
