//! The semiring of real-time energy functions.

mod atom;
mod linear;
mod order;
pub mod region;
mod rtef;

pub use atom::Atom;
pub use linear::LinearRtef;
pub use order::{leq_components, leq_linear};
pub use region::{eval_regions, extract_regions, RegionPiece};
pub use rtef::Rtef;
