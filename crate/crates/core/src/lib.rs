//! Exact algebra of real-time energy functions and the automata built on it.
//!
//! A real-time energy automaton has states that earn energy at a fixed rate
//! while time passes, and transitions that cost energy and require a minimum
//! level to be taken. Its behaviour from initial energy `x` with a time budget
//! `t` is an energy function: the best final energy reachable, or `⊥` when no
//! run exists. These functions form a Kleene algebra under sequential
//! composition and pointwise maximum, and Boolean functions describing infinite
//! runs form a semimodule over it. Both are implemented here with exact
//! rational arithmetic, which makes reachability, coverability and Büchi
//! acceptance decidable by computing matrix closures.
//!
//! * [`energy`]: atoms, path functions in normal form, the semiring [`Rtef`].
//! * [`omega`]: infinite-run values [`OmegaVal`] and the `ω` operation.
//! * [`matrix`]: matrices over [`Rtef`], their star and Büchi vectors.
//! * [`model`]: the textual model format and conversion to matrices.
//! * [`report`]: the queries behind the `rtea` command line tool.

#![allow(clippy::result_large_err, clippy::large_enum_variant)]

pub mod energy;
pub mod error;
pub mod matrix;
pub mod model;
pub mod number;
pub mod omega;
#[cfg(feature = "oracles")]
pub mod oracles;
pub mod report;

pub use energy::{Atom, LinearRtef, Rtef};
pub use error::{AtomError, ModelError, NumberError};
pub use matrix::{AutomatonRep, RtefMatrix};
pub use model::RteaModel;
pub use number::{ExtEnergy, Rational, TimeDur};
pub use omega::OmegaVal;
