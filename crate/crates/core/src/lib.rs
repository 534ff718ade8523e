//! Exact computations in the stable character rings of the classical groups.
//!
//! The crate works with three bases of the ring of symmetric functions:
//! Schur functions and the symplectic and orthogonal universal characters.
//! On top of Littlewood–Richardson and Newell–Littlewood multiplication it
//! builds the skewing embeddings `f_p` attached to a power series `p`, the
//! Kirillov–Reshetikhin style decompositions they induce, and a set of
//! verification routines for identities between their coefficients.

pub mod bcd;
pub mod cache;
pub mod embeddings;
pub mod error;
pub mod formal;
pub mod kr;
pub mod partition;
pub mod rational;
pub mod schur;
pub mod series;

pub use error::{Error, Result};
pub use formal::{Basis, FormalSum};
pub use partition::Partition;
pub use rational::Rational;
