use thiserror::Error;

use crate::formal::Basis;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("basis mismatch: {0} vs {1}")]
    BasisMismatch(Basis, Basis),

    /// A series coefficient beyond the known truncation order was requested.
    #[error("series truncated at order {available}, coefficient of order {needed} requested")]
    Truncated { needed: usize, available: usize },

    #[error("embedding table cutoff {cutoff} too small, index {needed} required")]
    CutoffExceeded { needed: usize, cutoff: usize },

    #[error("degree {needed} is beyond the expansion cutoff {cutoff}")]
    DegreeExceeded { needed: usize, cutoff: usize },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("not a polynomial: {0}")]
    NotPolynomial(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
