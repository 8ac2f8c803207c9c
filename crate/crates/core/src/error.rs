//! Error type shared by all modules.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("empty input")]
    EmptyInput,

    #[error("polytope is not centered (origin not in relative interior)")]
    NotCentered,

    #[error("polytope is not full-dimensional")]
    NotFullDimensional,

    #[error("operation not defined for a trivial face")]
    TrivialFace,

    #[error("cone has no nonzero generator")]
    ZeroCone,

    #[error("invalid construction: {0}")]
    InvalidConstruction(String),

    #[error("domain error: {0}")]
    Domain(String),

    #[error("polytope is not perfectly centered: {0}")]
    NotPerfectlyCentered(String),

    #[error("perfect centering lost after rounding step {round}")]
    PerfectCenteringLost { round: usize },

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
