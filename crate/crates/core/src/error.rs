use thiserror::Error;

use crate::polygon::Diagonal;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid polygon size n={n}: {reason}")]
    InvalidSize { n: usize, reason: String },

    #[error("n={n} is too small for this operation (need n >= {min})")]
    TooSmall { n: usize, min: usize },

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("invalid diagonal {{{i},{j}}} for n={n}")]
    InvalidDiagonal { i: usize, j: usize, n: usize },

    #[error("diagonal {0} is not part of the triangulation")]
    NotPresent(Diagonal),

    #[error("size mismatch: {left} vs {right}")]
    MismatchedSize { left: usize, right: usize },

    #[error("invalid triangulation: {0}")]
    InvalidTriangulation(String),

    #[error("parse error: {0}")]
    Syntax(String),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("orbit of size two has no cycle (it is a single edge)")]
    SizeTwoOrbit,

    #[error("not flip-adjacent: {0} and {1}")]
    NotFlipAdjacent(String, String),

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("n={n} exceeds the limit {limit} for {what}")]
    TooLarge { n: usize, limit: usize, what: &'static str },

    #[error("internal invariant violated: {0}")]
    Internal(String),

    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
