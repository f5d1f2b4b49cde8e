use thiserror::Error;

/// Errors produced by set construction and the algorithms in this crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("a set must contain at least one element")]
    Empty,

    #[error("elements must be strictly increasing ({prev} is followed by {next})")]
    NotIncreasing { prev: i64, next: i64 },

    #[error("integer magnitude exceeds 2^62")]
    Overflow,

    #[error("cannot parse set literal: {0}")]
    Parse(String),

    #[error("point has {got} coordinates, expected {expected}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("lattice dimension must be at least 1")]
    ZeroDimension,

    #[error("duplicate point {0:?}")]
    DuplicatePoint(Vec<i64>),

    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    #[error("hull counting supports ambient dimension 1..=3, got {0}")]
    UnsupportedDimension(usize),

    #[error("exact volume requires Freiman dimension 1, this set has dimension {0}")]
    NotOneDimensional(usize),

    #[error("a set with {0} element(s) is too small for this operation")]
    TooSmall(usize),

    #[error("instance too large for the bit table ({0}); split the instance into smaller ones")]
    Capacity(String),
}

pub type Result<T> = std::result::Result<T, Error>;
