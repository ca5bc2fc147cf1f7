//! Error type shared across the crate.

use thiserror::Error;

/// Errors reported by the library.
#[derive(Debug, Error)]
pub enum Error {
    #[error("degree {degree} outside the supported range 1..={max}")]
    DegreeOutOfRange { degree: usize, max: usize },

    #[error("degree mismatch: {0} vs {1}")]
    DegreeMismatch(usize, usize),

    #[error("rank mismatch: {0} vs {1}")]
    RankMismatch(usize, usize),

    #[error("sequence {0:?} is not a permutation of 1..={1}")]
    NotAPermutation(Vec<usize>, usize),

    #[error("partitions {0:?} and {1:?} have different sizes")]
    PartitionSizeMismatch(Vec<usize>, Vec<usize>),

    #[error("character index {k} outside 1..={max}")]
    CharacterIndex { k: usize, max: usize },

    #[error("simple-root index {index} outside 1..={rank}")]
    RootIndex { index: usize, rank: usize },

    #[error("coordinate vector of length {got} does not match rank {expected}")]
    CoordinateLength { got: usize, expected: usize },

    #[error("e-coordinates {0:?} do not sum to zero")]
    NotInHyperplane(Vec<f64>),

    #[error("weight {0:?} is not dominant")]
    NotDominant(Vec<i64>),

    #[error("weight {0:?} is not strictly dominant")]
    NotStrictlyDominant(Vec<i64>),

    #[error("weight {0:?} must be nonzero here")]
    ZeroWeight(Vec<i64>),

    #[error("matrix of order {order} does not match symmetric-group degree {degree}")]
    MatrixOrderMismatch { order: usize, degree: usize },

    #[error("matrix is not square")]
    NotSquare,

    #[error("term expansion at rank {rank} would have {terms} raw terms; rank <= {max} is supported")]
    ExpansionTooLarge { rank: usize, terms: u128, max: usize },

    #[error("grid export supports rank 2 only, got {0}")]
    GridRank(usize),

    #[error("invalid grid specification: {0}")]
    GridSpec(String),

    #[error("sample count must be >= 1")]
    NoSamples,

    #[error("unknown verification suite `{0}`")]
    UnknownSuite(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
