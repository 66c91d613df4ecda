use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Everything that can go wrong in `minplus-core`.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch in {op}: {}x{} vs {}x{}", left.0, left.1, right.0, right.1)]
    DimensionMismatch {
        op: &'static str,
        left: (usize, usize),
        right: (usize, usize),
    },

    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },

    #[error("overflow: {lhs} + {rhs} does not fit in a 64-bit signed integer")]
    Overflow { lhs: i64, rhs: i64 },

    #[error("order {n} is too large for permutation enumeration (max {max})")]
    TooLarge { n: usize, max: usize },

    #[error("invalid permutation mapping {0:?}")]
    InvalidPermutation(Vec<usize>),

    #[error("ragged rows: line {line} has {found} entries, expected {expected}")]
    RaggedRows {
        line: usize,
        expected: usize,
        found: usize,
    },

    #[error("bad token {token:?} on line {line}: expected `E` or an integer")]
    BadToken { line: usize, token: String },

    #[error("empty input: no matrix rows")]
    Empty,

    #[error("malformed JSON matrix: {0}")]
    Json(String),
}
