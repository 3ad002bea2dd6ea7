use thiserror::Error;

/// Errors produced by the combinatorial routines.
///
/// `Invariant` is reserved for conditions that a correct implementation
/// never reaches; callers should treat it as a bug report rather than bad
/// input.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid partition {parts:?}: {reason}")]
    InvalidPartition { parts: Vec<u32>, reason: String },

    #[error("invalid permutation {one_rowed:?}: {reason}")]
    InvalidPermutation { one_rowed: Vec<u32>, reason: String },

    #[error("malformed tableau: {0}")]
    MalformedTableau(String),

    #[error("tableau is not semistandard: {0}")]
    NotSemistandard(String),

    #[error("tableau is not a key")]
    NotKey,

    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),

    #[error("alphabet size mismatch: expected n = {expected}, got {found}")]
    AlphabetMismatch { expected: usize, found: usize },

    #[error("cell (col {col}, row {row}) is outside the shape")]
    CellOutOfShape { col: usize, row: usize },

    #[error("index {index} out of range {range}")]
    IndexOutOfRange { index: usize, range: String },

    #[error("not a {kind} corner: (col {col}, row {row})")]
    NotACorner {
        kind: &'static str,
        col: usize,
        row: usize,
    },

    #[error("malformed skew tableau: {0}")]
    MalformedSkew(String),

    #[error("empty sequence")]
    EmptySequence,

    #[error("permutation {0:?} avoids 312")]
    Avoids312(Vec<u32>),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("internal invariant violated: {0}")]
    Invariant(String),
}

pub type Result<T> = std::result::Result<T, Error>;
