use thiserror::Error;

use crate::algebra::Algebra;

/// Errors produced by the library surface.
///
/// Everything internal is exact, so there are no numerical error variants:
/// a computation either runs or was asked for an unsupported combination.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("algebra {0} has no structure table")]
    UnsupportedAlgebra(Algebra),

    #[error("operator {0} is only defined over {1}")]
    WrongAlgebra(String, Algebra),

    #[error("imaginary index {index} out of range 1..={max} for {algebra}")]
    IndexOutOfRange {
        algebra: Algebra,
        index: u8,
        max: u8,
    },

    #[error("vector has length {got}, expected {want}")]
    DimensionMismatch { got: usize, want: usize },

    #[error("block pattern {0} is not one of 1..=4")]
    InvalidPattern(u8),

    #[error("matrix entry at ({row},{col}) is not an integer")]
    NonIntegerEntry { row: usize, col: usize },

    #[error("cannot parse operator word {0:?}: {1}")]
    WordParse(String, String),

    #[error("gamma set {set}: pair ({a},{b}) violates the Clifford contract")]
    CliffordFailure { set: String, a: usize, b: usize },

    #[error("basis {label}: expected span rank {expected}, computed {got}")]
    RankMismatch {
        label: String,
        expected: usize,
        got: usize,
    },
}

pub type Result<T> = std::result::Result<T, Error>;
