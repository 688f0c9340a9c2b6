use thiserror::Error;

use crate::shape::Cell;

/// Errors raised by the shifted-crystal library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parts must be positive and strictly decreasing: {0:?}")]
    NotStrict(Vec<usize>),

    #[error("inner shape {inner} is not contained in outer shape {outer}")]
    NotContained { outer: String, inner: String },

    #[error("partition {partition} does not fit in the stair of width {width}")]
    NotInStair { partition: String, width: usize },

    #[error("letter value {value} is outside the alphabet [1, {n}]")]
    LetterOutOfRange { value: usize, n: u8 },

    #[error("parse error: {0}")]
    Parse(String),

    #[error("filling does not match shape: {0}")]
    ShapeMismatch(String),

    #[error("filling is not semistandard at cell {cell:?}: {reason}")]
    NotSemistandard { cell: Cell, reason: &'static str },

    #[error("cell {0:?} is not an inner corner")]
    NotInnerCorner(Cell),

    #[error("cell {0:?} is not an outer corner")]
    NotOuterCorner(Cell),

    #[error("expected a straight shape, got {0}")]
    NotStraight(String),

    #[error("slide record does not apply: {0}")]
    RecordMismatch(String),

    #[error("invalid interval [{p}, {q}] for alphabet of size {n}")]
    InvalidInterval { p: usize, q: usize, n: u8 },

    #[error("invalid operator index {i} for alphabet of size {n}")]
    InvalidIndex { i: usize, n: u8 },

    #[error("overlapping cell {0:?} in splice")]
    Overlap(Cell),

    #[error("word length {len} exceeds the cap {cap}")]
    CapExceeded { len: usize, cap: usize },

    #[error("graph would have {count} vertices, above the cap {cap}")]
    TooManyVertices { count: usize, cap: usize },

    #[error("tableau is not a vertex of this graph")]
    NotAVertex,
}

pub type Result<T> = std::result::Result<T, Error>;
