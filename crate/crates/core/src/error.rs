use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("matrix is {rows}x{cols}, expected a square matrix")]
    NonSquare { rows: usize, cols: usize },
    #[error("dimension mismatch: {0} vs {1}")]
    DimensionMismatch(usize, usize),
    #[error("matrix must have at least one row and one column")]
    EmptyMatrix,
    #[error("expected {expected} entries, found {found}")]
    ShapeMismatch { expected: usize, found: usize },
    #[error("all columns are projectively equal; there is no unique line")]
    RankOne,
    #[error("configuration has tropical rank at least three")]
    NotCollinear,
    #[error("union of tropical segments is not a tree: {0}")]
    NotATree(String),
    #[error("ambient dimension {0} is not supported here")]
    UnsupportedDimension(usize),
    #[error("at least two points are required, got {0}")]
    TooFewPoints(usize),
    #[error("face {0:?} is not in the complex")]
    FaceNotInComplex(Vec<u32>),
    #[error("complex is not pure")]
    NotPure,
    #[error("order is not a permutation of the facets")]
    OrderMismatch,
    #[error("order is not a shelling (first violation at position {0})")]
    NotAShelling(usize),
    #[error("invalid class string: {0}")]
    InvalidClassString(String),
    #[error("length mismatch: {0} vs {1}")]
    LengthMismatch(usize, usize),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
