//! Exact tropical geometry of collinear point configurations.
//!
//! Matrices are read column-wise as points of tropical projective space over
//! the min-plus semiring. The crate computes tropical and Barvinok ranks,
//! builds the canonical tropical line through a rank-two configuration, and
//! enumerates the simplicial complexes of `d x n` matrices of tropical rank
//! two (`T`) and Barvinok rank two (`B`), with f-vectors, shellings and
//! integer homology.
//!
//! The geometric code is generic over [`Scalar`]; the aliases below fix the
//! exact rational instantiation used by the command line tool.

pub mod barvinok_classes;
pub mod canonical_line;
pub mod complex_gen;
pub mod error;
pub mod homology;
pub mod io;
pub mod matrix;
pub mod repro;
pub mod scalar;
pub mod shelling;
pub mod simplicial;
pub mod trop_core;
pub mod trop_hull;

pub use error::{Error, Result};
pub use matrix::{Matrix, ProjectivePoint, Support};
pub use scalar::Scalar;

/// Arbitrary precision rational.
pub type Rational = num_rational::BigRational;
/// Exact rational matrix; columns are points of tropical projective space.
pub type TropicalMatrix = Matrix<Rational>;
/// Matrix with machine integer entries, used for generated configurations.
pub type IntMatrix = Matrix<i64>;
pub type RationalPoint = ProjectivePoint<Rational>;
