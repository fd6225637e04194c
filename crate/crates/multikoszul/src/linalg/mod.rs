//! Exact linear algebra over Q or a prime field.

mod scalar;
mod solver;
mod subspace;
mod vector;

pub use scalar::{Field, Rational, Scalar};
pub use solver::{kernel, rank, SpanSolver};
pub use subspace::{Echelon, Matrix, Subspace};
pub use vector::SparseVec;

#[cfg(test)]
mod props;
