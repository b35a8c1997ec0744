//! Exact scalar arithmetic over the rationals and prime fields, and the dense
//! linear algebra (row reduction, kernels, subspace sums and intersections)
//! every other module is built on.

mod echelon;
mod field;
mod matrix;
mod subspace;

pub use echelon::{Echelon, SparseRow};
pub use field::{FieldError, FieldSpec, PrimeModulus, Scalar, MAX_MODULUS};
pub use matrix::{kernel_of, nullspace, rref, Matrix};
pub use subspace::{coordinates, span_intersect, span_sum, SubspaceBasis};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LinAlgError {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("field mismatch: {left} vs {right}")]
    FieldMismatch { left: FieldSpec, right: FieldSpec },
    #[error("row {row} has length {len}, expected {expected}")]
    RaggedRows { row: usize, len: usize, expected: usize },
}
