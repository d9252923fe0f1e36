//! Exact scalars, dense matrices and canonical subspaces.

mod enumerate;
mod matrix;
mod scalar;
mod subspace;
pub mod vector;

pub use enumerate::{enumerate_subspaces, gaussian_binomial, subspace_count};
pub use matrix::Matrix;
pub use scalar::{FieldDescriptor, Scalar};
pub use subspace::Subspace;
