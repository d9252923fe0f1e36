//! Exact computations on finite-dimensional solvable Lie algebras.
//!
//! Everything is exact: scalars live in a prime field `GF(p)` or in the
//! rationals, subspaces are kept in canonical reduced row echelon form, and
//! inner automorphisms `exp(ad x)` are built as truncated exponentials of
//! nilpotent derivations.
//!
//! The crate is layered bottom-up:
//!
//! * [`exact_linear`] scalars, dense matrices and canonical subspaces;
//! * [`lie_core`] algebras from structure constants, cores, centralizers,
//!   quotients, minimal ideals, chief series and maximal subalgebras;
//! * [`inner_auto`] the `exp(ad x)` automorphisms, the groups they generate
//!   and brute-force orbit searches;
//! * [`theorem_lab`] decision procedures for conjugacy of maximal subalgebras
//!   and checkable predicates for the accompanying structural results;
//! * [`catalog`] fixture algebras and a seeded random solvable generator.

pub mod catalog;
pub mod error;
pub mod exact_linear;
pub mod inner_auto;
pub mod lie_core;
pub mod limits;
pub mod theorem_lab;

pub use error::{Error, Result};
pub use exact_linear::{FieldDescriptor, Matrix, Scalar, Subspace};
pub use inner_auto::{InnerAutomorphism, InnerGroup};
pub use lie_core::{ChiefSeries, LieAlgebra, Subalgebra};
pub use limits::Limits;
