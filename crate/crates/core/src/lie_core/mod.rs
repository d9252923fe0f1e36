//! Lie algebras given by structure constants, and their subspace calculus.

mod enumeration;
mod quotient;
mod structure;

pub use enumeration::{complemented_chief_factor, ChiefSeries};
pub use quotient::Quotient;
pub use structure::NilpotencyClass;

use crate::error::{Error, Result};
use crate::exact_linear::{vector, FieldDescriptor, Matrix, Scalar, Subspace};

/// A finite-dimensional Lie algebra on the basis `b_0, …, b_{n-1}` with
/// `[b_i, b_j] = Σ_k c_ij^k b_k`.
///
/// Only the products with `i < j` are supplied; antisymmetry fills in the
/// rest. The Jacobi identity is checked on construction. Solvability is not
/// required here; theorem-level operations check it themselves.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LieAlgebra {
    field: FieldDescriptor,
    dim: usize,
    names: Vec<String>,
    // table[i * dim + j] = [b_i, b_j]
    table: Vec<Vec<Scalar>>,
}

impl LieAlgebra {
    /// Builds an algebra from the products `[b_i, b_j]` for `i < j`. Missing
    /// pairs are zero. Empty `names` defaults to `b0, b1, …`.
    pub fn new(
        field: FieldDescriptor,
        dim: usize,
        brackets: Vec<(usize, usize, Vec<Scalar>)>,
        names: Vec<String>,
    ) -> Result<Self> {
        let names = if names.is_empty() {
            (0..dim).map(|i| format!("b{i}")).collect()
        } else {
            names
        };
        if names.len() != dim {
            return Err(Error::BadDimensions(format!(
                "{} basis names for dimension {dim}",
                names.len()
            )));
        }
        let mut table = vec![vector::zeros(field, dim); dim * dim];
        let mut seen = vec![false; dim * dim];
        for (i, j, value) in brackets {
            if i >= j || j >= dim {
                return Err(Error::BadDimensions(format!(
                    "bracket index pair ({i}, {j}) must satisfy i < j < {dim}"
                )));
            }
            if value.len() != dim {
                return Err(Error::BadDimensions(format!(
                    "bracket ({i}, {j}) has {} coordinates, expected {dim}",
                    value.len()
                )));
            }
            if let Some(bad) = value.iter().find(|s| s.field() != field) {
                return Err(Error::FieldMismatch(bad.field().to_string(), field.to_string()));
            }
            if std::mem::replace(&mut seen[i * dim + j], true) {
                return Err(Error::BadDimensions(format!("bracket ({i}, {j}) given twice")));
            }
            table[j * dim + i] = vector::neg(&value);
            table[i * dim + j] = value;
        }
        let algebra = LieAlgebra {
            field,
            dim,
            names,
            table,
        };
        if let Some((i, j, k)) = algebra.jacobi_violation() {
            return Err(Error::JacobiViolation { i, j, k });
        }
        Ok(algebra)
    }

    pub fn field(&self) -> FieldDescriptor {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn basis_names(&self) -> &[String] {
        &self.names
    }

    /// `[b_i, b_j]`.
    pub fn basis_bracket(&self, i: usize, j: usize) -> &[Scalar] {
        &self.table[i * self.dim + j]
    }

    /// Nonzero products `[b_i, b_j]` with `i < j`, in index order.
    pub fn structure_constants(&self) -> impl Iterator<Item = (usize, usize, &[Scalar])> + '_ {
        (0..self.dim)
            .flat_map(move |i| (i + 1..self.dim).map(move |j| (i, j)))
            .map(|(i, j)| (i, j, self.basis_bracket(i, j)))
            .filter(|(_, _, v)| !vector::is_zero(v))
    }

    pub fn basis_vector(&self, i: usize) -> Vec<Scalar> {
        vector::unit(self.field, self.dim, i)
    }

    pub fn zero_vector(&self) -> Vec<Scalar> {
        vector::zeros(self.field, self.dim)
    }

    pub fn zero_space(&self) -> Subspace {
        Subspace::zero(self.field, self.dim)
    }

    pub fn full_space(&self) -> Subspace {
        Subspace::full(self.field, self.dim)
    }

    /// Subspace spanned by coordinate vectors, in canonical form.
    pub fn span(&self, vectors: Vec<Vec<Scalar>>) -> Subspace {
        Subspace::span(self.field, self.dim, vectors)
    }

    pub fn bracket(&self, u: &[Scalar], v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(u.len(), self.dim, "vector length mismatch");
        assert_eq!(v.len(), self.dim, "vector length mismatch");
        let mut out = self.zero_vector();
        for (i, a) in u.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in v.iter().enumerate() {
                if b.is_zero() || i == j {
                    continue;
                }
                vector::axpy(&mut out, &(a * b), self.basis_bracket(i, j));
            }
        }
        out
    }

    /// Matrix of `ad x : b ↦ [b, x]` acting on column coordinates.
    pub fn ad(&self, x: &[Scalar]) -> Matrix {
        let columns: Vec<Vec<Scalar>> = (0..self.dim)
            .map(|j| self.bracket(&self.basis_vector(j), x))
            .collect();
        Matrix::from_columns(self.field, self.dim, &columns)
    }

    fn jacobi_violation(&self) -> Option<(usize, usize, usize)> {
        let n = self.dim;
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    let (bi, bj, bk) = (self.basis_vector(i), self.basis_vector(j), self.basis_vector(k));
                    let t1 = self.bracket(self.basis_bracket(i, j), &bk);
                    let t2 = self.bracket(self.basis_bracket(j, k), &bi);
                    let t3 = self.bracket(self.basis_bracket(k, i), &bj);
                    if !vector::is_zero(&vector::add(&vector::add(&t1, &t2), &t3)) {
                        return Some((i, j, k));
                    }
                }
            }
        }
        None
    }

    /// A matrix `φ` is an automorphism when it is invertible and
    /// `φ[b_i, b_j] = [φ b_i, φ b_j]` for all basis pairs.
    pub fn is_automorphism(&self, phi: &Matrix) -> bool {
        if phi.rows() != self.dim || !phi.is_invertible() {
            return false;
        }
        let images: Vec<Vec<Scalar>> = (0..self.dim).map(|j| phi.column(j)).collect();
        (0..self.dim).all(|i| {
            (i + 1..self.dim).all(|j| phi.apply(self.basis_bracket(i, j)) == self.bracket(&images[i], &images[j]))
        })
    }
}

/// A subspace of a particular algebra known to be closed under the bracket.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subalgebra<'a> {
    parent: &'a LieAlgebra,
    space: Subspace,
}

impl<'a> Subalgebra<'a> {
    pub fn new(parent: &'a LieAlgebra, space: Subspace) -> Result<Self> {
        if space.ambient_dim() != parent.dim() {
            return Err(Error::AmbientMismatch(parent.dim(), space.ambient_dim()));
        }
        if !parent.is_subalgebra(&space) {
            return Err(Error::NotASubalgebra);
        }
        Ok(Subalgebra { parent, space })
    }

    pub(crate) fn new_unchecked(parent: &'a LieAlgebra, space: Subspace) -> Self {
        Subalgebra { parent, space }
    }

    pub fn parent(&self) -> &'a LieAlgebra {
        self.parent
    }

    pub fn space(&self) -> &Subspace {
        &self.space
    }

    pub fn into_space(self) -> Subspace {
        self.space
    }
}
