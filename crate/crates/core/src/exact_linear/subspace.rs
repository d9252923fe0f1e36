use std::cmp::Ordering;
use std::fmt;

use super::vector;
use super::{FieldDescriptor, Matrix, Scalar};
use crate::error::{Error, Result};

/// A subspace of `F^n` stored by its canonical basis: the nonzero rows of the
/// reduced row echelon form of any spanning set. Two subspaces are equal
/// exactly when their bases are entry-wise equal.
///
/// Binary operations on subspaces of different ambient dimension panic; the
/// `try_` variants return [`Error::AmbientMismatch`] instead.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subspace {
    ambient: usize,
    basis: Matrix,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn span(field: FieldDescriptor, ambient: usize, vectors: Vec<Vec<Scalar>>) -> Self {
        for v in &vectors {
            assert_eq!(v.len(), ambient, "vector length does not match ambient dimension");
        }
        let m = Matrix::from_rows(field, ambient, vectors).expect("vectors share the field");
        Subspace::from_matrix(&m)
    }

    /// Row space of `m`.
    pub fn from_matrix(m: &Matrix) -> Self {
        let (reduced, pivots) = m.rref_with_pivots();
        let rows = reduced.row_vectors().into_iter().take(pivots.len()).collect();
        let basis = Matrix::from_rows(m.field(), m.cols(), rows).expect("rows come from m");
        Subspace {
            ambient: m.cols(),
            basis,
            pivots,
        }
    }

    pub fn zero(field: FieldDescriptor, ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: Matrix::zeros(field, 0, ambient),
            pivots: Vec::new(),
        }
    }

    pub fn full(field: FieldDescriptor, ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: Matrix::identity(field, ambient),
            pivots: (0..ambient).collect(),
        }
    }

    pub fn field(&self) -> FieldDescriptor {
        self.basis.field()
    }

    pub fn dim(&self) -> usize {
        self.pivots.len()
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient
    }

    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn basis_vectors(&self) -> Vec<Vec<Scalar>> {
        self.basis.row_vectors()
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Coordinates outside the pivot columns; their unit vectors span a
    /// complement of `self`.
    pub fn free_columns(&self) -> Vec<usize> {
        (0..self.ambient).filter(|c| !self.pivots.contains(c)).collect()
    }

    /// Remainder of `v` after eliminating the pivot coordinates; zero iff
    /// `v ∈ self`.
    pub fn reduce(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(v.len(), self.ambient, "vector length does not match ambient dimension");
        let mut out = v.to_vec();
        for (row, &pc) in self.pivots.iter().enumerate() {
            if out[pc].is_zero() {
                continue;
            }
            let c = -&out[pc];
            vector::axpy(&mut out, &c, self.basis.row(row));
        }
        out
    }

    pub fn contains_vector(&self, v: &[Scalar]) -> bool {
        vector::is_zero(&self.reduce(v))
    }

    pub fn try_contains_vector(&self, v: &[Scalar]) -> Result<bool> {
        if v.len() != self.ambient {
            return Err(Error::AmbientMismatch(self.ambient, v.len()));
        }
        Ok(self.contains_vector(v))
    }

    /// Coordinates of `v` in the canonical basis, or `None` if `v ∉ self`.
    pub fn coordinates(&self, v: &[Scalar]) -> Option<Vec<Scalar>> {
        if !self.contains_vector(v) {
            return None;
        }
        Some(self.pivots.iter().map(|&pc| v[pc].clone()).collect())
    }

    /// `other ⊆ self`.
    pub fn contains(&self, other: &Subspace) -> bool {
        self.check(other);
        other.dim() <= self.dim()
            && (0..other.dim()).all(|r| self.contains_vector(other.basis.row(r)))
    }

    pub fn try_contains(&self, other: &Subspace) -> Result<bool> {
        self.compatible(other)?;
        Ok(self.contains(other))
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        self.check(other);
        let mut rows = self.basis_vectors();
        rows.extend(other.basis_vectors());
        Subspace::span(self.field(), self.ambient, rows)
    }

    pub fn try_sum(&self, other: &Subspace) -> Result<Subspace> {
        self.compatible(other)?;
        Ok(self.sum(other))
    }

    /// Zassenhaus: reduce `[u | u]` stacked over `[v | 0]`; the rows whose left
    /// half vanishes span `U ∩ V` in their right half.
    pub fn intersect(&self, other: &Subspace) -> Subspace {
        self.check(other);
        let n = self.ambient;
        let field = self.field();
        if self.is_zero() || other.is_zero() {
            return Subspace::zero(field, n);
        }
        let mut rows = Vec::with_capacity(self.dim() + other.dim());
        for u in self.basis_vectors() {
            let mut row = u.clone();
            row.extend(u);
            rows.push(row);
        }
        for v in other.basis_vectors() {
            let mut row = v;
            row.extend(vector::zeros(field, n));
            rows.push(row);
        }
        let stacked = Matrix::from_rows(field, 2 * n, rows).expect("consistent rows");
        let (reduced, pivots) = stacked.rref_with_pivots();
        let meet = pivots
            .iter()
            .enumerate()
            .filter(|(_, &pc)| pc >= n)
            .map(|(r, _)| reduced.row(r)[n..].to_vec())
            .collect();
        Subspace::span(field, n, meet)
    }

    pub fn try_intersect(&self, other: &Subspace) -> Result<Subspace> {
        self.compatible(other)?;
        Ok(self.intersect(other))
    }

    /// `{ w : w · u = 0 for all u ∈ self }` under the standard dot product.
    pub fn annihilator(&self) -> Subspace {
        if self.is_zero() {
            return Subspace::full(self.field(), self.ambient);
        }
        self.basis.kernel()
    }

    /// Image under a linear map `F^n → F^m` given as an `m × n` matrix.
    pub fn image(&self, map: &Matrix) -> Subspace {
        assert_eq!(map.cols(), self.ambient, "map does not act on this ambient space");
        let rows = (0..self.dim()).map(|r| map.apply(self.basis.row(r))).collect();
        Subspace::span(self.field(), map.rows(), rows)
    }

    /// `{ u ∈ self : A u ∈ target for every A in maps }`.
    pub fn preimage_within(&self, maps: &[Matrix], target: &Subspace) -> Subspace {
        let field = self.field();
        let n = self.ambient;
        if self.is_zero() {
            return self.clone();
        }
        let checks = target.annihilator().basis_vectors();
        if checks.is_empty() || maps.is_empty() {
            return self.clone();
        }
        let basis = self.basis_vectors();
        let images: Vec<Vec<Vec<Scalar>>> = maps
            .iter()
            .map(|a| basis.iter().map(|w| a.apply(w)).collect())
            .collect();
        let mut conditions = Vec::with_capacity(maps.len() * checks.len());
        for imgs in &images {
            for w in &checks {
                conditions.push(imgs.iter().map(|img| vector::dot(w, img)).collect());
            }
        }
        let system = Matrix::from_rows(field, basis.len(), conditions).expect("consistent rows");
        let coeffs = system.kernel();
        let rows = coeffs
            .basis_vectors()
            .iter()
            .map(|c| vector::combine(field, n, c, &basis))
            .collect();
        Subspace::span(field, n, rows)
    }

    /// Every vector of the subspace (prime fields only), `p^dim` of them.
    pub fn elements(&self) -> Result<Vec<Vec<Scalar>>> {
        let field = self.field();
        field.require_prime()?;
        let basis = self.basis_vectors();
        Ok(vector::all_vectors(field, self.dim())
            .map(|c| vector::combine(field, self.ambient, &c, &basis))
            .collect())
    }

    /// One nonzero vector per line of the subspace (prime fields only).
    pub fn projective_points(&self) -> Result<Vec<Vec<Scalar>>> {
        let field = self.field();
        field.require_prime()?;
        let basis = self.basis_vectors();
        Ok(vector::projective_points(field, self.dim())
            .map(|c| vector::combine(field, self.ambient, &c, &basis))
            .collect())
    }

    /// Number of vectors, `p^dim`, saturating; `None` over the rationals.
    pub fn cardinality(&self) -> Option<u128> {
        let p = self.field().modulus()? as u128;
        Some(
            (0..self.dim())
                .try_fold(1u128, |acc, _| acc.checked_mul(p))
                .unwrap_or(u128::MAX),
        )
    }

    fn compatible(&self, other: &Subspace) -> Result<()> {
        if self.ambient != other.ambient {
            return Err(Error::AmbientMismatch(self.ambient, other.ambient));
        }
        if self.field() != other.field() {
            return Err(Error::FieldMismatch(self.field().to_string(), other.field().to_string()));
        }
        Ok(())
    }

    fn check(&self, other: &Subspace) {
        if let Err(e) = self.compatible(other) {
            panic!("{e}");
        }
    }
}

/// Lexicographic on (dimension, flattened basis entries).
impl Ord for Subspace {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.ambient, self.dim())
            .cmp(&(other.ambient, other.dim()))
            .then_with(|| self.basis.entries().cmp(other.basis.entries()))
    }
}

impl PartialOrd for Subspace {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.basis)
    }
}

/// Serialized in the row syntax `"1,0,2;0,1,1"`; the zero subspace is `""`.
impl serde::Serialize for Subspace {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}
