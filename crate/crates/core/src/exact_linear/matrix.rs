use std::fmt;
use std::ops::Index;

use super::vector;
use super::{FieldDescriptor, Scalar, Subspace};
use crate::error::{Error, Result};

/// Dense row-major matrix over a single field.
///
/// Matrices act on column coordinate vectors: `apply(v) = A v`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix {
    field: FieldDescriptor,
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl Matrix {
    pub fn zeros(field: FieldDescriptor, rows: usize, cols: usize) -> Self {
        Matrix {
            field,
            rows,
            cols,
            data: vec![field.zero(); rows * cols],
        }
    }

    pub fn identity(field: FieldDescriptor, n: usize) -> Self {
        let mut m = Matrix::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = field.one();
        }
        m
    }

    pub fn from_rows(field: FieldDescriptor, cols: usize, rows: Vec<Vec<Scalar>>) -> Result<Self> {
        let mut data = Vec::with_capacity(rows.len() * cols);
        let nrows = rows.len();
        for row in rows {
            if row.len() != cols {
                return Err(Error::BadDimensions(format!(
                    "row of length {} in a matrix with {cols} columns",
                    row.len()
                )));
            }
            if let Some(bad) = row.iter().find(|s| s.field() != field) {
                return Err(Error::FieldMismatch(bad.field().to_string(), field.to_string()));
            }
            data.extend(row);
        }
        Ok(Matrix {
            field,
            rows: nrows,
            cols,
            data,
        })
    }

    /// Builds the matrix whose `j`-th column is `columns[j]`.
    pub fn from_columns(field: FieldDescriptor, rows: usize, columns: &[Vec<Scalar>]) -> Self {
        let cols = columns.len();
        let mut m = Matrix::zeros(field, rows, cols);
        for (j, col) in columns.iter().enumerate() {
            assert_eq!(col.len(), rows, "column length mismatch");
            for (i, x) in col.iter().enumerate() {
                m.data[i * cols + j] = x.clone();
            }
        }
        m
    }

    pub fn field(&self) -> FieldDescriptor {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, r: usize) -> &[Scalar] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_vectors(&self) -> Vec<Vec<Scalar>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn column(&self, c: usize) -> Vec<Scalar> {
        (0..self.rows).map(|r| self[(r, c)].clone()).collect()
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.data
    }

    pub fn set(&mut self, r: usize, c: usize, value: Scalar) {
        assert_eq!(value.field(), self.field, "scalar field mismatch");
        self.data[r * self.cols + c] = value;
    }

    pub fn is_zero(&self) -> bool {
        vector::is_zero(&self.data)
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols && *self == Matrix::identity(self.field, self.rows)
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.field, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.data[c * self.rows + r] = self[(r, c)].clone();
            }
        }
        t
    }

    /// `A v` for a column vector `v`.
    pub fn apply(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(v.len(), self.cols, "vector length mismatch");
        (0..self.rows).map(|r| vector::dot(self.row(r), v)).collect()
    }

    pub fn mul(&self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.cols, rhs.rows, "matrix shape mismatch");
        let mut out = Matrix::zeros(self.field, self.rows, rhs.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(r, k)];
                if a.is_zero() {
                    continue;
                }
                for c in 0..rhs.cols {
                    let b = &rhs[(k, c)];
                    if !b.is_zero() {
                        let slot = &mut out.data[r * rhs.cols + c];
                        *slot = &*slot + &(a * b);
                    }
                }
            }
        }
        out
    }

    pub fn add(&self, rhs: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "matrix shape mismatch");
        Matrix {
            field: self.field,
            rows: self.rows,
            cols: self.cols,
            data: vector::add(&self.data, &rhs.data),
        }
    }

    pub fn sub(&self, rhs: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "matrix shape mismatch");
        Matrix {
            field: self.field,
            rows: self.rows,
            cols: self.cols,
            data: vector::sub(&self.data, &rhs.data),
        }
    }

    pub fn scale(&self, c: &Scalar) -> Matrix {
        Matrix {
            field: self.field,
            rows: self.rows,
            cols: self.cols,
            data: vector::scale(c, &self.data),
        }
    }

    /// Reduced row echelon form with zero rows kept at the bottom, plus the
    /// rank. Pivots are 1 and each pivot column is zero elsewhere.
    pub fn rref(&self) -> (Matrix, usize) {
        let (m, pivots) = self.rref_with_pivots();
        let rank = pivots.len();
        (m, rank)
    }

    pub(crate) fn rref_with_pivots(&self) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(found) = (r..m.rows).find(|&i| !m[(i, c)].is_zero()) else {
                continue;
            };
            m.swap_rows(r, found);
            let inv = m[(r, c)].inv().expect("pivot is nonzero");
            for j in c..m.cols {
                m.data[r * m.cols + j] = &m.data[r * m.cols + j] * &inv;
            }
            let pivot_row = m.row(r).to_vec();
            for i in 0..m.rows {
                if i == r {
                    continue;
                }
                let factor = m[(i, c)].clone();
                if factor.is_zero() {
                    continue;
                }
                let factor = -factor;
                vector::axpy(&mut m.data[i * m.cols..(i + 1) * m.cols], &factor, &pivot_row);
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().1
    }

    pub fn is_invertible(&self) -> bool {
        self.rows == self.cols && self.rank() == self.rows
    }

    /// Inverse by Gauss-Jordan elimination on `[A | I]`.
    pub fn inverse(&self) -> Option<Matrix> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        let id = Matrix::identity(self.field, n);
        let rows = (0..n)
            .map(|r| {
                let mut row = self.row(r).to_vec();
                row.extend_from_slice(id.row(r));
                row
            })
            .collect();
        let (reduced, pivots) = Matrix::from_rows(self.field, 2 * n, rows)
            .expect("consistent rows")
            .rref_with_pivots();
        if !pivots.iter().take(n).copied().eq(0..n) {
            return None;
        }
        let inv = (0..n).map(|r| reduced.row(r)[n..].to_vec()).collect();
        Some(Matrix::from_rows(self.field, n, inv).expect("consistent rows"))
    }

    /// Right null space `{ x : A x = 0 }` as a subspace of `F^cols`.
    pub fn kernel(&self) -> Subspace {
        let (reduced, pivots) = self.rref_with_pivots();
        let n = self.cols;
        let free: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
        let basis = free
            .iter()
            .map(|&f| {
                let mut v = vector::unit(self.field, n, f);
                for (row, &pc) in pivots.iter().enumerate() {
                    v[pc] = -&reduced[(row, f)];
                }
                v
            })
            .collect();
        Subspace::span(self.field, n, basis)
    }

    /// `A^k` for a square matrix.
    pub fn pow(&self, k: u32) -> Matrix {
        assert_eq!(self.rows, self.cols, "pow needs a square matrix");
        let mut acc = Matrix::identity(self.field, self.rows);
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }
}

impl Index<(usize, usize)> for Matrix {
    type Output = Scalar;
    fn index(&self, (r, c): (usize, usize)) -> &Scalar {
        assert!(r < self.rows && c < self.cols, "matrix index out of range");
        &self.data[r * self.cols + c]
    }
}

/// Rows separated by `;`, entries by `,`.
impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            if r > 0 {
                f.write_str(";")?;
            }
            for (c, x) in self.row(r).iter().enumerate() {
                if c > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{x}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf(p: u64) -> FieldDescriptor {
        FieldDescriptor::prime(p).unwrap()
    }

    fn mat(field: FieldDescriptor, rows: &[&[i64]]) -> Matrix {
        let cols = rows.first().map_or(0, |r| r.len());
        Matrix::from_rows(
            field,
            cols,
            rows.iter().map(|r| r.iter().map(|&x| field.from_i64(x)).collect()).collect(),
        )
        .unwrap()
    }

    #[test]
    fn rref_identity_is_fixed() {
        let id = Matrix::identity(gf(3), 2);
        assert_eq!(id.rref(), (id.clone(), 2));
    }

    #[test]
    fn rref_drops_dependent_rows() {
        let m = mat(gf(3), &[&[1, 1], &[2, 2]]);
        let (r, rank) = m.rref();
        assert_eq!(rank, 1);
        assert_eq!(r, mat(gf(3), &[&[1, 1], &[0, 0]]));
    }

    #[test]
    fn rref_over_rationals() {
        // (1,2),(0,1): subtract twice row 2 from row 1.
        let q = FieldDescriptor::rationals();
        let (r, rank) = mat(q, &[&[1, 2], &[0, 1]]).rref();
        assert_eq!(rank, 2);
        assert_eq!(r, Matrix::identity(q, 2));
    }

    #[test]
    fn rref_is_idempotent_on_a_fraction_matrix() {
        let q = FieldDescriptor::rationals();
        let m = mat(q, &[&[2, 4, 1], &[3, 1, 0], &[5, 5, 1]]);
        let (once, rank) = m.rref();
        assert_eq!(rank, 2);
        assert_eq!(once.rref(), (once.clone(), 2));
    }

    #[test]
    fn kernel_solves_the_system() {
        let q = FieldDescriptor::rationals();
        let m = mat(q, &[&[1, 2, 3], &[2, 4, 6]]);
        let k = m.kernel();
        assert_eq!(k.dim(), 2);
        for v in k.basis_vectors() {
            assert!(vector::is_zero(&m.apply(&v)));
        }
    }

    #[test]
    fn inverse_round_trips() {
        let f = gf(5);
        let m = mat(f, &[&[1, 2], &[3, 4]]);
        let inv = m.inverse().unwrap();
        assert!(m.mul(&inv).is_identity());
        assert!(mat(f, &[&[1, 2], &[2, 4]]).inverse().is_none());
        let empty = Matrix::identity(f, 0);
        assert_eq!(empty.inverse(), Some(empty.clone()));
    }

    #[test]
    fn from_rows_checks_lengths() {
        let f = gf(2);
        assert!(Matrix::from_rows(f, 2, vec![vec![f.one()]]).is_err());
    }

    #[test]
    fn display_uses_row_syntax() {
        assert_eq!(mat(gf(5), &[&[1, 4], &[0, 2]]).to_string(), "1,4;0,2");
    }
}
