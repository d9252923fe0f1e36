use super::LieAlgebra;
use crate::error::{Error, Result};
use crate::exact_linear::{vector, Matrix, Scalar, Subspace};

/// `L / I` on the coordinate basis given by the non-pivot columns of `I`.
#[derive(Clone, Debug)]
pub struct Quotient {
    pub algebra: LieAlgebra,
    /// `q × n` matrix of the projection `L → L/I`.
    pub projection: Matrix,
    /// `n × q` matrix sending quotient coordinates to the chosen complement.
    pub section: Matrix,
    pub kernel: Subspace,
}

impl LieAlgebra {
    pub fn quotient(&self, ideal: &Subspace) -> Result<Quotient> {
        if ideal.ambient_dim() != self.dim() {
            return Err(Error::AmbientMismatch(self.dim(), ideal.ambient_dim()));
        }
        if !self.is_ideal(ideal) {
            return Err(Error::NotAnIdeal);
        }
        let field = self.field();
        let n = self.dim();
        let free = ideal.free_columns();
        let q = free.len();

        let mut projection = Matrix::zeros(field, q, n);
        for j in 0..n {
            let reduced = ideal.reduce(&self.basis_vector(j));
            for (a, &c) in free.iter().enumerate() {
                projection.set(a, j, reduced[c].clone());
            }
        }
        let mut section = Matrix::zeros(field, n, q);
        for (a, &c) in free.iter().enumerate() {
            section.set(c, a, field.one());
        }

        let mut brackets = Vec::new();
        for a in 0..q {
            for b in a + 1..q {
                let c = projection.apply(self.basis_bracket(free[a], free[b]));
                if !vector::is_zero(&c) {
                    brackets.push((a, b, c));
                }
            }
        }
        let names = free.iter().map(|&c| self.basis_names()[c].clone()).collect();
        let algebra = LieAlgebra::new(field, q, brackets, names)?;
        Ok(Quotient {
            algebra,
            projection,
            section,
            kernel: ideal.clone(),
        })
    }
}

impl Quotient {
    pub fn project(&self, v: &[Scalar]) -> Vec<Scalar> {
        self.projection.apply(v)
    }

    pub fn push_forward(&self, u: &Subspace) -> Subspace {
        u.image(&self.projection)
    }

    /// Full preimage of a quotient subspace: `section(W) + I`.
    pub fn pull_back(&self, w: &Subspace) -> Subspace {
        w.image(&self.section).sum(&self.kernel)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::exact_linear::FieldDescriptor;

    #[test]
    fn quotient_by_zero_is_a_copy() {
        let q = FieldDescriptor::rationals();
        let h = catalog::heisenberg3(q);
        let quot = h.quotient(&h.zero_space()).unwrap();
        assert_eq!(quot.algebra, h);
    }

    #[test]
    fn small_quotients_are_abelian() {
        let q = FieldDescriptor::rationals();
        let d2 = catalog::dim2_nonabelian(q);
        let quot = d2.quotient(&d2.derived_algebra()).unwrap();
        assert_eq!(quot.algebra.dim(), 1);

        let h = catalog::heisenberg3(q);
        let quot = h.quotient(&h.center()).unwrap();
        assert_eq!(quot.algebra.dim(), 2);
        assert_eq!(quot.algebra.structure_constants().count(), 0);
    }

    #[test]
    fn non_ideals_are_rejected() {
        let q = FieldDescriptor::rationals();
        let d2 = catalog::dim2_nonabelian(q);
        let y = d2.span(vec![d2.basis_vector(1)]);
        assert_eq!(d2.quotient(&y).unwrap_err(), Error::NotAnIdeal);
    }

    #[test]
    fn push_then_pull_adds_the_kernel() {
        let f = FieldDescriptor::prime(3).unwrap();
        let aa = catalog::dim3_almost_abelian(f);
        let i = aa.span(vec![aa.basis_vector(0)]);
        let quot = aa.quotient(&i).unwrap();
        let u = aa.span(vec![vector::add(&aa.basis_vector(1), &aa.basis_vector(2))]);
        assert_eq!(quot.pull_back(&quot.push_forward(&u)), u.sum(&i));
    }
}
