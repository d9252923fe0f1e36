use serde::Serialize;

use super::LieAlgebra;
use crate::error::{Error, Result};
use crate::exact_linear::{vector, Matrix, Scalar, Subspace};

/// Nilpotency class of an ideal: the last index `c` with `I^c ≠ 0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum NilpotencyClass {
    Nilpotent(usize),
    NotNilpotent,
}

impl NilpotencyClass {
    /// `true` when nilpotent of class strictly below `bound`.
    pub fn is_below(&self, bound: u64) -> bool {
        matches!(self, NilpotencyClass::Nilpotent(c) if (*c as u64) < bound)
    }
}

impl std::fmt::Display for NilpotencyClass {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            NilpotencyClass::Nilpotent(c) => write!(f, "{c}"),
            NilpotencyClass::NotNilpotent => f.write_str("not nilpotent"),
        }
    }
}

impl LieAlgebra {
    /// `[U, V]`, spanned by the brackets of basis pairs.
    pub fn product_space(&self, u: &Subspace, v: &Subspace) -> Subspace {
        let ub = u.basis_vectors();
        let vb = v.basis_vectors();
        let mut rows = Vec::with_capacity(ub.len() * vb.len());
        for a in &ub {
            for b in &vb {
                let c = self.bracket(a, b);
                if !vector::is_zero(&c) {
                    rows.push(c);
                }
            }
        }
        self.span(rows)
    }

    /// `L², [L, L]`.
    pub fn derived_algebra(&self) -> Subspace {
        let full = self.full_space();
        self.product_space(&full, &full)
    }

    /// `L = L⁽⁰⁾ ⊇ L⁽¹⁾ ⊇ …` up to and including the first repeated term.
    pub fn derived_series(&self) -> Vec<Subspace> {
        let mut series = vec![self.full_space()];
        loop {
            let last = series.last().expect("nonempty");
            let next = self.product_space(last, last);
            if next == *last {
                break;
            }
            let done = next.is_zero();
            series.push(next);
            if done {
                break;
            }
        }
        series
    }

    pub fn is_solvable(&self) -> bool {
        self.derived_series().last().is_some_and(Subspace::is_zero)
    }

    /// Number of steps for the derived series to reach zero, if it does.
    pub fn derived_length(&self) -> Option<usize> {
        let series = self.derived_series();
        series.last().is_some_and(Subspace::is_zero).then(|| series.len() - 1)
    }

    pub fn is_subalgebra(&self, u: &Subspace) -> bool {
        u.contains(&self.product_space(u, u))
    }

    pub fn is_ideal(&self, u: &Subspace) -> bool {
        u.contains(&self.product_space(&self.full_space(), u))
    }

    /// `I¹ = I, I^{k+1} = [I^k, I]`, stopping at zero or at the first repeat.
    pub fn lower_central_series(&self, ideal: &Subspace) -> Result<Vec<Subspace>> {
        if !self.is_ideal(ideal) {
            return Err(Error::NotAnIdeal);
        }
        let mut series = vec![ideal.clone()];
        loop {
            let last = series.last().expect("nonempty");
            if last.is_zero() {
                break;
            }
            let next = self.product_space(last, ideal);
            if next == *last {
                break;
            }
            series.push(next);
        }
        Ok(series)
    }

    pub fn nilpotency_class(&self, ideal: &Subspace) -> Result<NilpotencyClass> {
        let series = self.lower_central_series(ideal)?;
        let last = series.last().expect("nonempty");
        Ok(if last.is_zero() {
            // series = [I, I², …, I^c, 0] and the zero ideal has class 0.
            NilpotencyClass::Nilpotent(series.len() - 1)
        } else {
            NilpotencyClass::NotNilpotent
        })
    }

    /// `C_L(U) = { x : [x, u] = 0 for all u ∈ U }`.
    pub fn centralizer(&self, u: &Subspace) -> Subspace {
        let maps: Vec<Matrix> = u.basis_vectors().iter().map(|b| self.ad(b)).collect();
        self.full_space().preimage_within(&maps, &self.zero_space())
    }

    pub fn center(&self) -> Subspace {
        self.centralizer(&self.full_space())
    }

    fn basis_ads(&self) -> Vec<Matrix> {
        (0..self.dim).map(|j| self.ad(&self.basis_vector(j))).collect()
    }

    /// The core `U_L`, the largest ideal of `L` inside the subalgebra `U`:
    /// the fixpoint of `U ↦ { u ∈ U : [b_j, u] ∈ U for all j }`.
    pub fn core(&self, u: &Subspace) -> Result<Subspace> {
        if !self.is_subalgebra(u) {
            return Err(Error::NotASubalgebra);
        }
        let ads = self.basis_ads();
        let mut current = u.clone();
        loop {
            // u ↦ [u, b_j] = −[b_j, u], same membership condition.
            let next = current.preimage_within(&ads, &current);
            if next == current {
                return Ok(current);
            }
            current = next;
        }
    }

    /// Smallest ideal containing `v`.
    pub fn ideal_closure(&self, v: &[Scalar]) -> Subspace {
        self.ideal_generated(self.span(vec![v.to_vec()]))
    }

    /// Smallest ideal containing the subspace `s`.
    pub fn ideal_generated(&self, s: Subspace) -> Subspace {
        let full = self.full_space();
        let mut current = s;
        loop {
            let next = current.sum(&self.product_space(&current, &full));
            if next == current {
                return current;
            }
            current = next;
        }
    }

    /// Smallest subalgebra containing the subspace `s`.
    pub fn subalgebra_generated(&self, s: Subspace) -> Subspace {
        let mut current = s;
        loop {
            let next = current.sum(&self.product_space(&current, &current));
            if next == current {
                return current;
            }
            current = next;
        }
    }

    /// The subalgebra `S` as an algebra in its own right, on the canonical
    /// basis of `S`.
    pub fn restrict_to(&self, s: &Subspace) -> Result<LieAlgebra> {
        if !self.is_subalgebra(s) {
            return Err(Error::NotASubalgebra);
        }
        let basis = s.basis_vectors();
        let mut brackets = Vec::new();
        for i in 0..basis.len() {
            for j in i + 1..basis.len() {
                let c = self.bracket(&basis[i], &basis[j]);
                let coords = s.coordinates(&c).expect("closed under the bracket");
                if !vector::is_zero(&coords) {
                    brackets.push((i, j, coords));
                }
            }
        }
        LieAlgebra::new(self.field, basis.len(), brackets, vec![])
    }
}
