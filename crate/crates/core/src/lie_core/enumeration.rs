use std::collections::BTreeSet;

use serde::Serialize;

use super::{LieAlgebra, Subalgebra};
use crate::error::{Error, Result};
use crate::exact_linear::{enumerate_subspaces, Subspace};
use crate::limits::Limits;

/// `0 = L_0 < L_1 < … < L_n = L`, each term an ideal of `L` and each factor
/// `L_{k+1}/L_k` chief.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ChiefSeries {
    terms: Vec<Subspace>,
}

impl ChiefSeries {
    pub fn terms(&self) -> &[Subspace] {
        &self.terms
    }

    /// Number of chief factors.
    pub fn length(&self) -> usize {
        self.terms.len() - 1
    }
}

fn check_points(l: &LieAlgebra, dim: usize, limits: &Limits, what: &'static str) -> Result<()> {
    let p = l.field().require_prime()? as u128;
    let needed = (0..dim).try_fold(1u128, |acc, _| acc.checked_mul(p)).unwrap_or(u128::MAX);
    if needed > limits.max_search {
        return Err(Error::CapExceeded {
            what,
            needed,
            cap: limits.max_search,
        });
    }
    Ok(())
}

/// A spanning set of a complement to `sub` inside `within`.
fn relative_complement(sub: &Subspace, within: &Subspace) -> Subspace {
    let mut acc = sub.clone();
    let mut extra = Vec::new();
    for v in within.basis_vectors() {
        if !acc.contains_vector(&v) {
            acc = acc.sum(&Subspace::span(sub.field(), sub.ambient_dim(), vec![v.clone()]));
            extra.push(v);
        }
    }
    Subspace::span(sub.field(), sub.ambient_dim(), extra)
}

impl LieAlgebra {
    /// All minimal ideals, sorted. A minimal ideal is the ideal closure of
    /// each of its nonzero vectors, so these are the minimal members of
    /// `{ ideal_closure(v) : v ≠ 0 }`.
    pub fn minimal_ideals(&self, limits: &Limits) -> Result<Vec<Subspace>> {
        check_points(self, self.dim(), limits, "minimal ideal search")?;
        let closures: BTreeSet<Subspace> = self
            .full_space()
            .projective_points()?
            .iter()
            .map(|v| self.ideal_closure(v))
            .collect();
        Ok(closures
            .iter()
            .filter(|c| !closures.iter().any(|d| d != *c && c.contains(d)))
            .cloned()
            .collect())
    }

    /// Every ideal of `L`, by exhaustive subspace enumeration.
    pub fn ideals(&self, limits: &Limits) -> Result<Vec<Subspace>> {
        let all = enumerate_subspaces(self.dim(), self.field(), limits.max_subspaces)?;
        Ok(all.into_iter().filter(|s| self.is_ideal(s)).collect())
    }

    /// Every subalgebra of `L`, by exhaustive subspace enumeration.
    pub fn subalgebras(&self, limits: &Limits) -> Result<Vec<Subspace>> {
        let all = enumerate_subspaces(self.dim(), self.field(), limits.max_subspaces)?;
        Ok(all.into_iter().filter(|s| self.is_subalgebra(s)).collect())
    }

    /// Whether `sub` is a maximal subalgebra of the subalgebra `within`: for
    /// every `v ∈ within \ sub` the subalgebra generated by `sub` and `v` is
    /// all of `within`. Over the rationals only codimension one is decided.
    pub fn is_maximal_in(&self, sub: &Subspace, within: &Subspace, limits: &Limits) -> Result<bool> {
        if !self.is_subalgebra(within) || !self.is_subalgebra(sub) {
            return Err(Error::NotASubalgebra);
        }
        if !within.contains(sub) || sub == within {
            return Ok(false);
        }
        let codim = within.dim() - sub.dim();
        if codim == 1 {
            return Ok(true);
        }
        check_points(self, codim, limits, "maximality search")?;
        let complement = relative_complement(sub, within);
        for v in complement.projective_points()? {
            let grown = self.subalgebra_generated(sub.sum(&self.span(vec![v])));
            if grown != *within {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn is_maximal_subalgebra(&self, m: &Subspace, limits: &Limits) -> Result<bool> {
        self.is_maximal_in(m, &self.full_space(), limits)
    }

    /// All maximal subalgebras, in canonical subspace order. Their
    /// codimension may exceed one.
    pub fn maximal_subalgebras(&self, limits: &Limits) -> Result<Vec<Subalgebra<'_>>> {
        let mut out = Vec::new();
        for s in self.subalgebras(limits)? {
            if !s.is_full() && self.is_maximal_subalgebra(&s, limits)? {
                out.push(Subalgebra::new_unchecked(self, s));
            }
        }
        Ok(out)
    }

    /// Chief series built by repeatedly lifting the smallest minimal ideal of
    /// the current quotient.
    pub fn chief_series(&self, limits: &Limits) -> Result<ChiefSeries> {
        self.field().require_prime()?;
        if !self.is_solvable() {
            return Err(Error::NotSolvable);
        }
        let mut terms = vec![self.zero_space()];
        loop {
            let top = terms.last().expect("nonempty").clone();
            if top.is_full() {
                break;
            }
            let quotient = self.quotient(&top)?;
            let minimal = quotient.algebra.minimal_ideals(limits)?;
            let first = minimal.first().ok_or_else(|| {
                Error::VerificationFailed("nonzero quotient without a minimal ideal".into())
            })?;
            terms.push(quotient.pull_back(first));
        }
        Ok(ChiefSeries { terms })
    }
}

/// The index `k` with `L_k ⊆ M` and `L_{k+1} ⊄ M`, after verifying that
/// `L = M + L_{k+1}` and `M ∩ L_{k+1} = L_k`.
pub fn complemented_chief_factor(l: &LieAlgebra, m: &Subspace, series: &ChiefSeries) -> Result<usize> {
    if !l.is_subalgebra(m) {
        return Err(Error::NotASubalgebra);
    }
    if m.is_full() {
        return Err(Error::NotMaximal);
    }
    let terms = series.terms();
    let k = terms
        .iter()
        .rposition(|t| m.contains(t))
        .expect("L_0 = 0 lies in every subalgebra");
    let (lower, upper) = (&terms[k], &terms[k + 1]);
    if !m.sum(upper).is_full() {
        return Err(Error::VerificationFailed(format!("M + L_{} is not L", k + 1)));
    }
    if m.intersect(upper) != *lower {
        return Err(Error::VerificationFailed(format!("M ∩ L_{} is not L_{k}", k + 1)));
    }
    Ok(k)
}
