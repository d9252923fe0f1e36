use serde::Serialize;

use super::conjugacy::{conjugate_by_core_test, Verdict};
use super::hypothesis::{hypothesis, HypothesisReport};
use crate::catalog;
use crate::error::{Error, Result};
use crate::exact_linear::Subspace;
use crate::lie_core::{LieAlgebra, NilpotencyClass};
use crate::limits::Limits;

fn monolith(l: &LieAlgebra, p: usize) -> Subspace {
    l.span((0..p).map(|i| l.basis_vector(i)).collect())
}

/// Builds the base algebra and checks that it is monolithic with monolith
/// `A = span(e_0, …, e_{p−1})` and that `L² = A ∔ Fx` is not nilpotent.
pub fn example4_base_algebra(p: u64, limits: &Limits) -> Result<LieAlgebra> {
    let l = catalog::example4(p)?;
    let a = monolith(&l, p as usize);
    let minimal = l.minimal_ideals(limits)?;
    if minimal != [a.clone()] {
        return Err(Error::VerificationFailed(format!(
            "expected unique minimal ideal [{a}], found {}",
            minimal.len()
        )));
    }
    let derived = l.derived_algebra();
    if derived != a.sum(&l.span(vec![l.basis_vector(p as usize)])) {
        return Err(Error::VerificationFailed("L² is not A + Fx".into()));
    }
    if l.nilpotency_class(&derived)? != NilpotencyClass::NotNilpotent {
        return Err(Error::VerificationFailed("L² is nilpotent".into()));
    }
    Ok(l)
}

#[derive(Clone, Debug, Serialize)]
pub struct Example4Report {
    pub p: u64,
    pub dim: usize,
    pub minimal_ideals: Vec<Subspace>,
    pub monolith: Subspace,
    pub unique_minimal_ideal: bool,
    pub derived: Subspace,
    pub derived_is_monolith_plus_x: bool,
    pub hypothesis: HypothesisReport,
    pub maximal_subalgebras: usize,
    /// Ordered pairs of maximal subalgebras given to the core test.
    pub core_test_pairs: usize,
    /// Pairs for which the core test declined with `hypothesis_not_met`.
    pub core_test_declined: usize,
}

impl Example4Report {
    pub fn holds(&self) -> bool {
        self.unique_minimal_ideal
            && self.derived_is_monolith_plus_x
            && self.hypothesis.class_of_derived == NilpotencyClass::NotNilpotent
            && !self.hypothesis.hypothesis_met
            && self.core_test_pairs > 0
            && self.core_test_declined == self.core_test_pairs
    }
}

/// Recomputes every monolith fact without failing early and runs the core
/// test on all pairs of maximal subalgebras.
pub fn example4_report(p: u64, limits: &Limits) -> Result<Example4Report> {
    let l = catalog::example4(p)?;
    let n = p as usize;
    let monolith = monolith(&l, n);
    let minimal_ideals = l.minimal_ideals(limits)?;
    let unique_minimal_ideal = minimal_ideals == [monolith.clone()];
    let derived = l.derived_algebra();
    let derived_is_monolith_plus_x = derived == monolith.sum(&l.span(vec![l.basis_vector(n)]));
    let maximals: Vec<Subspace> = l
        .maximal_subalgebras(limits)?
        .into_iter()
        .map(|s| s.into_space())
        .collect();
    let mut core_test_declined = 0;
    for m in &maximals {
        for k in &maximals {
            if conjugate_by_core_test(&l, m, k, limits)?.verdict == Verdict::HypothesisNotMet {
                core_test_declined += 1;
            }
        }
    }
    Ok(Example4Report {
        p,
        dim: l.dim(),
        minimal_ideals,
        monolith,
        unique_minimal_ideal,
        derived,
        derived_is_monolith_plus_x,
        hypothesis: hypothesis(&l),
        maximal_subalgebras: maximals.len(),
        core_test_pairs: maximals.len() * maximals.len(),
        core_test_declined,
    })
}
