use serde::Serialize;

use super::complements::complement_conjugacy_criterion;
use super::conjugacy::require_maximal;
use super::hypothesis::hypothesis;
use crate::error::Result;
use crate::exact_linear::Subspace;
use crate::lie_core::LieAlgebra;
use crate::limits::Limits;

/// Maximality of `M ∩ K` inside `M` and `K` for a pair of maximal
/// subalgebras. A `None` entry means the statement does not apply.
#[derive(Clone, Debug, Serialize)]
pub struct IntersectionReport {
    pub core_m: Subspace,
    pub core_k: Subspace,
    pub intersection: Subspace,
    pub maximal_in_m: bool,
    pub maximal_in_k: bool,
    /// `K_L ⊄ M_L` forces `M ∩ K` maximal in `M`.
    pub core_k_not_in_core_m: Option<bool>,
    /// `M_L ⊄ K_L` forces `M ∩ K` maximal in `K`.
    pub core_m_not_in_core_k: Option<bool>,
    /// A minimal ideal with `M`, `K` non-conjugate complements to it.
    pub complement_ideal: Option<Subspace>,
    pub maximal_in_both: Option<bool>,
    /// Under the hypothesis with distinct cores, maximal in one of them.
    pub at_least_one: Option<bool>,
}

impl IntersectionReport {
    pub fn holds(&self) -> bool {
        [
            self.core_k_not_in_core_m,
            self.core_m_not_in_core_k,
            self.maximal_in_both,
            self.at_least_one,
        ]
        .iter()
        .all(|c| c.unwrap_or(true))
    }

    /// Number of statements that applied to this pair.
    pub fn applicable(&self) -> usize {
        [
            self.core_k_not_in_core_m,
            self.core_m_not_in_core_k,
            self.maximal_in_both,
            self.at_least_one,
        ]
        .iter()
        .filter(|c| c.is_some())
        .count()
    }
}

pub fn intersection_maximality_check(
    l: &LieAlgebra,
    m: &Subspace,
    k: &Subspace,
    limits: &Limits,
) -> Result<IntersectionReport> {
    require_maximal(l, m, limits)?;
    require_maximal(l, k, limits)?;
    let core_m = l.core(m)?;
    let core_k = l.core(k)?;
    let intersection = m.intersect(k);
    let maximal_in_m = l.is_maximal_in(&intersection, m, limits)?;
    let maximal_in_k = l.is_maximal_in(&intersection, k, limits)?;

    let core_k_not_in_core_m = (!core_m.contains(&core_k)).then_some(maximal_in_m);
    let core_m_not_in_core_k = (!core_k.contains(&core_m)).then_some(maximal_in_k);

    let mut complement_ideal = None;
    if l.field().is_prime_field() {
        for a in l.minimal_ideals(limits)? {
            if let Ok(false) = complement_conjugacy_criterion(l, &a, m, k) {
                complement_ideal = Some(a);
                break;
            }
        }
    }
    let maximal_in_both = complement_ideal.as_ref().map(|_| maximal_in_m && maximal_in_k);

    let at_least_one = (hypothesis(l).hypothesis_met && core_m != core_k).then_some(maximal_in_m || maximal_in_k);

    Ok(IntersectionReport {
        core_m,
        core_k,
        intersection,
        maximal_in_m,
        maximal_in_k,
        core_k_not_in_core_m,
        core_m_not_in_core_k,
        complement_ideal,
        maximal_in_both,
        at_least_one,
    })
}
