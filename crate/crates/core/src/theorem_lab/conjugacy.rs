use serde::Serialize;

use super::hypothesis::{hypothesis, HypothesisReport};
use crate::error::{Error, Result};
use crate::exact_linear::{Matrix, Scalar, Subspace};
use crate::inner_auto::{are_conjugate_bruteforce, exp_ad, InnerAutomorphism};
use crate::lie_core::{complemented_chief_factor, ChiefSeries, LieAlgebra};
use crate::limits::Limits;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Conjugate,
    NotConjugate,
    HypothesisNotMet,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    CoreTest,
    BruteForce,
    Both,
}

#[derive(Clone, Debug, Serialize)]
pub struct ConjugacyVerdict {
    pub verdict: Verdict,
    pub method: Method,
    pub witness: Option<InnerAutomorphism>,
    pub core_m: Subspace,
    pub core_k: Subspace,
    pub hypothesis: HypothesisReport,
}

pub(super) fn require_maximal(l: &LieAlgebra, m: &Subspace, limits: &Limits) -> Result<()> {
    if m.ambient_dim() != l.dim() {
        return Err(Error::AmbientMismatch(l.dim(), m.ambient_dim()));
    }
    if !l.is_subalgebra(m) || !l.is_maximal_subalgebra(m, limits)? {
        return Err(Error::NotMaximal);
    }
    Ok(())
}

/// Conjugate iff `M_L = K_L`, answered only when the hypothesis holds.
pub fn conjugate_by_core_test(l: &LieAlgebra, m: &Subspace, k: &Subspace, limits: &Limits) -> Result<ConjugacyVerdict> {
    let hyp = hypothesis(l);
    if !hyp.solvable {
        return Err(Error::NotSolvable);
    }
    require_maximal(l, m, limits)?;
    require_maximal(l, k, limits)?;
    let core_m = l.core(m)?;
    let core_k = l.core(k)?;
    let verdict = match (hyp.hypothesis_met, core_m == core_k) {
        (false, _) => Verdict::HypothesisNotMet,
        (true, true) => Verdict::Conjugate,
        (true, false) => Verdict::NotConjugate,
    };
    Ok(ConjugacyVerdict {
        verdict,
        method: Method::CoreTest,
        witness: None,
        core_m,
        core_k,
        hypothesis: hyp,
    })
}

/// Runs the requested method. With [`Method::Both`] a disagreement between
/// the core test and the orbit search is an error.
pub fn decide_conjugacy(
    l: &LieAlgebra,
    m: &Subspace,
    k: &Subspace,
    method: Method,
    limits: &Limits,
) -> Result<ConjugacyVerdict> {
    let mut by_core = conjugate_by_core_test(l, m, k, limits)?;
    if method == Method::CoreTest {
        return Ok(by_core);
    }
    let brute = are_conjugate_bruteforce(l, m, k, &l.full_space(), limits)?;
    let brute_verdict = if brute.conjugate {
        Verdict::Conjugate
    } else {
        Verdict::NotConjugate
    };
    if method == Method::Both
        && by_core.verdict != Verdict::HypothesisNotMet
        && by_core.verdict != brute_verdict
    {
        return Err(Error::VerificationFailed(format!(
            "core test says {:?}, orbit search says {:?}",
            by_core.verdict, brute_verdict
        )));
    }
    by_core.verdict = brute_verdict;
    by_core.method = method;
    by_core.witness = brute.witness;
    Ok(by_core)
}

#[derive(Clone, Debug, Serialize)]
pub struct CoreFreeConjugator {
    pub a: Vec<Scalar>,
    pub minimal_ideal: Subspace,
    pub automorphism: InnerAutomorphism,
    /// `(ad a)² = 0`.
    pub ad_squared_zero: bool,
    /// `exp(ad a)` equals `1 + ad a` entry-wise.
    pub exp_is_one_plus_ad: bool,
}

fn is_direct_complement(l: &LieAlgebra, a: &Subspace, m: &Subspace) -> bool {
    a.intersect(m).is_zero() && a.sum(m) == l.full_space()
}

/// For core-free maximal `M, K`: the unique minimal ideal `A` and some
/// `a ∈ A` with `(1 + ad a)(M) = K`, after checking `L = A ⊕ M = A ⊕ K` and
/// `C_L(A) = A`.
pub fn corefree_conjugator(l: &LieAlgebra, m: &Subspace, k: &Subspace, limits: &Limits) -> Result<CoreFreeConjugator> {
    if !l.is_solvable() {
        return Err(Error::NotSolvable);
    }
    require_maximal(l, m, limits)?;
    require_maximal(l, k, limits)?;
    if !l.core(m)?.is_zero() || !l.core(k)?.is_zero() {
        return Err(Error::NotCoreFree);
    }
    let minimal = l.minimal_ideals(limits)?;
    let [a_ideal] = minimal.as_slice() else {
        return Err(Error::VerificationFailed(format!(
            "{} minimal ideals, expected a unique one",
            minimal.len()
        )));
    };
    if !is_direct_complement(l, a_ideal, m) || !is_direct_complement(l, a_ideal, k) {
        return Err(Error::VerificationFailed("L is not A ⊕ M and A ⊕ K".into()));
    }
    if l.centralizer(a_ideal) != *a_ideal {
        return Err(Error::VerificationFailed("C_L(A) differs from A".into()));
    }
    let count = a_ideal.cardinality().unwrap_or(u128::MAX);
    if count > limits.max_search {
        return Err(Error::CapExceeded {
            what: "conjugator search",
            needed: count,
            cap: limits.max_search,
        });
    }
    let identity = Matrix::identity(l.field(), l.dim());
    for a in a_ideal.elements()? {
        let ad = l.ad(&a);
        let one_plus_ad = identity.add(&ad);
        if m.image(&one_plus_ad) != *k {
            continue;
        }
        let automorphism = exp_ad(l, &a)?;
        return Ok(CoreFreeConjugator {
            ad_squared_zero: ad.mul(&ad).is_zero(),
            exp_is_one_plus_ad: automorphism.matrix == one_plus_ad,
            a,
            minimal_ideal: a_ideal.clone(),
            automorphism,
        });
    }
    Err(Error::NoConjugatorFound)
}

#[derive(Clone, Debug, Serialize)]
pub struct ChiefFactorConjugator {
    /// Index of the chief factor `L_{k+1}/L_k` complemented by `M`.
    pub k: usize,
    pub a: Vec<Scalar>,
    pub automorphism: InnerAutomorphism,
    /// `{ m ∈ M : [m, a] ∈ M }`, equal to `M ∩ K`.
    pub intersection: Subspace,
    /// `[L, A] + B = A` for `A/B = L_{k+1}/L_k`. Fails exactly when the
    /// factor is central, which forces `M` to be an ideal and `K = M`.
    pub factor_is_commutator: bool,
    /// Elements of `A` skipped because `exp(ad a)` is undefined; zero
    /// whenever `A ⊆ L²`.
    pub ineligible_skipped: usize,
}

/// For conjugate maximal `M, K` with `A/B` the chief factor complemented by
/// `M`: an `a ∈ A` with `exp(ad a)(M) = K` and the intersection formula
/// `M ∩ K = { m ∈ M : [m, a] ∈ M }`. The staging fact `B = A ∩ M_L` is
/// asserted; `[L, A] + B = A` is reported.
pub fn find_conjugator_in_chief_factor(
    l: &LieAlgebra,
    m: &Subspace,
    k: &Subspace,
    series: &ChiefSeries,
    limits: &Limits,
) -> Result<ChiefFactorConjugator> {
    if !hypothesis(l).hypothesis_met {
        return Err(Error::HypothesisNotMet);
    }
    require_maximal(l, m, limits)?;
    require_maximal(l, k, limits)?;
    let core_m = l.core(m)?;
    if core_m != l.core(k)? {
        return Err(Error::NotConjugate);
    }
    let index = complemented_chief_factor(l, m, series)?;
    let upper = &series.terms()[index + 1];
    let lower = &series.terms()[index];
    if upper.intersect(&core_m) != *lower {
        return Err(Error::VerificationFailed(format!("L_{index} differs from L_{} ∩ M_L", index + 1)));
    }
    let factor_is_commutator = l.product_space(&l.full_space(), upper).sum(lower) == *upper;
    let count = upper.cardinality().unwrap_or(u128::MAX);
    if count > limits.max_search {
        return Err(Error::CapExceeded {
            what: "conjugator search",
            needed: count,
            cap: limits.max_search,
        });
    }
    let expected_meet = m.intersect(k);
    let mut ineligible_skipped = 0;
    for a in upper.elements()? {
        let automorphism = match exp_ad(l, &a) {
            Ok(phi) => phi,
            Err(Error::NotEligible) => {
                ineligible_skipped += 1;
                continue;
            }
            Err(e) => return Err(e),
        };
        if automorphism.image(m) != *k {
            continue;
        }
        let intersection = m.preimage_within(&[l.ad(&a)], m);
        if intersection != expected_meet {
            return Err(Error::VerificationFailed(format!(
                "{{m ∈ M : [m,a] ∈ M}} = [{intersection}] but M ∩ K = [{expected_meet}] for a = {}",
                fmt_vec(&a)
            )));
        }
        return Ok(ChiefFactorConjugator {
            k: index,
            a,
            automorphism,
            intersection,
            factor_is_commutator,
            ineligible_skipped,
        });
    }
    Err(Error::SearchExhausted)
}

fn fmt_vec(v: &[Scalar]) -> String {
    v.iter().map(ToString::to_string).collect::<Vec<_>>().join(",")
}
