use std::collections::BTreeSet;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact_linear::{enumerate_subspaces, Subspace};
use crate::inner_auto::{eligible_generators, orbit};
use crate::lie_core::LieAlgebra;
use crate::limits::Limits;

fn is_complement(l: &LieAlgebra, a: &Subspace, m: &Subspace) -> bool {
    l.is_subalgebra(m) && a.intersect(m).is_zero() && a.sum(m).is_full()
}

/// Every subalgebra `M` with `L = A ⊕ M` as vector spaces.
pub fn complements(l: &LieAlgebra, a: &Subspace, limits: &Limits) -> Result<Vec<Subspace>> {
    let target = l.dim() - a.dim();
    Ok(enumerate_subspaces(l.dim(), l.field(), limits.max_subspaces)?
        .into_iter()
        .filter(|m| m.dim() == target && is_complement(l, a, m))
        .collect())
}

/// Complements `M, K` of the ideal `A` are `I(L:A)`-conjugate iff
/// `M ∩ C_L(A) = K ∩ C_L(A)`; this returns the right-hand side.
pub fn complement_conjugacy_criterion(l: &LieAlgebra, a: &Subspace, m: &Subspace, k: &Subspace) -> Result<bool> {
    if !l.is_ideal(a) {
        return Err(Error::NotAnIdeal);
    }
    if !is_complement(l, a, m) || !is_complement(l, a, k) {
        return Err(Error::NotAComplement);
    }
    let c = l.centralizer(a);
    Ok(m.intersect(&c) == k.intersect(&c))
}

/// Classes of complements to a minimal ideal `A` under `I(L:A)`, matched
/// against the ideals `N` of `L` with `C_L(A) = A ⊕ N` via
/// `class of M ↦ M ∩ C_L(A)`.
#[derive(Clone, Debug, Serialize)]
pub struct BijectionReport {
    pub minimal_ideal: Subspace,
    pub centralizer: Subspace,
    pub complements: usize,
    pub classes: usize,
    pub class_sizes: Vec<usize>,
    pub ideal_complements: usize,
    /// `M ∩ C_L(A)` is constant on classes, an ideal, and a complement to
    /// `A` in `C_L(A)`.
    pub well_defined: bool,
    pub injective: bool,
    pub surjective: bool,
    /// Ordered pairs of complements checked against the criterion.
    pub criterion_pairs: usize,
    /// Pairs where the criterion and the orbit partition disagree.
    pub criterion_mismatches: usize,
}

impl BijectionReport {
    pub fn no_complements(&self) -> bool {
        self.complements == 0
    }

    pub fn holds(&self) -> bool {
        self.no_complements()
            || (self.well_defined
                && self.injective
                && self.surjective
                && self.classes == self.ideal_complements
                && self.criterion_mismatches == 0)
    }
}

pub fn complement_classes_bijection(l: &LieAlgebra, a: &Subspace, limits: &Limits) -> Result<BijectionReport> {
    l.field().require_prime()?;
    if !l.is_ideal(a) {
        return Err(Error::NotAnIdeal);
    }
    if !l.minimal_ideals(limits)?.contains(a) {
        return Err(Error::InvalidParameter(format!("[{a}] is not a minimal ideal")));
    }
    let comps = complements(l, a, limits)?;
    let centralizer = l.centralizer(a);
    let gens = eligible_generators(l, a, limits)?.generators;

    let mut class_of = vec![usize::MAX; comps.len()];
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for start in 0..comps.len() {
        if class_of[start] != usize::MAX {
            continue;
        }
        let orb = orbit(&comps[start], &gens, limits.max_group);
        if !orb.complete() {
            return Err(Error::CapExceeded {
                what: "complement orbit",
                needed: limits.max_group as u128 + 1,
                cap: limits.max_group as u128,
            });
        }
        let id = classes.len();
        let mut members = Vec::new();
        for s in orb.members() {
            let Ok(pos) = comps.binary_search(s) else {
                return Err(Error::VerificationFailed(format!(
                    "inner image [{s}] of a complement is not a complement"
                )));
            };
            class_of[pos] = id;
            members.push(pos);
        }
        classes.push(members);
    }

    let target_dim = centralizer.dim() - a.dim();
    let ideal_complements: BTreeSet<Subspace> = enumerate_subspaces(l.dim(), l.field(), limits.max_subspaces)?
        .into_iter()
        .filter(|n| {
            n.dim() == target_dim && centralizer.contains(n) && n.intersect(a).is_zero() && l.is_ideal(n)
        })
        .collect();

    let mut well_defined = true;
    let mut images = Vec::with_capacity(classes.len());
    for members in &classes {
        let image = comps[members[0]].intersect(&centralizer);
        if members.iter().any(|&i| comps[i].intersect(&centralizer) != image) {
            well_defined = false;
        }
        if !l.is_ideal(&image) || !image.intersect(a).is_zero() || image.sum(a) != centralizer {
            well_defined = false;
        }
        images.push(image);
    }
    let distinct: BTreeSet<Subspace> = images.iter().cloned().collect();
    let injective = distinct.len() == images.len();
    let surjective = comps.is_empty() || distinct == ideal_complements;

    let c = &centralizer;
    let mut criterion_mismatches = 0;
    for i in 0..comps.len() {
        for j in 0..comps.len() {
            let criterion = comps[i].intersect(c) == comps[j].intersect(c);
            if criterion != (class_of[i] == class_of[j]) {
                criterion_mismatches += 1;
            }
        }
    }

    Ok(BijectionReport {
        minimal_ideal: a.clone(),
        centralizer,
        complements: comps.len(),
        classes: classes.len(),
        class_sizes: classes.iter().map(Vec::len).collect(),
        ideal_complements: ideal_complements.len(),
        well_defined,
        injective,
        surjective,
        criterion_pairs: comps.len() * comps.len(),
        criterion_mismatches,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::exact_linear::FieldDescriptor;

    fn gf(p: u64) -> FieldDescriptor {
        FieldDescriptor::prime(p).unwrap()
    }

    fn span(l: &LieAlgebra, rows: &[&[i64]]) -> Subspace {
        let f = l.field();
        l.span(rows.iter().map(|r| r.iter().map(|&x| f.from_i64(x)).collect()).collect())
    }

    #[test]
    fn criterion_examples() {
        let aa = catalog::dim3_almost_abelian(gf(3));
        let a = span(&aa, &[&[1, 0, 0]]);
        let m = span(&aa, &[&[0, 1, 0], &[0, 0, 1]]);
        assert_eq!(complement_conjugacy_criterion(&aa, &a, &m, &m), Ok(true));
        let k = span(&aa, &[&[0, 1, 0], &[1, 0, 1]]);
        assert_eq!(complement_conjugacy_criterion(&aa, &a, &m, &k), Ok(true));
        let k = span(&aa, &[&[1, 1, 0], &[0, 0, 1]]);
        assert_eq!(complement_conjugacy_criterion(&aa, &a, &m, &k), Ok(false));
        let bad = span(&aa, &[&[1, 0, 0], &[0, 0, 1]]);
        assert_eq!(complement_conjugacy_criterion(&aa, &a, &m, &bad), Err(Error::NotAComplement));
    }

    #[test]
    fn bijection_counts() {
        let lim = Limits::default();
        let aa = catalog::dim3_almost_abelian(gf(3));
        let r = complement_classes_bijection(&aa, &span(&aa, &[&[1, 0, 0]]), &lim).unwrap();
        assert_eq!((r.classes, r.ideal_complements), (3, 3));
        assert!(r.holds());

        let d2 = catalog::dim2_nonabelian(gf(2));
        let r = complement_classes_bijection(&d2, &span(&d2, &[&[1, 0]]), &lim).unwrap();
        assert_eq!((r.complements, r.classes, r.ideal_complements), (2, 1, 1));
        assert!(r.holds());

        let one = LieAlgebra::new(gf(3), 1, vec![], vec![]).unwrap();
        let r = complement_classes_bijection(&one, &one.full_space(), &lim).unwrap();
        assert_eq!((r.classes, r.ideal_complements), (1, 1));

        // The Heisenberg centre has no complement.
        let h = catalog::heisenberg3(gf(2));
        let r = complement_classes_bijection(&h, &span(&h, &[&[0, 0, 1]]), &lim).unwrap();
        assert!(r.no_complements() && r.holds());
    }

    #[test]
    fn bijection_rejects_non_minimal() {
        let lim = Limits::default();
        let aa = catalog::dim3_almost_abelian(gf(3));
        let plane = span(&aa, &[&[1, 0, 0], &[0, 1, 0]]);
        assert!(complement_classes_bijection(&aa, &plane, &lim).is_err());
    }
}
