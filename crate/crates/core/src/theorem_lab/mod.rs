//! Conjugacy of maximal subalgebras as executable decision procedures.
//!
//! The central decision: under the hypothesis that `L` is solvable and, in
//! characteristic `p`, that `L²` is nilpotent of class below `p`, two maximal
//! subalgebras are conjugate under inner automorphisms exactly when their
//! cores agree. The remaining checks here verify the surrounding structure
//! (conjugators inside complemented chief factors, core-free pairs,
//! complements of minimal ideals, intersections of non-conjugate pairs)
//! against brute-force enumeration.

mod complements;
mod conjugacy;
mod example4;
mod hypothesis;
mod intersection;

pub use complements::{complement_classes_bijection, complement_conjugacy_criterion, complements, BijectionReport};
pub use conjugacy::{
    conjugate_by_core_test, corefree_conjugator, decide_conjugacy, find_conjugator_in_chief_factor,
    ChiefFactorConjugator, ConjugacyVerdict, CoreFreeConjugator, Method, Verdict,
};
pub use example4::{example4_base_algebra, example4_report, Example4Report};
pub use hypothesis::{hypothesis, HypothesisReport};
pub use intersection::{intersection_maximality_check, IntersectionReport};
