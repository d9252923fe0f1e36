use serde::Serialize;

use crate::lie_core::{LieAlgebra, NilpotencyClass};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HypothesisReport {
    pub solvable: bool,
    pub char_p: Option<u64>,
    /// Nilpotency class of `L²`.
    pub class_of_derived: NilpotencyClass,
    /// Solvable, and in characteristic `p` the class of `L²` is below `p`.
    pub hypothesis_met: bool,
}

pub fn hypothesis(l: &LieAlgebra) -> HypothesisReport {
    let solvable = l.is_solvable();
    let char_p = l.field().modulus();
    let class_of_derived = l
        .nilpotency_class(&l.derived_algebra())
        .expect("L² is an ideal");
    let hypothesis_met = solvable && char_p.is_none_or(|p| class_of_derived.is_below(p));
    HypothesisReport {
        solvable,
        char_p,
        class_of_derived,
        hypothesis_met,
    }
}
