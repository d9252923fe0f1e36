//! Inner automorphisms `exp(ad x)` and the groups they generate.
//!
//! `ad x` acts as `b ↦ [b, x]`, so `exp(ad a)(m) = m + [m, a] + …`.
//! Over `GF(p)` an element is eligible when it lies in a nilpotent ideal of
//! class below `p`; the smallest ideal containing `x` decides this, because
//! any such ideal contains it. Over the rationals the test is nilpotency of
//! `ad x` itself.

mod group;

pub use group::{
    are_conjugate_bruteforce, eligible_generators, inner_group, orbit, BruteForceVerdict, GeneratorSet, InnerGroup,
    Orbit,
};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact_linear::{vector, Matrix, Scalar, Subspace};
use crate::lie_core::{LieAlgebra, NilpotencyClass, Subalgebra};

pub fn ad_matrix(l: &LieAlgebra, x: &[Scalar]) -> Matrix {
    l.ad(x)
}

/// Outcome of the eligibility test for `exp(ad x)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Eligibility {
    pub eligible: bool,
    /// Smallest ideal containing `x`; decides eligibility over `GF(p)`.
    pub closure: Option<Subspace>,
    pub closure_class: Option<NilpotencyClass>,
    /// Least `m` with `(ad x)^m = 0`, when `ad x` is nilpotent.
    pub nilpotency_index: Option<usize>,
}

fn nilpotency_index(ad: &Matrix) -> Option<usize> {
    let n = ad.rows();
    let mut power = Matrix::identity(ad.field(), n);
    for m in 0..=n {
        if power.is_zero() {
            return Some(m);
        }
        power = power.mul(ad);
    }
    None
}

pub fn exp_eligible(l: &LieAlgebra, x: &[Scalar]) -> Eligibility {
    let ad = l.ad(x);
    let index = nilpotency_index(&ad);
    match l.field().modulus() {
        None => Eligibility {
            eligible: index.is_some(),
            closure: None,
            closure_class: None,
            nilpotency_index: index,
        },
        Some(p) => {
            let closure = l.ideal_closure(x);
            let class = l.nilpotency_class(&closure).expect("closure is an ideal");
            Eligibility {
                eligible: class.is_below(p),
                closure: Some(closure),
                closure_class: Some(class),
                nilpotency_index: index,
            }
        }
    }
}

/// An automorphism of `L` as a matrix on column coordinates, together with
/// the word `[x_1, …, x_k]` meaning `exp(ad x_1) ∘ … ∘ exp(ad x_k)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct InnerAutomorphism {
    #[serde(serialize_with = "serialize_display")]
    pub matrix: Matrix,
    #[serde(serialize_with = "serialize_word")]
    pub word: Vec<Vec<Scalar>>,
}

fn serialize_display<S: serde::Serializer, T: std::fmt::Display>(
    value: &T,
    serializer: S,
) -> std::result::Result<S::Ok, S::Error> {
    serializer.serialize_str(&value.to_string())
}

fn serialize_word<S: serde::Serializer>(word: &[Vec<Scalar>], serializer: S) -> std::result::Result<S::Ok, S::Error> {
    use serde::ser::SerializeSeq;
    let mut seq = serializer.serialize_seq(Some(word.len()))?;
    for x in word {
        let text: Vec<String> = x.iter().map(ToString::to_string).collect();
        seq.serialize_element(&text.join(","))?;
    }
    seq.end()
}

impl InnerAutomorphism {
    pub fn identity(l: &LieAlgebra) -> Self {
        InnerAutomorphism {
            matrix: Matrix::identity(l.field(), l.dim()),
            word: Vec::new(),
        }
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &InnerAutomorphism) -> InnerAutomorphism {
        let mut word = self.word.clone();
        word.extend(other.word.iter().cloned());
        InnerAutomorphism {
            matrix: self.matrix.mul(&other.matrix),
            word,
        }
    }

    /// Uses `exp(ad x)⁻¹ = exp(ad −x)` for the word.
    pub fn inverse(&self) -> InnerAutomorphism {
        InnerAutomorphism {
            matrix: self.matrix.inverse().expect("automorphisms are invertible"),
            word: self.word.iter().rev().map(|x| vector::neg(x)).collect(),
        }
    }

    pub fn apply(&self, v: &[Scalar]) -> Vec<Scalar> {
        self.matrix.apply(v)
    }

    pub fn image(&self, u: &Subspace) -> Subspace {
        u.image(&self.matrix)
    }

    pub fn is_identity(&self) -> bool {
        self.matrix.is_identity()
    }
}

/// `exp(ad x) = Σ_r (ad x)^r / r!`, truncated where the powers vanish.
pub fn exp_ad(l: &LieAlgebra, x: &[Scalar]) -> Result<InnerAutomorphism> {
    let eligibility = exp_eligible(l, x);
    if !eligibility.eligible {
        return Err(Error::NotEligible);
    }
    let field = l.field();
    let ad = l.ad(x);
    let mut sum = Matrix::identity(field, l.dim());
    let mut term = Matrix::identity(field, l.dim());
    let mut r: u64 = 1;
    loop {
        term = term.mul(&ad);
        if term.is_zero() {
            break;
        }
        // Over GF(p) eligibility bounds r by the class of the closure, below p.
        let inv_r = field
            .from_u64(r)
            .inv()
            .ok_or_else(|| Error::VerificationFailed(format!("(ad x)^{r} ≠ 0 with r ≥ p")))?;
        term = term.scale(&inv_r);
        sum = sum.add(&term);
        r += 1;
    }
    Ok(InnerAutomorphism {
        matrix: sum,
        word: vec![x.to_vec()],
    })
}

pub fn conjugate_subalgebra<'a>(phi: &InnerAutomorphism, m: &Subalgebra<'a>) -> Subalgebra<'a> {
    Subalgebra::new_unchecked(m.parent(), phi.image(m.space()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::exact_linear::FieldDescriptor;

    fn gf(p: u64) -> FieldDescriptor {
        FieldDescriptor::prime(p).unwrap()
    }

    fn v(l: &LieAlgebra, xs: &[i64]) -> Vec<Scalar> {
        xs.iter().map(|&x| l.field().from_i64(x)).collect()
    }

    #[test]
    fn ad_matrices() {
        let q = FieldDescriptor::rationals();
        let h = catalog::heisenberg3(q);
        assert!(ad_matrix(&h, &h.zero_vector()).is_zero());
        let ad_x = ad_matrix(&h, &h.basis_vector(0));
        // y ↦ [y, x] = −z; x, z ↦ 0.
        assert_eq!(ad_x.column(1), v(&h, &[0, 0, -1]));
        assert!(vector::is_zero(&ad_x.column(0)) && vector::is_zero(&ad_x.column(2)));

        let d2 = catalog::dim2_nonabelian(q);
        let ad_x = ad_matrix(&d2, &d2.basis_vector(0));
        assert_eq!(ad_x.column(1), v(&d2, &[-1, 0]));
        assert!(vector::is_zero(&ad_x.column(0)));
    }

    #[test]
    fn eligibility() {
        let d2 = catalog::dim2_nonabelian(gf(2));
        let e = exp_eligible(&d2, &d2.basis_vector(0));
        assert!(e.eligible);
        assert_eq!(e.closure_class, Some(NilpotencyClass::Nilpotent(1)));

        for p in [2, 3] {
            let l = catalog::example4(p).unwrap();
            let x = l.basis_vector(p as usize);
            let e = exp_eligible(&l, &x);
            assert!(!e.eligible);
            assert!(e.closure.unwrap().contains(&l.derived_algebra()));
            assert_eq!(exp_ad(&l, &x), Err(Error::NotEligible));
        }

        let dq = catalog::dim2_nonabelian(FieldDescriptor::rationals());
        assert!(!exp_eligible(&dq, &dq.basis_vector(1)).eligible);
        assert!(exp_eligible(&dq, &dq.basis_vector(0)).eligible);
    }

    #[test]
    fn exponentials() {
        let q = FieldDescriptor::rationals();
        let h = catalog::heisenberg3(q);
        assert!(exp_ad(&h, &h.zero_vector()).unwrap().is_identity());
        let phi = exp_ad(&h, &h.basis_vector(0)).unwrap();
        assert_eq!(phi.apply(&h.basis_vector(1)), v(&h, &[0, 1, -1]));
        assert_eq!(phi.apply(&h.basis_vector(0)), h.basis_vector(0));
        assert_eq!(phi.apply(&h.basis_vector(2)), h.basis_vector(2));

        let d2 = catalog::dim2_nonabelian(gf(3));
        for lambda in 0..3 {
            let phi = exp_ad(&d2, &v(&d2, &[lambda, 0])).unwrap();
            assert_eq!(phi.apply(&d2.basis_vector(1)), v(&d2, &[-lambda, 1]));
        }
    }

    #[test]
    fn exponentials_over_rationals_use_fractions() {
        // (ad x)^2 ≠ 0 in t(3) for x = E12 + E23, so the 1/2 term is present.
        let q = FieldDescriptor::rationals();
        let t = catalog::upper_triangular(q, 3);
        let mut x = t.zero_vector();
        x[1] = q.one();
        x[4] = q.one();
        let phi = exp_ad(&t, &x).unwrap();
        assert!(t.is_automorphism(&phi.matrix));
        let back = exp_ad(&t, &vector::neg(&x)).unwrap();
        assert!(phi.compose(&back).is_identity());
        assert!(phi.matrix.entries().iter().any(|s| s.to_string().contains('/')));
    }

    #[test]
    fn conjugating_moves_lines() {
        let d2 = catalog::dim2_nonabelian(gf(3));
        let y = Subalgebra::new(&d2, d2.span(vec![d2.basis_vector(1)])).unwrap();
        let id = InnerAutomorphism::identity(&d2);
        assert_eq!(conjugate_subalgebra(&id, &y), y);
        let phi = exp_ad(&d2, &d2.basis_vector(0)).unwrap();
        let image = conjugate_subalgebra(&phi, &y);
        assert_eq!(image.space(), &d2.span(vec![v(&d2, &[-1, 1])]));
        let inv = phi.inverse();
        assert_eq!(inv.word, vec![v(&d2, &[-1, 0])]);
        assert!(inv.compose(&phi).is_identity());
    }
}
