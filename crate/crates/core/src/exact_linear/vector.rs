//! Coordinate vectors as plain scalar slices.

use super::{FieldDescriptor, Scalar};

pub fn zeros(field: FieldDescriptor, n: usize) -> Vec<Scalar> {
    vec![field.zero(); n]
}

/// The standard basis vector `e_i` of `F^n`.
pub fn unit(field: FieldDescriptor, n: usize, i: usize) -> Vec<Scalar> {
    let mut v = zeros(field, n);
    v[i] = field.one();
    v
}

pub fn is_zero(v: &[Scalar]) -> bool {
    v.iter().all(Scalar::is_zero)
}

pub fn add(u: &[Scalar], v: &[Scalar]) -> Vec<Scalar> {
    assert_eq!(u.len(), v.len(), "vector length mismatch");
    u.iter().zip(v).map(|(a, b)| a + b).collect()
}

pub fn sub(u: &[Scalar], v: &[Scalar]) -> Vec<Scalar> {
    assert_eq!(u.len(), v.len(), "vector length mismatch");
    u.iter().zip(v).map(|(a, b)| a - b).collect()
}

pub fn scale(c: &Scalar, v: &[Scalar]) -> Vec<Scalar> {
    v.iter().map(|a| c * a).collect()
}

pub fn neg(v: &[Scalar]) -> Vec<Scalar> {
    v.iter().map(|a| -a).collect()
}

/// `acc += c * v`
pub fn axpy(acc: &mut [Scalar], c: &Scalar, v: &[Scalar]) {
    assert_eq!(acc.len(), v.len(), "vector length mismatch");
    if c.is_zero() {
        return;
    }
    for (a, b) in acc.iter_mut().zip(v) {
        if !b.is_zero() {
            *a = &*a + &(c * b);
        }
    }
}

pub fn dot(u: &[Scalar], v: &[Scalar]) -> Scalar {
    assert_eq!(u.len(), v.len(), "vector length mismatch");
    let field = u.first().map(Scalar::field);
    let mut acc = match field {
        Some(f) => f.zero(),
        None => panic!("dot product of empty vectors has no field"),
    };
    for (a, b) in u.iter().zip(v) {
        if !a.is_zero() && !b.is_zero() {
            acc = acc + a * b;
        }
    }
    acc
}

/// Linear combination `Σ coeffs[t] * vectors[t]` in `F^n`.
pub fn combine(field: FieldDescriptor, n: usize, coeffs: &[Scalar], vectors: &[Vec<Scalar>]) -> Vec<Scalar> {
    let mut acc = zeros(field, n);
    for (c, v) in coeffs.iter().zip(vectors) {
        axpy(&mut acc, c, v);
    }
    acc
}

/// Every vector of `F^n` over the prime field, in lexicographic order of
/// residues with the first coordinate most significant.
pub fn all_vectors(field: FieldDescriptor, n: usize) -> impl Iterator<Item = Vec<Scalar>> {
    let p = field.modulus().expect("all_vectors needs a prime field");
    let total = (p as u128).checked_pow(n as u32).expect("vector count overflow");
    (0..total).map(move |mut idx| {
        let mut v = vec![field.zero(); n];
        for slot in v.iter_mut().rev() {
            *slot = field.from_u64((idx % p as u128) as u64);
            idx /= p as u128;
        }
        v
    })
}

/// One representative per line of `F^n`: nonzero vectors whose first nonzero
/// coordinate is 1.
pub fn projective_points(field: FieldDescriptor, n: usize) -> impl Iterator<Item = Vec<Scalar>> {
    all_vectors(field, n).filter(|v| v.iter().find(|c| !c.is_zero()).is_some_and(Scalar::is_one))
}

/// Rescales so that the first nonzero coordinate is 1.
pub fn normalize(v: &[Scalar]) -> Vec<Scalar> {
    match v.iter().find(|c| !c.is_zero()) {
        Some(lead) => scale(&lead.inv().expect("nonzero"), v),
        None => v.to_vec(),
    }
}
