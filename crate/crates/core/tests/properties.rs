use proptest::prelude::*;

use solvlie_core::catalog;
use solvlie_core::exact_linear::{enumerate_subspaces, vector};
use solvlie_core::inner_auto::{exp_ad, exp_eligible};
use solvlie_core::{FieldDescriptor, Matrix, Scalar};

fn field(code: u8) -> FieldDescriptor {
    match code % 4 {
        0 => FieldDescriptor::prime(2).unwrap(),
        1 => FieldDescriptor::prime(3).unwrap(),
        2 => FieldDescriptor::prime(7).unwrap(),
        _ => FieldDescriptor::rationals(),
    }
}

fn scalar(f: FieldDescriptor, (n, d): (i64, i64)) -> Scalar {
    match f.modulus() {
        Some(_) => f.from_i64(n),
        None => f.from_i64(n).checked_div(&f.from_i64(d)).unwrap(),
    }
}

fn matrix(f: FieldDescriptor, rows: usize, cols: usize, raw: &[(i64, i64)]) -> Matrix {
    let rows = (0..rows)
        .map(|r| (0..cols).map(|c| scalar(f, raw[r * cols + c])).collect())
        .collect();
    Matrix::from_rows(f, cols, rows).unwrap()
}

fn entries() -> impl Strategy<Value = Vec<(i64, i64)>> {
    prop::collection::vec((-3i64..=3, 1i64..=4), 40)
}

proptest! {
    #[test]
    fn rref_is_idempotent_and_spans_rows(code in any::<u8>(), r in 1usize..=5, c in 1usize..=5, raw in entries()) {
        let f = field(code);
        let a = matrix(f, r, c, &raw);
        let (e, rank) = a.rref();
        prop_assert_eq!(e.rref(), (e.clone(), rank));
        prop_assert_eq!(rank, a.transpose().rank());
        let rows = solvlie_core::Subspace::span(f, c, a.row_vectors());
        let erows = solvlie_core::Subspace::span(f, c, e.row_vectors());
        prop_assert_eq!(rows.dim(), rank);
        prop_assert_eq!(rows, erows);
    }

    #[test]
    fn kernel_and_rank_nullity(code in any::<u8>(), r in 1usize..=5, c in 1usize..=5, raw in entries()) {
        let f = field(code);
        let a = matrix(f, r, c, &raw);
        let k = a.kernel();
        prop_assert_eq!(k.dim() + a.rank(), c);
        for v in k.basis_vectors() {
            prop_assert!(vector::is_zero(&a.apply(&v)));
        }
    }

    #[test]
    fn inverse_is_two_sided(code in any::<u8>(), n in 1usize..=4, raw in entries()) {
        let f = field(code);
        let a = matrix(f, n, n, &raw);
        match a.inverse() {
            Some(b) => {
                prop_assert!(a.mul(&b).is_identity());
                prop_assert!(b.mul(&a).is_identity());
            }
            None => prop_assert!(a.rank() < n),
        }
    }

    #[test]
    fn subspace_lattice_laws(code in any::<u8>(), n in 1usize..=5, k1 in 0usize..=4, k2 in 0usize..=4, raw in entries()) {
        let f = field(code);
        let u = matrix(f, k1.max(1), n, &raw).row_vectors()[..k1].to_vec();
        let w = matrix(f, k2.max(1), n, &raw[18..]).row_vectors()[..k2].to_vec();
        let u = solvlie_core::Subspace::span(f, n, u);
        let w = solvlie_core::Subspace::span(f, n, w);
        let (s, i) = (u.sum(&w), u.intersect(&w));
        prop_assert_eq!(s.dim() + i.dim(), u.dim() + w.dim());
        prop_assert!(s.contains(&u) && s.contains(&w) && u.contains(&i) && w.contains(&i));
        let ann = u.annihilator();
        prop_assert_eq!(ann.dim(), n - u.dim());
        prop_assert_eq!(ann.annihilator(), u.clone());
        for a in ann.basis_vectors() {
            for b in u.basis_vectors() {
                prop_assert!(vector::dot(&a, &b).is_zero());
            }
        }
    }

    #[test]
    fn modular_law_over_enumeration(p in prop::sample::select(vec![2u64, 3]), n in 1usize..=3, i in any::<usize>(), j in any::<usize>(), k in any::<usize>()) {
        let f = FieldDescriptor::prime(p).unwrap();
        let all = enumerate_subspaces(n, f, u128::MAX).unwrap();
        let (a, b, c) = (&all[i % all.len()], &all[j % all.len()], &all[k % all.len()]);
        if a.contains(c) {
            prop_assert_eq!(a.intersect(&b.sum(c)), a.intersect(b).sum(c));
        }
        prop_assert_eq!(a.sum(b).dim() + a.intersect(b).dim(), a.dim() + b.dim());
    }

    #[test]
    fn random_algebras_are_solvable_and_reproducible(seed in any::<u64>(), code in any::<u8>(), dim in 1usize..=4, ambient in 3usize..=4) {
        let f = field(code);
        let l = catalog::random_solvable(seed, dim, f, ambient).unwrap();
        prop_assert_eq!(l.dim(), dim);
        prop_assert!(l.is_solvable());
        let again = catalog::random_solvable(seed, dim, f, ambient).unwrap();
        prop_assert_eq!(l, again);
    }

    #[test]
    fn exp_ad_of_eligible_is_automorphism(seed in any::<u64>(), code in any::<u8>(), coords in prop::collection::vec((-2i64..=2, 1i64..=3), 4)) {
        let f = field(code);
        let l = catalog::random_solvable(seed, 4, f, 3).unwrap();
        let x: Vec<Scalar> = coords.iter().map(|&c| scalar(f, c)).collect();
        if exp_eligible(&l, &x).eligible {
            let phi = exp_ad(&l, &x).unwrap();
            prop_assert!(phi.matrix.is_invertible());
            prop_assert!(l.is_automorphism(&phi.matrix));
            let back = exp_ad(&l, &vector::neg(&x)).unwrap();
            prop_assert!(phi.matrix.mul(&back.matrix).is_identity());
        }
    }
}
