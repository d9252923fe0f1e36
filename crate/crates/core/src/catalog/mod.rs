//! Fixture algebras and a seeded generator of random solvable algebras.
//!
//! Random algebras are generated inside the upper-triangular matrices
//! `t(n, F)`: random elements are drawn and closed under commutator and span
//! until the requested dimension is reached. The stream is ChaCha8
//! (`rand_chacha::ChaCha8Rng::seed_from_u64(seed)`), consumed one `next_u64`
//! per coordinate: an even draw gives 0, an odd draw `r` gives
//! `(r >> 1) mod p` over `GF(p)` and `((r >> 1) mod 5) − 2` over the
//! rationals. Candidates that would overshoot the target dimension are
//! discarded, and after [`RESET_AFTER`] consecutive discards the partial
//! algebra is dropped and the search restarts from 0 on the same stream.

use std::fmt;
use std::str::FromStr;

use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::exact_linear::{vector, FieldDescriptor, Scalar};
use crate::lie_core::LieAlgebra;

/// Maximum number of random draws before [`random_solvable`] gives up.
pub const RANDOM_ATTEMPTS: usize = 256;

/// Consecutive discarded draws that trigger a restart from the zero subspace.
pub const RESET_AFTER: usize = 8;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FixtureKind {
    Dim2Nonabelian,
    Heisenberg3,
    Dim3AlmostAbelian,
    /// `[x,z] = x, [y,z] = λy`.
    Dim3Scaled(i64),
    /// Upper-triangular `n × n` matrices under the commutator.
    UpperTriangular(usize),
    /// The `(p+2)`-dimensional monolithic algebra over `GF(p)`.
    Example4,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FixtureId {
    pub kind: FixtureKind,
    pub field: FieldDescriptor,
}

impl fmt::Display for FixtureKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FixtureKind::Dim2Nonabelian => f.write_str("dim2_nonabelian"),
            FixtureKind::Heisenberg3 => f.write_str("heisenberg3"),
            FixtureKind::Dim3AlmostAbelian => f.write_str("dim3_almost_abelian"),
            FixtureKind::Dim3Scaled(l) => write!(f, "dim3_scaled({l})"),
            FixtureKind::UpperTriangular(n) => write!(f, "upper_triangular({n})"),
            FixtureKind::Example4 => f.write_str("example4"),
        }
    }
}

impl fmt::Display for FixtureId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.kind, self.field)
    }
}

impl FromStr for FixtureKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let arg = |prefix: &str| -> Option<&str> {
            s.strip_prefix(prefix)?.strip_prefix('(')?.strip_suffix(')')
        };
        let bad = || Error::InvalidParameter(format!("unknown fixture {s:?}"));
        match s {
            "dim2_nonabelian" => return Ok(FixtureKind::Dim2Nonabelian),
            "heisenberg3" => return Ok(FixtureKind::Heisenberg3),
            "dim3_almost_abelian" => return Ok(FixtureKind::Dim3AlmostAbelian),
            "example4" => return Ok(FixtureKind::Example4),
            _ => {}
        }
        if let Some(a) = arg("dim3_scaled") {
            return a.trim().parse().map(FixtureKind::Dim3Scaled).map_err(|_| bad());
        }
        if let Some(a) = arg("upper_triangular") {
            return a.trim().parse().map(FixtureKind::UpperTriangular).map_err(|_| bad());
        }
        Err(bad())
    }
}

fn vecs(field: FieldDescriptor, n: usize, entries: &[(usize, i64)]) -> Vec<Scalar> {
    let mut v = vector::zeros(field, n);
    for &(i, c) in entries {
        v[i] = &v[i] + &field.from_i64(c);
    }
    v
}

fn names(list: &[&str]) -> Vec<String> {
    list.iter().map(|s| s.to_string()).collect()
}

/// `(i, j, [(k, c)])` meaning `[b_i, b_j] = Σ c b_k`.
type Table<'a> = [(usize, usize, &'a [(usize, i64)])];

fn build(field: FieldDescriptor, n: usize, table: &Table, labels: &[&str]) -> LieAlgebra {
    let brackets = table
        .iter()
        .map(|&(i, j, v)| (i, j, vecs(field, n, v)))
        .collect();
    LieAlgebra::new(field, n, brackets, names(labels)).expect("fixture tables satisfy Jacobi")
}

/// `[x, y] = x`.
pub fn dim2_nonabelian(field: FieldDescriptor) -> LieAlgebra {
    build(field, 2, &[(0, 1, &[(0, 1)])], &["x", "y"])
}

/// `[x, y] = z`.
pub fn heisenberg3(field: FieldDescriptor) -> LieAlgebra {
    build(field, 3, &[(0, 1, &[(2, 1)])], &["x", "y", "z"])
}

/// `[x, z] = x, [y, z] = y`.
pub fn dim3_almost_abelian(field: FieldDescriptor) -> LieAlgebra {
    dim3_scaled(field, 1)
}

/// `[x, z] = x, [y, z] = λy`.
pub fn dim3_scaled(field: FieldDescriptor, lambda: i64) -> LieAlgebra {
    build(field, 3, &[(0, 2, &[(0, 1)]), (1, 2, &[(1, lambda)])], &["x", "y", "z"])
}

/// `[x,y] = z, [y,z] = x, [z,x] = y`; not solvable over the rationals.
pub fn cross_product(field: FieldDescriptor) -> LieAlgebra {
    build(
        field,
        3,
        &[(0, 1, &[(2, 1)]), (1, 2, &[(0, 1)]), (0, 2, &[(1, -1)])],
        &["x", "y", "z"],
    )
}

/// Index of `E_ij` (`i ≤ j`) in the row-major basis of `t(n)`.
fn ut_index(n: usize, i: usize, j: usize) -> usize {
    // rows 0..i contribute n, n-1, …, n-i+1 entries
    i * n - i * (i.saturating_sub(1)) / 2 + (j - i)
}

/// Upper-triangular `n × n` matrices with `[A, B] = AB − BA`, on the basis
/// `E_ij` (`i ≤ j`) in row-major order.
pub fn upper_triangular(field: FieldDescriptor, n: usize) -> LieAlgebra {
    let dim = n * (n + 1) / 2;
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i..n).map(move |j| (i, j))).collect();
    let mut brackets = Vec::new();
    for (a, &(i, j)) in pairs.iter().enumerate() {
        for (b, &(k, l)) in pairs.iter().enumerate().skip(a + 1) {
            let mut v = vector::zeros(field, dim);
            if j == k {
                let t = ut_index(n, i, l);
                v[t] = &v[t] + &field.one();
            }
            if l == i {
                let t = ut_index(n, k, j);
                v[t] = &v[t] - &field.one();
            }
            if !vector::is_zero(&v) {
                brackets.push((a, b, v));
            }
        }
    }
    let labels = pairs.iter().map(|(i, j)| format!("e{}{}", i + 1, j + 1)).collect();
    LieAlgebra::new(field, dim, brackets, labels).expect("matrix commutators satisfy Jacobi")
}

/// The algebra `A ∔ Fx ∔ Fy` over `GF(p)` with `A = ⊕ F e_i` and
/// `[e_i, x] = e_{i+1 mod p}`, `[e_i, y] = i e_i`, `[x, y] = x`; basis order
/// `e_0, …, e_{p−1}, x, y`.
pub fn example4(p: u64) -> Result<LieAlgebra> {
    let field = FieldDescriptor::prime(p)?;
    let p = p as usize;
    let n = p + 2;
    let (x, y) = (p, p + 1);
    let mut brackets = Vec::new();
    for i in 0..p {
        brackets.push((i, x, vecs(field, n, &[((i + 1) % p, 1)])));
        if i != 0 {
            brackets.push((i, y, vecs(field, n, &[(i, i as i64)])));
        }
    }
    brackets.push((x, y, vecs(field, n, &[(x, 1)])));
    let mut labels: Vec<String> = (0..p).map(|i| format!("e{i}")).collect();
    labels.push("x".into());
    labels.push("y".into());
    LieAlgebra::new(field, n, brackets, labels)
}

pub fn fixture(id: &FixtureId) -> Result<LieAlgebra> {
    let f = id.field;
    Ok(match id.kind {
        FixtureKind::Dim2Nonabelian => dim2_nonabelian(f),
        FixtureKind::Heisenberg3 => heisenberg3(f),
        FixtureKind::Dim3AlmostAbelian => dim3_almost_abelian(f),
        FixtureKind::Dim3Scaled(l) => dim3_scaled(f, l),
        FixtureKind::UpperTriangular(0) => {
            return Err(Error::InvalidParameter("upper_triangular needs n ≥ 1".into()))
        }
        FixtureKind::UpperTriangular(n) => upper_triangular(f, n),
        FixtureKind::Example4 => {
            let p = f
                .modulus()
                .ok_or_else(|| Error::InvalidParameter("example4 needs a prime field".into()))?;
            example4(p)?
        }
    })
}

/// One coordinate vector drawn from `rng` by the documented rule.
pub fn random_vector(rng: &mut ChaCha8Rng, field: FieldDescriptor, n: usize) -> Vec<Scalar> {
    (0..n)
        .map(|_| {
            let r = rng.next_u64();
            if r & 1 == 0 {
                return field.zero();
            }
            match field.modulus() {
                Some(p) => field.from_u64((r >> 1) % p),
                None => field.from_i64(((r >> 1) % 5) as i64 - 2),
            }
        })
        .collect()
}

/// A random solvable algebra of dimension `target_dim`, realized as a
/// subalgebra of `t(ambient_n, F)`. A pure function of its arguments.
pub fn random_solvable(seed: u64, target_dim: usize, field: FieldDescriptor, ambient_n: usize) -> Result<LieAlgebra> {
    let ambient = upper_triangular(field, ambient_n);
    if target_dim > ambient.dim() {
        return Err(Error::InvalidParameter(format!(
            "target dimension {target_dim} exceeds dim t({ambient_n}) = {}",
            ambient.dim()
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut current = ambient.zero_space();
    let mut discarded = 0;
    for _ in 0..RANDOM_ATTEMPTS {
        if current.dim() >= target_dim {
            break;
        }
        let v = random_vector(&mut rng, field, ambient.dim());
        let candidate = ambient.subalgebra_generated(current.sum(&ambient.span(vec![v])));
        if candidate.dim() <= target_dim {
            current = candidate;
            discarded = 0;
        } else {
            discarded += 1;
            if discarded == RESET_AFTER {
                current = ambient.zero_space();
                discarded = 0;
            }
        }
    }
    if current.dim() < target_dim {
        return Err(Error::GenerationFailed(RANDOM_ATTEMPTS));
    }
    ambient.restrict_to(&current)
}
