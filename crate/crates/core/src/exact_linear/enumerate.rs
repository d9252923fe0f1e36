use super::{FieldDescriptor, Matrix, Subspace};
use crate::error::{Error, Result};

/// Gaussian binomial `[n choose k]_q`, saturating at `u128::MAX`.
pub fn gaussian_binomial(n: u32, k: u32, q: u64) -> u128 {
    if k > n {
        return 0;
    }
    // Pascal rule [n,k] = [n-1,k-1] + q^k [n-1,k], all terms nonnegative.
    let q = q as u128;
    let mut row = vec![1u128];
    for m in 1..=n {
        let mut next = vec![1u128; (m as usize) + 1];
        for j in 1..m as usize {
            let qj = q.checked_pow(j as u32).unwrap_or(u128::MAX);
            next[j] = row[j - 1].saturating_add(qj.saturating_mul(row[j]));
        }
        row = next;
    }
    row[k as usize]
}

/// Number of subspaces of `GF(q)^n`.
pub fn subspace_count(n: u32, q: u64) -> u128 {
    (0..=n).fold(0u128, |acc, k| acc.saturating_add(gaussian_binomial(n, k, q)))
}

/// Every subspace of `GF(p)^n`, each exactly once, sorted by the canonical
/// subspace order. Fails fast if the total would exceed `cap`.
pub fn enumerate_subspaces(n: usize, field: FieldDescriptor, cap: u128) -> Result<Vec<Subspace>> {
    let p = field.require_prime()?;
    let total = subspace_count(n as u32, p);
    if total > cap {
        return Err(Error::CapExceeded {
            what: "subspace enumeration",
            needed: total,
            cap,
        });
    }
    let mut out = Vec::with_capacity(total as usize);
    for k in 0..=n {
        for pivots in combinations(n, k) {
            let free: Vec<(usize, usize)> = pivots
                .iter()
                .enumerate()
                .flat_map(|(row, &pc)| {
                    let pivots = &pivots;
                    (pc + 1..n).filter(move |c| !pivots.contains(c)).map(move |c| (row, c))
                })
                .collect();
            let mut digits = vec![0u64; free.len()];
            loop {
                let mut m = Matrix::zeros(field, k, n);
                for (row, &pc) in pivots.iter().enumerate() {
                    m.set(row, pc, field.one());
                }
                for (&(row, c), &d) in free.iter().zip(&digits) {
                    m.set(row, c, field.from_u64(d));
                }
                out.push(Subspace::from_matrix(&m));
                if !increment(&mut digits, p) {
                    break;
                }
            }
        }
    }
    out.sort();
    Ok(out)
}

fn increment(digits: &mut [u64], p: u64) -> bool {
    for d in digits.iter_mut().rev() {
        *d += 1;
        if *d < p {
            return true;
        }
        *d = 0;
    }
    false
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::new(), &mut out);
    out
}
