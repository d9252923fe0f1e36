//! Brute-force cross-checks over small prime fields. The oracles here work on
//! explicit element sets with plain `u64` arithmetic and never call the
//! crate's echelon machinery.

use std::collections::{BTreeSet, VecDeque};

use solvlie_core::catalog;
use solvlie_core::exact_linear::{enumerate_subspaces, subspace_count};
use solvlie_core::inner_auto::{are_conjugate_bruteforce, eligible_generators, exp_eligible};
use solvlie_core::{FieldDescriptor, LieAlgebra, Limits, Subspace};

type V = Vec<u64>;
type Set = BTreeSet<V>;

struct Oracle {
    p: u64,
    n: usize,
    table: Vec<Vec<V>>,
}

impl Oracle {
    fn new(l: &LieAlgebra) -> Self {
        let p = l.field().modulus().unwrap();
        let n = l.dim();
        let table = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| l.basis_bracket(i, j).iter().map(|s| s.residue().unwrap()).collect())
                    .collect()
            })
            .collect();
        Oracle { p, n, table }
    }

    fn add(&self, u: &V, v: &V) -> V {
        u.iter().zip(v).map(|(a, b)| (a + b) % self.p).collect()
    }

    fn scale(&self, c: u64, v: &V) -> V {
        v.iter().map(|a| a * c % self.p).collect()
    }

    fn zero(&self) -> V {
        vec![0; self.n]
    }

    fn unit(&self, i: usize) -> V {
        let mut v = self.zero();
        v[i] = 1;
        v
    }

    fn bracket(&self, u: &V, v: &V) -> V {
        let mut out = self.zero();
        for (i, ui) in u.iter().enumerate() {
            for (j, vj) in v.iter().enumerate() {
                let c = ui * vj % self.p;
                if c != 0 {
                    out = self.add(&out, &self.scale(c, &self.table[i][j]));
                }
            }
        }
        out
    }

    fn all(&self) -> Vec<V> {
        let mut out = vec![vec![]];
        for _ in 0..self.n {
            out = out
                .into_iter()
                .flat_map(|v: V| {
                    (0..self.p).map(move |c| {
                        let mut w = v.clone();
                        w.push(c);
                        w
                    })
                })
                .collect();
        }
        out
    }

    fn span(&self, gens: impl IntoIterator<Item = V>) -> Set {
        let mut set: Set = [self.zero()].into();
        for g in gens {
            let snapshot: Vec<V> = set.iter().cloned().collect();
            for c in 1..self.p {
                let cg = self.scale(c, &g);
                for s in &snapshot {
                    set.insert(self.add(s, &cg));
                }
            }
        }
        set
    }

    fn subspaces(&self) -> BTreeSet<Set> {
        let all = self.all();
        let mut seen: BTreeSet<Set> = BTreeSet::new();
        let mut queue = VecDeque::from([self.span([])]);
        while let Some(s) = queue.pop_front() {
            if !seen.insert(s.clone()) {
                continue;
            }
            for v in &all {
                if !s.contains(v) {
                    queue.push_back(self.span(s.iter().cloned().chain([v.clone()])));
                }
            }
        }
        seen
    }

    fn is_subalgebra(&self, s: &Set) -> bool {
        s.iter().all(|u| s.iter().all(|v| s.contains(&self.bracket(u, v))))
    }

    fn is_ideal(&self, s: &Set) -> bool {
        s.iter().all(|u| (0..self.n).all(|i| s.contains(&self.bracket(u, &self.unit(i)))))
    }

    fn product(&self, a: &Set, b: &Set) -> Set {
        self.span(a.iter().flat_map(|u| b.iter().map(move |v| self.bracket(u, v))))
    }

    fn ideal_closure(&self, x: &V) -> Set {
        let mut s = self.span([x.clone()]);
        loop {
            let next = self.span(
                s.iter()
                    .cloned()
                    .chain(s.iter().flat_map(|u| (0..self.n).map(move |i| self.bracket(u, &self.unit(i))))),
            );
            if next == s {
                return s;
            }
            s = next;
        }
    }

    /// Nilpotency class of `s`, `None` if not nilpotent.
    fn class(&self, s: &Set) -> Option<usize> {
        let mut term = s.clone();
        let mut c = 0;
        while term.len() > 1 {
            let next = self.product(&term, s);
            if next == term {
                return None;
            }
            term = next;
            c += 1;
        }
        Some(c)
    }

    fn eligible(&self, x: &V) -> bool {
        self.class(&self.ideal_closure(x)).is_some_and(|c| (c as u64) < self.p)
    }

    fn inv(&self, a: u64) -> u64 {
        (1..self.p).find(|b| a * b % self.p == 1).unwrap()
    }

    /// `exp(ad x)(v) = Σ_r [v, x, …, x] / r!`.
    fn exp_apply(&self, x: &V, v: &V) -> V {
        let mut out = v.clone();
        let mut term = v.clone();
        let mut fact = 1;
        for r in 1..self.p {
            term = self.bracket(&term, x);
            fact = fact * r % self.p;
            out = self.add(&out, &self.scale(self.inv(fact), &term));
        }
        out
    }

    fn orbit(&self, start: &Set, xs: &[V]) -> BTreeSet<Set> {
        let mut seen = BTreeSet::new();
        let mut queue = VecDeque::from([start.clone()]);
        while let Some(s) = queue.pop_front() {
            if !seen.insert(s.clone()) {
                continue;
            }
            for x in xs {
                queue.push_back(s.iter().map(|v| self.exp_apply(x, v)).collect());
            }
        }
        seen
    }
}

fn to_set(s: &Subspace) -> Set {
    s.elements()
        .unwrap()
        .into_iter()
        .map(|v| v.iter().map(|c| c.residue().unwrap()).collect())
        .collect()
}

fn sets(v: &[Subspace]) -> BTreeSet<Set> {
    v.iter().map(to_set).collect()
}

fn gf(p: u64) -> FieldDescriptor {
    FieldDescriptor::prime(p).unwrap()
}

fn sample() -> Vec<LieAlgebra> {
    let mut out = Vec::new();
    for p in [2, 3] {
        let f = gf(p);
        out.push(catalog::dim2_nonabelian(f));
        out.push(catalog::heisenberg3(f));
        out.push(catalog::dim3_almost_abelian(f));
        out.push(catalog::dim3_scaled(f, 0));
        out.push(catalog::upper_triangular(f, 2));
        for seed in 0..3 {
            out.push(catalog::random_solvable(seed, 3, f, 3).unwrap());
        }
    }
    out.push(catalog::example4(2).unwrap());
    out.push(catalog::cross_product(gf(3)));
    out
}

#[test]
fn subspace_enumeration_matches_closure_search() {
    for (p, n) in [(2, 1), (2, 2), (2, 3), (2, 4), (3, 2), (3, 3), (5, 2)] {
        let f = gf(p);
        let table = vec![vec![vec![0; n]; n]; n];
        let o = Oracle { p, n, table };
        let brute = o.subspaces();
        let listed = enumerate_subspaces(n, f, u128::MAX).unwrap();
        assert_eq!(listed.len() as u128, subspace_count(n as u32, p));
        assert_eq!(sets(&listed), brute, "GF({p})^{n}");
    }
}

#[test]
fn structural_queries_match_brute_force() {
    let lim = Limits::default();
    for l in sample() {
        let o = Oracle::new(&l);
        let all = o.subspaces();
        let subalgebras: BTreeSet<Set> = all.iter().filter(|s| o.is_subalgebra(s)).cloned().collect();
        let ideals: BTreeSet<Set> = all.iter().filter(|s| o.is_ideal(s)).cloned().collect();
        assert_eq!(sets(&l.subalgebras(&lim).unwrap()), subalgebras);
        assert_eq!(sets(&l.ideals(&lim).unwrap()), ideals);

        let minimal: BTreeSet<Set> = ideals
            .iter()
            .filter(|a| a.len() > 1 && !ideals.iter().any(|b| b.len() > 1 && b.len() < a.len() && b.is_subset(a)))
            .cloned()
            .collect();
        assert_eq!(sets(&l.minimal_ideals(&lim).unwrap()), minimal);

        let full = o.span((0..o.n).map(|i| o.unit(i)));
        let maximal: BTreeSet<Set> = subalgebras
            .iter()
            .filter(|m| {
                m.len() < full.len()
                    && !subalgebras.iter().any(|s| s.len() > m.len() && s.len() < full.len() && m.is_subset(s))
            })
            .cloned()
            .collect();
        let found: Vec<Subspace> = l.maximal_subalgebras(&lim).unwrap().into_iter().map(|s| s.into_space()).collect();
        assert_eq!(sets(&found), maximal);

        assert_eq!(to_set(&l.derived_algebra()), o.product(&full, &full));

        for s in &all {
            let sub = l.span(
                s.iter()
                    .map(|v| v.iter().map(|&c| l.field().from_u64(c)).collect())
                    .collect(),
            );
            let cent: Set = o.all().into_iter().filter(|x| s.iter().all(|u| o.bracket(x, u) == o.zero())).collect();
            assert_eq!(to_set(&l.centralizer(&sub)), cent);
            if subalgebras.contains(s) {
                let inside: Vec<&Set> = ideals.iter().filter(|i| i.is_subset(s)).collect();
                let largest = inside.iter().max_by_key(|i| i.len()).unwrap();
                assert!(inside.iter().all(|i| i.is_subset(largest)));
                assert_eq!(&to_set(&l.core(&sub).unwrap()), *largest);
            }
        }
    }
}

#[test]
fn eligibility_and_exp_match_series() {
    for l in sample() {
        let o = Oracle::new(&l);
        for x in o.all() {
            let xs: Vec<_> = x.iter().map(|&c| l.field().from_u64(c)).collect();
            let e = exp_eligible(&l, &xs);
            assert_eq!(e.eligible, o.eligible(&x), "{x:?}");
            if !e.eligible {
                continue;
            }
            let phi = solvlie_core::inner_auto::exp_ad(&l, &xs).unwrap();
            for i in 0..o.n {
                let got: V = phi.apply(&l.basis_vector(i)).iter().map(|c| c.residue().unwrap()).collect();
                assert_eq!(got, o.exp_apply(&x, &o.unit(i)));
            }
        }
    }
}

#[test]
fn orbit_search_matches_element_orbits() {
    let lim = Limits::default();
    for l in sample() {
        if !l.is_solvable() {
            continue;
        }
        let o = Oracle::new(&l);
        let xs: Vec<V> = o.all().into_iter().filter(|x| o.eligible(x)).collect();
        let gens = eligible_generators(&l, &l.full_space(), &lim).unwrap();
        assert!(gens.eligible as usize <= xs.len());
        let maximals: Vec<Subspace> = l.maximal_subalgebras(&lim).unwrap().into_iter().map(|s| s.into_space()).collect();
        for m in &maximals {
            let orbit = o.orbit(&to_set(m), &xs);
            for k in &maximals {
                let v = are_conjugate_bruteforce(&l, m, k, &l.full_space(), &lim).unwrap();
                assert_eq!(v.conjugate, orbit.contains(&to_set(k)), "[{m}] vs [{k}]");
                if let Some(w) = v.witness {
                    assert_eq!(w.image(m), *k);
                }
            }
        }
    }
}
