use std::collections::{HashMap, HashSet, VecDeque};

use serde::Serialize;

use super::{exp_ad, exp_eligible, InnerAutomorphism};
use crate::error::{Error, Result};
use crate::exact_linear::{Matrix, Subspace};
use crate::lie_core::LieAlgebra;
use crate::limits::Limits;

/// Distinct non-identity `exp(ad x)` for the eligible `x` of a subspace.
#[derive(Clone, Debug, Serialize)]
pub struct GeneratorSet {
    pub generators: Vec<InnerAutomorphism>,
    /// Vectors of the subspace that were enumerated.
    pub enumerated: u128,
    /// Nonzero eligible vectors found.
    pub eligible: usize,
    /// Nonzero eligible vectors lying in `L²`.
    pub eligible_in_derived: usize,
}

/// Enumerates `B` and collects `exp(ad x)` for every eligible `x ∈ B`,
/// deduplicated by matrix; the first `x` in enumeration order is kept.
pub fn eligible_generators(l: &LieAlgebra, b: &Subspace, limits: &Limits) -> Result<GeneratorSet> {
    l.field().require_prime()?;
    let count = b.cardinality().unwrap_or(u128::MAX);
    if count > limits.max_search {
        return Err(Error::CapExceeded {
            what: "generator enumeration",
            needed: count,
            cap: limits.max_search,
        });
    }
    let derived = l.derived_algebra();
    let mut seen = HashSet::new();
    let mut set = GeneratorSet {
        generators: Vec::new(),
        enumerated: count,
        eligible: 0,
        eligible_in_derived: 0,
    };
    for x in b.elements()? {
        if x.iter().all(|c| c.is_zero()) || !exp_eligible(l, &x).eligible {
            continue;
        }
        set.eligible += 1;
        if derived.contains_vector(&x) {
            set.eligible_in_derived += 1;
        }
        let phi = exp_ad(l, &x)?;
        if !phi.is_identity() && seen.insert(phi.matrix.clone()) {
            set.generators.push(phi);
        }
    }
    Ok(set)
}

/// The group `I(L:B)` generated by the `exp(ad x)`, `x ∈ B` eligible.
#[derive(Clone, Debug)]
pub struct InnerGroup {
    pub generators: Vec<InnerAutomorphism>,
    pub elements: Vec<InnerAutomorphism>,
    /// `false` when the closure stopped at `cap` elements.
    pub complete: bool,
    pub cap: usize,
}

impl InnerGroup {
    pub fn order(&self) -> Option<usize> {
        self.complete.then_some(self.elements.len())
    }

    pub fn require_complete(self) -> Result<Self> {
        if self.complete {
            Ok(self)
        } else {
            Err(Error::CapExceeded {
                what: "group closure",
                needed: self.cap as u128 + 1,
                cap: self.cap as u128,
            })
        }
    }
}

/// Breadth-first closure from the identity under right multiplication by
/// the generators. Finite groups need no explicit inverses.
pub fn inner_group(l: &LieAlgebra, b: &Subspace, limits: &Limits) -> Result<InnerGroup> {
    let gens = eligible_generators(l, b, limits)?.generators;
    let cap = limits.max_group;
    let identity = InnerAutomorphism::identity(l);
    let mut seen: HashSet<Matrix> = HashSet::from([identity.matrix.clone()]);
    let mut elements = vec![identity];
    let mut complete = true;
    let mut head = 0;
    'bfs: while head < elements.len() {
        let current = elements[head].clone();
        head += 1;
        for g in &gens {
            let next = current.compose(g);
            if seen.insert(next.matrix.clone()) {
                if elements.len() >= cap {
                    complete = false;
                    break 'bfs;
                }
                elements.push(next);
            }
        }
    }
    Ok(InnerGroup {
        generators: gens,
        elements,
        complete,
        cap,
    })
}

/// Orbit of a subspace under a generator set, with a BFS tree for witnesses.
#[derive(Clone, Debug)]
pub struct Orbit {
    members: Vec<Subspace>,
    index: HashMap<Subspace, usize>,
    // (parent member, generator) that first reached each member
    parent: Vec<Option<(usize, usize)>>,
    complete: bool,
}

impl Orbit {
    pub fn members(&self) -> &[Subspace] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn complete(&self) -> bool {
        self.complete
    }

    pub fn contains(&self, s: &Subspace) -> bool {
        self.index.contains_key(s)
    }

    /// An automorphism carrying the start of the orbit to `target`.
    pub fn witness(&self, l: &LieAlgebra, target: &Subspace, generators: &[InnerAutomorphism]) -> Option<InnerAutomorphism> {
        let mut at = *self.index.get(target)?;
        let mut path = Vec::new();
        while let Some((from, g)) = self.parent[at] {
            path.push(g);
            at = from;
        }
        // path lists generators from target back to start: g_k, …, g_1
        let mut phi = InnerAutomorphism::identity(l);
        for g in path {
            phi = phi.compose(&generators[g]);
        }
        Some(phi)
    }
}

pub fn orbit(start: &Subspace, generators: &[InnerAutomorphism], cap: usize) -> Orbit {
    let mut orbit = Orbit {
        members: vec![start.clone()],
        index: HashMap::from([(start.clone(), 0)]),
        parent: vec![None],
        complete: true,
    };
    let mut queue = VecDeque::from([0usize]);
    while let Some(at) = queue.pop_front() {
        for (g, phi) in generators.iter().enumerate() {
            let image = phi.image(&orbit.members[at]);
            if orbit.index.contains_key(&image) {
                continue;
            }
            if orbit.members.len() >= cap {
                orbit.complete = false;
                return orbit;
            }
            orbit.index.insert(image.clone(), orbit.members.len());
            orbit.members.push(image);
            orbit.parent.push(Some((at, g)));
            queue.push_back(orbit.members.len() - 1);
        }
    }
    orbit
}

#[derive(Clone, Debug, Serialize)]
pub struct BruteForceVerdict {
    pub conjugate: bool,
    /// Automorphism `φ` with `φ(M) = K`, when conjugate.
    pub witness: Option<InnerAutomorphism>,
    /// Size of the orbit of `M`; a full enumeration when not conjugate.
    pub orbit_size: usize,
    pub generators: usize,
}

/// Orbit search for `K` in the `I(L:B)`-orbit of `M`.
pub fn are_conjugate_bruteforce(
    l: &LieAlgebra,
    m: &Subspace,
    k: &Subspace,
    b: &Subspace,
    limits: &Limits,
) -> Result<BruteForceVerdict> {
    let gens = eligible_generators(l, b, limits)?.generators;
    let orb = orbit(m, &gens, limits.max_group);
    let witness = orb.witness(l, k, &gens);
    if witness.is_none() && !orb.complete() {
        return Err(Error::CapExceeded {
            what: "orbit enumeration",
            needed: limits.max_group as u128 + 1,
            cap: limits.max_group as u128,
        });
    }
    Ok(BruteForceVerdict {
        conjugate: witness.is_some(),
        witness,
        orbit_size: orb.len(),
        generators: gens.len(),
    })
}
