//! Brute-force congruence closure and the order of join-irreducible
//! congruences.
//!
//! Everything here works from the meet/join tables alone and serves as the
//! oracle that the witness searches are checked against.

use alloc::collections::{BTreeMap, BTreeSet, VecDeque};
use alloc::vec;
use alloc::vec::Vec;

use crate::lattice::{ElementId, PlanarLattice, PrimeInterval};

/// A partition of the elements, stored as the minimum element of each block.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Congruence {
    block_of: Vec<ElementId>,
}

impl Congruence {
    /// The identity relation on `n` elements.
    pub fn identity(n: usize) -> Self {
        Congruence {
            block_of: (0..n).map(ElementId).collect(),
        }
    }

    pub fn block_of(&self, x: ElementId) -> ElementId {
        self.block_of[x.0]
    }

    pub fn same_block(&self, x: ElementId, y: ElementId) -> bool {
        self.block_of[x.0] == self.block_of[y.0]
    }

    pub fn len(&self) -> usize {
        self.block_of.len()
    }

    pub fn is_empty(&self) -> bool {
        self.block_of.is_empty()
    }

    pub fn is_identity(&self) -> bool {
        self.block_of.iter().enumerate().all(|(i, b)| b.0 == i)
    }

    /// Blocks in order of their minimum element; each block sorted.
    pub fn blocks(&self) -> Vec<Vec<ElementId>> {
        let mut by_rep: BTreeMap<ElementId, Vec<ElementId>> = BTreeMap::new();
        for (i, &rep) in self.block_of.iter().enumerate() {
            by_rep.entry(rep).or_default().push(ElementId(i));
        }
        by_rep.into_values().collect()
    }

    /// Refinement order: every block of `self` lies inside a block of `other`.
    pub fn leq(&self, other: &Congruence) -> bool {
        self.block_of
            .iter()
            .enumerate()
            .all(|(i, &rep)| other.block_of[i] == other.block_of[rep.0])
    }

    /// Join in the lattice of equivalence relations. The join of two
    /// congruences of a lattice is again a congruence.
    pub fn join(&self, other: &Congruence) -> Congruence {
        let mut uf = UnionFind::new(self.len());
        for i in 0..self.len() {
            uf.union(i, self.block_of[i].0);
            uf.union(i, other.block_of[i].0);
        }
        uf.into_congruence()
    }

    /// Whether the block structure is compatible with meets and joins.
    pub fn has_substitution_property(&self, lattice: &PlanarLattice) -> bool {
        lattice.elements().all(|a| {
            let b = self.block_of(a);
            a == b
                || lattice.elements().all(|c| {
                    self.same_block(lattice.meet(a, c), lattice.meet(b, c))
                        && self.same_block(lattice.join(a, c), lattice.join(b, c))
                })
        })
    }

    fn from_block_of(block_of: Vec<ElementId>) -> Self {
        Congruence { block_of }
    }
}

/// Union-find over element indices, path-halving, union by size.
#[derive(Clone, Debug)]
struct UnionFind {
    parent: Vec<usize>,
    size: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
            size: vec![1; n],
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Returns false if already in the same set.
    fn union(&mut self, a: usize, b: usize) -> bool {
        let (mut ra, mut rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        if self.size[ra] < self.size[rb] {
            core::mem::swap(&mut ra, &mut rb);
        }
        self.parent[rb] = ra;
        self.size[ra] += self.size[rb];
        true
    }

    fn into_congruence(mut self) -> Congruence {
        let n = self.parent.len();
        let mut min_of_root = vec![usize::MAX; n];
        for i in 0..n {
            let r = self.find(i);
            min_of_root[r] = min_of_root[r].min(i);
        }
        let block_of = (0..n).map(|i| ElementId(min_of_root[self.find(i)])).collect();
        Congruence::from_block_of(block_of)
    }
}

/// The smallest congruence identifying `a` and `b`.
///
/// Every successful merge of `(x, y)` queues `(x ∧ c, y ∧ c)` and
/// `(x ∨ c, y ∨ c)` for all `c`. The partition is the equivalence generated
/// by the merged pairs, so closing each of them under substitution closes
/// the whole partition.
pub fn principal_congruence(lattice: &PlanarLattice, a: ElementId, b: ElementId) -> Congruence {
    let mut uf = UnionFind::new(lattice.len());
    let mut queue = VecDeque::new();
    if uf.union(a.0, b.0) {
        queue.push_back((a, b));
    }
    while let Some((x, y)) = queue.pop_front() {
        for c in lattice.elements() {
            for (u, v) in [
                (lattice.meet(x, c), lattice.meet(y, c)),
                (lattice.join(x, c), lattice.join(y, c)),
            ] {
                if uf.union(u.0, v.0) {
                    queue.push_back((u, v));
                }
            }
        }
    }
    uf.into_congruence()
}

/// `con(p)` for a prime interval.
pub fn con(lattice: &PlanarLattice, p: PrimeInterval) -> Congruence {
    principal_congruence(lattice, p.bottom, p.top)
}

pub fn collapses(theta: &Congruence, q: PrimeInterval) -> bool {
    theta.same_block(q.bottom, q.top)
}

/// The order `J(Con L)` of join-irreducible congruences.
#[derive(Clone, Debug)]
pub struct JiConOrder {
    /// One representative prime per congruence: the first prime interval
    /// (in `(bottom, top)` order) generating it.
    pub generators: Vec<PrimeInterval>,
    pub congruences: Vec<Congruence>,
    /// `leq[i][j]` iff congruence `i` is contained in congruence `j`.
    pub leq: Vec<Vec<bool>>,
    /// `(lower, upper)` index pairs of the cover relation.
    pub covers: Vec<(usize, usize)>,
    /// Index into `generators` for every prime of the lattice.
    pub class_of_prime: BTreeMap<PrimeInterval, usize>,
}

impl JiConOrder {
    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn upper_covers(&self, i: usize) -> impl Iterator<Item = usize> + '_ {
        self.covers.iter().filter(move |&&(lo, _)| lo == i).map(|&(_, hi)| hi)
    }

    pub fn max_upper_cover_count(&self) -> usize {
        (0..self.len()).map(|i| self.upper_covers(i).count()).max().unwrap_or(0)
    }
}

/// Computes `con(p)` for every prime `p`, deduplicates, and orders the
/// distinct congruences by refinement.
///
/// Each `con(p)` is checked to be join-irreducible among the computed
/// congruences: the join of all distinct `con(q)` strictly below it must be
/// strictly smaller. Panics if that check fails.
pub fn join_irreducible_congruences(lattice: &PlanarLattice) -> JiConOrder {
    let mut index: BTreeMap<Congruence, usize> = BTreeMap::new();
    let mut generators = Vec::new();
    let mut congruences = Vec::new();
    let mut class_of_prime = BTreeMap::new();
    for p in lattice.prime_intervals() {
        let theta = con(lattice, p);
        let next = congruences.len();
        let idx = *index.entry(theta.clone()).or_insert(next);
        if idx == next {
            generators.push(p);
            congruences.push(theta);
        }
        class_of_prime.insert(p, idx);
    }
    let k = congruences.len();
    let leq: Vec<Vec<bool>> = (0..k)
        .map(|i| (0..k).map(|j| congruences[i].leq(&congruences[j])).collect())
        .collect();
    for i in 0..k {
        let below = (0..k)
            .filter(|&j| j != i && leq[j][i])
            .fold(Congruence::identity(lattice.len()), |acc, j| acc.join(&congruences[j]));
        assert!(below != congruences[i], "con(p) must be join-irreducible");
    }
    let covers = order_covers(&leq);
    JiConOrder {
        generators,
        congruences,
        leq,
        covers,
        class_of_prime,
    }
}

/// Cover pairs of a finite partial order given as a `leq` matrix.
pub fn order_covers(leq: &[Vec<bool>]) -> Vec<(usize, usize)> {
    let k = leq.len();
    let lt = |i: usize, j: usize| i != j && leq[i][j];
    let mut covers = Vec::new();
    for i in 0..k {
        for j in 0..k {
            if lt(i, j) && !(0..k).any(|z| lt(i, z) && lt(z, j)) {
                covers.push((i, j));
            }
        }
    }
    covers
}

/// Every element of `J(Con L)` has at most two upper covers.
pub fn two_cover_property(lattice: &PlanarLattice) -> bool {
    join_irreducible_congruences(lattice).max_upper_cover_count() <= 2
}

/// All congruences of the lattice, as the join-closure of the principal
/// congruences of prime intervals (plus the identity). Slow; used for
/// cross-validation only.
pub fn all_congruences(lattice: &PlanarLattice) -> Vec<Congruence> {
    let principals: BTreeSet<Congruence> = lattice.prime_intervals().into_iter().map(|p| con(lattice, p)).collect();
    let mut all: BTreeSet<Congruence> = BTreeSet::new();
    all.insert(Congruence::identity(lattice.len()));
    let mut frontier: Vec<Congruence> = all.iter().cloned().collect();
    while let Some(theta) = frontier.pop() {
        for p in &principals {
            let joined = theta.join(p);
            if all.insert(joined.clone()) {
                frontier.push(joined);
            }
        }
    }
    all.into_iter().collect()
}
