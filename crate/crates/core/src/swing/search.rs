//! Breadth-first witness search over the prime intervals of a lattice.

use alloc::collections::{BTreeMap, VecDeque};
use alloc::vec;
use alloc::vec::Vec;

use super::sequence::StepSequence;
use crate::lattice::{PlanarLattice, PrimeInterval};
use crate::relations::{persp_dn, persp_up, prime_persp_dn, prime_persp_up, swing, StepKind};

/// Directed graph on the prime intervals of one lattice.
///
/// `edges` may be taken from any node; `opening` edges only as the first
/// step out of the search source. Both adjacency lists are sorted by target
/// index, which makes breadth-first parents give the lexicographically
/// least shortest path.
#[derive(Clone, Debug)]
pub struct StepGraph {
    primes: Vec<PrimeInterval>,
    index: BTreeMap<PrimeInterval, usize>,
    edges: Vec<Vec<(usize, StepKind)>>,
    opening: Vec<Vec<(usize, StepKind)>>,
}

/// Parent pointers of one breadth-first search.
#[derive(Clone, Debug)]
pub struct SearchTree {
    source: usize,
    parent: Vec<Option<(usize, StepKind)>>,
}

impl StepGraph {
    /// `↘` and `↻` edges between distinct primes, with `↗` opening edges.
    pub fn swing_graph(lattice: &PlanarLattice) -> Self {
        Self::build(
            lattice,
            |l, p, q| {
                if persp_dn(l, p.into(), q.into()) {
                    Some(StepKind::DownPersp)
                } else if swing(l, p, q) {
                    Some(StepKind::Swing)
                } else {
                    None
                }
            },
            |l, p, q| persp_up(l, p.into(), q.into()).then_some(StepKind::UpPersp),
        )
    }

    /// Prime-perspectivity edges in both directions, no opening edges.
    pub fn projectivity_graph(lattice: &PlanarLattice) -> Self {
        Self::build(
            lattice,
            |l, p, q| {
                if prime_persp_dn(l, p, q) {
                    Some(StepKind::PrimeDown)
                } else if prime_persp_up(l, p, q) {
                    Some(StepKind::PrimeUp)
                } else {
                    None
                }
            },
            |_, _, _| None,
        )
    }

    fn build(
        lattice: &PlanarLattice,
        edge: impl Fn(&PlanarLattice, PrimeInterval, PrimeInterval) -> Option<StepKind>,
        opening: impl Fn(&PlanarLattice, PrimeInterval, PrimeInterval) -> Option<StepKind>,
    ) -> Self {
        let primes = lattice.prime_intervals();
        let index = primes.iter().enumerate().map(|(i, &p)| (p, i)).collect();
        let k = primes.len();
        let mut edges = vec![Vec::new(); k];
        let mut opens = vec![Vec::new(); k];
        for i in 0..k {
            for j in 0..k {
                if i == j {
                    continue;
                }
                if let Some(kind) = edge(lattice, primes[i], primes[j]) {
                    edges[i].push((j, kind));
                } else if let Some(kind) = opening(lattice, primes[i], primes[j]) {
                    opens[i].push((j, kind));
                }
            }
        }
        StepGraph {
            primes,
            index,
            edges,
            opening: opens,
        }
    }

    pub fn primes(&self) -> &[PrimeInterval] {
        &self.primes
    }

    pub fn index_of(&self, p: PrimeInterval) -> Option<usize> {
        self.index.get(&p).copied()
    }

    /// Breadth-first search from `source`; `with_opening` enables the
    /// source-only edges.
    pub fn search(&self, source: usize, with_opening: bool) -> SearchTree {
        let k = self.primes.len();
        let mut parent: Vec<Option<(usize, StepKind)>> = vec![None; k];
        let mut seen = vec![false; k];
        seen[source] = true;
        let mut queue = VecDeque::from([source]);
        while let Some(x) = queue.pop_front() {
            let mut out: Vec<(usize, StepKind)> = self.edges[x].clone();
            if x == source && with_opening {
                out.extend(self.opening[x].iter().copied());
                out.sort_by_key(|&(j, _)| j);
            }
            for (y, kind) in out {
                if !seen[y] {
                    seen[y] = true;
                    parent[y] = Some((x, kind));
                    queue.push_back(y);
                }
            }
        }
        SearchTree { source, parent }
    }
}

impl SearchTree {
    pub fn reaches(&self, target: usize) -> bool {
        target == self.source || self.parent[target].is_some()
    }

    /// The path from the source to `target`, if reached.
    pub fn path(&self, graph: &StepGraph, target: usize) -> Option<StepSequence> {
        if !self.reaches(target) {
            return None;
        }
        let mut rev = Vec::new();
        let mut cur = target;
        while let Some((prev, kind)) = self.parent[cur] {
            rev.push((kind, graph.primes[cur]));
            cur = prev;
        }
        let mut seq = StepSequence::single(graph.primes[self.source]);
        for (kind, p) in rev.into_iter().rev() {
            seq.push(kind, p);
        }
        Some(seq)
    }
}

/// A shortest sequence `p ↗ r = r_0, r_1, …, r_n = q` (with `r = p`
/// allowed) in which every later step is `↘` or `↻`. Ties are broken by the
/// lexicographically least sequence of prime indices.
pub fn find_swing_sequence(lattice: &PlanarLattice, p: PrimeInterval, q: PrimeInterval) -> Option<StepSequence> {
    let graph = StepGraph::swing_graph(lattice);
    let (s, t) = (graph.index_of(p)?, graph.index_of(q)?);
    graph.search(s, true).path(&graph, t)
}

/// A shortest sequence of prime-perspectivities from `p` to `q`. Its
/// intervals are pairwise distinct; for `p = q` it has no steps.
pub fn find_prime_projectivity(lattice: &PlanarLattice, p: PrimeInterval, q: PrimeInterval) -> Option<StepSequence> {
    let graph = StepGraph::projectivity_graph(lattice);
    let (s, t) = (graph.index_of(p)?, graph.index_of(q)?);
    graph.search(s, false).path(&graph, t)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::fixture;

    fn prime(l: &PlanarLattice, b: &str, t: &str) -> PrimeInterval {
        PrimeInterval::new(l, l.element(b).unwrap(), l.element(t).unwrap()).unwrap()
    }

    #[test]
    fn s7_witnesses() {
        let s7 = fixture("S7").unwrap();
        // [a_l,t] is down-perspective to [o,z_r] directly.
        let w = find_swing_sequence(&s7, prime(&s7, "a_l", "t"), prime(&s7, "o", "z_r")).unwrap();
        assert_eq!(w.describe(&s7), "[a_l,t] DownPersp [o,z_r]");
        let w = find_swing_sequence(&s7, prime(&s7, "a_l", "t"), prime(&s7, "z_r", "a_r")).unwrap();
        assert_eq!(w.describe(&s7), "[a_l,t] Swing [m,t] DownPersp [z_r,a_r]");
        assert!(find_swing_sequence(&s7, prime(&s7, "m", "t"), prime(&s7, "a_l", "t")).is_none());
    }

    #[test]
    fn n5_projectivity_in_one_step() {
        let n5 = fixture("N5").unwrap();
        let w = find_prime_projectivity(&n5, prime(&n5, "u", "i"), prime(&n5, "v", "w")).unwrap();
        assert_eq!(w.steps, [StepKind::PrimeDown]);
    }

    #[test]
    fn same_prime_gives_empty_sequence() {
        let m3 = fixture("M3").unwrap();
        let p = prime(&m3, "o", "a");
        assert!(find_prime_projectivity(&m3, p, p).unwrap().is_empty());
    }

    #[test]
    fn m3_everything_connected() {
        let m3 = fixture("M3").unwrap();
        for p in m3.prime_intervals() {
            for q in m3.prime_intervals() {
                assert!(find_prime_projectivity(&m3, p, q).is_some());
            }
        }
    }
}
