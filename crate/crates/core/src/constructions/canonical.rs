//! Canonical forms for isomorphism tests.
//!
//! Two flavours:
//!
//! * diagram forms respect the left-right order of covers. They are read off
//!   a breadth-first walk from the bottom that visits upper covers left to
//!   right, so they cost linear time and need no search;
//! * the order form ignores left and right, and is found by colour
//!   refinement followed by individualisation and backtracking over the
//!   remaining symmetric cells, keeping the least encoding among all leaves.

use alloc::collections::{BTreeMap, VecDeque};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::lattice::{ElementId, PlanarLattice};

/// Byte encoding of a lattice up to the chosen notion of isomorphism.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalForm(pub Vec<u8>);

impl CanonicalForm {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    fn from_words(words: &[u32]) -> Self {
        CanonicalForm(words.iter().flat_map(|w| w.to_be_bytes()).collect())
    }
}

impl fmt::Display for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for b in &self.0 {
            write!(f, "{b:02x}")?;
        }
        Ok(())
    }
}

/// Diagram form: equal iff the ordered diagrams are isomorphic, with left
/// and right kept apart.
pub fn diagram_canonical_form(lattice: &PlanarLattice) -> CanonicalForm {
    let n = lattice.len();
    let mut new_id = vec![usize::MAX; n];
    let mut visit = Vec::with_capacity(n);
    let mut queue = VecDeque::from([lattice.bottom()]);
    new_id[lattice.bottom().0] = 0;
    let mut discovered = 1;
    while let Some(x) = queue.pop_front() {
        visit.push(x);
        for &u in lattice.upper_covers(x) {
            if new_id[u.0] == usize::MAX {
                new_id[u.0] = discovered;
                discovered += 1;
                queue.push_back(u);
            }
        }
    }
    let mut words = vec![n as u32];
    for &x in &visit {
        let ups = lattice.upper_covers(x);
        let lows = lattice.lower_covers(x);
        words.push(ups.len() as u32);
        words.extend(ups.iter().map(|u| new_id[u.0] as u32));
        words.push(lows.len() as u32);
        words.extend(lows.iter().map(|d| new_id[d.0] as u32));
    }
    CanonicalForm::from_words(&words)
}

/// Diagram form up to left-right reflection: the lesser of the diagram
/// forms of the lattice and of its mirror image.
pub fn reflection_canonical_form(lattice: &PlanarLattice) -> CanonicalForm {
    let own = diagram_canonical_form(lattice);
    let mirrored = diagram_canonical_form(&lattice.mirrored());
    own.min(mirrored)
}

/// Order form: equal iff the lattices are order-isomorphic.
pub fn order_canonical_form(lattice: &PlanarLattice) -> CanonicalForm {
    let colours = refine(lattice, initial_colours(lattice));
    let mut best: Option<Vec<u32>> = None;
    search(lattice, colours, &mut best);
    CanonicalForm::from_words(&best.expect("search visits at least one leaf"))
}

fn initial_colours(lattice: &PlanarLattice) -> Vec<u32> {
    let n = lattice.len();
    // Longest chains from the bottom and to the top; valid in any finite
    // poset, graded or not.
    let mut rise = vec![0u32; n];
    let mut order: Vec<ElementId> = lattice.elements().collect();
    order.sort_by_key(|&x| lattice.elements().filter(|&y| lattice.lt(y, x)).count());
    for &x in &order {
        rise[x.0] = lattice.lower_covers(x).iter().map(|d| rise[d.0] + 1).max().unwrap_or(0);
    }
    let mut fall = vec![0u32; n];
    for &x in order.iter().rev() {
        fall[x.0] = lattice.upper_covers(x).iter().map(|u| fall[u.0] + 1).max().unwrap_or(0);
    }
    let keys: Vec<(u32, u32, usize, usize)> = lattice
        .elements()
        .map(|x| {
            (
                rise[x.0],
                fall[x.0],
                lattice.lower_covers(x).len(),
                lattice.upper_covers(x).len(),
            )
        })
        .collect();
    rank(&keys)
}

/// Dense ranks of the keys in sorted order.
fn rank<K: Ord + Clone>(keys: &[K]) -> Vec<u32> {
    let mut sorted: Vec<K> = keys.to_vec();
    sorted.sort();
    sorted.dedup();
    let table: BTreeMap<K, u32> = sorted.into_iter().enumerate().map(|(i, k)| (k, i as u32)).collect();
    keys.iter().map(|k| table[k]).collect()
}

fn class_count(colours: &[u32]) -> usize {
    let mut c = colours.to_vec();
    c.sort_unstable();
    c.dedup();
    c.len()
}

fn refine(lattice: &PlanarLattice, mut colours: Vec<u32>) -> Vec<u32> {
    let mut classes = class_count(&colours);
    loop {
        let keys: Vec<(u32, Vec<u32>, Vec<u32>)> = lattice
            .elements()
            .map(|x| {
                let mut ups: Vec<u32> = lattice.upper_covers(x).iter().map(|u| colours[u.0]).collect();
                let mut lows: Vec<u32> = lattice.lower_covers(x).iter().map(|d| colours[d.0]).collect();
                ups.sort_unstable();
                lows.sort_unstable();
                (colours[x.0], ups, lows)
            })
            .collect();
        colours = rank(&keys);
        let now = class_count(&colours);
        if now == classes {
            return colours;
        }
        classes = now;
    }
}

fn search(lattice: &PlanarLattice, colours: Vec<u32>, best: &mut Option<Vec<u32>>) {
    let n = colours.len();
    if class_count(&colours) == n {
        let encoding = encode(lattice, &colours);
        if best.as_ref().is_none_or(|b| encoding < *b) {
            *best = Some(encoding);
        }
        return;
    }
    // Smallest colour shared by more than one element.
    let mut counts: BTreeMap<u32, usize> = BTreeMap::new();
    for &c in &colours {
        *counts.entry(c).or_default() += 1;
    }
    let target = counts
        .iter()
        .find(|(_, &k)| k > 1)
        .map(|(&c, _)| c)
        .expect("not discrete");
    for chosen in (0..n).filter(|&x| colours[x] == target) {
        let keys: Vec<(u32, bool)> = (0..n).map(|x| (colours[x], x != chosen)).collect();
        let split = refine(lattice, rank(&keys));
        search(lattice, split, best);
    }
}

fn encode(lattice: &PlanarLattice, colours: &[u32]) -> Vec<u32> {
    let mut edges: Vec<(u32, u32)> = lattice
        .elements()
        .flat_map(|x| {
            lattice
                .upper_covers(x)
                .iter()
                .map(move |&u| (colours[x.0], colours[u.0]))
        })
        .collect();
    edges.sort_unstable();
    let mut words = vec![colours.len() as u32];
    for (a, b) in edges {
        words.push(a);
        words.push(b);
    }
    words
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{fixture, fixtures::grid};
    use alloc::string::String;

    fn relabel(l: &PlanarLattice, perm: &[usize]) -> PlanarLattice {
        let n = l.len();
        let mut labels = vec![String::new(); n];
        let mut upper = vec![Vec::new(); n];
        let mut lower = vec![Vec::new(); n];
        for x in l.elements() {
            let nx = perm[x.0];
            labels[nx] = String::from(l.label(x));
            upper[nx] = l.upper_covers(x).iter().map(|u| ElementId(perm[u.0])).collect();
            lower[nx] = l.lower_covers(x).iter().map(|d| ElementId(perm[d.0])).collect();
        }
        PlanarLattice::new(labels, upper, lower).unwrap()
    }

    #[test]
    fn relabelled_b2_has_same_forms() {
        let b2 = fixture("B2").unwrap();
        let r = relabel(&b2, &[3, 1, 0, 2]);
        assert_eq!(diagram_canonical_form(&b2), diagram_canonical_form(&r));
        assert_eq!(order_canonical_form(&b2), order_canonical_form(&r));
    }

    #[test]
    fn s7_and_mirror() {
        let s7 = fixture("S7").unwrap();
        let mirror = relabel(&s7.mirrored(), &[6, 5, 4, 3, 2, 1, 0]);
        assert_eq!(reflection_canonical_form(&s7), reflection_canonical_form(&mirror));
        assert_eq!(order_canonical_form(&s7), order_canonical_form(&mirror));
    }

    #[test]
    fn mirror_distinguishes_asymmetric_diagrams() {
        let g = grid(2, 3);
        assert_ne!(diagram_canonical_form(&g), diagram_canonical_form(&g.mirrored()));
        assert_eq!(reflection_canonical_form(&g), reflection_canonical_form(&g.mirrored()));
        assert_eq!(order_canonical_form(&g), order_canonical_form(&grid(3, 2)));
    }

    #[test]
    fn different_lattices_differ() {
        let s7 = fixture("S7").unwrap();
        let b2 = fixture("B2").unwrap();
        assert_ne!(order_canonical_form(&s7), order_canonical_form(&b2));
        assert_ne!(
            order_canonical_form(&fixture("N5").unwrap()),
            order_canonical_form(&fixture("M3").unwrap())
        );
        assert_ne!(
            order_canonical_form(&grid(2, 3)),
            order_canonical_form(&fixture("C6").unwrap())
        );
    }
}
