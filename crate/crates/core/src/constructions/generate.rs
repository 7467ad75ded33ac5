//! Breadth-first generation of slim patch lattices by fork insertion,
//! starting from `B2`.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;

use super::canonical::{diagram_canonical_form, reflection_canonical_form, CanonicalForm};
use super::fixtures::fixture;
use super::fork::{covering_squares, fork_insert_traced, CoveringSquare, ForkInsertion};
use crate::error::ConstructionError;
use crate::lattice::PlanarLattice;

/// Which diagrams count as duplicates.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Dedup {
    /// Isomorphic as ordered diagrams.
    Diagram,
    /// Isomorphic as ordered diagrams, or mirror images of each other.
    DiagramUpToReflection,
}

impl Dedup {
    pub fn form(self, lattice: &PlanarLattice) -> CanonicalForm {
        match self {
            Dedup::Diagram => diagram_canonical_form(lattice),
            Dedup::DiagramUpToReflection => reflection_canonical_form(lattice),
        }
    }
}

/// One lattice of a generated family.
#[derive(Clone, Debug)]
pub struct GeneratedLattice {
    pub lattice: PlanarLattice,
    /// Number of fork insertions on the path from `B2`.
    pub depth: usize,
    pub canonical: CanonicalForm,
    /// Index of the lattice it was first reached from, with the square used.
    pub parent: Option<(usize, CoveringSquare)>,
}

/// All pairwise non-isomorphic (up to reflection) slim patch lattices
/// reachable from `B2` by at most `max_forks` fork insertions.
pub fn generate_patch_lattices(max_forks: usize) -> Result<Vec<GeneratedLattice>, ConstructionError> {
    generate_with(max_forks, Dedup::DiagramUpToReflection, |_, _, _| {})
}

/// Generation with a choice of dedup and a callback seeing every single
/// insertion `(parent index, square, result)`, including those whose result
/// turns out to be a duplicate.
///
/// Output order: by depth, then by parent, then by square order.
pub fn generate_with<F>(
    max_forks: usize,
    dedup: Dedup,
    mut on_insert: F,
) -> Result<Vec<GeneratedLattice>, ConstructionError>
where
    F: FnMut(usize, CoveringSquare, &ForkInsertion),
{
    let b2 = fixture("B2")?;
    let mut seen: BTreeSet<CanonicalForm> = BTreeSet::new();
    let root = GeneratedLattice {
        canonical: dedup.form(&b2),
        lattice: b2,
        depth: 0,
        parent: None,
    };
    seen.insert(root.canonical.clone());
    let mut out = vec![root];
    let mut level_start = 0;
    for depth in 1..=max_forks {
        let level_end = out.len();
        for parent in level_start..level_end {
            for square in covering_squares(&out[parent].lattice) {
                let insertion = fork_insert_traced(&out[parent].lattice, square)?;
                on_insert(parent, square, &insertion);
                let canonical = dedup.form(&insertion.lattice);
                if seen.insert(canonical.clone()) {
                    out.push(GeneratedLattice {
                        lattice: insertion.lattice,
                        depth,
                        canonical,
                        parent: Some((parent, square)),
                    });
                }
            }
        }
        level_start = level_end;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn depth_zero_and_one() {
        let zero = generate_patch_lattices(0).unwrap();
        assert_eq!(zero.len(), 1);
        assert_eq!(zero[0].lattice.len(), 4);
        let one = generate_patch_lattices(1).unwrap();
        assert_eq!(one.len(), 2);
        assert_eq!(one[1].lattice, fixture("S7").unwrap());
    }

    #[test]
    fn all_outputs_are_patch_lattices() {
        for g in generate_patch_lattices(2).unwrap() {
            assert!(g.lattice.is_patch_lattice(), "depth {}", g.depth);
        }
    }
}
