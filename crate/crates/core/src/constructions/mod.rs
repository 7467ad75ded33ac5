//! Fixtures, fork insertion, canonical forms and the patch-lattice generator.

mod canonical;
pub(crate) mod fixtures;
mod fork;
mod generate;

pub use canonical::{diagram_canonical_form, order_canonical_form, reflection_canonical_form, CanonicalForm};
pub use fixtures::{chain, fixture, grid, FIXTURE_NAMES};
pub use fork::{
    covering_squares, fork_insert, fork_insert_traced, fork_trace, CoveringSquare, ForkInsertion, ForkTrace,
};
pub use generate::{generate_patch_lattices, generate_with, Dedup, GeneratedLattice};
