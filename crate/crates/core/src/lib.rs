//! Slim, planar, semimodular lattices: ordered-cover representation, fork
//! insertion, perspectivity and swing relations, principal congruences, and
//! exhaustive checks of congruence spreading.
//!
//! ```
//! use sps_core::{con, collapses, find_swing_sequence, fixture, PrimeInterval};
//!
//! let s7 = fixture("S7").unwrap();
//! let p = |b, t| PrimeInterval::new(&s7, s7.element(b).unwrap(), s7.element(t).unwrap()).unwrap();
//! let witness = find_swing_sequence(&s7, p("a_l", "t"), p("z_r", "a_r")).unwrap();
//! assert_eq!(witness.describe(&s7), "[a_l,t] Swing [m,t] DownPersp [z_r,a_r]");
//! assert!(collapses(&con(&s7, p("a_l", "t")), p("z_r", "a_r")));
//! ```

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

mod bits;
pub mod congruence;
pub mod constructions;
pub mod error;
pub mod lattice;
pub mod relations;
pub mod swing;

pub use congruence::{collapses, con, join_irreducible_congruences, principal_congruence, Congruence, JiConOrder};
pub use constructions::{fixture, fork_insert, generate_patch_lattices, CoveringSquare, FIXTURE_NAMES};
pub use error::{BuildError, ConstructionError, QueryError, Side, SwingError, WitnessError};
pub use lattice::{ElementId, Interval, PlanarLattice, PrimeInterval};
pub use relations::StepKind;
pub use swing::{find_prime_projectivity, find_swing_sequence, lemma_suite, verify_swing_lemma, StepSequence};
