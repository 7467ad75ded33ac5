//! Witness search, verification against the congruence oracle, and the
//! auxiliary structural checks.

mod lemmas;
mod search;
mod sequence;
mod verify;

pub use lemmas::{
    boundary_reachability_persistence, lemma_suite, CheckOutcome, LemmaReport, PersistenceFailure, PersistenceReport,
    CHECK_NAMES,
};
pub use search::{find_prime_projectivity, find_swing_sequence, SearchTree, StepGraph};
pub use sequence::StepSequence;
pub use verify::{
    normalize_witness, verify_prime_projectivity_lemma, verify_swing_lemma, Discrepancy, DiscrepancyKind, VerifyReport,
};
