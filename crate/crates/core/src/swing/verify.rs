//! Exhaustive comparison of witness searches with the congruence oracle.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use super::search::{find_swing_sequence, StepGraph};
use super::sequence::StepSequence;
use crate::congruence::{collapses, con};
use crate::error::WitnessError;
use crate::lattice::{PlanarLattice, PrimeInterval};
use crate::relations::StepKind;

/// What went wrong for one ordered pair.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum DiscrepancyKind {
    /// Oracle collapse and witness existence disagree.
    OracleMismatch,
    /// A returned witness fails a step when re-checked.
    InvalidStep,
    /// A witness has the wrong step kinds or order.
    Shape,
    /// Tops increase somewhere after the leading up-step.
    MonotoneTops,
    /// Repeated intervals or two equal consecutive steps.
    NormalForm,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Discrepancy {
    pub kind: DiscrepancyKind,
    pub p: PrimeInterval,
    pub q: PrimeInterval,
    pub collapsed: bool,
    pub witness: Option<StepSequence>,
    pub detail: String,
}

/// Outcome of checking one lattice.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct VerifyReport {
    /// Ordered pairs of distinct primes examined.
    pub pairs: usize,
    /// Pairs with `q` collapsed by `con(p)`.
    pub collapsed: usize,
    /// Witnesses re-validated step by step.
    pub witnesses: usize,
    pub discrepancies: Vec<Discrepancy>,
}

impl VerifyReport {
    pub fn is_clean(&self) -> bool {
        self.discrepancies.is_empty()
    }

    pub fn count(&self, kind: DiscrepancyKind) -> usize {
        self.discrepancies.iter().filter(|d| d.kind == kind).count()
    }

    /// Adds the counts and discrepancies of `other`.
    pub fn merge(&mut self, other: VerifyReport) {
        self.pairs += other.pairs;
        self.collapsed += other.collapsed;
        self.witnesses += other.witnesses;
        self.discrepancies.extend(other.discrepancies);
    }
}

/// For every ordered pair of distinct primes, `q` is collapsed by `con(p)`
/// exactly when a swing-lemma witness exists. Each witness is re-checked
/// step by step, for its shape, for weakly decreasing tops, and for the
/// normal form of shortest witnesses. Never stops at the first failure.
pub fn verify_swing_lemma(lattice: &PlanarLattice) -> VerifyReport {
    let graph = StepGraph::swing_graph(lattice);
    verify_with(lattice, &graph, true, |seq, lattice, out| {
        if !seq.is_swing_shaped() {
            out.push((DiscrepancyKind::Shape, String::from("steps are not ↗? (↘|↻)*")));
        }
        if !seq.has_monotone_tops(lattice) {
            out.push((DiscrepancyKind::MonotoneTops, String::from("tops increase")));
        }
        if !seq.is_pairwise_distinct() || !seq.alternates() {
            out.push((
                DiscrepancyKind::NormalForm,
                String::from("shortest witness not in normal form"),
            ));
        }
    })
}

/// For every ordered pair of distinct primes, `q` is collapsed by `con(p)`
/// exactly when a chain of prime-perspectivities leads from `p` to `q`.
/// Works in any finite lattice.
pub fn verify_prime_projectivity_lemma(lattice: &PlanarLattice) -> VerifyReport {
    let graph = StepGraph::projectivity_graph(lattice);
    verify_with(lattice, &graph, false, |seq, _, out| {
        if seq
            .steps
            .iter()
            .any(|k| !matches!(k, StepKind::PrimeUp | StepKind::PrimeDown))
        {
            out.push((DiscrepancyKind::Shape, String::from("non prime-perspectivity step")));
        }
        if !seq.is_pairwise_distinct() {
            out.push((DiscrepancyKind::NormalForm, String::from("repeated interval")));
        }
    })
}

fn verify_with(
    lattice: &PlanarLattice,
    graph: &StepGraph,
    with_opening: bool,
    shape_checks: impl Fn(&StepSequence, &PlanarLattice, &mut Vec<(DiscrepancyKind, String)>),
) -> VerifyReport {
    let mut report = VerifyReport::default();
    let primes = graph.primes();
    for (i, &p) in primes.iter().enumerate() {
        let theta = con(lattice, p);
        let tree = graph.search(i, with_opening);
        for (j, &q) in primes.iter().enumerate() {
            if i == j {
                continue;
            }
            report.pairs += 1;
            let collapsed = collapses(&theta, q);
            report.collapsed += usize::from(collapsed);
            let witness = tree.path(graph, j);
            let mut found = Vec::new();
            if collapsed != witness.is_some() {
                let detail = if collapsed {
                    "collapsed but no witness"
                } else {
                    "witness but not collapsed"
                };
                found.push((DiscrepancyKind::OracleMismatch, String::from(detail)));
            }
            if let Some(seq) = &witness {
                report.witnesses += 1;
                if let Err(WitnessError::NotAWitness { step }) = seq.check_steps(lattice) {
                    found.push((DiscrepancyKind::InvalidStep, format!("step {step} fails")));
                }
                if seq.first() != p || seq.last() != q {
                    found.push((DiscrepancyKind::InvalidStep, String::from("wrong endpoints")));
                }
                shape_checks(seq, lattice, &mut found);
            }
            for (kind, detail) in found {
                report.discrepancies.push(Discrepancy {
                    kind,
                    p,
                    q,
                    collapsed,
                    witness: witness.clone(),
                    detail,
                });
            }
        }
    }
    report
}

/// Replaces a valid witness by a shortest one between the same endpoints
/// and checks that it is in normal form: pairwise distinct intervals, `↘`
/// and `↻` alternating, at most one leading `↗`.
pub fn normalize_witness(lattice: &PlanarLattice, seq: &StepSequence) -> Result<StepSequence, WitnessError> {
    seq.check_steps(lattice)?;
    if let Some(i) = seq.steps.iter().enumerate().position(|(i, k)| match k {
        StepKind::UpPersp => i != 0,
        StepKind::DownPersp | StepKind::Swing => false,
        StepKind::PrimeUp | StepKind::PrimeDown => true,
    }) {
        return Err(WitnessError::NotAWitness { step: i });
    }
    let shortest = find_swing_sequence(lattice, seq.first(), seq.last())
        .ok_or_else(|| WitnessError::NotNormal(String::from("search found no witness")))?;
    if shortest.len() > seq.len() {
        return Err(WitnessError::NotNormal(String::from("search result longer than input")));
    }
    if !shortest.is_pairwise_distinct() {
        return Err(WitnessError::NotNormal(String::from("repeated interval")));
    }
    if !shortest.alternates() {
        return Err(WitnessError::NotNormal(String::from("two equal consecutive steps")));
    }
    if !shortest.is_swing_shaped() {
        return Err(WitnessError::NotNormal(String::from(
            "up-perspectivity after the first step",
        )));
    }
    Ok(shortest)
}
