use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::WitnessError;
use crate::lattice::{PlanarLattice, PrimeInterval};
use crate::relations::StepKind;

/// A chain of prime intervals with the relation used at each step.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct StepSequence {
    pub intervals: Vec<PrimeInterval>,
    /// `steps[i]` relates `intervals[i]` to `intervals[i + 1]`.
    pub steps: Vec<StepKind>,
}

impl StepSequence {
    /// The zero-step sequence at `p`.
    pub fn single(p: PrimeInterval) -> Self {
        StepSequence {
            intervals: vec![p],
            steps: Vec::new(),
        }
    }

    /// Number of steps.
    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn first(&self) -> PrimeInterval {
        self.intervals[0]
    }

    pub fn last(&self) -> PrimeInterval {
        *self.intervals.last().expect("sequences are non-empty")
    }

    pub fn push(&mut self, kind: StepKind, next: PrimeInterval) {
        self.steps.push(kind);
        self.intervals.push(next);
    }

    /// Re-checks every step with the relation predicates.
    pub fn check_steps(&self, lattice: &PlanarLattice) -> Result<(), WitnessError> {
        if self.intervals.is_empty() || self.intervals.len() != self.steps.len() + 1 {
            return Err(WitnessError::NotAWitness { step: 0 });
        }
        for (i, (kind, pair)) in self.steps.iter().zip(self.intervals.windows(2)).enumerate() {
            if !lattice.covers(pair[0].bottom, pair[0].top) || !kind.holds(lattice, pair[0], pair[1]) {
                return Err(WitnessError::NotAWitness { step: i });
            }
        }
        if !lattice.covers(self.last().bottom, self.last().top) {
            return Err(WitnessError::NotAWitness { step: self.len() });
        }
        Ok(())
    }

    /// At most one up-perspectivity, only as the first step, and otherwise
    /// only down-perspectivities and swings.
    pub fn is_swing_shaped(&self) -> bool {
        self.steps.iter().enumerate().all(|(i, k)| match k {
            StepKind::UpPersp => i == 0,
            StepKind::DownPersp | StepKind::Swing => true,
            StepKind::PrimeUp | StepKind::PrimeDown => false,
        })
    }

    /// Index of the first interval after the optional leading up-step.
    pub fn slide_start(&self) -> usize {
        usize::from(self.steps.first() == Some(&StepKind::UpPersp))
    }

    /// Tops weakly decrease along the part after the optional up-step.
    pub fn has_monotone_tops(&self, lattice: &PlanarLattice) -> bool {
        self.intervals[self.slide_start()..]
            .windows(2)
            .all(|w| lattice.leq(w[1].top, w[0].top))
    }

    pub fn is_pairwise_distinct(&self) -> bool {
        self.intervals
            .iter()
            .enumerate()
            .all(|(i, p)| !self.intervals[..i].contains(p))
    }

    /// No two consecutive down-perspectivities and no two consecutive swings.
    pub fn alternates(&self) -> bool {
        self.steps
            .windows(2)
            .all(|w| !(w[0] == w[1] && matches!(w[0], StepKind::DownPersp | StepKind::Swing)))
    }

    /// `[a_l,t] Swing [m,t] DownPersp [z_r,a_r]`.
    pub fn describe(&self, lattice: &PlanarLattice) -> String {
        let mut out = lattice.describe(self.intervals[0]);
        for (kind, p) in self.steps.iter().zip(&self.intervals[1..]) {
            out.push(' ');
            out.push_str(kind.as_str());
            out.push(' ');
            out.push_str(&lattice.describe(*p));
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::fixture;

    #[test]
    fn shape_predicates() {
        let s7 = fixture("S7").unwrap();
        let p = |b: &str, t: &str| PrimeInterval::new(&s7, s7.element(b).unwrap(), s7.element(t).unwrap()).unwrap();
        let mut seq = StepSequence::single(p("a_l", "t"));
        seq.push(StepKind::Swing, p("m", "t"));
        seq.push(StepKind::DownPersp, p("z_r", "a_r"));
        assert_eq!(seq.check_steps(&s7), Ok(()));
        assert!(seq.is_swing_shaped());
        assert!(seq.has_monotone_tops(&s7));
        assert!(seq.is_pairwise_distinct());
        assert!(seq.alternates());
        assert_eq!(seq.describe(&s7), "[a_l,t] Swing [m,t] DownPersp [z_r,a_r]");

        let mut bad = StepSequence::single(p("m", "t"));
        bad.push(StepKind::Swing, p("a_l", "t"));
        assert_eq!(bad.check_steps(&s7), Err(WitnessError::NotAWitness { step: 0 }));
    }
}
