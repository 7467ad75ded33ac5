use alloc::string::String;
use core::fmt;

use crate::lattice::ElementId;

/// Reasons a cover description fails to describe a finite lattice.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BuildError {
    Empty,
    /// A cover list refers to an element outside `0..n`.
    OutOfRange {
        element: usize,
        n: usize,
    },
    /// The number of labels or cover lists differs from the element count.
    LengthMismatch {
        what: &'static str,
        expected: usize,
        found: usize,
    },
    /// The cover digraph contains a cycle.
    NotAPoset,
    NoBottomOrTop,
    /// Some pair has no meet or no join.
    NotALattice {
        x: ElementId,
        y: ElementId,
    },
    /// `x ∈ lower(y)` without `y ∈ upper(x)`, or a repeated entry.
    InconsistentOrder {
        lower: ElementId,
        upper: ElementId,
    },
    /// A listed cover pair has an element strictly between its ends.
    NotACover {
        lower: ElementId,
        upper: ElementId,
    },
}

impl fmt::Display for BuildError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BuildError::Empty => write!(f, "a lattice needs at least one element"),
            BuildError::OutOfRange { element, n } => {
                write!(f, "element {element} out of range for {n} elements")
            }
            BuildError::LengthMismatch { what, expected, found } => {
                write!(f, "{what}: expected {expected} entries, found {found}")
            }
            BuildError::NotAPoset => write!(f, "cover relation contains a cycle"),
            BuildError::NoBottomOrTop => write!(f, "order has no unique bottom or top"),
            BuildError::NotALattice { x, y } => {
                write!(f, "elements {x} and {y} lack a meet or a join")
            }
            BuildError::InconsistentOrder { lower, upper } => write!(
                f,
                "cover {lower} < {upper} is listed inconsistently between lower and upper lists"
            ),
            BuildError::NotACover { lower, upper } => {
                write!(f, "{lower} < {upper} is listed as a cover but is not one")
            }
        }
    }
}

impl core::error::Error for BuildError {}

/// Errors from queries that need comparable or non-bottom arguments.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum QueryError {
    NotComparable { a: ElementId, b: ElementId },
    BottomHasNoCovers,
    NotAPrimeInterval { bottom: ElementId, top: ElementId },
}

impl fmt::Display for QueryError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            QueryError::NotComparable { a, b } => write!(f, "{a} is not below {b}"),
            QueryError::BottomHasNoCovers => write!(f, "the bottom element covers nothing"),
            QueryError::NotAPrimeInterval { bottom, top } => {
                write!(f, "[{bottom}, {top}] is not a prime interval")
            }
        }
    }
}

impl core::error::Error for QueryError {}

/// Errors from swing predicates that require an actual swing.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SwingError {
    NotASwing,
    /// The generated sublattice is not an S7. This contradicts the structure
    /// of SPS lattices, so callers treat it as a failed check.
    WitnessNotS7 {
        size: usize,
    },
}

impl fmt::Display for SwingError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SwingError::NotASwing => write!(f, "intervals are not related by a swing"),
            SwingError::WitnessNotS7 { size } => {
                write!(f, "swing witness generates a {size}-element sublattice, not S7")
            }
        }
    }
}

impl core::error::Error for SwingError {}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ConstructionError {
    UnknownFixture(String),
    NotSps,
    NotACoveringSquare,
    /// The descending chain of covering squares stopped before reaching the
    /// boundary of the lattice.
    TraceStuck {
        side: Side,
        step: usize,
    },
    /// A fork insertion produced a lattice failing one of its postconditions.
    Postcondition(&'static str),
    Build(BuildError),
}

/// Left or right side of a planar diagram.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Side {
    Left,
    Right,
}

impl fmt::Display for ConstructionError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ConstructionError::UnknownFixture(name) => write!(f, "unknown fixture `{name}`"),
            ConstructionError::NotSps => write!(f, "lattice is not slim, planar and semimodular"),
            ConstructionError::NotACoveringSquare => write!(f, "not a covering square"),
            ConstructionError::TraceStuck { side, step } => {
                write!(f, "{side:?} trace stuck at step {step}")
            }
            ConstructionError::Postcondition(what) => {
                write!(f, "fork insertion postcondition failed: {what}")
            }
            ConstructionError::Build(e) => write!(f, "{e}"),
        }
    }
}

impl core::error::Error for ConstructionError {
    fn source(&self) -> Option<&(dyn core::error::Error + 'static)> {
        match self {
            ConstructionError::Build(e) => Some(e),
            _ => None,
        }
    }
}

impl From<BuildError> for ConstructionError {
    fn from(e: BuildError) -> Self {
        ConstructionError::Build(e)
    }
}

/// Errors from witness post-processing.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum WitnessError {
    /// The sequence does not chain its intervals by the stated steps.
    NotAWitness { step: usize },
    /// A re-derived shortest witness violates the expected normal form.
    NotNormal(String),
}

impl fmt::Display for WitnessError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WitnessError::NotAWitness { step } => write!(f, "step {step} does not hold"),
            WitnessError::NotNormal(why) => write!(f, "witness not in normal form: {why}"),
        }
    }
}

impl core::error::Error for WitnessError {}
