//! Binary relations between intervals that carry congruences:
//! perspectivities, prime-perspectivities and swings.

use alloc::vec::Vec;

use crate::constructions::{fixture, order_canonical_form};
use crate::error::SwingError;
use crate::lattice::{ElementId, Interval, PlanarLattice, PrimeInterval};

/// Kind of a single step in a witness sequence.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum StepKind {
    UpPersp,
    DownPersp,
    Swing,
    PrimeUp,
    PrimeDown,
}

impl StepKind {
    pub fn as_str(self) -> &'static str {
        match self {
            StepKind::UpPersp => "UpPersp",
            StepKind::DownPersp => "DownPersp",
            StepKind::Swing => "Swing",
            StepKind::PrimeUp => "PrimeUp",
            StepKind::PrimeDown => "PrimeDown",
        }
    }

    /// Whether `p` is related to `q` by this kind of step.
    pub fn holds(self, lattice: &PlanarLattice, p: PrimeInterval, q: PrimeInterval) -> bool {
        match self {
            StepKind::UpPersp => persp_up(lattice, p.into(), q.into()),
            StepKind::DownPersp => persp_dn(lattice, p.into(), q.into()),
            StepKind::Swing => swing(lattice, p, q),
            StepKind::PrimeUp => prime_persp_up(lattice, p, q),
            StepKind::PrimeDown => prime_persp_dn(lattice, p, q),
        }
    }
}

/// `I ↘ J`: `0_J = 0_I ∧ 1_J` and `1_I = 0_I ∨ 1_J`.
pub fn persp_dn(lattice: &PlanarLattice, i: Interval, j: Interval) -> bool {
    lattice.meet(i.bottom, j.top) == j.bottom && lattice.join(i.bottom, j.top) == i.top
}

/// `I ↗ J`, which holds exactly when `J ↘ I`.
pub fn persp_up(lattice: &PlanarLattice, i: Interval, j: Interval) -> bool {
    persp_dn(lattice, j, i)
}

pub fn persp(lattice: &PlanarLattice, i: Interval, j: Interval) -> bool {
    persp_dn(lattice, i, j) || persp_up(lattice, i, j)
}

/// `p` is down-perspective to `[0_p ∧ 1_q, 1_q]` and `q` lies inside that
/// interval.
pub fn prime_persp_dn(lattice: &PlanarLattice, p: PrimeInterval, q: PrimeInterval) -> bool {
    let base = lattice.meet(p.bottom, q.top);
    persp_dn(lattice, p.into(), Interval::new(base, q.top)) && lattice.leq(base, q.bottom)
}

/// Dual of [`prime_persp_dn`]: `p` is up-perspective to `[0_q, 1_p ∨ 0_q]`
/// and `q` lies inside that interval.
pub fn prime_persp_up(lattice: &PlanarLattice, p: PrimeInterval, q: PrimeInterval) -> bool {
    let roof = lattice.join(p.top, q.bottom);
    persp_up(lattice, p.into(), Interval::new(q.bottom, roof)) && lattice.leq(q.top, roof)
}

pub fn prime_persp(lattice: &PlanarLattice, p: PrimeInterval, q: PrimeInterval) -> bool {
    prime_persp_dn(lattice, p, q) || prime_persp_up(lattice, p, q)
}

/// `p ↻ q`: same top, the top covers at least three elements, and `0_q` is
/// neither its left-most nor its right-most lower cover.
///
/// `p = q` is allowed whenever `0_p` is interior.
pub fn swing(lattice: &PlanarLattice, p: PrimeInterval, q: PrimeInterval) -> bool {
    if p.top != q.top {
        return false;
    }
    let lows = lattice.lower_covers(p.top);
    lows.len() >= 3 && is_interior(lows, q.bottom)
}

fn is_interior(list: &[ElementId], x: ElementId) -> bool {
    list.len() >= 3 && list[1..list.len() - 1].contains(&x)
}

/// A swing whose source bottom is the left-most or right-most lower cover of
/// the common top.
pub fn is_proper_swing(lattice: &PlanarLattice, p: PrimeInterval, q: PrimeInterval) -> Result<bool, SwingError> {
    if !swing(lattice, p, q) {
        return Err(SwingError::NotASwing);
    }
    let lows = lattice.lower_covers(p.top);
    Ok(lows.first() == Some(&p.bottom) || lows.last() == Some(&p.bottom))
}

/// The sublattice generated by `0_p`, `0_q` and a third lower cover of the
/// common top, checked to be an S7.
///
/// The third element is the extreme lower cover on the far side of `0_q`
/// from `0_p`. Returns `Ok(None)` when `p = q`.
pub fn swing_witness(
    lattice: &PlanarLattice,
    p: PrimeInterval,
    q: PrimeInterval,
) -> Result<Option<Vec<ElementId>>, SwingError> {
    if !swing(lattice, p, q) {
        return Err(SwingError::NotASwing);
    }
    if p == q {
        return Ok(None);
    }
    let lows = lattice.lower_covers(p.top);
    let pos = |x: ElementId| {
        lows.iter()
            .position(|&c| c == x)
            .expect("bottom of a prime is a lower cover")
    };
    let third = if pos(p.bottom) < pos(q.bottom) {
        lows[lows.len() - 1]
    } else {
        lows[0]
    };
    let members = lattice.generated_sublattice(&[p.bottom, q.bottom, third]);
    if is_s7(lattice, &members) {
        Ok(Some(members))
    } else {
        Err(SwingError::WitnessNotS7 { size: members.len() })
    }
}

/// Whether `members` (sorted) is order-isomorphic to S7.
pub fn is_s7(lattice: &PlanarLattice, members: &[ElementId]) -> bool {
    if members.len() != 7 {
        return false;
    }
    let Ok(sub) = lattice.induced(members, false) else {
        return false;
    };
    let s7 = fixture("S7").expect("S7 fixture");
    order_canonical_form(&sub) == order_canonical_form(&s7)
}

/// Whether every cover of the induced sublattice on `members` is a cover of
/// `lattice`.
pub fn is_cover_preserving(lattice: &PlanarLattice, members: &[ElementId]) -> bool {
    lattice
        .induced_covers(members)
        .into_iter()
        .all(|(x, y)| lattice.covers(x, y))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::fixture;

    fn prime(l: &PlanarLattice, b: &str, t: &str) -> PrimeInterval {
        PrimeInterval::new(l, l.element(b).unwrap(), l.element(t).unwrap()).unwrap()
    }

    fn iv(l: &PlanarLattice, b: &str, t: &str) -> Interval {
        Interval::new(l.element(b).unwrap(), l.element(t).unwrap())
    }

    #[test]
    fn b2_transposes() {
        let b2 = fixture("B2").unwrap();
        assert!(persp_dn(&b2, iv(&b2, "a_l", "t"), iv(&b2, "o", "a_r")));
        assert!(persp_up(&b2, iv(&b2, "o", "a_r"), iv(&b2, "a_l", "t")));
        let p = prime(&b2, "a_l", "t");
        let q = prime(&b2, "o", "a_r");
        assert!(prime_persp_dn(&b2, p, q));
        assert!(prime_persp_up(&b2, q, p));
    }

    #[test]
    fn every_interval_is_perspective_to_itself() {
        let s7 = fixture("S7").unwrap();
        for a in s7.elements() {
            for b in s7.elements().filter(|&b| s7.leq(a, b)) {
                let i = Interval::new(a, b);
                assert!(persp_dn(&s7, i, i));
                assert!(persp_up(&s7, i, i));
            }
        }
        for p in s7.prime_intervals() {
            assert!(prime_persp_dn(&s7, p, p));
            assert!(prime_persp_up(&s7, p, p));
        }
    }

    #[test]
    fn s7_down_perspectivities() {
        let s7 = fixture("S7").unwrap();
        assert!(persp_dn(&s7, iv(&s7, "m", "t"), iv(&s7, "z_l", "a_l")));
        assert!(!persp_dn(&s7, iv(&s7, "a_l", "t"), iv(&s7, "z_r", "a_r")));
        assert!(persp_up(&s7, iv(&s7, "o", "z_l"), iv(&s7, "a_r", "t")));
    }

    #[test]
    fn n5_prime_perspectivity_down() {
        let n5 = fixture("N5").unwrap();
        let p = prime(&n5, "u", "i");
        let q = prime(&n5, "v", "w");
        assert!(prime_persp_dn(&n5, p, q));
        // Not an ordinary perspectivity: the transposed interval is [o, w].
        assert!(!persp_dn(&n5, p.into(), q.into()));
        // Dual configuration, read in the dual lattice.
        let d = n5.dual();
        let dp = PrimeInterval {
            bottom: p.top,
            top: p.bottom,
        };
        let dq = PrimeInterval {
            bottom: q.top,
            top: q.bottom,
        };
        assert!(prime_persp_up(&d, dp, dq));
    }

    #[test]
    fn swings_in_s7() {
        let s7 = fixture("S7").unwrap();
        let al = prime(&s7, "a_l", "t");
        let m = prime(&s7, "m", "t");
        let ar = prime(&s7, "a_r", "t");
        assert!(swing(&s7, al, m));
        assert!(!swing(&s7, m, al));
        assert!(swing(&s7, m, m));
        assert_eq!(is_proper_swing(&s7, al, m), Ok(true));
        assert_eq!(is_proper_swing(&s7, ar, m), Ok(true));
        assert_eq!(is_proper_swing(&s7, m, al), Err(SwingError::NotASwing));
        let b2 = fixture("B2").unwrap();
        assert!(!swing(&b2, prime(&b2, "a_l", "t"), prime(&b2, "a_r", "t")));
    }

    #[test]
    fn s7_swing_witness_is_everything() {
        let s7 = fixture("S7").unwrap();
        let w = swing_witness(&s7, prime(&s7, "a_l", "t"), prime(&s7, "m", "t"))
            .unwrap()
            .unwrap();
        assert_eq!(w.len(), 7);
        assert_eq!(swing_witness(&s7, prime(&s7, "m", "t"), prime(&s7, "m", "t")), Ok(None));
        assert!(is_cover_preserving(&s7, &w));
    }
}
