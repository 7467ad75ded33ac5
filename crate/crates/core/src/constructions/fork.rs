//! Covering squares and fork insertion.
//!
//! Inserting a fork at a covering square `S = {o, a_l, a_r, t}` adds a new
//! element `m` inside `S` and subdivides the lower-left edges of the strip of
//! 4-cells running from `S` down-left to the left boundary (and likewise to
//! the right). The strip is traced by [`fork_trace`]; [`fork_insert`]
//! performs the insertion and checks the shape of the result.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use super::canonical::order_canonical_form;
use super::fixtures::grid;
use crate::error::{ConstructionError, Side};
use crate::lattice::{ElementId, PlanarLattice};
use crate::relations::{is_cover_preserving, is_s7};

/// Four elements `o ≺ a_l, a_r ≺ t` with `a_l ∧ a_r = o`, `a_l ∨ a_r = t`,
/// and `a_l` listed before `a_r` among the lower covers of `t`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CoveringSquare {
    pub o: ElementId,
    pub a_l: ElementId,
    pub a_r: ElementId,
    pub t: ElementId,
}

impl CoveringSquare {
    pub fn is_valid(&self, lattice: &PlanarLattice) -> bool {
        let CoveringSquare { o, a_l, a_r, t } = *self;
        if a_l == a_r
            || !(lattice.covers(o, a_l) && lattice.covers(o, a_r))
            || !(lattice.covers(a_l, t) && lattice.covers(a_r, t))
            || lattice.meet(a_l, a_r) != o
            || lattice.join(a_l, a_r) != t
        {
            return false;
        }
        let lows = lattice.lower_covers(t);
        let pos = |x| lows.iter().position(|&c| c == x);
        pos(a_l) < pos(a_r)
    }
}

/// All covering squares, ordered by top, then by positions of `a_l`, `a_r`
/// in the top's lower cover list.
pub fn covering_squares(lattice: &PlanarLattice) -> Vec<CoveringSquare> {
    let mut squares = Vec::new();
    for t in lattice.elements() {
        let lows = lattice.lower_covers(t);
        for (i, &a_l) in lows.iter().enumerate() {
            for &a_r in &lows[i + 1..] {
                let o = lattice.meet(a_l, a_r);
                if lattice.covers(o, a_l) && lattice.covers(o, a_r) {
                    squares.push(CoveringSquare { o, a_l, a_r, t });
                }
            }
        }
    }
    squares
}

/// The descending chains of 4-cells on both sides of a covering square.
///
/// `left_x[k] ≻ left_x[k+1]`, `left_y[k] ≻ left_y[k+1]` and
/// `left_y[k] ≺ left_x[k]`, with `left_x[0] = a_l`, `left_y[0] = o` and the
/// last pair on the left boundary. Symmetrically on the right.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ForkTrace {
    pub square: CoveringSquare,
    pub left_x: Vec<ElementId>,
    pub left_y: Vec<ElementId>,
    pub right_x: Vec<ElementId>,
    pub right_y: Vec<ElementId>,
}

impl ForkTrace {
    pub fn n_left(&self) -> usize {
        self.left_x.len()
    }

    pub fn n_right(&self) -> usize {
        self.right_x.len()
    }

    /// `S` together with the four chains, sorted.
    pub fn g_set(&self) -> Vec<ElementId> {
        let s = self.square;
        let set: BTreeSet<ElementId> = [s.o, s.a_l, s.a_r, s.t]
            .into_iter()
            .chain(self.left_x.iter().copied())
            .chain(self.left_y.iter().copied())
            .chain(self.right_x.iter().copied())
            .chain(self.right_y.iter().copied())
            .collect();
        set.into_iter().collect()
    }

    /// Joins of elements of `G[S]` stay inside `G[S]`.
    pub fn is_join_closed(&self, lattice: &PlanarLattice) -> bool {
        let g = self.g_set();
        g.iter()
            .all(|&x| g.iter().all(|&y| g.binary_search(&lattice.join(x, y)).is_ok()))
    }

    /// Every cover of `G[S]` under the induced order is a cover of the
    /// lattice.
    pub fn is_cover_preserving(&self, lattice: &PlanarLattice) -> bool {
        lattice
            .induced_covers(&self.g_set())
            .into_iter()
            .all(|(x, y)| lattice.covers(x, y))
    }

    /// Each traced strip, as an induced subposet, is a cover-preserving
    /// `C_2 × C_n`.
    pub fn has_grid_strips(&self, lattice: &PlanarLattice) -> bool {
        self.strips().iter().all(|strip| is_grid_strip(lattice, strip, 2))
    }

    /// Each traced strip is the whole interval between its bottom and top.
    /// Fails in general: the interval may contain elements of a neighbouring
    /// fork.
    pub fn strips_are_intervals(&self, lattice: &PlanarLattice) -> bool {
        self.strips().iter().all(|strip| {
            let (bottom, top) = (strip[0], strip[strip.len() - 1]);
            lattice.interval(bottom, top).is_ok_and(|view| {
                let mut sorted = strip.clone();
                sorted.sort();
                view.elements == sorted
            })
        })
    }

    /// Both strips as element lists, bottom first and top last.
    fn strips(&self) -> [Vec<ElementId>; 2] {
        let strip = |xs: &[ElementId], ys: &[ElementId]| {
            let mut v: Vec<ElementId> = xs.iter().chain(ys).copied().collect();
            v.sort_by_key(|&e| {
                if e == *ys.last().unwrap() {
                    0
                } else if e == xs[0] {
                    2
                } else {
                    1
                }
            });
            v
        };
        [strip(&self.left_x, &self.left_y), strip(&self.right_x, &self.right_y)]
    }
}

/// `members` induces a cover-preserving sublattice isomorphic to
/// `C_cols × C_rows` with `rows = members.len() / cols`.
fn is_grid_strip(lattice: &PlanarLattice, members: &[ElementId], cols: usize) -> bool {
    let mut sorted = members.to_vec();
    sorted.sort();
    if !sorted.len().is_multiple_of(cols) || !is_cover_preserving(lattice, &sorted) {
        return false;
    }
    lattice
        .induced(&sorted, false)
        .is_ok_and(|sub| order_canonical_form(&sub) == order_canonical_form(&grid(cols, sorted.len() / cols)))
}

/// Traces the strips of 4-cells from `square` to both boundaries.
///
/// From an edge `y ≺ x` of the strip the next cell is the one whose
/// upper-right (resp. upper-left) edge is `y ≺ x`: its left corner is the
/// lower cover of `x` immediately left of `y`, its bottom is that corner
/// met with `y`. The trace stops once both `x` and `y` lie on the boundary.
pub fn fork_trace(lattice: &PlanarLattice, square: CoveringSquare) -> Result<ForkTrace, ConstructionError> {
    if !lattice.is_sps() {
        return Err(ConstructionError::NotSps);
    }
    if !square.is_valid(lattice) {
        return Err(ConstructionError::NotACoveringSquare);
    }
    let (left_x, left_y) = trace_side(lattice, square.a_l, square.o, Side::Left)?;
    let (right_x, right_y) = trace_side(lattice, square.a_r, square.o, Side::Right)?;
    let trace = ForkTrace {
        square,
        left_x,
        left_y,
        right_x,
        right_y,
    };
    if !trace.is_join_closed(lattice) {
        return Err(ConstructionError::Postcondition("G[S] is not closed under joins"));
    }
    Ok(trace)
}

fn trace_side(
    lattice: &PlanarLattice,
    start_x: ElementId,
    start_y: ElementId,
    side: Side,
) -> Result<(Vec<ElementId>, Vec<ElementId>), ConstructionError> {
    let boundary: BTreeSet<ElementId> = match side {
        Side::Left => lattice.left_boundary(),
        Side::Right => lattice.right_boundary(),
    }
    .into_iter()
    .collect();
    let mut xs = vec![start_x];
    let mut ys = vec![start_y];
    loop {
        let (x, y) = (*xs.last().unwrap(), *ys.last().unwrap());
        if boundary.contains(&x) && boundary.contains(&y) {
            return Ok((xs, ys));
        }
        let stuck = ConstructionError::TraceStuck { side, step: xs.len() };
        let lows = lattice.lower_covers(x);
        let p = lows.iter().position(|&c| c == y).ok_or(stuck.clone())?;
        let next_x = match side {
            Side::Left => p.checked_sub(1).map(|i| lows[i]),
            Side::Right => lows.get(p + 1).copied(),
        }
        .ok_or(stuck.clone())?;
        let next_y = lattice.meet(next_x, y);
        if !(lattice.covers(next_y, next_x) && lattice.covers(next_y, y)) {
            return Err(stuck);
        }
        xs.push(next_x);
        ys.push(next_y);
    }
}

/// Result of a fork insertion with the ids of the new elements.
#[derive(Clone, Debug)]
pub struct ForkInsertion {
    pub lattice: PlanarLattice,
    pub trace: ForkTrace,
    pub m: ElementId,
    /// `z_left[k]` subdivides `trace.left_y[k] ≺ trace.left_x[k]`.
    pub z_left: Vec<ElementId>,
    pub z_right: Vec<ElementId>,
}

/// `K[S]`: the lattice with a fork inserted at `square`.
pub fn fork_insert(lattice: &PlanarLattice, square: CoveringSquare) -> Result<PlanarLattice, ConstructionError> {
    fork_insert_traced(lattice, square).map(|f| f.lattice)
}

/// [`fork_insert`], also returning the trace and the inserted ids.
///
/// New elements are appended: `m`, then `z_{l,1..n_l}`, then `z_{r,1..n_r}`.
/// Cover lists of existing elements keep their order; a subdivided cover is
/// replaced in place by the new element, and `m` goes immediately after
/// `a_l` among the lower covers of `t`.
pub fn fork_insert_traced(lattice: &PlanarLattice, square: CoveringSquare) -> Result<ForkInsertion, ConstructionError> {
    let trace = fork_trace(lattice, square)?;
    let n = lattice.len();
    let (nl, nr) = (trace.n_left(), trace.n_right());
    let m = ElementId(n);
    let z_left: Vec<ElementId> = (0..nl).map(|k| ElementId(n + 1 + k)).collect();
    let z_right: Vec<ElementId> = (0..nr).map(|k| ElementId(n + 1 + nl + k)).collect();

    let mut upper: Vec<Vec<ElementId>> = lattice.all_upper_covers().to_vec();
    let mut lower: Vec<Vec<ElementId>> = lattice.all_lower_covers().to_vec();
    upper.resize(n + 1 + nl + nr, Vec::new());
    lower.resize(n + 1 + nl + nr, Vec::new());

    let replace = |list: &mut Vec<ElementId>, old: ElementId, new: ElementId| {
        let slot = list.iter_mut().find(|e| **e == old).expect("traced cover is listed");
        *slot = new;
    };

    // m sits inside S, just right of a_l.
    let at = lower[square.t.0]
        .iter()
        .position(|&c| c == square.a_l)
        .expect("a_l below t");
    lower[square.t.0].insert(at + 1, m);
    upper[m.0] = vec![square.t];
    lower[m.0] = vec![z_left[0], z_right[0]];

    for (side, xs, ys, zs) in [
        (Side::Left, &trace.left_x, &trace.left_y, &z_left),
        (Side::Right, &trace.right_x, &trace.right_y, &z_right),
    ] {
        for k in 0..zs.len() {
            let (x, y, z) = (xs[k], ys[k], zs[k]);
            replace(&mut lower[x.0], y, z);
            replace(&mut upper[y.0], x, z);
            let above = if k == 0 { m } else { zs[k - 1] };
            let below = zs.get(k + 1).copied();
            // The chain of new elements runs up and inward towards m.
            match side {
                Side::Left => {
                    upper[z.0] = vec![x, above];
                    lower[z.0] = below.into_iter().chain([y]).collect();
                }
                Side::Right => {
                    upper[z.0] = vec![above, x];
                    lower[z.0] = [y].into_iter().chain(below).collect();
                }
            }
        }
    }

    let mut labels: Vec<String> = lattice.labels().to_vec();
    let mut fresh = |base: String| {
        let mut name = base;
        while labels.contains(&name) {
            name.push('\'');
        }
        labels.push(name);
    };
    fresh(String::from("m"));
    for (prefix, count) in [("z_l", nl), ("z_r", nr)] {
        for k in 1..=count {
            fresh(if count == 1 {
                String::from(prefix)
            } else {
                format!("{prefix}{k}")
            });
        }
    }

    let result = PlanarLattice::new(labels, upper, lower)?;
    let insertion = ForkInsertion {
        lattice: result,
        trace,
        m,
        z_left,
        z_right,
    };
    check_insertion(lattice, &insertion)?;
    Ok(insertion)
}

fn check_insertion(before: &PlanarLattice, ins: &ForkInsertion) -> Result<(), ConstructionError> {
    let after = &ins.lattice;
    let trace = &ins.trace;
    let s = trace.square;
    if after.len() != before.len() + 1 + trace.n_left() + trace.n_right() {
        return Err(ConstructionError::Postcondition("element count"));
    }
    let square = after.interval(s.o, s.t).expect("o <= t");
    if !is_s7(after, &square.elements) {
        return Err(ConstructionError::Postcondition("[o, t] is not S7"));
    }
    for (xs, ys, zs) in [
        (&trace.left_x, &trace.left_y, &ins.z_left),
        (&trace.right_x, &trace.right_y, &ins.z_right),
    ] {
        let strip: Vec<ElementId> = xs.iter().chain(ys.iter()).chain(zs.iter()).copied().collect();
        if !is_grid_strip(after, &strip, 3) {
            return Err(ConstructionError::Postcondition("strip is not C3 x Cn"));
        }
    }
    let subdivided: BTreeSet<(ElementId, ElementId)> = trace
        .left_y
        .iter()
        .zip(&trace.left_x)
        .chain(trace.right_y.iter().zip(&trace.right_x))
        .map(|(&y, &x)| (y, x))
        .collect();
    for x in before.elements() {
        for &u in before.upper_covers(x) {
            if after.covers(x, u) == subdivided.contains(&(x, u)) {
                return Err(ConstructionError::Postcondition("old covers not preserved"));
            }
        }
    }
    if !after.is_sps() {
        return Err(ConstructionError::Postcondition("K[S] is not SPS"));
    }
    Ok(())
}
