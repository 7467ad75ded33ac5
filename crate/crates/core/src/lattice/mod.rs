//! Finite lattices given by left-to-right ordered cover lists.
//!
//! A [`PlanarLattice`] stores, for every element, its lower and upper covers
//! in diagram order (left first). Meets and joins are tabulated once at
//! construction; every other query in the crate is a table lookup.

mod validate;

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::bits::BitRow;
use crate::error::{BuildError, QueryError};

/// Dense index of an element inside its owning lattice.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ElementId(pub usize);

impl ElementId {
    #[inline]
    pub fn index(self) -> usize {
        self.0
    }
}

impl fmt::Display for ElementId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// A closed interval `[bottom, top]` with `bottom <= top`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Interval {
    pub bottom: ElementId,
    pub top: ElementId,
}

impl Interval {
    pub fn new(bottom: ElementId, top: ElementId) -> Self {
        Interval { bottom, top }
    }
}

/// An interval whose top covers its bottom.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PrimeInterval {
    pub bottom: ElementId,
    pub top: ElementId,
}

impl PrimeInterval {
    /// Checked constructor.
    pub fn new(lattice: &PlanarLattice, bottom: ElementId, top: ElementId) -> Result<Self, QueryError> {
        if lattice.covers(bottom, top) {
            Ok(PrimeInterval { bottom, top })
        } else {
            Err(QueryError::NotAPrimeInterval { bottom, top })
        }
    }

    pub fn interval(self) -> Interval {
        Interval::new(self.bottom, self.top)
    }
}

impl From<PrimeInterval> for Interval {
    fn from(p: PrimeInterval) -> Self {
        p.interval()
    }
}

/// A finite lattice with an ordered (planar) cover structure.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlanarLattice {
    labels: Vec<String>,
    lower: Vec<Vec<ElementId>>,
    upper: Vec<Vec<ElementId>>,
    meet: Vec<ElementId>,
    join: Vec<ElementId>,
    bottom: ElementId,
    top: ElementId,
}

impl PlanarLattice {
    /// Builds a lattice from both ordered cover lists.
    ///
    /// The lists must describe the same cover relation; the result is
    /// rejected unless every pair has a meet and a join.
    pub fn new(
        labels: Vec<String>,
        upper_covers: Vec<Vec<ElementId>>,
        lower_covers: Vec<Vec<ElementId>>,
    ) -> Result<Self, BuildError> {
        let n = labels.len();
        if n == 0 {
            return Err(BuildError::Empty);
        }
        for (what, len) in [
            ("upper_covers", upper_covers.len()),
            ("lower_covers", lower_covers.len()),
        ] {
            if len != n {
                return Err(BuildError::LengthMismatch {
                    what,
                    expected: n,
                    found: len,
                });
            }
        }
        for list in upper_covers.iter().chain(&lower_covers) {
            if let Some(bad) = list.iter().find(|e| e.0 >= n) {
                return Err(BuildError::OutOfRange { element: bad.0, n });
            }
        }
        check_mirrored_lists(&upper_covers, &lower_covers)?;

        let order = topological_order(&upper_covers, &lower_covers)?;

        let mut down = vec![BitRow::new(n); n];
        for &x in &order {
            let mut row = BitRow::new(n);
            row.insert(x);
            for c in &lower_covers[x] {
                row.union_with(&down[c.0]);
            }
            down[x] = row;
        }
        let mut up = vec![BitRow::new(n); n];
        for &x in order.iter().rev() {
            let mut row = BitRow::new(n);
            row.insert(x);
            for c in &upper_covers[x] {
                row.union_with(&up[c.0]);
            }
            up[x] = row;
        }

        let minimal: Vec<usize> = (0..n).filter(|&x| lower_covers[x].is_empty()).collect();
        let maximal: Vec<usize> = (0..n).filter(|&x| upper_covers[x].is_empty()).collect();
        if minimal.len() != 1 || maximal.len() != 1 {
            return Err(BuildError::NoBottomOrTop);
        }

        for (y, lows) in lower_covers.iter().enumerate() {
            for &x in lows {
                let between = lows.iter().any(|&z| z != x && down[z.0].contains(x.0));
                if between {
                    return Err(BuildError::NotACover {
                        lower: x,
                        upper: ElementId(y),
                    });
                }
            }
        }

        let down_sizes: Vec<usize> = down.iter().map(BitRow::count).collect();
        let up_sizes: Vec<usize> = up.iter().map(BitRow::count).collect();
        let mut meet = vec![ElementId(0); n * n];
        let mut join = vec![ElementId(0); n * n];
        for x in 0..n {
            for y in x..n {
                let m = extremal(&down[x].intersection(&down[y]), &down_sizes).ok_or(BuildError::NotALattice {
                    x: ElementId(x),
                    y: ElementId(y),
                })?;
                let j = extremal(&up[x].intersection(&up[y]), &up_sizes).ok_or(BuildError::NotALattice {
                    x: ElementId(x),
                    y: ElementId(y),
                })?;
                meet[x * n + y] = m;
                meet[y * n + x] = m;
                join[x * n + y] = j;
                join[y * n + x] = j;
            }
        }

        Ok(PlanarLattice {
            labels,
            lower: lower_covers,
            upper: upper_covers,
            meet,
            join,
            bottom: ElementId(minimal[0]),
            top: ElementId(maximal[0]),
        })
    }

    /// Builds from upper cover lists only, deriving each lower list in
    /// increasing index order. Suitable when the left-right order is not
    /// needed (order-theoretic fixtures, induced sublattices).
    pub fn from_upper_covers(labels: Vec<String>, upper_covers: Vec<Vec<ElementId>>) -> Result<Self, BuildError> {
        let n = labels.len();
        let mut lower = vec![Vec::new(); n];
        for (x, ups) in upper_covers.iter().enumerate() {
            for u in ups {
                if u.0 >= n {
                    return Err(BuildError::OutOfRange { element: u.0, n });
                }
                lower[u.0].push(ElementId(x));
            }
        }
        Self::new(labels, upper_covers, lower)
    }

    /// Builds from label-named ordered cover lists: `(element, upper covers
    /// left-to-right, lower covers left-to-right)`.
    pub fn from_named(rows: &[(&str, &[&str], &[&str])]) -> Result<Self, BuildError> {
        let labels: Vec<String> = rows.iter().map(|(l, _, _)| String::from(*l)).collect();
        let lookup = |name: &str| -> Result<ElementId, BuildError> {
            labels
                .iter()
                .position(|l| l == name)
                .map(ElementId)
                .ok_or(BuildError::OutOfRange {
                    element: usize::MAX,
                    n: labels.len(),
                })
        };
        let mut upper = Vec::with_capacity(rows.len());
        let mut lower = Vec::with_capacity(rows.len());
        for (_, ups, downs) in rows {
            upper.push(ups.iter().map(|u| lookup(u)).collect::<Result<Vec<_>, _>>()?);
            lower.push(downs.iter().map(|d| lookup(d)).collect::<Result<Vec<_>, _>>()?);
        }
        Self::new(labels, upper, lower)
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.labels.len()
    }

    /// Always false: a lattice has at least one element.
    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn elements(&self) -> impl Iterator<Item = ElementId> + Clone {
        (0..self.len()).map(ElementId)
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, x: ElementId) -> &str {
        &self.labels[x.0]
    }

    /// Looks up an element by label, falling back to a numeric index.
    pub fn element(&self, name: &str) -> Option<ElementId> {
        if let Some(i) = self.labels.iter().position(|l| l == name) {
            return Some(ElementId(i));
        }
        name.parse::<usize>().ok().filter(|&i| i < self.len()).map(ElementId)
    }

    /// Replaces the labels; the element count must match.
    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self, BuildError> {
        if labels.len() != self.len() {
            return Err(BuildError::LengthMismatch {
                what: "labels",
                expected: self.len(),
                found: labels.len(),
            });
        }
        self.labels = labels;
        Ok(self)
    }

    pub fn lower_covers(&self, x: ElementId) -> &[ElementId] {
        &self.lower[x.0]
    }

    pub fn upper_covers(&self, x: ElementId) -> &[ElementId] {
        &self.upper[x.0]
    }

    pub fn all_lower_covers(&self) -> &[Vec<ElementId>] {
        &self.lower
    }

    pub fn all_upper_covers(&self) -> &[Vec<ElementId>] {
        &self.upper
    }

    #[inline]
    pub fn bottom(&self) -> ElementId {
        self.bottom
    }

    #[inline]
    pub fn top(&self) -> ElementId {
        self.top
    }

    #[inline]
    pub fn meet(&self, x: ElementId, y: ElementId) -> ElementId {
        self.meet[x.0 * self.len() + y.0]
    }

    #[inline]
    pub fn join(&self, x: ElementId, y: ElementId) -> ElementId {
        self.join[x.0 * self.len() + y.0]
    }

    #[inline]
    pub fn leq(&self, x: ElementId, y: ElementId) -> bool {
        self.meet(x, y) == x
    }

    #[inline]
    pub fn lt(&self, x: ElementId, y: ElementId) -> bool {
        x != y && self.leq(x, y)
    }

    #[inline]
    pub fn comparable(&self, x: ElementId, y: ElementId) -> bool {
        self.leq(x, y) || self.leq(y, x)
    }

    /// True iff `upper` covers `lower`.
    pub fn covers(&self, lower: ElementId, upper: ElementId) -> bool {
        self.upper[lower.0].contains(&upper)
    }

    pub fn cover_count(&self) -> usize {
        self.upper.iter().map(Vec::len).sum()
    }

    /// All prime intervals, ordered by `(bottom, top)`.
    pub fn prime_intervals(&self) -> Vec<PrimeInterval> {
        let mut primes: Vec<PrimeInterval> = self
            .elements()
            .flat_map(|x| {
                self.upper[x.0]
                    .iter()
                    .map(move |&t| PrimeInterval { bottom: x, top: t })
            })
            .collect();
        primes.sort();
        primes
    }

    /// Number of covers on a maximal chain of `[a, b]`, found by greedy
    /// descent from `b`. Well defined in semimodular lattices.
    pub fn length(&self, a: ElementId, b: ElementId) -> Result<usize, QueryError> {
        if !self.leq(a, b) {
            return Err(QueryError::NotComparable { a, b });
        }
        let mut steps = 0;
        let mut cur = b;
        while cur != a {
            cur = *self.lower[cur.0]
                .iter()
                .find(|&&c| self.leq(a, c))
                .expect("a lower cover above `a` exists while cur > a");
            steps += 1;
        }
        Ok(steps)
    }

    /// Height of `x` above the bottom.
    pub fn height(&self, x: ElementId) -> usize {
        self.length(self.bottom, x).expect("bottom is below every element")
    }

    /// The interval `[a, b]` as a lattice in its own right, with inherited
    /// cover order. The returned map sends sublattice ids to ids of `self`.
    pub fn interval(&self, a: ElementId, b: ElementId) -> Result<IntervalView, QueryError> {
        if !self.leq(a, b) {
            return Err(QueryError::NotComparable { a, b });
        }
        let elements: Vec<ElementId> = self.elements().filter(|&x| self.leq(a, x) && self.leq(x, b)).collect();
        let lattice = self
            .induced(&elements, true)
            .expect("an interval of a lattice is a lattice");
        Ok(IntervalView { lattice, elements })
    }

    /// The subposet on `elements` (sorted, distinct) with the induced cover
    /// relation. With `keep_order`, cover lists follow the parent's lists,
    /// which is only meaningful for cover-preserving subsets such as
    /// intervals.
    pub fn induced(&self, elements: &[ElementId], keep_order: bool) -> Result<PlanarLattice, BuildError> {
        let pos = |x: ElementId| elements.binary_search(&x).ok();
        let k = elements.len();
        let mut upper = vec![Vec::new(); k];
        let mut lower = vec![Vec::new(); k];
        if keep_order {
            for (i, &x) in elements.iter().enumerate() {
                upper[i] = self.upper[x.0].iter().filter_map(|&u| pos(u).map(ElementId)).collect();
                lower[i] = self.lower[x.0].iter().filter_map(|&d| pos(d).map(ElementId)).collect();
            }
        } else {
            for (x, y) in self.induced_covers(elements) {
                let (i, j) = (pos(x).expect("member"), pos(y).expect("member"));
                upper[i].push(ElementId(j));
                lower[j].push(ElementId(i));
            }
        }
        let labels = elements.iter().map(|&x| self.labels[x.0].clone()).collect();
        PlanarLattice::new(labels, upper, lower)
    }

    /// Cover pairs of the subposet on `members` under the induced order.
    pub fn induced_covers(&self, members: &[ElementId]) -> Vec<(ElementId, ElementId)> {
        let mut covers = Vec::new();
        for &x in members {
            for &y in members {
                if self.lt(x, y) && !members.iter().any(|&z| self.lt(x, z) && self.lt(z, y)) {
                    covers.push((x, y));
                }
            }
        }
        covers
    }

    /// Left-most element covered by `x`.
    pub fn leftmost_lower_cover(&self, x: ElementId) -> Result<ElementId, QueryError> {
        self.lower[x.0].first().copied().ok_or(QueryError::BottomHasNoCovers)
    }

    /// Right-most element covered by `x`.
    pub fn rightmost_lower_cover(&self, x: ElementId) -> Result<ElementId, QueryError> {
        self.lower[x.0].last().copied().ok_or(QueryError::BottomHasNoCovers)
    }

    /// Left boundary chain, bottom to top, following left-most upper covers.
    pub fn left_boundary(&self) -> Vec<ElementId> {
        self.boundary_from_bottom(|ups| ups.first())
    }

    /// Right boundary chain, bottom to top, following right-most upper covers.
    pub fn right_boundary(&self) -> Vec<ElementId> {
        self.boundary_from_bottom(|ups| ups.last())
    }

    fn boundary_from_bottom(&self, pick: impl Fn(&[ElementId]) -> Option<&ElementId>) -> Vec<ElementId> {
        let mut chain = vec![self.bottom];
        let mut cur = self.bottom;
        while let Some(&next) = pick(&self.upper[cur.0]) {
            chain.push(next);
            cur = next;
        }
        chain
    }

    fn boundary_from_top(&self, pick: impl Fn(&[ElementId]) -> Option<&ElementId>) -> Vec<ElementId> {
        let mut chain = vec![self.top];
        let mut cur = self.top;
        while let Some(&next) = pick(&self.lower[cur.0]) {
            chain.push(next);
            cur = next;
        }
        chain.reverse();
        chain
    }

    /// Left-right mirror image: every cover list reversed.
    pub fn mirrored(&self) -> PlanarLattice {
        let rev = |lists: &[Vec<ElementId>]| -> Vec<Vec<ElementId>> {
            lists.iter().map(|l| l.iter().rev().copied().collect()).collect()
        };
        PlanarLattice {
            labels: self.labels.clone(),
            lower: rev(&self.lower),
            upper: rev(&self.upper),
            meet: self.meet.clone(),
            join: self.join.clone(),
            bottom: self.bottom,
            top: self.top,
        }
    }

    /// Order dual: covers flipped, left and right preserved.
    pub fn dual(&self) -> PlanarLattice {
        PlanarLattice::new(self.labels.clone(), self.lower.clone(), self.upper.clone())
            .expect("the dual of a lattice is a lattice")
    }

    /// Closure of `generators` under meet and join, sorted.
    pub fn generated_sublattice(&self, generators: &[ElementId]) -> Vec<ElementId> {
        let mut members = vec![false; self.len()];
        let mut set: Vec<ElementId> = Vec::new();
        for &g in generators {
            if !members[g.0] {
                members[g.0] = true;
                set.push(g);
            }
        }
        let mut i = 0;
        while i < set.len() {
            let x = set[i];
            let mut j = 0;
            while j <= i {
                let y = set[j];
                for z in [self.meet(x, y), self.join(x, y)] {
                    if !members[z.0] {
                        members[z.0] = true;
                        set.push(z);
                    }
                }
                j += 1;
            }
            i += 1;
        }
        set.sort();
        set
    }

    /// Human-readable name of a prime interval, e.g. `[a_l,t]`.
    pub fn describe(&self, p: PrimeInterval) -> String {
        format!("[{},{}]", self.label(p.bottom), self.label(p.top))
    }
}

/// An interval `[a, b]` viewed as a standalone lattice.
#[derive(Clone, Debug)]
pub struct IntervalView {
    pub lattice: PlanarLattice,
    /// `elements[i]` is the parent id of sublattice element `i`.
    pub elements: Vec<ElementId>,
}

fn check_mirrored_lists(upper: &[Vec<ElementId>], lower: &[Vec<ElementId>]) -> Result<(), BuildError> {
    for (x, ups) in upper.iter().enumerate() {
        for (i, &u) in ups.iter().enumerate() {
            let bad = BuildError::InconsistentOrder {
                lower: ElementId(x),
                upper: u,
            };
            if ups[..i].contains(&u) || !lower[u.0].contains(&ElementId(x)) {
                return Err(bad);
            }
        }
    }
    for (y, lows) in lower.iter().enumerate() {
        for (i, &d) in lows.iter().enumerate() {
            let bad = BuildError::InconsistentOrder {
                lower: d,
                upper: ElementId(y),
            };
            if lows[..i].contains(&d) || !upper[d.0].contains(&ElementId(y)) {
                return Err(bad);
            }
        }
    }
    Ok(())
}

fn topological_order(upper: &[Vec<ElementId>], lower: &[Vec<ElementId>]) -> Result<Vec<usize>, BuildError> {
    let n = upper.len();
    let mut indegree: Vec<usize> = lower.iter().map(Vec::len).collect();
    let mut order: Vec<usize> = (0..n).filter(|&x| indegree[x] == 0).collect();
    let mut head = 0;
    while head < order.len() {
        let x = order[head];
        head += 1;
        for u in &upper[x] {
            indegree[u.0] -= 1;
            if indegree[u.0] == 0 {
                order.push(u.0);
            }
        }
    }
    if order.len() == n {
        Ok(order)
    } else {
        Err(BuildError::NotAPoset)
    }
}

/// The element of a down- (or up-) closed set whose own down- (up-) set is
/// the whole set, i.e. its maximum (minimum).
fn extremal(common: &BitRow, closure_sizes: &[usize]) -> Option<ElementId> {
    let size = common.count();
    common.iter().find(|&z| closure_sizes[z] == size).map(ElementId)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::fixture;

    fn id(l: &PlanarLattice, name: &str) -> ElementId {
        l.element(name).unwrap()
    }

    #[test]
    fn b2_meets_and_joins() {
        let b2 = fixture("B2").unwrap();
        assert_eq!(b2.len(), 4);
        assert_eq!(b2.cover_count(), 4);
        assert_eq!(b2.meet(id(&b2, "a_l"), id(&b2, "a_r")), id(&b2, "o"));
        assert_eq!(b2.join(id(&b2, "a_l"), id(&b2, "a_r")), id(&b2, "t"));
        for x in b2.elements() {
            assert_eq!(b2.meet(x, x), x);
        }
        assert_eq!(b2.length(id(&b2, "o"), id(&b2, "t")), Ok(2));
        assert_eq!(b2.length(id(&b2, "a_l"), id(&b2, "a_l")), Ok(0));
    }

    #[test]
    fn n5_from_named_covers() {
        let n5 = fixture("N5").unwrap();
        assert_eq!(n5.len(), 5);
        assert_eq!(n5.meet(id(&n5, "u"), id(&n5, "w")), id(&n5, "o"));
        assert_eq!(n5.join(id(&n5, "u"), id(&n5, "v")), id(&n5, "i"));
    }

    #[test]
    fn s7_meet_of_right_atom_and_middle() {
        let s7 = fixture("S7").unwrap();
        assert_eq!(s7.meet(id(&s7, "a_r"), id(&s7, "m")), id(&s7, "z_r"));
        assert_eq!(s7.prime_intervals().len(), 9);
    }

    #[test]
    fn cycle_is_rejected() {
        let labels = vec![String::from("a"), String::from("b")];
        let upper = vec![vec![ElementId(1)], vec![ElementId(0)]];
        let err = PlanarLattice::from_upper_covers(labels, upper).unwrap_err();
        assert_eq!(err, BuildError::NotAPoset);
    }

    #[test]
    fn two_minimal_elements_rejected() {
        let labels = vec!["a".into(), "b".into(), "c".into()];
        let upper = vec![vec![ElementId(2)], vec![ElementId(2)], vec![]];
        let err = PlanarLattice::from_upper_covers(labels, upper).unwrap_err();
        assert_eq!(err, BuildError::NoBottomOrTop);
    }

    #[test]
    fn missing_join_rejected() {
        // 0 < a, b < c, d < 1 with a, b both below c and d: no join for a, b.
        let labels: Vec<String> = ["0", "a", "b", "c", "d", "1"]
            .iter()
            .map(|s| String::from(*s))
            .collect();
        let e = ElementId;
        let upper = vec![
            vec![e(1), e(2)],
            vec![e(3), e(4)],
            vec![e(3), e(4)],
            vec![e(5)],
            vec![e(5)],
            vec![],
        ];
        let err = PlanarLattice::from_upper_covers(labels, upper).unwrap_err();
        assert!(matches!(err, BuildError::NotALattice { .. }));
    }

    #[test]
    fn disagreeing_lists_rejected() {
        let labels = vec!["0".into(), "1".into()];
        let err = PlanarLattice::new(labels, vec![vec![ElementId(1)], vec![]], vec![vec![], vec![]]).unwrap_err();
        assert!(matches!(err, BuildError::InconsistentOrder { .. }));
    }

    #[test]
    fn transitive_edge_rejected() {
        let labels = vec!["0".into(), "a".into(), "1".into()];
        let e = ElementId;
        let upper = vec![vec![e(1), e(2)], vec![e(2)], vec![]];
        let err = PlanarLattice::from_upper_covers(labels, upper).unwrap_err();
        assert_eq!(
            err,
            BuildError::NotACover {
                lower: e(0),
                upper: e(2)
            }
        );
    }

    #[test]
    fn incomparable_length_is_an_error() {
        let b2 = fixture("B2").unwrap();
        let err = b2.length(id(&b2, "a_l"), id(&b2, "a_r")).unwrap_err();
        assert!(matches!(err, QueryError::NotComparable { .. }));
        assert!(b2.interval(id(&b2, "t"), id(&b2, "o")).is_err());
    }

    #[test]
    fn bottom_has_no_lower_cover() {
        let b2 = fixture("B2").unwrap();
        assert_eq!(b2.leftmost_lower_cover(b2.bottom()), Err(QueryError::BottomHasNoCovers));
    }

    #[test]
    fn s7_boundaries_and_top_covers() {
        let s7 = fixture("S7").unwrap();
        let names = |v: &[ElementId]| v.iter().map(|&x| s7.label(x)).collect::<Vec<_>>();
        assert_eq!(names(s7.lower_covers(s7.top())), ["a_l", "m", "a_r"]);
        assert_eq!(s7.leftmost_lower_cover(s7.top()), Ok(id(&s7, "a_l")));
        assert_eq!(s7.rightmost_lower_cover(s7.top()), Ok(id(&s7, "a_r")));
        assert_eq!(names(&s7.left_boundary()), ["o", "z_l", "a_l", "t"]);
        assert_eq!(names(&s7.right_boundary()), ["o", "z_r", "a_r", "t"]);
    }

    #[test]
    fn interval_view_keeps_order() {
        let s7 = fixture("S7").unwrap();
        let view = s7.interval(id(&s7, "z_l"), s7.top()).unwrap();
        let mut names: Vec<&str> = view.elements.iter().map(|&x| s7.label(x)).collect();
        names.sort();
        assert_eq!(names, ["a_l", "m", "t", "z_l"]);
        let top = view.lattice.top();
        let tops: Vec<&str> = view
            .lattice
            .lower_covers(top)
            .iter()
            .map(|&x| view.lattice.label(x))
            .collect();
        assert_eq!(tops, ["a_l", "m"]);
    }

    #[test]
    fn generated_sublattice_of_three_atoms_of_top() {
        let s7 = fixture("S7").unwrap();
        let gens = [id(&s7, "a_l"), id(&s7, "m"), id(&s7, "a_r")];
        assert_eq!(s7.generated_sublattice(&gens).len(), 7);
    }
}
