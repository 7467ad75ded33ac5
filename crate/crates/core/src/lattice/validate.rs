//! Structural predicates: semimodularity, slimness, planar-order
//! consistency and the patch-lattice shape.

use super::{ElementId, PlanarLattice};

impl PlanarLattice {
    /// Upper semimodularity: `a ∧ b ≺ a` implies `b ≺ a ∨ b`.
    pub fn is_semimodular(&self) -> bool {
        self.elements().all(|a| {
            self.elements().all(|b| {
                let m = self.meet(a, b);
                !self.covers(m, a) || self.covers(b, self.join(a, b))
            })
        })
    }

    /// No sublattice isomorphic to M3, i.e. no three pairwise incomparable
    /// elements with a common pairwise meet and a common pairwise join.
    pub fn is_slim(&self) -> bool {
        self.find_m3().is_none()
    }

    /// First M3 triple in index order, if any.
    pub fn find_m3(&self) -> Option<[ElementId; 3]> {
        let n = self.len();
        for x in 0..n {
            for y in x + 1..n {
                let (ex, ey) = (ElementId(x), ElementId(y));
                if self.comparable(ex, ey) {
                    continue;
                }
                let m = self.meet(ex, ey);
                let j = self.join(ex, ey);
                for z in y + 1..n {
                    let ez = ElementId(z);
                    if !self.comparable(ex, ez)
                        && !self.comparable(ey, ez)
                        && self.meet(ex, ez) == m
                        && self.meet(ey, ez) == m
                        && self.join(ex, ez) == j
                        && self.join(ey, ez) == j
                    {
                        return Some([ex, ey, ez]);
                    }
                }
            }
        }
        None
    }

    /// Necessary conditions for the cover lists to come from a planar
    /// diagram: both boundaries read the same from the bottom and from the
    /// top, and every covering square lists its two middle elements in the
    /// same relative order at its bottom and at its top.
    pub fn has_planar_order(&self) -> bool {
        if self.left_boundary() != self.boundary_from_top(|l| l.first())
            || self.right_boundary() != self.boundary_from_top(|l| l.last())
        {
            return false;
        }
        for t in self.elements() {
            let lows = self.lower_covers(t);
            for (i, &a) in lows.iter().enumerate() {
                for &b in &lows[i + 1..] {
                    let o = self.meet(a, b);
                    if !(self.covers(o, a) && self.covers(o, b)) {
                        continue;
                    }
                    let ups = self.upper_covers(o);
                    let pa = ups.iter().position(|&u| u == a);
                    let pb = ups.iter().position(|&u| u == b);
                    if pa > pb {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Slim, semimodular, and carrying a consistent planar order.
    pub fn is_sps(&self) -> bool {
        self.has_planar_order() && self.is_semimodular() && self.is_slim()
    }

    /// The left-most and right-most dual atoms `(c_l, c_r)` when they are
    /// distinct and meet in the bottom.
    pub fn patch_corners(&self) -> Option<(ElementId, ElementId)> {
        match *self.lower_covers(self.top()) {
            [cl, .., cr] if self.meet(cl, cr) == self.bottom() => Some((cl, cr)),
            _ => None,
        }
    }

    /// SPS whose left-most and right-most dual atoms meet in 0. Dual atoms
    /// in between are allowed, so every fork insertion into a patch lattice
    /// is again one.
    pub fn is_patch_lattice(&self) -> bool {
        self.patch_corners().is_some() && self.is_sps()
    }

    /// Checks commutativity, associativity, idempotence and absorption of the
    /// tables on every pair and triple. Returns the first failing law.
    pub fn check_lattice_laws(&self) -> Result<(), &'static str> {
        for x in self.elements() {
            if self.meet(x, x) != x || self.join(x, x) != x {
                return Err("idempotence");
            }
            for y in self.elements() {
                if self.meet(x, y) != self.meet(y, x) || self.join(x, y) != self.join(y, x) {
                    return Err("commutativity");
                }
                if self.meet(x, self.join(x, y)) != x || self.join(x, self.meet(x, y)) != x {
                    return Err("absorption");
                }
                for z in self.elements() {
                    if self.meet(self.meet(x, y), z) != self.meet(x, self.meet(y, z))
                        || self.join(self.join(x, y), z) != self.join(x, self.join(y, z))
                    {
                        return Err("associativity");
                    }
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use crate::constructions::fixture;

    #[test]
    fn semimodularity_of_fixtures() {
        assert!(fixture("B2").unwrap().is_semimodular());
        assert!(!fixture("N5").unwrap().is_semimodular());
        assert!(fixture("S7").unwrap().is_semimodular());
        assert!(fixture("M3").unwrap().is_semimodular());
    }

    #[test]
    fn n5_fails_at_u_v() {
        let n5 = fixture("N5").unwrap();
        let u = n5.element("u").unwrap();
        let v = n5.element("v").unwrap();
        assert!(n5.covers(n5.meet(u, v), u));
        assert!(!n5.covers(v, n5.join(u, v)));
    }

    #[test]
    fn slimness_of_fixtures() {
        assert!(!fixture("M3").unwrap().is_slim());
        assert!(fixture("S7").unwrap().is_slim());
        assert!(fixture("B2").unwrap().is_slim());
    }

    #[test]
    fn sps_of_fixtures() {
        assert!(fixture("S7").unwrap().is_sps());
        assert!(fixture("B2").unwrap().is_sps());
        assert!(!fixture("N5").unwrap().is_sps());
        assert!(!fixture("M3").unwrap().is_sps());
        assert!(fixture("C2xC3").unwrap().is_sps());
    }

    #[test]
    fn patch_lattices() {
        assert!(fixture("B2").unwrap().is_patch_lattice());
        assert!(fixture("S7").unwrap().is_patch_lattice());
        assert!(!fixture("C3").unwrap().is_patch_lattice());
    }

    #[test]
    fn swapped_square_order_is_not_planar() {
        let b2 = fixture("B2").unwrap();
        let mut upper = b2.all_upper_covers().to_vec();
        upper[b2.bottom().0].reverse();
        let broken = crate::PlanarLattice::new(b2.labels().to_vec(), upper, b2.all_lower_covers().to_vec()).unwrap();
        assert!(!broken.has_planar_order());
    }

    #[test]
    fn laws_hold_on_fixtures() {
        for name in ["B2", "C4", "N5", "M3", "S7", "C2xC3"] {
            assert_eq!(fixture(name).unwrap().check_lattice_laws(), Ok(()), "{name}");
        }
    }
}
