use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use crate::error::ConstructionError;
use crate::lattice::{ElementId, PlanarLattice};

/// Names accepted by [`fixture`], for help texts.
pub const FIXTURE_NAMES: &[&str] = &["B2", "C<n>", "N5", "M3", "S7", "C<a>xC<b>"];

/// A named small lattice with its canonical planar order.
///
/// * `B2`: the four-element Boolean lattice `o, a_l, a_r, t`.
/// * `C<n>` (or `C_<n>`): the `n`-element chain `c0 < … < c{n-1}`.
/// * `N5`: `o < u < i` and `o < v < w < i`.
/// * `M3`: `o`, three atoms `a, b, c`, `i`.
/// * `S7`: `o, a_l, a_r, t, m, z_l, z_r`, index-identical to one fork
///   inserted into `B2`.
/// * `C<a>xC<b>`: the grid `C_a × C_b`.
pub fn fixture(name: &str) -> Result<PlanarLattice, ConstructionError> {
    let unknown = || ConstructionError::UnknownFixture(name.to_string());
    let built = match name {
        "B2" => PlanarLattice::from_named(&[
            ("o", &["a_l", "a_r"], &[]),
            ("a_l", &["t"], &["o"]),
            ("a_r", &["t"], &["o"]),
            ("t", &[], &["a_l", "a_r"]),
        ]),
        "N5" => PlanarLattice::from_named(&[
            ("o", &["u", "v"], &[]),
            ("u", &["i"], &["o"]),
            ("v", &["w"], &["o"]),
            ("w", &["i"], &["v"]),
            ("i", &[], &["u", "w"]),
        ]),
        "M3" => PlanarLattice::from_named(&[
            ("o", &["a", "b", "c"], &[]),
            ("a", &["i"], &["o"]),
            ("b", &["i"], &["o"]),
            ("c", &["i"], &["o"]),
            ("i", &[], &["a", "b", "c"]),
        ]),
        "S7" => PlanarLattice::from_named(&[
            ("o", &["z_l", "z_r"], &[]),
            ("a_l", &["t"], &["z_l"]),
            ("a_r", &["t"], &["z_r"]),
            ("t", &[], &["a_l", "m", "a_r"]),
            ("m", &["t"], &["z_l", "z_r"]),
            ("z_l", &["a_l", "m"], &["o"]),
            ("z_r", &["m", "a_r"], &["o"]),
        ]),
        _ => {
            if let Some((a, b)) = name.split_once('x') {
                let a = parse_chain(a).ok_or_else(unknown)?;
                let b = parse_chain(b).ok_or_else(unknown)?;
                return Ok(grid(a, b));
            }
            let n = parse_chain(name).ok_or_else(unknown)?;
            return Ok(chain(n));
        }
    };
    Ok(built.expect("fixtures are valid lattices"))
}

fn parse_chain(s: &str) -> Option<usize> {
    let digits = s.strip_prefix("C_").or_else(|| s.strip_prefix('C'))?;
    digits.parse().ok().filter(|&n| n >= 1)
}

/// The `n`-element chain.
pub fn chain(n: usize) -> PlanarLattice {
    assert!(n >= 1, "a chain needs at least one element");
    let labels = (0..n).map(|i| format!("c{i}")).collect();
    let upper = (0..n)
        .map(|i| {
            if i + 1 < n {
                alloc::vec![ElementId(i + 1)]
            } else {
                Vec::new()
            }
        })
        .collect();
    PlanarLattice::from_upper_covers(labels, upper).expect("a chain is a lattice")
}

/// The grid `C_a × C_b`, element `(i, j)` at index `i * b + j`, labelled
/// `g{i}_{j}`. The first coordinate grows to the upper left, the second to
/// the upper right.
pub fn grid(a: usize, b: usize) -> PlanarLattice {
    assert!(a >= 1 && b >= 1, "grid sides need at least one element");
    let idx = |i: usize, j: usize| ElementId(i * b + j);
    let mut labels: Vec<String> = Vec::with_capacity(a * b);
    let mut upper = Vec::with_capacity(a * b);
    let mut lower = Vec::with_capacity(a * b);
    for i in 0..a {
        for j in 0..b {
            labels.push(format!("g{i}_{j}"));
            let mut up = Vec::new();
            if i + 1 < a {
                up.push(idx(i + 1, j));
            }
            if j + 1 < b {
                up.push(idx(i, j + 1));
            }
            let mut down = Vec::new();
            if j > 0 {
                down.push(idx(i, j - 1));
            }
            if i > 0 {
                down.push(idx(i - 1, j));
            }
            upper.push(up);
            lower.push(down);
        }
    }
    PlanarLattice::new(labels, upper, lower).expect("a grid is a lattice")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_resolve() {
        assert_eq!(fixture("B2").unwrap().len(), 4);
        assert_eq!(fixture("B2").unwrap().cover_count(), 4);
        assert_eq!(fixture("S7").unwrap().len(), 7);
        assert_eq!(fixture("S7").unwrap().cover_count(), 9);
        assert_eq!(fixture("C4").unwrap().len(), 4);
        assert_eq!(fixture("C_4").unwrap().len(), 4);
        assert_eq!(fixture("C2xC3").unwrap().len(), 6);
        assert!(matches!(fixture("Q9"), Err(ConstructionError::UnknownFixture(_))));
        assert!(matches!(fixture("C0"), Err(ConstructionError::UnknownFixture(_))));
    }

    #[test]
    fn grid_is_planar_and_distributive_shaped() {
        let g = grid(2, 3);
        assert!(g.has_planar_order());
        assert!(g.is_sps());
        assert_eq!(g.length(g.bottom(), g.top()), Ok(3));
        assert_eq!(grid(1, 1).len(), 1);
    }
}
