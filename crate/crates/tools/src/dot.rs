//! Graphviz export.

use std::fmt::Write;

use sps_core::PlanarLattice;

/// A `digraph` with one node per element and one edge per cover, drawn
/// bottom to top. Elements of equal height share a rank, listed left to
/// right in the planar order.
pub fn to_dot(l: &PlanarLattice) -> String {
    let mut out = String::from("digraph lattice {\n  rankdir=BT;\n  node [shape=circle];\n");
    for x in l.elements() {
        writeln!(out, "  n{} [label=\"{}\"];", x.0, escape(l.label(x))).unwrap();
    }
    for x in l.elements() {
        for &u in l.upper_covers(x) {
            writeln!(out, "  n{} -> n{};", x.0, u.0).unwrap();
        }
    }
    let height = l.height(l.top());
    for h in 0..=height {
        let row = planar_row(l, h);
        if row.len() > 1 {
            let names: Vec<String> = row.iter().map(|x| format!("n{}", x.0)).collect();
            writeln!(out, "  {{ rank=same; {} }}", names.join("; ")).unwrap();
            writeln!(out, "  {} [style=invis];", names.join(" -> ")).unwrap();
        }
    }
    out.push_str("}\n");
    out
}

/// Elements of height `h`, left to right, in the order they are reached
/// from the row below through ordered upper covers.
fn planar_row(l: &PlanarLattice, h: usize) -> Vec<sps_core::ElementId> {
    if h == 0 {
        return vec![l.bottom()];
    }
    let mut row = Vec::new();
    for below in planar_row(l, h - 1) {
        for &u in l.upper_covers(below) {
            if l.height(u) == h && !row.contains(&u) {
                row.push(u);
            }
        }
    }
    // Elements not reached from the row below (only in non-graded inputs).
    for x in l.elements() {
        if l.height(x) == h && !row.contains(&x) {
            row.push(x);
        }
    }
    row
}

fn escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}
