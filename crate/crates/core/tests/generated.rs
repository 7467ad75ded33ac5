use std::collections::BTreeSet;

use sps_core::constructions::{
    diagram_canonical_form, generate_with, order_canonical_form, reflection_canonical_form, Dedup,
};
use sps_core::swing::{boundary_reachability_persistence, verify_prime_projectivity_lemma, verify_swing_lemma};
use sps_core::{fixture, generate_patch_lattices};

/// Lattices per fork depth, up to reflection.
const COUNTS_BY_DEPTH: [usize; 4] = [1, 1, 2, 5];
/// Same, without identifying mirror images.
const DIAGRAM_COUNTS_BY_DEPTH: [usize; 4] = [1, 1, 2, 6];

fn per_depth(depths: impl Iterator<Item = usize>) -> Vec<usize> {
    let mut counts = vec![0; 4];
    for d in depths {
        counts[d] += 1;
    }
    counts
}

#[test]
fn family_sizes_are_stable() {
    let family = generate_patch_lattices(3).unwrap();
    assert_eq!(per_depth(family.iter().map(|g| g.depth)), COUNTS_BY_DEPTH);
    assert_eq!(family.iter().map(|g| g.lattice.len()).max(), Some(16));
    let diagrams = generate_with(3, Dedup::Diagram, |_, _, _| {}).unwrap();
    assert_eq!(per_depth(diagrams.iter().map(|g| g.depth)), DIAGRAM_COUNTS_BY_DEPTH);
}

#[test]
fn every_member_is_a_valid_patch_lattice() {
    for g in generate_patch_lattices(3).unwrap() {
        let l = &g.lattice;
        assert_eq!(l.check_lattice_laws(), Ok(()));
        assert!(l.is_sps());
        assert!(l.is_patch_lattice());
        assert_eq!(l.left_boundary().last(), Some(&l.top()));
        assert_eq!(l.right_boundary().last(), Some(&l.top()));
    }
}

#[test]
fn generation_is_closed_under_reflection() {
    let diagrams = generate_with(3, Dedup::Diagram, |_, _, _| {}).unwrap();
    let forms: BTreeSet<_> = diagrams.iter().map(|g| g.canonical.clone()).collect();
    for g in &diagrams {
        assert!(forms.contains(&diagram_canonical_form(&g.lattice.mirrored())));
    }
    let classes: BTreeSet<_> = diagrams.iter().map(|g| reflection_canonical_form(&g.lattice)).collect();
    assert_eq!(classes.len(), generate_patch_lattices(3).unwrap().len());
}

#[test]
fn order_isomorphism_classes_match_reflection_classes() {
    // Mirror images are order-isomorphic, and for these small lattices no two
    // different diagrams share an order.
    let family = generate_patch_lattices(3).unwrap();
    let orders: BTreeSet<_> = family.iter().map(|g| order_canonical_form(&g.lattice)).collect();
    assert_eq!(orders.len(), family.len());
}

#[test]
fn oracle_agrees_on_the_whole_family() {
    for g in generate_patch_lattices(3).unwrap() {
        let r = verify_swing_lemma(&g.lattice);
        assert!(r.is_clean(), "{:?}", r.discrepancies);
        let r = verify_prime_projectivity_lemma(&g.lattice);
        assert!(r.is_clean(), "{:?}", r.discrepancies);
    }
}

#[test]
fn projectivity_on_fixtures() {
    for name in ["N5", "M3", "S7", "B2", "C2xC3", "C4"] {
        let r = verify_prime_projectivity_lemma(&fixture(name).unwrap());
        assert!(r.is_clean(), "{name}: {:?}", r.discrepancies);
    }
}

#[test]
fn boundary_reachability_survives_every_insertion() {
    let r = boundary_reachability_persistence(3).unwrap();
    assert_eq!(r.insertions, 15);
    assert!(r.failures.is_empty(), "{:?}", r.failures);
}
