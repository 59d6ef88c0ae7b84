//! Canonical forms, automorphism groups, and vertex orbits.
//!
//! Run with: cargo run --example symmetry_tools

use gpindex::graph::Graph;
use gpindex::symmetry;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    // two labelings of the same graph: a 6-cycle and a scrambled copy
    let c6 = Graph::from_edges(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0)])?;
    let scrambled = c6.relabeled(&[3, 0, 5, 1, 4, 2]);

    let a = symmetry::analyze(&c6)?;
    let b = symmetry::analyze(&scrambled)?;
    println!("canonical(C6)        = {}", a.canonical_g6);
    println!("canonical(scrambled) = {}", b.canonical_g6);
    assert_eq!(a.canonical_g6, b.canonical_g6);

    println!("|Aut(C6)| = {} (dihedral, 2n = 12)", a.group.order);
    println!("orbits: {:?}", a.group.orbits);
    for gen in &a.group.generators {
        println!("generator: {:?}", gen.image());
    }

    // small groups can be listed element by element
    let path = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)])?;
    println!("elements of Aut(P4):");
    for p in symmetry::all_automorphisms(&path)? {
        println!("  {:?}", p.image());
    }
    Ok(())
}
