//! Compute the Graovac-Pisanski index of a graph and print the full report.
//!
//! Run with: cargo run --example compute_gp

use gpindex::gp;
use gpindex::graph::Graph;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    // C5 with a chord: one of the seven 5-vertex graphs with non-integer GP
    let g = Graph::from_edges(5, &[(0, 1), (0, 2), (0, 4), (1, 2), (1, 4), (2, 3)])?;
    let report = gp::gp_report(&g)?;

    println!("graph: n = {}, m = {}", g.vertex_count(), g.edge_count());
    println!("GP = {}", report.gp);
    println!("|Aut| = {}", report.aut_order);
    println!("orbits ({}): {:?}", report.orbit_count, report.orbits);
    println!("Wiener index = {}", report.wiener);
    println!("integer: {} (guarantee: {})", report.is_integer, report.guarantee);

    // the three formulas always agree; the double sum is the slow reference
    assert_eq!(gp::gp_definition(&g)?, report.gp);
    assert_eq!(gp::gp_orbit_wiener(&g)?, report.gp);
    Ok(())
}
