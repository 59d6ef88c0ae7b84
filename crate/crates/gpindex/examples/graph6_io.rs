//! Read and write graphs in graph6 and plain edge-list form.
//!
//! Run with: cargo run --example graph6_io

use gpindex::graph::Graph;
use gpindex::graph6;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let g = graph6::parse("DQc")?;
    println!("parsed DQc: n = {}, edges = {:?}", g.vertex_count(), g.edges());

    println!("edge-list form:\n{}", g.to_edge_list());

    let back = Graph::parse_edge_list(&g.to_edge_list())?;
    assert_eq!(graph6::emit(&back), "DQc");

    // the optional format header is accepted on input
    let with_header = graph6::parse(">>graph6<<DQc")?;
    assert_eq!(graph6::emit(&with_header), "DQc");

    // long-form headers kick in at 63 vertices
    let big = Graph::from_edges(63, &(0..62).map(|i| (i, i + 1)).collect::<Vec<_>>())?;
    let line = graph6::emit(&big);
    println!("P63 emits {} bytes, starts with '~'", line.len());
    assert_eq!(graph6::parse(&line)?.edges(), big.edges());
    Ok(())
}
