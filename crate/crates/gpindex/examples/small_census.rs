//! Enumerate all connected graphs on n vertices and tabulate their GP values.
//!
//! Run with: cargo run --release --example small_census [n]

use gpindex::census::{self, CensusRow};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let n: usize = std::env::args()
        .nth(1)
        .map(|s| s.parse())
        .transpose()?
        .unwrap_or(5);

    let (summary, rows) = census::run_census(n)?;
    println!("{}", CensusRow::CSV_HEADER);
    for row in &rows {
        println!("{}", row.to_csv());
    }
    println!(
        "n={} connected={} integer={} noninteger={}",
        n, summary.connected_count, summary.integer_count, summary.noninteger_count
    );
    Ok(())
}
