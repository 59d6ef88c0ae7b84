//! Isomorph-free enumeration of small graphs and GP census reports.
//!
//! Generation is canonical vertex augmentation: every graph on `k` vertices
//! is extended by one new vertex over orbit representatives of neighborhood
//! subsets, and a child is accepted only when the new vertex lies in the
//! orbit of the canonically-last vertex. Connectivity is filtered at the
//! final level only, since connected graphs can have disconnected induced
//! subgraphs.

use crate::distance::DistanceMatrix;
use crate::error::{Error, Result};
use crate::gp::{self, GpReport};
use crate::graph::Graph;
use crate::graph6;
use crate::rational::Rational;
use crate::symmetry::{self, Dsu};
use rayon::prelude::*;
use std::collections::BTreeMap;
use std::io::BufRead;

/// Largest census size; one level beyond the paper's table.
pub const MAX_CENSUS_N: usize = 10;

/// One census line: a connected graph and its GP report.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CensusRow {
    pub canon_g6: String,
    pub n: usize,
    pub m: usize,
    pub gp: Rational,
    pub aut_order: u128,
    pub orbit_count: usize,
    pub is_integer: bool,
}

impl CensusRow {
    pub const CSV_HEADER: &'static str =
        "canon_g6,n,m,aut_order,orbit_count,gp_num,gp_den,is_integer";

    pub fn to_csv(&self) -> String {
        format!(
            "{},{},{},{},{},{},{},{}",
            self.canon_g6,
            self.n,
            self.m,
            self.aut_order,
            self.orbit_count,
            self.gp.numerator(),
            self.gp.denominator(),
            self.is_integer
        )
    }

    pub fn from_csv(line: &str) -> Result<CensusRow> {
        let fields: Vec<&str> = line.split(',').collect();
        if fields.len() != 8 {
            return Err(Error::Census(format!("bad CSV row: {line:?}")));
        }
        let parse = |s: &str, what: &str| -> Result<i128> {
            s.parse()
                .map_err(|_| Error::Census(format!("bad {what} in CSV row: {line:?}")))
        };
        Ok(CensusRow {
            canon_g6: fields[0].to_string(),
            n: parse(fields[1], "n")? as usize,
            m: parse(fields[2], "m")? as usize,
            aut_order: parse(fields[3], "aut_order")? as u128,
            orbit_count: parse(fields[4], "orbit_count")? as usize,
            gp: Rational::new(parse(fields[5], "gp_num")?, parse(fields[6], "gp_den")?)?,
            is_integer: match fields[7] {
                "true" => true,
                "false" => false,
                _ => return Err(Error::Census(format!("bad is_integer in row: {line:?}"))),
            },
        })
    }
}

/// Aggregate counts in the layout of the paper's table.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct CensusSummary {
    /// Vertex count, or 0 when the input mixes sizes.
    pub n: usize,
    pub connected_count: u64,
    pub integer_count: u64,
    pub noninteger_count: u64,
    /// Disconnected inputs skipped on the file-ingestion path.
    pub skipped_disconnected: u64,
}

fn check_census_n(n: usize) -> Result<()> {
    if n == 0 || n > MAX_CENSUS_N {
        return Err(Error::Census(format!(
            "census size must be in 1..={MAX_CENSUS_N}, got {n}"
        )));
    }
    Ok(())
}

/// All graphs (connected or not) on one more vertex, one canonically labeled
/// representative per isomorphism class.
fn next_level(parents: &[Graph]) -> Result<Vec<Graph>> {
    let chunks: Vec<Vec<(String, Graph)>> = parents
        .par_iter()
        .map(extend_parent)
        .collect::<Result<Vec<_>>>()?;
    // BTreeMap keeps the level sorted and absorbs any residual duplicate
    let mut level: BTreeMap<String, Graph> = BTreeMap::new();
    for chunk in chunks {
        for (key, g) in chunk {
            level.insert(key, g);
        }
    }
    Ok(level.into_values().collect())
}

fn extend_parent(parent: &Graph) -> Result<Vec<(String, Graph)>> {
    let pn = parent.vertex_count();
    let new_vertex = pn;
    let subsets = 1usize << pn;
    // orbit representatives of neighborhood subsets under Aut(parent)
    let gens = symmetry::automorphism_group(parent)?.generators;
    let mut dsu = Dsu::new(subsets);
    for gen in &gens {
        for s in 0..subsets {
            dsu.union(s, gen.apply_mask(s as u64) as usize);
        }
    }
    let mut out = Vec::new();
    for s in 0..subsets {
        if dsu.find(s) != s {
            continue;
        }
        let child = parent.with_appended_vertex(s as u64)?;
        let analysis = symmetry::analyze(&child)?;
        let canonical_last = analysis.canonical_labeling[new_vertex];
        let accepted = analysis
            .group
            .orbits
            .iter()
            .any(|o| o.contains(&new_vertex) && o.contains(&canonical_last));
        if accepted {
            out.push((analysis.canonical_g6, analysis.canonical_graph));
        }
    }
    Ok(out)
}

/// All graphs on `n` vertices up to isomorphism, canonically labeled.
pub fn enumerate_all(n: usize) -> Result<Vec<Graph>> {
    check_census_n(n)?;
    let mut level = vec![Graph::empty(1)?];
    for _ in 1..n {
        level = next_level(&level)?;
    }
    Ok(level)
}

/// Exactly one representative per isomorphism class of connected graphs on
/// `n` vertices, sorted by edge count then canonical string.
pub fn enumerate_connected(n: usize) -> Result<Vec<Graph>> {
    let mut graphs: Vec<Graph> = enumerate_all(n)?
        .into_iter()
        .filter(Graph::is_connected)
        .collect();
    graphs.sort_by_key(|g| (g.edge_count(), graph6::emit(g)));
    Ok(graphs)
}

fn row_for(g: &Graph) -> Result<CensusRow> {
    let analysis = symmetry::analyze(g)?;
    let dm = DistanceMatrix::new(g)?;
    let report: GpReport = gp::report_from_analysis(g, &dm, &analysis, false)?;
    Ok(CensusRow {
        canon_g6: analysis.canonical_g6,
        n: g.vertex_count(),
        m: g.edge_count(),
        gp: report.gp,
        aut_order: report.aut_order,
        orbit_count: report.orbit_count,
        is_integer: report.is_integer,
    })
}

fn summarize(rows: &[CensusRow], skipped: u64) -> CensusSummary {
    let mut ns: Vec<usize> = rows.iter().map(|r| r.n).collect();
    ns.dedup();
    let n = match ns.as_slice() {
        [single] => *single,
        _ => 0,
    };
    let integer_count = rows.iter().filter(|r| r.is_integer).count() as u64;
    CensusSummary {
        n,
        connected_count: rows.len() as u64,
        integer_count,
        noninteger_count: rows.len() as u64 - integer_count,
        skipped_disconnected: skipped,
    }
}

fn census_rows(graphs: &[Graph]) -> Result<Vec<CensusRow>> {
    let mut rows: Vec<CensusRow> = graphs
        .par_iter()
        .map(row_for)
        .collect::<Result<Vec<_>>>()?;
    rows.sort_by(|a, b| (a.m, &a.canon_g6).cmp(&(b.m, &b.canon_g6)));
    Ok(rows)
}

/// Census over the generated connected graphs on `n` vertices.
pub fn run_census(n: usize) -> Result<(CensusSummary, Vec<CensusRow>)> {
    let graphs = enumerate_connected(n)?;
    let rows = census_rows(&graphs)?;
    Ok((summarize(&rows, 0), rows))
}

/// Census over an external graph6 stream, one graph per line. Disconnected
/// inputs are counted in the summary and skipped.
pub fn run_census_from_reader(reader: impl BufRead) -> Result<(CensusSummary, Vec<CensusRow>)> {
    let mut graphs = Vec::new();
    let mut skipped = 0u64;
    for line in reader.lines() {
        let line = line?;
        if line.trim().is_empty() {
            continue;
        }
        let g = graph6::parse(&line)?;
        if g.is_connected() {
            graphs.push(g);
        } else {
            skipped += 1;
        }
    }
    let rows = census_rows(&graphs)?;
    Ok((summarize(&rows, skipped), rows))
}

/// Canonical graph6 strings of all non-integer-GP connected graphs on `n`
/// vertices, sorted.
pub fn noninteger_graphs(n: usize) -> Result<Vec<String>> {
    let (_, rows) = run_census(n)?;
    let mut out: Vec<String> = rows
        .into_iter()
        .filter(|r| !r.is_integer)
        .map(|r| r.canon_g6)
        .collect();
    out.sort();
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    #[test]
    fn tiny_levels() {
        assert_eq!(enumerate_all(1).unwrap().len(), 1);
        assert_eq!(enumerate_all(2).unwrap().len(), 2);
        assert_eq!(enumerate_all(3).unwrap().len(), 4);
        assert_eq!(enumerate_all(4).unwrap().len(), 11);
    }

    #[test]
    fn connected_counts_small() {
        assert_eq!(enumerate_connected(1).unwrap().len(), 1);
        assert_eq!(enumerate_connected(2).unwrap().len(), 1);
        assert_eq!(enumerate_connected(3).unwrap().len(), 2);
        assert_eq!(enumerate_connected(4).unwrap().len(), 6);
        assert_eq!(enumerate_connected(5).unwrap().len(), 21);
    }

    #[test]
    fn out_of_range_n() {
        assert!(enumerate_connected(0).is_err());
        assert!(enumerate_connected(MAX_CENSUS_N + 1).is_err());
    }

    #[test]
    fn isomorph_freeness_matches_brute_force() {
        // dedup all labeled graphs by canonical form
        for n in 1..=5usize {
            let pairs = n * (n - 1) / 2;
            let mut canon_all: HashSet<String> = HashSet::new();
            let mut canon_connected: HashSet<String> = HashSet::new();
            for bits in 0u32..(1 << pairs) {
                let mut edges = Vec::new();
                let mut idx = 0;
                for u in 0..n {
                    for v in (u + 1)..n {
                        if bits & (1 << idx) != 0 {
                            edges.push((u, v));
                        }
                        idx += 1;
                    }
                }
                let g = Graph::from_edges(n, &edges).unwrap();
                let c = symmetry::canonical_form(&g).unwrap();
                if g.is_connected() {
                    canon_connected.insert(c.clone());
                }
                canon_all.insert(c);
            }
            let level = enumerate_all(n).unwrap();
            let level_canon: HashSet<String> =
                level.iter().map(|g| graph6::emit(g)).collect();
            assert_eq!(level_canon.len(), level.len(), "duplicates at n = {n}");
            assert_eq!(level_canon, canon_all, "n = {n}");
            let conn: HashSet<String> = enumerate_connected(n)
                .unwrap()
                .iter()
                .map(graph6::emit)
                .collect();
            assert_eq!(conn, canon_connected, "connected n = {n}");
        }
    }

    #[test]
    fn census_n5_matches_table() {
        let (summary, rows) = run_census(5).unwrap();
        assert_eq!(summary.connected_count, 21);
        assert_eq!(summary.integer_count, 14);
        assert_eq!(summary.noninteger_count, 7);
        assert_eq!(rows.len(), 21);
        let distinct: HashSet<&str> = rows.iter().map(|r| r.canon_g6.as_str()).collect();
        assert_eq!(distinct.len(), 21);
    }

    #[test]
    fn even_order_census_has_no_nonintegers() {
        for n in [2usize, 4, 6] {
            assert!(noninteger_graphs(n).unwrap().is_empty(), "n = {n}");
        }
    }

    #[test]
    fn noninteger_small() {
        assert!(noninteger_graphs(3).unwrap().is_empty());
        assert_eq!(noninteger_graphs(5).unwrap().len(), 7);
    }

    #[test]
    fn csv_round_trip() {
        let (_, rows) = run_census(5).unwrap();
        for row in &rows {
            let line = row.to_csv();
            assert_eq!(&CensusRow::from_csv(&line).unwrap(), row);
            assert!(matches!(row.gp.denominator(), 1 | 2));
        }
    }

    #[test]
    fn from_reader_skips_disconnected() {
        let k2 = Graph::from_edges(2, &[(0, 1)]).unwrap();
        let e2 = Graph::empty(2).unwrap();
        let input = format!("{}\n{}\n", graph6::emit(&k2), graph6::emit(&e2));
        let (summary, rows) = run_census_from_reader(input.as_bytes()).unwrap();
        assert_eq!(summary.connected_count, 1);
        assert_eq!(summary.skipped_disconnected, 1);
        assert_eq!(rows.len(), 1);
        assert_eq!(rows[0].gp, Rational::from_integer(1));
    }

    #[test]
    fn summary_identity_holds() {
        for n in 1..=5usize {
            let (s, _) = run_census(n).unwrap();
            assert_eq!(s.connected_count, s.integer_count + s.noninteger_count);
            assert_eq!(s.n, n);
        }
    }
}
