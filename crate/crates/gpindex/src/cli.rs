//! Command-line surface: single-graph reports, censuses, the tadpole family
//! comparison, and a built-in invariant selfcheck.

use crate::census::{self, CensusRow, CensusSummary};
use crate::error::Error;
use crate::families::{self, TadpoleSpec};
use crate::gp;
use crate::graph::Graph;
use crate::graph6;
use crate::symmetry;
use clap::{Parser, Subcommand};
use std::fs::File;
use std::io::{BufReader, BufWriter, Write};
use std::path::PathBuf;

pub const EXIT_OK: i32 = 0;
pub const EXIT_SELFCHECK_FAILED: i32 = 1;
pub const EXIT_INVALID_INPUT: i32 = 2;
pub const EXIT_SIZE_CAP: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "gpindex", version, about = "Exact Graovac-Pisanski index of small connected graphs")]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Worker threads for census runs
    #[arg(long, global = true, default_value_t = 1)]
    workers: usize,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// GP report for one graph, as JSON
    Compute {
        /// graph6 string
        #[arg(long, conflicts_with = "edges")]
        g6: Option<String>,
        /// Path to an edge-list file ("n m" header, one "u v" line per edge)
        #[arg(long)]
        edges: Option<PathBuf>,
    },
    /// GP census of connected graphs: CSV rows plus a summary line
    Census {
        /// Vertex count to enumerate
        #[arg(conflicts_with = "from")]
        n: Option<usize>,
        /// Read graphs from a graph6 file instead of enumerating
        #[arg(long)]
        from: Option<PathBuf>,
        /// CSV output path (stdout when omitted)
        #[arg(long)]
        out: Option<PathBuf>,
        /// Also write non-integer-GP graphs to this graph6 file
        #[arg(long)]
        nonintegers: Option<PathBuf>,
        /// Largest permitted vertex count
        #[arg(long, env = "GP_MAX_N", default_value_t = census::MAX_CENSUS_N)]
        max_n: usize,
    },
    /// Closed-form vs computed GP for a tadpole graph
    Family {
        /// Odd cycle length
        cycle_len: usize,
        /// Even tail length
        tail_len: usize,
    },
    /// Run the built-in invariant suites
    Selfcheck {
        /// Sweep bound for the exhaustive checks
        #[arg(long, env = "GP_MAX_N", default_value_t = 6)]
        max_n: usize,
    },
}

/// Parses arguments, runs, and returns the process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            // clap handles --help/--version with success exits
            let code = if e.use_stderr() { EXIT_INVALID_INPUT } else { EXIT_OK };
            let _ = e.print();
            return code;
        }
    };
    if cli.workers == 0 {
        eprintln!("error: --workers must be at least 1");
        return EXIT_INVALID_INPUT;
    }
    let pool = match rayon::ThreadPoolBuilder::new()
        .num_threads(cli.workers)
        .build()
    {
        Ok(pool) => pool,
        Err(e) => {
            eprintln!("error: {e}");
            return EXIT_INVALID_INPUT;
        }
    };
    let outcome = pool.install(|| dispatch(cli.command));
    match outcome {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            exit_code_for(&e)
        }
    }
}

fn exit_code_for(e: &Error) -> i32 {
    match e {
        Error::SizeCap(..) | Error::EnumerationCap(..) => EXIT_SIZE_CAP,
        _ => EXIT_INVALID_INPUT,
    }
}

fn dispatch(command: Command) -> crate::Result<i32> {
    match command {
        Command::Compute { g6, edges } => cmd_compute(g6, edges),
        Command::Census {
            n,
            from,
            out,
            nonintegers,
            max_n,
        } => cmd_census(n, from, out, nonintegers, max_n),
        Command::Family {
            cycle_len,
            tail_len,
        } => cmd_family(cycle_len, tail_len),
        Command::Selfcheck { max_n } => cmd_selfcheck(max_n),
    }
}

fn cmd_compute(g6: Option<String>, edges: Option<PathBuf>) -> crate::Result<i32> {
    let graph = match (g6, edges) {
        (Some(s), None) => graph6::parse(&s)?,
        (None, Some(path)) => Graph::parse_edge_list(&std::fs::read_to_string(path)?)?,
        _ => {
            return Err(Error::EdgeList(
                "exactly one of --g6 and --edges is required".into(),
            ))
        }
    };
    let report = gp::gp_report(&graph)?;
    let order_json = match u64::try_from(report.aut_order) {
        Ok(v) => serde_json::json!(v),
        Err(_) => serde_json::json!(report.aut_order.to_string()),
    };
    let json = serde_json::json!({
        "gp_num": report.gp.numerator() as i64,
        "gp_den": report.gp.denominator() as i64,
        "is_integer": report.is_integer,
        "guarantee": report.guarantee.to_string(),
        "aut_order": order_json,
        "orbits": report.orbits,
        "wiener": report.wiener,
    });
    println!("{}", serde_json::to_string_pretty(&json).expect("valid JSON"));
    Ok(EXIT_OK)
}

fn cmd_census(
    n: Option<usize>,
    from: Option<PathBuf>,
    out: Option<PathBuf>,
    nonintegers: Option<PathBuf>,
    max_n: usize,
) -> crate::Result<i32> {
    let (summary, rows) = match (n, from) {
        (Some(n), None) => {
            if n > max_n {
                return Err(Error::SizeCap(n, max_n));
            }
            census::run_census(n)?
        }
        (None, Some(path)) => {
            let reader = BufReader::new(File::open(path)?);
            let (summary, rows) = census::run_census_from_reader(reader)?;
            if summary.skipped_disconnected > 0 {
                eprintln!(
                    "warning: skipped {} disconnected graph(s)",
                    summary.skipped_disconnected
                );
            }
            for row in &rows {
                if row.n > max_n {
                    return Err(Error::SizeCap(row.n, max_n));
                }
            }
            (summary, rows)
        }
        _ => {
            return Err(Error::Census(
                "exactly one of a vertex count and --from is required".into(),
            ))
        }
    };
    write_census(&summary, &rows, out, nonintegers)?;
    Ok(EXIT_OK)
}

fn write_census(
    summary: &CensusSummary,
    rows: &[CensusRow],
    out: Option<PathBuf>,
    nonintegers: Option<PathBuf>,
) -> crate::Result<()> {
    let csv = render_csv(rows);
    match out {
        Some(path) => {
            let mut w = BufWriter::new(File::create(path)?);
            w.write_all(csv.as_bytes())?;
            w.flush()?;
        }
        None => print!("{csv}"),
    }
    if let Some(path) = nonintegers {
        let mut w = BufWriter::new(File::create(path)?);
        for row in rows.iter().filter(|r| !r.is_integer) {
            writeln!(w, "{}", row.canon_g6)?;
        }
        w.flush()?;
    }
    println!("{}", summary_line(summary));
    Ok(())
}

pub fn render_csv(rows: &[CensusRow]) -> String {
    let mut csv = String::from(CensusRow::CSV_HEADER);
    csv.push('\n');
    for row in rows {
        csv.push_str(&row.to_csv());
        csv.push('\n');
    }
    csv
}

pub fn summary_line(s: &CensusSummary) -> String {
    format!(
        "n={} connected={} integer={} noninteger={}",
        s.n, s.connected_count, s.integer_count, s.noninteger_count
    )
}

fn cmd_family(cycle_len: usize, tail_len: usize) -> crate::Result<i32> {
    let spec = TadpoleSpec::new(cycle_len, tail_len)?;
    let graph = families::tadpole(spec)?;
    let closed = families::tadpole_gp_closed_form(spec)?;
    let computed = gp::gp_orbit_representative(&graph)?;
    let verdict = if closed == computed { "MATCH" } else { "MISMATCH" };
    let predicted = if families::tadpole_is_noninteger(cycle_len)? {
        "non-integer"
    } else {
        "integer"
    };
    println!("tadpole cycle={cycle_len} tail={tail_len} vertices={}", spec.vertex_count());
    println!("closed-form GP = {closed}");
    println!("computed GP    = {computed}");
    println!("{verdict}");
    println!("predicted {predicted} (cycle length mod 8 = {})", cycle_len % 8);
    if verdict == "MATCH" {
        Ok(EXIT_OK)
    } else {
        Ok(EXIT_SELFCHECK_FAILED)
    }
}

fn cmd_selfcheck(max_n: usize) -> crate::Result<i32> {
    match selfcheck(max_n) {
        Ok(()) => {
            println!("all checks passed");
            Ok(EXIT_OK)
        }
        Err(name) => {
            eprintln!("selfcheck failed: {name}");
            Ok(EXIT_SELFCHECK_FAILED)
        }
    }
}

/// Runs every invariant suite up to `max_n`; returns the first failing
/// invariant's name.
pub fn selfcheck(max_n: usize) -> std::result::Result<(), String> {
    selfcheck_with(max_n, &|g| symmetry::orbits(g).map_err(|e| e.to_string()))
}

/// Selfcheck with an injectable orbit routine, so the harness can verify
/// that a corrupted computation is actually caught.
pub fn selfcheck_with(
    max_n: usize,
    orbit_fn: &dyn Fn(&Graph) -> std::result::Result<Vec<Vec<usize>>, String>,
) -> std::result::Result<(), String> {
    let max_n = max_n.clamp(1, census::MAX_CENSUS_N);
    let fail = |name: &str, detail: String| Err::<(), String>(format!("{name}: {detail}"));

    for n in 1..=max_n {
        let graphs = census::enumerate_connected(n).map_err(|e| e.to_string())?;
        for g in &graphs {
            let canon = graph6::emit(g);
            // graph6 round trip
            match graph6::parse(&canon) {
                Ok(back) if back == *g => {}
                _ => return fail("graph6-round-trip", format!("n={n} {canon}")),
            }
            // three-formula equivalence, on the injected orbits
            let orbits = orbit_fn(g).map_err(|e| format!("orbit-computation: {e}"))?;
            let dm = crate::distance::DistanceMatrix::new(g).map_err(|e| e.to_string())?;
            let by_rep = gp::gp_orbit_representative_with(g, &dm, &orbits)
                .map_err(|e| e.to_string())?;
            let by_def = gp::gp_definition(g).map_err(|e| e.to_string())?;
            let by_wiener = gp::gp_orbit_wiener(g).map_err(|e| e.to_string())?;
            if by_rep != by_def || by_rep != by_wiener {
                return fail(
                    "three-formula-equivalence",
                    format!("n={n} {canon}: {by_rep} vs {by_def} vs {by_wiener}"),
                );
            }
            // denominator corollary
            if !matches!(by_rep.denominator(), 1 | 2) {
                return fail("gp-denominator", format!("n={n} {canon}: {by_rep}"));
            }
            // even-order and bipartite integrality theorems
            if n % 2 == 0 && !by_rep.is_integer() {
                return fail("even-order-integer", format!("n={n} {canon}: {by_rep}"));
            }
            let bip = g.bipartition().map_err(|e| e.to_string())?;
            if bip.is_some() && !by_rep.is_integer() {
                return fail("bipartite-integer", format!("n={n} {canon}: {by_rep}"));
            }
            // automorphism engine vs brute force on the small sweep
            if n <= 6 {
                let group = symmetry::automorphism_group(g).map_err(|e| e.to_string())?;
                let (bf_order, bf_orbits) = brute_force_group(g);
                if group.order != bf_order || group.orbits != bf_orbits {
                    return fail("automorphism-brute-force", format!("n={n} {canon}"));
                }
                if orbits != bf_orbits {
                    return fail("orbit-computation", format!("n={n} {canon}"));
                }
            }
        }
    }

    // tadpole closed form on a small grid
    for l in [3usize, 5, 7] {
        for t in [2usize, 4] {
            let spec = TadpoleSpec::new(l, t).map_err(|e| e.to_string())?;
            let g = families::tadpole(spec).map_err(|e| e.to_string())?;
            let closed = families::tadpole_gp_closed_form(spec).map_err(|e| e.to_string())?;
            let computed = gp::gp_orbit_representative(&g).map_err(|e| e.to_string())?;
            if closed != computed {
                return fail("tadpole-closed-form", format!("({l}, {t})"));
            }
        }
    }
    Ok(())
}

/// Exact group order and orbits by trying all `n!` permutations.
pub fn brute_force_group(g: &Graph) -> (u128, Vec<Vec<usize>>) {
    let n = g.vertex_count();
    let mut order: u128 = 0;
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut Vec<usize>, x: usize) -> usize {
        if parent[x] != x {
            let r = find(parent, parent[x]);
            parent[x] = r;
        }
        parent[x]
    }
    let mut image: Vec<usize> = (0..n).collect();
    permute(&mut image, 0, &mut |p| {
        let perm = symmetry::Permutation::from_image(p.to_vec()).expect("bijection");
        if symmetry::is_automorphism(g, &perm) {
            order += 1;
            for x in 0..n {
                let (a, b) = (find(&mut parent, x), find(&mut parent, perm.apply(x)));
                let (lo, hi) = (a.min(b), a.max(b));
                parent[hi] = lo;
            }
        }
    });
    let mut cells: std::collections::BTreeMap<usize, Vec<usize>> = Default::default();
    for v in 0..n {
        let r = find(&mut parent, v);
        cells.entry(r).or_default().push(v);
    }
    (order, cells.into_values().collect())
}

fn permute(items: &mut Vec<usize>, k: usize, visit: &mut impl FnMut(&[usize])) {
    if k == items.len() {
        visit(items);
        return;
    }
    for i in k..items.len() {
        items.swap(k, i);
        permute(items, k + 1, visit);
        items.swap(k, i);
    }
}
