//! `ore-lab`: command-line surface over the library.
//!
//! Exit codes: 0 on success, 1 when a verification ran and failed, 2 on
//! usage or input errors.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use rand_chacha::rand_core::SeedableRng;
use serde_json::{json, Value};

use ore_lab::census::{
    census_for_n, ingest_graph6_stream, run_census, CensusReport, CheckSet,
};
use ore_lab::collapse::{critical_complement, is_cocollapsible, is_collapsible, is_tight_collapsible};
use ore_lab::coloring::is_k_critical;
use ore_lab::discharge::run_discharging;
use ore_lab::extension::{degree_three_reduction, for_each_extension};
use ore_lab::graph6::{parse_graph6, to_graph6};
use ore_lab::ore::{generate_4_ore, is_4_ore, random_4_ore};
use ore_lab::potential::{min_potential, potential};
use ore_lab::{Error, Graph, VertexSet};

/// Like `println!`, but exits quietly when stdout is closed by the reader
/// (for example when the output is piped into `head`), instead of panicking.
macro_rules! outln {
    ($($arg:tt)*) => {{
        use std::io::Write;
        if writeln!(std::io::stdout().lock(), $($arg)*).is_err() {
            std::process::exit(0);
        }
    }};
}

#[derive(Parser)]
#[command(name = "ore-lab", version, about = "4-critical graphs of small Ore-degree: compositions, potentials, collapsibility, discharging, census")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Criticality, Ore-degree, potential, and 4-Ore certificate for one graph
    Check {
        /// graph6 string, or @FILE containing one graph6 line
        graph: String,
    },
    /// Emit 4-Ore graphs with replayable certificates, one JSON line each
    GenOre {
        /// Largest vertex count (also the exact target for --random)
        #[arg(long)]
        max_n: usize,
        /// Sample seeded random compositions instead of exhaustive generation
        #[arg(long)]
        random: bool,
        /// How many random graphs to emit
        #[arg(long, default_value_t = 1)]
        count: usize,
        /// RNG seed; recorded in the output envelope
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Verify theorems over a graph stream; JSON report on stdout
    Census {
        /// Vertex count for built-in enumeration (or a filter for --input)
        #[arg(long)]
        n: Option<usize>,
        /// File of graph6 lines to scan instead of built-in enumeration
        #[arg(long)]
        input: Option<PathBuf>,
        /// Comma-separated sections: main,bounds,structure,potential
        #[arg(long, default_value = "main,bounds,structure,potential")]
        checks: String,
        /// Worker threads (default: ORE_LAB_JOBS, then all cores)
        #[arg(long)]
        jobs: Option<usize>,
    },
    /// p(R) for a subset, optionally the minimum potential and its witness
    Potential {
        /// graph6 string, or @FILE
        graph: String,
        /// Comma-separated vertex indices (default: all vertices)
        #[arg(long)]
        subset: Option<String>,
        /// Also report min over non-empty subsets with a witness
        #[arg(long)]
        min: bool,
    },
    /// Stream the critical extensions of a subset, one JSON line each
    Extend {
        /// graph6 string, or @FILE
        graph: String,
        /// Comma-separated vertex indices of R
        #[arg(long)]
        subset: String,
        /// Enumerate every minimal extender per φ, not just the first
        #[arg(long)]
        all_extenders: bool,
    },
    /// Collapsibility, tightness, cocollapsibility, and the critical complement
    Collapse {
        /// graph6 string, or @FILE
        graph: String,
        /// Comma-separated vertex indices of R
        #[arg(long)]
        subset: String,
    },
    /// Run the discharging rules; transcript lines, then the final charges
    Discharge {
        /// graph6 string, or @FILE
        graph: String,
    },
    /// Degree-three reduction record for (v, u1, u2)
    Reduce {
        /// graph6 string, or @FILE
        graph: String,
        /// The degree-3 vertex to delete
        #[arg(long)]
        v: usize,
        /// First neighbor to identify
        #[arg(long)]
        u1: usize,
        /// Second neighbor to identify (non-adjacent to u1)
        #[arg(long)]
        u2: usize,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.cmd) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

/// Inline graph6, or `@path` to a file holding exactly one graph6 line.
fn read_graph(arg: &str) -> Result<Graph, Error> {
    if let Some(path) = arg.strip_prefix('@') {
        let graphs = ingest_graph6_stream(std::path::Path::new(path))?;
        match graphs.len() {
            1 => Ok(graphs.into_iter().next().expect("length checked")),
            k => Err(Error::Argument(format!("{path}: expected exactly one graph6 line, found {k}"))),
        }
    } else {
        parse_graph6(arg)
    }
}

fn parse_subset(g: &Graph, csv: &str) -> Result<VertexSet, Error> {
    let mut vs = Vec::new();
    for item in csv.split(',') {
        let item = item.trim();
        let v: usize = item
            .parse()
            .map_err(|_| Error::Argument(format!("subset entry '{item}' is not a vertex index")))?;
        vs.push(v);
    }
    VertexSet::from_slice(g.n(), &vs)
}

fn jobs_or_default(flag: Option<usize>) -> usize {
    flag.or_else(|| std::env::var("ORE_LAB_JOBS").ok().and_then(|s| s.parse().ok()))
        .unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |p| p.get()))
        .max(1)
}

fn run(cmd: Cmd) -> Result<ExitCode, Error> {
    match cmd {
        Cmd::Check { graph } => {
            let g = read_graph(&graph)?;
            let g6 = to_graph6(&g)?;
            outln!("{g6} n={} m={}", g.n(), g.edge_count());
            outln!("{g6} 4-critical: {}", is_k_critical(&g, 4));
            match g.ore_degree() {
                Some(d) => outln!("{g6} ore-degree: {d}"),
                None => outln!("{g6} ore-degree: none (no edges)"),
            }
            let p = potential(&g, &g.vertex_set())?;
            outln!("{g6} p(V) = {p} (scaled {})", p.raw());
            match is_4_ore(&g) {
                Some(cert) => outln!(
                    "{g6} 4-ore: {}",
                    serde_json::to_string(&cert).expect("certificates serialize")
                ),
                None => outln!("{g6} 4-ore: none"),
            }
            Ok(ExitCode::SUCCESS)
        }
        Cmd::GenOre { max_n, random, count, seed } => {
            if random {
                outln!("{}", json!({"mode": "random", "n": max_n, "count": count, "seed": seed}));
                let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
                for _ in 0..count {
                    let (g, cert) = random_4_ore(max_n, &mut rng)?;
                    emit_ore_line(&g, &cert)?;
                }
            } else {
                outln!("{}", json!({"mode": "exhaustive", "max_n": max_n}));
                for (g, cert) in generate_4_ore(max_n)? {
                    emit_ore_line(&g, &cert)?;
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Census { n, input, checks, jobs } => {
            let checks = CheckSet::parse(&checks)?;
            let jobs = jobs_or_default(jobs);
            let report: CensusReport = match (input, n) {
                (Some(path), n) => {
                    let mut stream = ingest_graph6_stream(&path)?;
                    if let Some(n) = n {
                        stream.retain(|g| g.n() == n);
                    }
                    run_census(&stream, checks, jobs)
                }
                (None, Some(n)) => census_for_n(n, checks, jobs)?,
                (None, None) => {
                    return Err(Error::Argument("census needs --n or --input".into()))
                }
            };
            eprint!("{}", report.human_summary());
            outln!("{}", report.to_json());
            Ok(if report.pass() { ExitCode::SUCCESS } else { ExitCode::from(1) })
        }
        Cmd::Potential { graph, subset, min } => {
            let g = read_graph(&graph)?;
            let r = match &subset {
                Some(csv) => parse_subset(&g, csv)?,
                None => g.vertex_set(),
            };
            let p = potential(&g, &r)?;
            let mut out = json!({
                "graph6": to_graph6(&g)?,
                "subset": r.to_vec(),
                "p_scaled": p.raw(),
                "p": p.to_string(),
            });
            if min {
                let (best, witness) = min_potential(&g)?;
                let obj = out.as_object_mut().expect("object");
                obj.insert("min_scaled".into(), json!(best.raw()));
                obj.insert("min".into(), json!(best.to_string()));
                obj.insert("min_witness".into(), json!(witness.to_vec()));
            }
            outln!("{out}");
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Extend { graph, subset, all_extenders } => {
            let g = read_graph(&graph)?;
            let g6 = to_graph6(&g)?;
            let r = parse_subset(&g, &subset)?;
            for_each_extension(&g, &r, all_extenders, &mut |rec| {
                let mut line = rec.to_json();
                line.as_object_mut()
                    .expect("record is an object")
                    .insert("graph6".into(), json!(g6));
                outln!("{line}");
                true
            })?;
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Collapse { graph, subset } => {
            let g = read_graph(&graph)?;
            let r = parse_subset(&g, &subset)?;
            let collapsible = is_collapsible(&g, &r)?;
            let (cocollapsible, nontrivial) = is_cocollapsible(&g, &r)?;
            let mut out = json!({
                "graph6": to_graph6(&g)?,
                "subset": r.to_vec(),
                "collapsible": collapsible,
                "cocollapsible": cocollapsible,
                "nontrivial_cocollapsible": cocollapsible && nontrivial,
            });
            let obj = out.as_object_mut().expect("object");
            if collapsible {
                obj.insert("tight".into(), json!(is_tight_collapsible(&g, &r)?));
                let (w, merged) = critical_complement(&g, &r)?;
                obj.insert("critical_complement_g6".into(), json!(to_graph6(&w)?));
                obj.insert("merged_vertex".into(), json!(merged));
            } else {
                obj.insert("tight".into(), Value::Null);
                obj.insert("critical_complement_g6".into(), Value::Null);
                obj.insert("merged_vertex".into(), Value::Null);
            }
            outln!("{out}");
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Discharge { graph } => {
            let g = read_graph(&graph)?;
            let (state, transcript) = run_discharging(&g);
            for t in &transcript {
                outln!("{}", t.jsonl_line());
            }
            let charges: Vec<i64> = state.charges.iter().map(|c| c.raw()).collect();
            outln!(
                "{}",
                json!({
                    "graph6": to_graph6(&g)?,
                    "final_scaled": charges,
                    "total_scaled": state.total().raw(),
                    "rounds": state.round,
                })
            );
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Reduce { graph, v, u1, u2 } => {
            let g = read_graph(&graph)?;
            let rec = degree_three_reduction(&g, v, u1, u2)?;
            let mut line = rec.to_json();
            line.as_object_mut()
                .expect("record is an object")
                .insert("graph6".into(), json!(to_graph6(&g)?));
            outln!("{line}");
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn emit_ore_line(g: &Graph, cert: &ore_lab::ore::OreCertificate) -> Result<(), Error> {
    outln!(
        "{}",
        json!({
            "graph6": to_graph6(g)?,
            "n": g.n(),
            "certificate": serde_json::to_value(cert).expect("certificates serialize"),
        })
    );
    Ok(())
}
