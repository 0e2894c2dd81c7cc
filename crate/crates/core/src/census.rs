//! Desk-scale exhaustive verification.
//!
//! A census run takes a stream of graphs — built-in isomorph-free enumeration
//! up to [`ENUMERATION_MAX_N`] vertices, or an ingested graph6 file — keeps
//! the 4-critical ones, and checks every in-scope theorem against them,
//! producing a machine-readable [`CensusReport`]. Checks on one graph never
//! share mutable state, so the expensive passes fan out over a simple work
//! queue of worker threads.

use std::collections::{BTreeMap, BTreeSet};
use std::io::BufRead;
use std::path::Path;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::time::Instant;

use serde_json::{json, Value};

use crate::canon::{are_isomorphic, canonical_form};
use crate::collapse::collapsible_unchecked;
use crate::coloring::is_k_critical;
use crate::error::{Error, Result};
use crate::extension::for_each_extension;
use crate::graph::{low_mask, Graph, VertexSet};
use crate::graph6::{parse_graph6, to_graph6};
use crate::ore::{diamond_case, diamonds, generate_4_ore, is_4_ore, OreCertificate};
use crate::potential::{graph_potential, s_value};
use crate::scaled::Scaled;

/// Built-in enumeration stops here; larger n comes from ingested streams.
pub const ENUMERATION_MAX_N: usize = 8;
/// Built-in tree enumeration cap.
pub const TREE_MAX_N: usize = 12;

/// Grow graphs one vertex at a time: every level-k representative spawns the
/// `children` candidates on k+1 vertices, and canonical-form dedup keeps one
/// representative per isomorphism class. Deleting the last-added vertex of
/// any (k+1)-vertex graph leaves a k-vertex graph, so the levels are
/// complete. Returns the representatives on exactly `n` vertices, sorted by
/// canonical graph6 string.
fn augmented_level(n: usize, children: &dyn Fn(&Graph) -> Vec<Graph>) -> Vec<Graph> {
    let mut level = vec![Graph::empty(1).expect("one vertex fits")];
    for _ in 1..n {
        let mut next: BTreeMap<String, Graph> = BTreeMap::new();
        for g in &level {
            for cand in children(g) {
                let key = canonical_form(&cand).expect("enumeration stays under the canonical cap");
                next.entry(key.clone())
                    .or_insert_with(|| parse_graph6(&key).expect("canonical strings parse"));
            }
        }
        level = next.into_values().collect();
    }
    level
}

/// Every graph on n vertices, one per isomorphism class.
pub fn all_graphs(n: usize) -> Result<Vec<Graph>> {
    if n == 0 {
        return Err(Error::Argument("enumeration needs n >= 1".into()));
    }
    if n > ENUMERATION_MAX_N {
        return Err(Error::Size(format!(
            "built-in enumeration handles n <= {ENUMERATION_MAX_N}; ingest a graph6 stream for n = {n}"
        )));
    }
    Ok(augmented_level(n, &|g| {
        let k = g.n();
        let base = g.edges();
        (0..1u64 << k)
            .map(|mask| {
                let mut edges = base.clone();
                edges.extend(crate::graph::bits_of(mask).map(|v| (v, k)));
                Graph::from_edges(k + 1, &edges).expect("augmented graph is well-formed")
            })
            .collect()
    }))
}

/// Connected graphs on n vertices, one per isomorphism class.
pub fn connected_graphs(n: usize) -> Result<Vec<Graph>> {
    Ok(all_graphs(n)?.into_iter().filter(Graph::is_connected).collect())
}

/// The built-in census stream: connected graphs with minimum degree ≥ 3 on n
/// vertices, one per isomorphism class — the only graphs that can be
/// 4-critical.
pub fn enumerate_graphs(n: usize) -> Result<Vec<Graph>> {
    Ok(all_graphs(n)?
        .into_iter()
        .filter(|g| g.is_connected() && g.min_degree() >= Some(3))
        .collect())
}

/// Free trees on n vertices, one per isomorphism class: grown leaf by leaf,
/// since removing any leaf of a tree leaves a tree.
pub fn trees(n: usize) -> Result<Vec<Graph>> {
    if n == 0 {
        return Err(Error::Argument("enumeration needs n >= 1".into()));
    }
    if n > TREE_MAX_N {
        return Err(Error::Size(format!("built-in tree enumeration handles n <= {TREE_MAX_N}")));
    }
    Ok(augmented_level(n, &|g| {
        let k = g.n();
        let base = g.edges();
        (0..k)
            .map(|v| {
                let mut edges = base.clone();
                edges.push((v, k));
                Graph::from_edges(k + 1, &edges).expect("leaf attachment is well-formed")
            })
            .collect()
    }))
}

/// Parse a file of graph6 lines. Blank lines and an optional `>>graph6<<`
/// header are skipped; any malformed line fails with its 1-based line number.
pub fn ingest_graph6_stream(path: &Path) -> Result<Vec<Graph>> {
    let file = std::fs::File::open(path)?;
    ingest_graph6_lines(std::io::BufReader::new(file))
}

/// Reader-based form of [`ingest_graph6_stream`].
pub fn ingest_graph6_lines<R: BufRead>(reader: R) -> Result<Vec<Graph>> {
    let mut out = Vec::new();
    for (idx, line) in reader.lines().enumerate() {
        let line = line?;
        let mut s = line.trim();
        if let Some(rest) = s.strip_prefix(">>graph6<<") {
            s = rest.trim();
        }
        if s.is_empty() {
            continue;
        }
        match parse_graph6(s) {
            Ok(g) => out.push(g),
            Err(e) => return Err(Error::ParseLine { line: idx + 1, msg: e.to_string() }),
        }
    }
    Ok(out)
}

/// Keep exactly the 4-critical graphs, in input order.
pub fn filter_4_critical(graphs: &[Graph]) -> Vec<Graph> {
    graphs.iter().filter(|g| is_k_critical(g, 4)).cloned().collect()
}

/// Second-opinion criticality oracle sharing no code with the production
/// path: chromatic facts come from plain odometer sweeps over all k^n
/// assignments, and criticality checks every edge AND vertex deletion
/// directly. Exponential — meant for n ≤ 6 cross-checks.
pub fn naive_is_4_critical(g: &Graph) -> bool {
    if g.n() < 4 {
        return false;
    }
    if naive_k_colorable(g, 3) || !naive_k_colorable(g, 4) {
        return false;
    }
    for (u, v) in g.edges() {
        let deleted = g.delete_edge(u, v).expect("edge exists");
        if !naive_k_colorable(&deleted, 3) {
            return false;
        }
    }
    for v in 0..g.n() {
        let mut keep = g.vertex_set();
        keep.remove(v);
        let (sub, _) = g.induced(&keep).expect("keep is in range");
        if !naive_k_colorable(&sub, 3) {
            return false;
        }
    }
    true
}

fn naive_k_colorable(g: &Graph, k: usize) -> bool {
    let n = g.n();
    let edges = g.edges();
    let mut assign = vec![0usize; n];
    loop {
        if edges.iter().all(|&(u, v)| assign[u] != assign[v]) {
            return true;
        }
        let mut i = 0;
        loop {
            if i == n {
                return false;
            }
            assign[i] += 1;
            if assign[i] < k {
                break;
            }
            assign[i] = 0;
            i += 1;
        }
    }
}

/// A counterexample: the offending graph (as graph6, so any report line is
/// independently reproducible) plus what went wrong.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Failure {
    pub graph6: String,
    pub reason: String,
}

impl Failure {
    fn of(g: &Graph, reason: impl Into<String>) -> Failure {
        Failure {
            graph6: to_graph6(g).expect("census graphs encode"),
            reason: reason.into(),
        }
    }
}

/// One theorem's verdict; `pass` ⟺ the failure list is empty. `skipped`
/// counts graphs the theorem's hypothesis exempts (never failures).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckSection {
    pub name: &'static str,
    pub pass: bool,
    pub failures: Vec<Failure>,
    pub skipped: usize,
}

impl CheckSection {
    fn new(name: &'static str, failures: Vec<Failure>, skipped: usize) -> CheckSection {
        CheckSection { name, pass: failures.is_empty(), failures, skipped }
    }

    pub fn to_json(&self) -> Value {
        json!({
            "name": self.name,
            "pass": self.pass,
            "failures": self
                .failures
                .iter()
                .map(|f| json!({"graph6": f.graph6, "reason": f.reason}))
                .collect::<Vec<Value>>(),
            "skipped": self.skipped,
        })
    }
}

/// Which verification sections a census run executes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CheckSet {
    pub main: bool,
    pub bounds: bool,
    pub structure: bool,
    pub potential: bool,
}

impl CheckSet {
    pub fn all() -> CheckSet {
        CheckSet { main: true, bounds: true, structure: true, potential: true }
    }

    /// Parse a CSV of section names (`main,bounds,structure,potential`).
    pub fn parse(csv: &str) -> Result<CheckSet> {
        let mut set = CheckSet { main: false, bounds: false, structure: false, potential: false };
        for item in csv.split(',') {
            match item.trim() {
                "main" => set.main = true,
                "bounds" => set.bounds = true,
                "structure" => set.structure = true,
                "potential" => set.potential = true,
                other => {
                    return Err(Error::Argument(format!(
                        "unknown check '{other}' (expected main, bounds, structure, potential)"
                    )))
                }
            }
        }
        Ok(set)
    }
}

/// The machine-readable outcome of a census run.
#[derive(Clone, Debug)]
pub struct CensusReport {
    /// Smallest and largest vertex count in the scanned stream; (0, 0) for an
    /// empty stream.
    pub n_range: (usize, usize),
    pub scanned: usize,
    pub critical: usize,
    /// 4-critical graphs with Ore-degree ≤ 7.
    pub ore_degree_le_7: usize,
    /// 4-critical graphs recognized as 4-Ore.
    pub four_ore: usize,
    pub sections: Vec<CheckSection>,
    pub elapsed_ms: u128,
}

impl CensusReport {
    pub fn pass(&self) -> bool {
        self.sections.iter().all(|s| s.pass)
    }

    /// JSON document; identical inputs give byte-identical output except for
    /// the `elapsed_ms` timing field.
    pub fn to_json(&self) -> Value {
        json!({
            "schema": "ore-lab/1",
            "n_range": [self.n_range.0, self.n_range.1],
            "counts": {
                "scanned": self.scanned,
                "critical": self.critical,
                "ore_degree_le_7": self.ore_degree_le_7,
                "four_ore": self.four_ore,
            },
            "checks": self.sections.iter().map(CheckSection::to_json).collect::<Vec<Value>>(),
            "pass": self.pass(),
            "elapsed_ms": self.elapsed_ms,
        })
    }

    pub fn human_summary(&self) -> String {
        let mut out = format!(
            "census n={}..{}: scanned {}, 4-critical {} (Ore-degree <= 7: {}, 4-Ore: {})\n",
            self.n_range.0,
            self.n_range.1,
            self.scanned,
            self.critical,
            self.ore_degree_le_7,
            self.four_ore
        );
        for s in &self.sections {
            if s.pass {
                out.push_str(&format!("  {}: PASS", s.name));
            } else {
                out.push_str(&format!("  {}: FAIL ({} failures)", s.name, s.failures.len()));
            }
            if s.skipped > 0 {
                out.push_str(&format!(" [{} exempt]", s.skipped));
            }
            out.push('\n');
            for f in &s.failures {
                out.push_str(&format!("    {}: {}\n", f.graph6, f.reason));
            }
        }
        out.push_str(&format!(
            "result: {} ({} ms)\n",
            if self.pass() { "PASS" } else { "FAIL" },
            self.elapsed_ms
        ));
        out
    }
}

/// Run `f(i)` for every index, fanned out over `jobs` worker threads pulling
/// from a shared queue; results come back in index order regardless of
/// scheduling.
fn parallel_map<T: Send, F: Fn(usize) -> T + Sync>(len: usize, jobs: usize, f: F) -> Vec<T> {
    let jobs = jobs.max(1).min(len.max(1));
    if jobs <= 1 {
        return (0..len).map(f).collect();
    }
    let next = AtomicUsize::new(0);
    let mut shards: Vec<Vec<(usize, T)>> = std::thread::scope(|scope| {
        let handles: Vec<_> = (0..jobs)
            .map(|_| {
                scope.spawn(|| {
                    let mut out = Vec::new();
                    loop {
                        let i = next.fetch_add(1, Ordering::Relaxed);
                        if i >= len {
                            return out;
                        }
                        out.push((i, f(i)));
                    }
                })
            })
            .collect();
        handles.into_iter().map(|h| h.join().expect("census worker")).collect()
    });
    let mut indexed: Vec<(usize, T)> = shards.drain(..).flatten().collect();
    indexed.sort_by_key(|&(i, _)| i);
    indexed.into_iter().map(|(_, t)| t).collect()
}

/// Theorem check: every 4-critical graph of Ore-degree ≤ 7 is 4-Ore, and —
/// cross-indexed by canonical form — every exhaustively generated 4-Ore graph
/// of Ore-degree ≤ 7 with matching vertex count appears in the stream.
pub fn verify_main_theorem(criticals: &[Graph], n_range: (usize, usize)) -> CheckSection {
    let mut failures = Vec::new();
    let mut skipped = 0;
    for g in criticals {
        if g.ore_degree().map_or(false, |d| d <= 7) && is_4_ore(g).is_none() {
            failures.push(Failure::of(g, "4-critical with Ore-degree <= 7 but not recognized as 4-Ore"));
        }
    }
    let mut index: BTreeSet<String> = BTreeSet::new();
    for g in criticals {
        match canonical_form(g) {
            Ok(c) => {
                index.insert(c);
            }
            Err(_) => skipped += 1,
        }
    }
    // Generation beyond n = 13 is out of desk scale; streams that large are
    // checked in the forward direction only.
    let gen_cap = n_range.1.min(13);
    if gen_cap >= 4 {
        for (g, _) in generate_4_ore(gen_cap).expect("desk-scale generation") {
            if g.n() < n_range.0 || g.ore_degree().map_or(true, |d| d > 7) {
                continue;
            }
            match canonical_form(&g) {
                Ok(c) => {
                    if !index.contains(&c) {
                        failures.push(Failure::of(
                            &g,
                            "4-Ore graph with Ore-degree <= 7 missing from the 4-critical stream",
                        ));
                    }
                }
                Err(_) => skipped += 1,
            }
        }
    }
    CheckSection::new("main-theorem", failures, skipped)
}

/// Edge bounds: 3|E| ≥ 5n − 2 always, and the sharper
/// 5|E| ≥ 8n + α(D₃) − 3 (4-Ore) / − 2 (otherwise).
pub fn verify_bounds(criticals: &[Graph]) -> CheckSection {
    let mut failures = Vec::new();
    for g in criticals {
        let n = g.n() as i64;
        let m = g.edge_count() as i64;
        if 3 * m < 5 * n - 2 {
            failures.push(Failure::of(g, format!("3|E| = {} < 5n-2 = {}", 3 * m, 5 * n - 2)));
        }
        let alpha = g.alpha_in(&g.d3_set()).expect("d3 is in range") as i64;
        let slack = if is_4_ore(g).is_some() { 3 } else { 2 };
        if 5 * m < 8 * n + alpha - slack {
            failures.push(Failure::of(
                g,
                format!("5|E| = {} < 8n+alpha(D3)-{} = {}", 5 * m, slack, 8 * n + alpha - slack),
            ));
        }
    }
    CheckSection::new("bounds", failures, 0)
}

/// Structure: every Ore-degree-≤7 4-critical graph contains a diamond and
/// lands in one of the three diamond-lemma cases; others are exempt.
pub fn verify_structure(criticals: &[Graph]) -> CheckSection {
    let mut failures = Vec::new();
    let mut skipped = 0;
    for g in criticals {
        if g.ore_degree().map_or(true, |d| d > 7) {
            skipped += 1;
            continue;
        }
        if diamonds(g).is_empty() {
            failures.push(Failure::of(g, "no diamond"));
            continue;
        }
        if diamond_case(g).is_none() {
            failures.push(Failure::of(g, "no diamond-lemma case applies"));
        }
    }
    CheckSection::new("structure", failures, skipped)
}

/// The 4-Ore side of the potential suite, on a generated
/// (graph, certificate) stream: p ≤ 1.8, the composition inequality
/// p(G) ≤ p(G₁) + p(G₂) − 1.8 along every certificate node, certificate
/// replay isomorphism, and — for the p = 1.8 graphs — every maximum
/// independent set of D₃ meets every closed neighborhood.
pub fn ore_suite_failures(generated: &[(Graph, OreCertificate)]) -> Vec<Failure> {
    let mut failures = Vec::new();
    for (g, cert) in generated {
        let p = graph_potential(g).expect("nonempty graph");
        if p > Scaled(9) {
            failures.push(Failure::of(g, format!("4-Ore potential {} exceeds 9 (scaled)", p.0)));
        }
        match cert.replay() {
            Ok(replayed) if are_isomorphic(&replayed, g) => {}
            _ => failures.push(Failure::of(g, "certificate replay is not isomorphic to the graph")),
        }
        let mut comp_ok = true;
        let _ = cert.replay_visit(&mut |g1, g2, comp| {
            let pg = graph_potential(&comp.graph).expect("nonempty");
            let p1 = graph_potential(g1).expect("nonempty");
            let p2 = graph_potential(g2).expect("nonempty");
            if pg.0 > p1.0 + p2.0 - 9 {
                comp_ok = false;
            }
        });
        if !comp_ok {
            failures.push(Failure::of(g, "a composition step gained more potential than p1+p2-9"));
        }
        if p == Scaled(9) {
            let max_sets =
                g.maximum_independent_sets_in(&g.d3_set()).expect("d3 is in range");
            'vertices: for v in 0..g.n() {
                let closed = g.neighbor_set(v).union(&VertexSet::single(g.n(), v));
                for s in &max_sets {
                    if s.intersect(&closed).is_empty() {
                        failures.push(Failure::of(
                            g,
                            format!(
                                "maximum independent set {:?} of D3 avoids the closed neighborhood of {v}",
                                s.to_vec()
                            ),
                        ));
                        break 'vertices;
                    }
                }
            }
        }
    }
    failures
}

/// Both directions of the collapsibility ⟺ extension characterization on one
/// 4-critical graph, over every R with 4 ≤ |R| ≤ n−1: R is collapsible
/// exactly when all of its critical extensions are total with a core of size
/// one. The cheap boundary-based collapsibility verdict comes first; the
/// extension stream stops at the first violating record.
pub fn prop_coll_failures(g: &Graph) -> Vec<Failure> {
    let n = g.n();
    let mut failures = Vec::new();
    if n < 5 {
        return failures;
    }
    for mask in 1..low_mask(n) {
        let card = mask.count_ones() as usize;
        if card < 4 || card > n - 1 {
            continue;
        }
        let r = VertexSet::from_bits(n, mask).expect("mask in range");
        let coll = collapsible_unchecked(g, &r);
        let mut violated = false;
        for_each_extension(g, &r, true, &mut |rec| {
            if rec.total() && rec.core_size() == 1 {
                true
            } else {
                violated = true;
                false
            }
        })
        .expect("proper subsets of a 4-critical graph admit extensions");
        if coll && violated {
            failures.push(Failure::of(
                g,
                format!(
                    "collapsible R = {:?} has a critical extension that is not total with core size one",
                    r.to_vec()
                ),
            ));
        }
        if !coll && !violated {
            failures.push(Failure::of(
                g,
                format!("non-collapsible R = {:?} has only total core-one extensions", r.to_vec()),
            ));
        }
    }
    failures
}

/// Per-graph potential-suite checks for one 4-critical census graph: the
/// identity p(V) = 3·s(D₃) (scaled) when the Ore-degree is ≤ 7, then the
/// collapsibility characterization.
pub fn critical_potential_failures(g: &Graph) -> Vec<Failure> {
    let mut failures = Vec::new();
    if g.ore_degree().map_or(false, |d| d <= 7) {
        let (d3g, _) = g.d3_subgraph();
        let want = Scaled(3 * s_value(&d3g));
        let got = graph_potential(g).expect("nonempty graph");
        if got != want {
            failures.push(Failure::of(
                g,
                format!("p(V) = {} but 3*s(D3) = {} (scaled)", got.0, want.0),
            ));
        }
    }
    failures.extend(prop_coll_failures(g));
    failures
}

/// The potential property suite over both streams (see
/// [`ore_suite_failures`] and [`critical_potential_failures`]).
pub fn verify_potential_suite(
    criticals: &[Graph],
    generated: &[(Graph, OreCertificate)],
    jobs: usize,
) -> CheckSection {
    let mut failures = ore_suite_failures(generated);
    let per_graph = parallel_map(criticals.len(), jobs, |i| critical_potential_failures(&criticals[i]));
    failures.extend(per_graph.into_iter().flatten());
    CheckSection::new("potential", failures, 0)
}

/// Run the selected checks over a stream of graphs.
pub fn run_census(stream: &[Graph], checks: CheckSet, jobs: usize) -> CensusReport {
    let start = Instant::now();
    let n_range = match (stream.iter().map(Graph::n).min(), stream.iter().map(Graph::n).max()) {
        (Some(lo), Some(hi)) => (lo, hi),
        _ => (0, 0),
    };
    let flags = parallel_map(stream.len(), jobs, |i| is_k_critical(&stream[i], 4));
    let criticals: Vec<Graph> = stream
        .iter()
        .zip(&flags)
        .filter(|&(_, &c)| c)
        .map(|(g, _)| g.clone())
        .collect();
    let ore_degree_le_7 =
        criticals.iter().filter(|g| g.ore_degree().map_or(false, |d| d <= 7)).count();
    let four_ore = criticals.iter().filter(|g| is_4_ore(g).is_some()).count();

    let mut sections = Vec::new();
    if checks.main {
        sections.push(verify_main_theorem(&criticals, n_range));
    }
    if checks.bounds {
        sections.push(verify_bounds(&criticals));
    }
    if checks.structure {
        sections.push(verify_structure(&criticals));
    }
    if checks.potential {
        let gen_cap = n_range.1.clamp(4, 13);
        let generated = generate_4_ore(gen_cap).expect("desk-scale generation");
        sections.push(verify_potential_suite(&criticals, &generated, jobs));
    }

    CensusReport {
        n_range,
        scanned: stream.len(),
        critical: criticals.len(),
        ore_degree_le_7,
        four_ore,
        sections,
        elapsed_ms: start.elapsed().as_millis(),
    }
}

/// Built-in census for one vertex count.
pub fn census_for_n(n: usize, checks: CheckSet, jobs: usize) -> Result<CensusReport> {
    let stream = enumerate_graphs(n)?;
    Ok(run_census(&stream, checks, jobs))
}
