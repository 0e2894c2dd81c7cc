//! φ-identification, critical extensions, degree-three reductions, and
//! identifiable pairs.
//!
//! For a 4-critical host G, a proper subset R (|R| ≥ 4) and a 3-coloring φ of
//! G[R], the φ-identification G_φ(R) merges each color class to a vertex xᵢ
//! and adds the triangle x₁x₂x₃. Any 4-critical subgraph W of G_φ(R) — the
//! *extender* — yields the critical extension R′ = (W−T) ∪ R with *core*
//! W ∩ T. Degree-three reductions delete a degree-3 vertex and identify two
//! of its non-adjacent neighbors, then extract a 4-critical subgraph of the
//! result the same way.

use std::collections::{BTreeSet, HashSet};

use serde_json::{json, Value};

use crate::coloring::{enumerate_colorings, find_coloring, is_k_critical, Coloring};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::potential::{graph_potential, potential};
use crate::scaled::Scaled;

fn three_colorable(g: &Graph) -> bool {
    find_coloring(g, 3, None).is_some()
}

/// Merge the classes of `phi` (a proper ≤3-coloring of G[r]) into x₁, x₂, x₃
/// and add the triangle. Outside vertices keep their relative order as labels
/// `0..n−|r|`; the xᵢ take the last three labels, returned in order. Unused
/// classes still yield their (triangle-only) xᵢ.
pub fn phi_identification(
    g: &Graph,
    r: &VertexSet,
    phi: &Coloring,
) -> Result<(Graph, [usize; 3])> {
    if r.space() != g.n() {
        return Err(Error::Argument("subset over a different label space".into()));
    }
    if r.card() < 4 || r.card() == g.n() {
        return Err(Error::Argument(format!(
            "identification needs a proper subset with at least 4 vertices; got |r| = {}",
            r.card()
        )));
    }
    if phi.domain() != *r {
        return Err(Error::Argument("coloring domain differs from r".into()));
    }
    if r.iter().any(|v| phi.color(v) > 3) {
        return Err(Error::Argument("identification uses at most 3 colors".into()));
    }
    if !phi.is_proper(g) {
        return Err(Error::Argument("coloring is not proper on G[r]".into()));
    }
    let outside = r.complement().to_vec();
    let n_out = outside.len();
    let t = [n_out, n_out + 1, n_out + 2];
    let classes = phi.classes(3);
    let mut edges: Vec<(usize, usize)> = Vec::new();
    for (i, &u) in outside.iter().enumerate() {
        for (j, &w) in outside.iter().enumerate().skip(i + 1) {
            if g.has_edge(u, w) {
                edges.push((i, j));
            }
        }
        for (c, class) in classes.iter().enumerate() {
            if g.row(u) & class.bits() != 0 {
                edges.push((i, t[c]));
            }
        }
    }
    edges.extend([(t[0], t[1]), (t[0], t[2]), (t[1], t[2])]);
    Ok((Graph::from_edges(n_out + 3, &edges)?, t))
}

/// One edge-minimal non-3-colorable subgraph of a non-3-colorable graph,
/// found by a single deletion pass over the edges in lexicographic order.
/// Edge-minimality plus support restriction makes the result 4-critical.
fn greedy_minimal(g: &Graph) -> Graph {
    debug_assert!(!three_colorable(g));
    let mut w = g.clone();
    for (u, v) in g.edges() {
        let cand = w.delete_edge(u, v).expect("edge survives prior deletions");
        if !three_colorable(&cand) {
            w = cand;
        }
    }
    w
}

/// Every edge-minimal non-3-colorable subgraph of `g` (as graphs on `g`'s
/// label space), deterministically ordered. Explores the deletion lattice
/// with memoization on edge masks.
fn all_minimal(g: &Graph) -> Vec<Graph> {
    let edges = g.edges();
    let m = edges.len();
    assert!(m <= 128, "edge-mask exploration capped at 128 edges");
    let build = |mask: u128| -> Graph {
        let chosen: Vec<(usize, usize)> = edges
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &e)| e)
            .collect();
        Graph::from_edges(g.n(), &chosen).expect("subset of known-good edges")
    };
    let full: u128 = if m == 128 { u128::MAX } else { (1u128 << m) - 1 };
    debug_assert!(!three_colorable(g));
    let mut seen: HashSet<u128> = HashSet::new();
    let mut minimal: BTreeSet<u128> = BTreeSet::new();
    let mut stack = vec![full];
    while let Some(mask) = stack.pop() {
        if !seen.insert(mask) {
            continue;
        }
        let mut is_minimal = true;
        for i in 0..m {
            if mask >> i & 1 == 0 {
                continue;
            }
            let sub = mask & !(1u128 << i);
            if !three_colorable(&build(sub)) {
                is_minimal = false;
                if !seen.contains(&sub) {
                    stack.push(sub);
                }
            }
        }
        if is_minimal {
            minimal.insert(mask);
        }
    }
    minimal.into_iter().map(build).collect()
}

/// Restrict to the vertices of positive degree, relabeling compactly in
/// ascending order. Returns the standalone graph and, per standalone label,
/// the ambient label.
fn restrict_to_support(w: &Graph) -> (Graph, Vec<usize>) {
    let support: Vec<usize> = (0..w.n()).filter(|&v| w.degree(v) > 0).collect();
    let keep = VertexSet::from_slice(w.n(), &support).expect("labels in range");
    let (sub, _) = w.induced(&keep).expect("subset of V");
    (sub, support)
}

/// A critical extension of `r`: the extender W (standalone, with its
/// embedding into G_φ(r)), the extension R′, and its classification.
#[derive(Clone, Debug)]
pub struct ExtensionRecord {
    pub host: Graph,
    pub r: VertexSet,
    /// Classes of the generating φ, indexed by color; possibly empty.
    pub phi_classes: [VertexSet; 3],
    /// The extender as a standalone 4-critical graph.
    pub extender: Graph,
    /// Standalone extender label → G_φ(r) label.
    pub embedding: Vec<usize>,
    /// Triangle labels x₁, x₂, x₃ in G_φ(r).
    pub t: [usize; 3],
    /// Color indices (1..=3) whose xᵢ lies in W.
    pub core: Vec<u8>,
    pub r_prime: VertexSet,
    pub complete: bool,
    pub spanning: bool,
}

impl ExtensionRecord {
    pub fn core_size(&self) -> usize {
        self.core.len()
    }

    pub fn total(&self) -> bool {
        self.complete && self.spanning
    }

    /// JSON view with fixed field names.
    pub fn to_json(&self) -> Value {
        let partition: Vec<Vec<usize>> = self
            .phi_classes
            .iter()
            .filter(|c| !c.is_empty())
            .map(|c| c.to_vec())
            .collect();
        json!({
            "r": self.r.to_vec(),
            "phi_partition": partition,
            "extender_g6": crate::graph6::to_graph6(&self.extender).expect("small graph"),
            "core_size": self.core_size(),
            "complete": self.complete,
            "spanning": self.spanning,
            "total": self.total(),
        })
    }
}

/// The potential inequality every critical extension satisfies:
/// p(R′) ≤ p(R) + p(W) − 4.8/6.6/5.4 for core size 1/2/3, strengthened to
/// −7.8 when the extension is incomplete.
pub fn check_extform(rec: &ExtensionRecord) -> bool {
    let pr = potential(&rec.host, &rec.r).expect("record fields are consistent");
    let prp = potential(&rec.host, &rec.r_prime).expect("record fields are consistent");
    let pw = graph_potential(&rec.extender).expect("non-empty extender");
    let core_drop = match rec.core_size() {
        1 => 24,
        2 => 33,
        3 => 27,
        k => panic!("core size {k} out of range"),
    };
    let drop = if rec.complete { core_drop } else { core_drop.max(39) };
    prp <= Scaled(pr.0 + pw.0 - drop)
}

fn validate_extension_args(g: &Graph, r: &VertexSet) -> Result<()> {
    if r.space() != g.n() {
        return Err(Error::Argument("subset over a different label space".into()));
    }
    if !is_k_critical(g, 4) {
        return Err(Error::Argument(
            "critical extensions are defined in 4-critical hosts".into(),
        ));
    }
    if r.card() < 4 || r.card() == g.n() {
        return Err(Error::Argument(format!(
            "extensions need a proper subset with at least 4 vertices; got |r| = {}",
            r.card()
        )));
    }
    let (sub, _) = g.induced(r).expect("validated");
    if !three_colorable(&sub) {
        return Err(Error::Argument("G[r] must be 3-colorable".into()));
    }
    Ok(())
}

/// Stream the critical extensions of `r` to `visit`, one record per
/// φ-class-partition of G[r] (and per minimal extender when `all_extenders`
/// is set); stop early when `visit` returns false.
pub fn for_each_extension(
    g: &Graph,
    r: &VertexSet,
    all_extenders: bool,
    visit: &mut impl FnMut(&ExtensionRecord) -> bool,
) -> Result<()> {
    validate_extension_args(g, r)?;
    let outside = r.complement().to_vec();
    let mut seen_partitions: BTreeSet<Vec<u64>> = BTreeSet::new();
    for phi in enumerate_colorings(g, 3, *r) {
        let classes = phi.classes(3);
        let mut key: Vec<u64> =
            classes.iter().map(|c| c.bits()).filter(|&b| b != 0).collect();
        key.sort_unstable();
        if !seen_partitions.insert(key) {
            continue;
        }
        let (gphi, t) = phi_identification(g, r, &phi)?;
        assert!(
            !three_colorable(&gphi),
            "identifications in a 4-critical host have chromatic number at least 4"
        );
        let extenders = if all_extenders {
            all_minimal(&gphi)
        } else {
            vec![greedy_minimal(&gphi)]
        };
        for w_amb in extenders {
            let (extender, embedding) = restrict_to_support(&w_amb);
            debug_assert!(is_k_critical(&extender, 4));
            let core: Vec<u8> = (0..3u8)
                .filter(|&i| w_amb.degree(t[i as usize]) > 0)
                .map(|i| i + 1)
                .collect();
            assert!(!core.is_empty(), "every critical extension has a non-empty core");
            let t_bits: u64 = t.iter().map(|&x| 1u64 << x).sum();
            let wmt: Vec<usize> = embedding
                .iter()
                .copied()
                .filter(|&x| t_bits >> x & 1 == 0)
                .collect();
            let mut r_prime = *r;
            for &x in &wmt {
                r_prime.insert(outside[x]);
            }
            let mut complete = true;
            'outer: for &x in &wmt {
                let host_u = outside[x];
                let in_r = (g.row(host_u) & r.bits()).count_ones() as usize;
                let to_core = (w_amb.row(x) & t_bits).count_ones() as usize;
                if in_r > to_core {
                    complete = false;
                    break;
                }
                for &y in &wmt {
                    if y > x && gphi.has_edge(x, y) && !w_amb.has_edge(x, y) {
                        complete = false;
                        break 'outer;
                    }
                }
            }
            let rec = ExtensionRecord {
                host: g.clone(),
                r: *r,
                phi_classes: [classes[0], classes[1], classes[2]],
                extender,
                embedding,
                t,
                core,
                r_prime,
                complete,
                spanning: r_prime.card() == g.n(),
            };
            debug_assert!(check_extform(&rec), "extension inequality violated");
            if !visit(&rec) {
                return Ok(());
            }
        }
    }
    Ok(())
}

/// All critical extensions of `r`, in deterministic order.
pub fn critical_extensions(
    g: &Graph,
    r: &VertexSet,
    all_extenders: bool,
) -> Result<Vec<ExtensionRecord>> {
    let mut out = Vec::new();
    for_each_extension(g, r, all_extenders, &mut |rec| {
        out.push(rec.clone());
        true
    })?;
    Ok(out)
}

/// A degree-three reduction: v deleted, u₁ and u₂ identified, and a
/// 4-critical subgraph K of the result with its expansion back in the host.
#[derive(Clone, Debug)]
pub struct ReductionRecord {
    pub host: Graph,
    pub v: usize,
    pub u1: usize,
    pub u2: usize,
    /// The third neighbor of v.
    pub u3: usize,
    /// The reduced graph (n − 2 vertices) and the u₁≡u₂ vertex's label in it.
    pub reduced: Graph,
    pub merged: usize,
    /// K as a standalone 4-critical graph, its vertex set in reduced labels,
    /// and the expansion R = (V(K) − merged) ∪ {v, u₁, u₂} in host labels.
    pub k: Graph,
    pub k_vertices: VertexSet,
    pub expansion: VertexSet,
}

impl ReductionRecord {
    /// JSON view with fixed field names.
    pub fn to_json(&self) -> Value {
        json!({
            "v": self.v,
            "u1": self.u1,
            "u2": self.u2,
            "u3": self.u3,
            "k_g6": crate::graph6::to_graph6(&self.k).expect("small graph"),
            "expansion": self.expansion.to_vec(),
        })
    }
}

/// Delete the degree-3 vertex `v` and identify its non-adjacent neighbors
/// `u1`, `u2`. The reduced graph of a 4-critical host is never 3-colorable
/// (asserted); K is extracted by the same greedy minimization as extenders
/// and always contains the merged vertex (asserted).
pub fn degree_three_reduction(
    g: &Graph,
    v: usize,
    u1: usize,
    u2: usize,
) -> Result<ReductionRecord> {
    if v >= g.n() || g.degree(v) != 3 {
        return Err(Error::Argument(format!("vertex {v} must have degree 3")));
    }
    if u1 == u2 || !g.has_edge(v, u1) || !g.has_edge(v, u2) {
        return Err(Error::Argument(
            "u1 and u2 must be distinct neighbors of v".into(),
        ));
    }
    if g.has_edge(u1, u2) {
        return Err(Error::Argument("u1 and u2 must be non-adjacent".into()));
    }
    let u3 = g
        .neighbor_set(v)
        .iter()
        .find(|&u| u != u1 && u != u2)
        .expect("v has three neighbors");
    let (h, map) = g.induced(&VertexSet::single(g.n(), v).complement())?;
    let pair = VertexSet::from_slice(
        h.n(),
        &[map[u1].expect("u1 != v"), map[u2].expect("u2 != v")],
    )?;
    let (reduced, idmap) = h.identify_vertices(&[pair], false)?;
    let merged = idmap[map[u1].unwrap()];
    assert!(
        !three_colorable(&reduced),
        "reductions of a 4-critical host are non-3-colorable"
    );
    let (k, support) = restrict_to_support(&greedy_minimal(&reduced));
    debug_assert!(is_k_critical(&k, 4));
    let k_vertices = VertexSet::from_slice(reduced.n(), &support)?;
    assert!(
        k_vertices.contains(merged),
        "the merged vertex lies in every 4-critical subgraph of the reduction"
    );
    let mut expansion = VertexSet::from_slice(g.n(), &[v, u1, u2])?;
    for w in 0..g.n() {
        if w == v || w == u1 || w == u2 {
            continue;
        }
        if k_vertices.contains(idmap[map[w].unwrap()]) {
            expansion.insert(w);
        }
    }
    Ok(ReductionRecord {
        host: g.clone(),
        v,
        u1,
        u2,
        u3,
        reduced,
        merged,
        k,
        k_vertices,
        expansion,
    })
}

/// Are `u`, `v` boundary vertices of `r` whose identification cannot be
/// 3-colored — that is, is G[r]+uv non-3-colorable?
pub fn is_identifiable_pair(g: &Graph, u: usize, v: usize, r: &VertexSet) -> Result<bool> {
    let boundary = g.boundary(r)?;
    if !boundary.contains(u) || !boundary.contains(v) || u == v {
        return Err(Error::Argument(
            "identifiable pairs are distinct boundary vertices of r".into(),
        ));
    }
    if g.has_edge(u, v) {
        return Err(Error::Argument("identifiable pairs are non-adjacent".into()));
    }
    let (sub, map) = g.induced(r).expect("validated by boundary");
    let joined = sub
        .add_edge(map[u].unwrap(), map[v].unwrap())
        .expect("checked non-adjacent");
    Ok(!three_colorable(&joined))
}
