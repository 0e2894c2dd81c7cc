//! Ore-compositions and the 4-Ore class.
//!
//! An Ore-composition deletes an edge `xy` of the edge-side graph, splits a
//! vertex `z` of the split-side graph into `z₁, z₂` (each keeping a non-empty
//! share of `N(z)`), and identifies `x ≡ z₁`, `y ≡ z₂`. A graph is 4-Ore if it
//! can be built from copies of K₄ by repeated Ore-compositions. This module
//! provides the composition with traced labels, the unique K₄∘K₄ graph H₇,
//! certified exhaustive/random generation, recognition by 2-separation
//! decomposition, diamond detection, and the uncollapsible vertex/split
//! predicates.

use std::collections::BTreeSet;

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::canon::{are_isomorphic, canonical_graph6, find_isomorphism};
use crate::collapse::collapsible_unchecked;
use crate::coloring::is_k_critical;
use crate::error::{Error, Result};
use crate::graph::{bits_of, low_mask, Graph, VertexSet};

/// The only base graph of the composition calculus.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum LeafKind {
    K4,
}

/// Replayable witness that a graph is 4-Ore.
///
/// Serializes as a JSON tree: `{"leaf":"K4"}` for leaves, otherwise
/// `{"edge_side":…, "xy":[a,b], "split_side":…, "z":c, "split":[[…],[…]]}`
/// with `xy` in the edge side's replayed labeling and `z`/`split` in the
/// split side's replayed labeling.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum OreCertificate {
    Leaf {
        leaf: LeafKind,
    },
    Node {
        edge_side: Box<OreCertificate>,
        xy: [usize; 2],
        split_side: Box<OreCertificate>,
        z: usize,
        split: [Vec<usize>; 2],
    },
}

impl OreCertificate {
    pub fn leaf() -> Self {
        OreCertificate::Leaf { leaf: LeafKind::K4 }
    }

    /// Vertex count of the replayed graph: leaves have 4, compositions
    /// combine as n₁ + n₂ − 1.
    pub fn order(&self) -> usize {
        match self {
            OreCertificate::Leaf { .. } => 4,
            OreCertificate::Node { edge_side, split_side, .. } => {
                edge_side.order() + split_side.order() - 1
            }
        }
    }

    /// Rebuild the certified graph. Deterministic: certificates produced by
    /// the generators replay to their graph exactly (label for label), while
    /// recognition certificates replay to an isomorphic copy.
    pub fn replay(&self) -> Result<Graph> {
        self.replay_visit(&mut |_, _, _| ())
    }

    /// Replay while reporting every composition performed, bottom-up:
    /// `visit(edge_side_graph, split_side_graph, composition)`.
    pub fn replay_visit(
        &self,
        visit: &mut impl FnMut(&Graph, &Graph, &Composition),
    ) -> Result<Graph> {
        match self {
            OreCertificate::Leaf { .. } => Ok(Graph::complete(4)),
            OreCertificate::Node { edge_side, xy, split_side, z, split } => {
                let g1 = edge_side.replay_visit(visit)?;
                let g2 = split_side.replay_visit(visit)?;
                let p1 = VertexSet::from_slice(g2.n(), &split[0])?;
                let p2 = VertexSet::from_slice(g2.n(), &split[1])?;
                let comp = ore_compose(&g1, (xy[0], xy[1]), &g2, *z, (&p1, &p2))?;
                visit(&g1, &g2, &comp);
                Ok(comp.graph)
            }
        }
    }
}

/// An Ore-composition together with where everything landed.
#[derive(Clone, Debug)]
pub struct Composition {
    pub graph: Graph,
    /// Edge-side label → composed label. `map1[x]` is the x≡z₁ merge.
    pub map1: Vec<usize>,
    /// Split-side label → composed label; `z` itself maps to the z₁ merge
    /// (= `x_pos`), the z₂ merge being `y_pos`.
    pub map2: Vec<usize>,
    pub x_pos: usize,
    pub y_pos: usize,
}

/// Compose `g1` (losing edge `xy`) with `g2` (split at `z` into the two parts
/// of `split`). Edge-side vertices keep their labels; split-side vertices
/// other than `z` follow in ascending order.
pub fn ore_compose(
    g1: &Graph,
    xy: (usize, usize),
    g2: &Graph,
    z: usize,
    split: (&VertexSet, &VertexSet),
) -> Result<Composition> {
    let (x, y) = xy;
    if !g1.has_edge(x, y) {
        return Err(Error::Argument(format!(
            "replaced edge ({x},{y}) is not an edge of the edge side"
        )));
    }
    let h1 = g1.delete_edge(x, y)?;
    let (h2, z1, z2) = g2.split_vertex(z, split.0, split.1)?;
    let n1 = g1.n();
    let mut edges = h1.edges();
    edges.extend(h2.edges().iter().map(|&(u, v)| (n1 + u, n1 + v)));
    let union = Graph::from_edges(n1 + h2.n(), &edges)?;
    let part_x = VertexSet::from_slice(union.n(), &[x, n1 + z1])?;
    let part_y = VertexSet::from_slice(union.n(), &[y, n1 + z2])?;
    let (graph, idmap) = union.identify_vertices(&[part_x, part_y], false)?;
    let map1: Vec<usize> = (0..n1).map(|v| idmap[v]).collect();
    let map2: Vec<usize> = (0..g2.n()).map(|v| idmap[n1 + v]).collect();
    let comp = Composition { x_pos: idmap[x], y_pos: idmap[y], graph, map1, map2 };
    debug_assert_eq!(comp.graph.n(), g1.n() + g2.n() - 1);
    debug_assert_eq!(comp.graph.edge_count(), g1.edge_count() + g2.edge_count() - 1);
    Ok(comp)
}

/// The unique Ore-composition of two K₄'s: 7 vertices, 11 edges. Vertex 0 is
/// its single degree-4 vertex; vertices 1–6 induce D₃.
pub fn h7() -> Graph {
    let k4 = Graph::complete(4);
    let p1 = VertexSet::from_slice(4, &[1, 2]).unwrap();
    let p2 = VertexSet::from_slice(4, &[3]).unwrap();
    ore_compose(&k4, (0, 1), &k4, 0, (&p1, &p2))
        .expect("fixed valid composition")
        .graph
}

fn ordered_edges(g: &Graph) -> Vec<(usize, usize)> {
    let mut out = Vec::with_capacity(2 * g.edge_count());
    for (u, v) in g.edges() {
        out.push((u, v));
        out.push((v, u));
    }
    out
}

/// Unordered splits of `N(z)` into two non-empty parts; the part holding the
/// smallest neighbor is listed first, so each {P₁,P₂} appears exactly once.
fn unordered_splits(g: &Graph, z: usize) -> Vec<(VertexSet, VertexSet)> {
    let nbrs = g.neighbor_set(z).to_vec();
    let d = nbrs.len();
    let mut out = Vec::new();
    if d < 2 {
        return out;
    }
    let full = (1u64 << d) - 1;
    let mut m = 1u64;
    while m < full {
        let mut p1 = VertexSet::empty(g.n());
        let mut p2 = VertexSet::empty(g.n());
        for (i, &u) in nbrs.iter().enumerate() {
            if m >> i & 1 == 1 {
                p1.insert(u);
            } else {
                p2.insert(u);
            }
        }
        out.push((p1, p2));
        m += 2; // odd masks keep nbrs[0] on the first side
    }
    out
}

/// All 4-Ore graphs with at most `max_n` vertices, one per isomorphism class,
/// each with a certificate that replays to it label-for-label. Orders grow as
/// 4, 7, 10, …; enumeration composes certified pieces over every (edge, z,
/// split) choice and deduplicates canonically, so cost climbs steeply with
/// `max_n` (13 takes minutes).
pub fn generate_4_ore(max_n: usize) -> Result<Vec<(Graph, OreCertificate)>> {
    if max_n > 64 {
        return Err(Error::Size(format!("generation capped at 64 vertices; got {max_n}")));
    }
    if max_n < 4 {
        return Ok(Vec::new());
    }
    let k4 = Graph::complete(4);
    let mut seen = BTreeSet::from([canonical_graph6(&k4)]);
    let mut levels: Vec<Vec<(Graph, OreCertificate)>> =
        vec![vec![(k4, OreCertificate::leaf())]];
    for lvl in 1..=(max_n - 4) / 3 {
        let mut fresh: Vec<(Graph, OreCertificate)> = Vec::new();
        for ia in 0..lvl {
            let ib = lvl - 1 - ia; // (4+3·ia) + (4+3·ib) − 1 = 4 + 3·lvl
            for (ga, ca) in &levels[ia] {
                for (gb, cb) in &levels[ib] {
                    for (x, y) in ordered_edges(ga) {
                        for z in 0..gb.n() {
                            for (p1, p2) in unordered_splits(gb, z) {
                                let comp = ore_compose(ga, (x, y), gb, z, (&p1, &p2))
                                    .expect("enumerated choices are valid");
                                if seen.insert(canonical_graph6(&comp.graph)) {
                                    let cert = OreCertificate::Node {
                                        edge_side: Box::new(ca.clone()),
                                        xy: [x, y],
                                        split_side: Box::new(cb.clone()),
                                        z,
                                        split: [p1.to_vec(), p2.to_vec()],
                                    };
                                    debug_assert_eq!(cert.replay().unwrap(), comp.graph);
                                    fresh.push((comp.graph, cert));
                                }
                            }
                        }
                    }
                }
            }
        }
        levels.push(fresh);
    }
    Ok(levels.into_iter().flatten().collect())
}

/// One uniformly-chosen-per-step random 4-Ore graph on `target_n` vertices:
/// starting from K₄, repeatedly compose with a fresh K₄ on a random side,
/// edge, split vertex, and neighbor split. The certificate replays to the
/// returned graph exactly.
pub fn random_4_ore<R: Rng>(target_n: usize, rng: &mut R) -> Result<(Graph, OreCertificate)> {
    if target_n < 4 || target_n % 3 != 1 {
        return Err(Error::Argument(format!(
            "4-Ore graphs exist only for n ≡ 1 (mod 3), n ≥ 4; got {target_n}"
        )));
    }
    if target_n > 62 {
        return Err(Error::Size(format!(
            "random composition supports up to 62 vertices; got {target_n}"
        )));
    }
    let mut g = Graph::complete(4);
    let mut cert = OreCertificate::leaf();
    while g.n() < target_n {
        let k4 = Graph::complete(4);
        let k4_cert = OreCertificate::leaf();
        let grown_is_edge_side = rng.gen_bool(0.5);
        let (ga, ca, gb, cb) = if grown_is_edge_side {
            (&g, &cert, &k4, &k4_cert)
        } else {
            (&k4, &k4_cert, &g, &cert)
        };
        let edges = ga.edges();
        let (mut x, mut y) = edges[rng.gen_range(0..edges.len())];
        if rng.gen_bool(0.5) {
            std::mem::swap(&mut x, &mut y);
        }
        let z = rng.gen_range(0..gb.n());
        let nbrs = gb.neighbor_set(z).to_vec();
        let mask = rng.gen_range(1..(1u64 << nbrs.len()) - 1);
        let mut p1 = VertexSet::empty(gb.n());
        let mut p2 = VertexSet::empty(gb.n());
        for (i, &u) in nbrs.iter().enumerate() {
            if mask >> i & 1 == 1 {
                p1.insert(u);
            } else {
                p2.insert(u);
            }
        }
        let comp = ore_compose(ga, (x, y), gb, z, (&p1, &p2))?;
        let node = OreCertificate::Node {
            edge_side: Box::new(ca.clone()),
            xy: [x, y],
            split_side: Box::new(cb.clone()),
            z,
            split: [p1.to_vec(), p2.to_vec()],
        };
        g = comp.graph;
        cert = node;
    }
    Ok((g, cert))
}

/// Recognize 4-Ore graphs: `Some(certificate)` (replaying to an isomorphic
/// copy) or `None`. Non-4-critical graphs are never 4-Ore; beyond K₄ the
/// search tries every 2-separation {a,b} with a,b non-adjacent, every way of
/// assigning its components to the edge/split sides, and recurses on the two
/// pieces (edge side plus the edge ab; split side with a,b re-identified).
pub fn is_4_ore(g: &Graph) -> Option<OreCertificate> {
    if g.n() == 4 && are_isomorphic(g, &Graph::complete(4)) {
        return Some(OreCertificate::leaf());
    }
    if !is_k_critical(g, 4) {
        return None;
    }
    if g.n() < 7 {
        // The smallest composite order is 4 + 4 − 1.
        return None;
    }
    let seps = g
        .two_separations()
        .expect("4-critical graphs are connected with n >= 4");
    for ((a, b), comps) in seps {
        if g.has_edge(a, b) {
            // Identification never creates the replaced edge, so a seam pair
            // is non-adjacent in any composition.
            continue;
        }
        let k = comps.len();
        for pick in 1..(1u64 << k) - 1 {
            let mut side_e = VertexSet::empty(g.n());
            let mut side_s = VertexSet::empty(g.n());
            for (i, c) in comps.iter().enumerate() {
                if pick >> i & 1 == 1 {
                    side_e = side_e.union(c);
                } else {
                    side_s = side_s.union(c);
                }
            }
            // The split vertex needs non-empty shares toward both a and b,
            // and a common neighbor on the split side would have carried a
            // parallel edge through the identification.
            let na_s = g.neighbor_set(a).intersect(&side_s);
            let nb_s = g.neighbor_set(b).intersect(&side_s);
            if na_s.is_empty() || nb_s.is_empty() || !na_s.intersect(&nb_s).is_empty() {
                continue;
            }
            let (n1, n2) = (side_e.card() + 2, side_s.card() + 1);
            if n1 % 3 != 1 || n2 % 3 != 1 {
                continue;
            }
            let mut keep_e = side_e;
            keep_e.insert(a);
            keep_e.insert(b);
            let (g1_cut, m1) = g.induced(&keep_e).expect("subset of V");
            let (a1, b1) = (m1[a].unwrap(), m1[b].unwrap());
            let g1 = g1_cut.add_edge(a1, b1).expect("seam pair is non-adjacent");
            let mut keep_s = side_s;
            keep_s.insert(a);
            keep_s.insert(b);
            let (g2_cut, m2) = g.induced(&keep_s).expect("subset of V");
            let pair =
                VertexSet::from_slice(g2_cut.n(), &[m2[a].unwrap(), m2[b].unwrap()]).unwrap();
            let (g2, idm) = g2_cut
                .identify_vertices(&[pair], false)
                .expect("seam pair is non-adjacent");
            let Some(c1) = is_4_ore(&g1) else { continue };
            let Some(c2) = is_4_ore(&g2) else { continue };
            // Move the surgery parameters into the labelings the certificates
            // replay to.
            let r1 = c1.replay().expect("certificates replay");
            let iso1 = find_isomorphism(&g1, &r1).expect("replay is isomorphic");
            let r2 = c2.replay().expect("certificates replay");
            let iso2 = find_isomorphism(&g2, &r2).expect("replay is isomorphic");
            let into_r2 = |u: usize| iso2[idm[m2[u].unwrap()]];
            let mut pa: Vec<usize> = na_s.iter().map(into_r2).collect();
            let mut pb: Vec<usize> = nb_s.iter().map(into_r2).collect();
            pa.sort_unstable();
            pb.sort_unstable();
            let cert = OreCertificate::Node {
                edge_side: Box::new(c1),
                xy: [iso1[a1], iso1[b1]],
                split_side: Box::new(c2),
                z: into_r2(a),
                split: [pa, pb],
            };
            debug_assert!(are_isomorphic(&cert.replay().unwrap(), g));
            return Some(cert);
        }
    }
    None
}

/// Does some subset of `within` (with ≥ 2 vertices, proper in `g`) collapse?
fn has_collapsible_subset(g: &Graph, within: u64) -> bool {
    let verts: Vec<usize> = bits_of(within).collect();
    let k = verts.len();
    let full = low_mask(g.n());
    for mask in 1u64..1 << k {
        if mask.count_ones() < 2 {
            continue;
        }
        let mut bits = 0u64;
        for (i, &v) in verts.iter().enumerate() {
            if mask >> i & 1 == 1 {
                bits |= 1u64 << v;
            }
        }
        if bits == full {
            continue;
        }
        let r = VertexSet::from_bits(g.n(), bits).unwrap();
        if collapsible_unchecked(g, &r) {
            return true;
        }
    }
    false
}

/// A vertex is uncollapsible when no collapsible set avoids it. Exhaustive
/// over subsets; meant for small hosts (n ≤ ~14). Errors unless the host is
/// 4-critical.
pub fn is_uncollapsible_vertex(g: &Graph, v: usize) -> Result<bool> {
    if v >= g.n() {
        return Err(Error::Argument(format!("vertex {v} out of range")));
    }
    if !is_k_critical(g, 4) {
        return Err(Error::Argument(
            "uncollapsible vertices are defined in 4-critical hosts".into(),
        ));
    }
    let rest = VertexSet::single(g.n(), v).complement();
    Ok(!has_collapsible_subset(g, rest.bits()))
}

/// A split of `v` is uncollapsible when the split graph contains no
/// collapsible set at all. Same exhaustive search, run in the split graph.
pub fn is_uncollapsible_split(
    g: &Graph,
    v: usize,
    split: (&VertexSet, &VertexSet),
) -> Result<bool> {
    if !is_k_critical(g, 4) {
        return Err(Error::Argument(
            "uncollapsible splits are defined in 4-critical hosts".into(),
        ));
    }
    let (gs, _, _) = g.split_vertex(v, split.0, split.1)?;
    Ok(!has_collapsible_subset(&gs, low_mask(gs.n())))
}

/// A K₄−e subgraph whose two adjacent degree-3 vertices (the internals) also
/// have degree 3 in the host; the other two vertices are the ends.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Diamond {
    pub internal: (usize, usize),
    pub ends: (usize, usize),
}

pub fn diamonds(g: &Graph) -> Vec<Diamond> {
    let mut out = Vec::new();
    for s1 in 0..g.n() {
        for s2 in s1 + 1..g.n() {
            if !g.has_edge(s1, s2) || g.degree(s1) != 3 || g.degree(s2) != 3 {
                continue;
            }
            let common: Vec<usize> = bits_of(g.row(s1) & g.row(s2)).collect();
            for i in 0..common.len() {
                for j in i + 1..common.len() {
                    out.push(Diamond { internal: (s1, s2), ends: (common[i], common[j]) });
                }
            }
        }
    }
    out
}

/// The structural trichotomy for 4-Ore graphs of Ore-degree ≤ 7: (1) the
/// graph is K₄ or H₇; (2) some diamond has both ends of degree 4; (3) some
/// diamond has one end of degree 4 and the other of degree 3 with a degree-4
/// neighbor. `None` when no case applies.
pub fn diamond_case(g: &Graph) -> Option<u8> {
    if are_isomorphic(g, &Graph::complete(4)) || are_isomorphic(g, &h7()) {
        return Some(1);
    }
    let ds = diamonds(g);
    if ds
        .iter()
        .any(|d| g.degree(d.ends.0) == 4 && g.degree(d.ends.1) == 4)
    {
        return Some(2);
    }
    for d in &ds {
        for (e4, e3) in [(d.ends.0, d.ends.1), (d.ends.1, d.ends.0)] {
            if g.degree(e4) == 4
                && g.degree(e3) == 3
                && bits_of(g.row(e3)).any(|w| g.degree(w) == 4)
            {
                return Some(3);
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn h7_shape() {
        let g = h7();
        assert_eq!(g.n(), 7);
        assert_eq!(g.edge_count(), 11);
        let mut degs: Vec<usize> = (0..7).map(|v| g.degree(v)).collect();
        assert_eq!(degs.remove(0), 4);
        assert!(degs.iter().all(|&d| d == 3));
        assert_eq!(g.ore_degree(), Some(7));
        assert!(is_k_critical(&g, 4));
    }

    #[test]
    fn composition_bookkeeping() {
        let k4 = Graph::complete(4);
        let p1 = VertexSet::from_slice(4, &[1]).unwrap();
        let p2 = VertexSet::from_slice(4, &[2, 3]).unwrap();
        let comp = ore_compose(&k4, (2, 3), &k4, 0, (&p1, &p2)).unwrap();
        assert_eq!(comp.graph.n(), 7);
        assert_eq!(comp.graph.edge_count(), 11);
        assert_eq!(comp.x_pos, 2);
        assert_eq!(comp.y_pos, 3);
        // x keeps its old edges minus xy plus the p1 share.
        assert!(!comp.graph.has_edge(comp.x_pos, comp.y_pos));
        assert_eq!(comp.graph.degree(comp.x_pos), 3);
        assert_eq!(comp.graph.degree(comp.y_pos), 4);
        // map2: z joins x's merge, others shift past the edge side.
        assert_eq!(comp.map2[0], comp.x_pos);
        assert_eq!(&comp.map2[1..], &[4, 5, 6]);

        let bad_edge = ore_compose(&k4, (0, 0), &k4, 0, (&p1, &p2));
        assert!(bad_edge.is_err());
        let bad_split = ore_compose(&k4, (0, 1), &k4, 0, (&p1, &p1));
        assert!(bad_split.is_err());
    }

    #[test]
    fn k4_composition_is_unique() {
        // Every valid (xy, z, split) choice over two K₄'s lands on H₇.
        let k4 = Graph::complete(4);
        let want = canonical_graph6(&h7());
        let mut count = 0;
        for (x, y) in ordered_edges(&k4) {
            for z in 0..4 {
                for (p1, p2) in unordered_splits(&k4, z) {
                    let comp = ore_compose(&k4, (x, y), &k4, z, (&p1, &p2)).unwrap();
                    assert_eq!(canonical_graph6(&comp.graph), want);
                    count += 1;
                }
            }
        }
        assert_eq!(count, 12 * 4 * 3);
    }

    #[test]
    fn certificate_json_round_trip() {
        let leaf = OreCertificate::leaf();
        assert_eq!(serde_json::to_string(&leaf).unwrap(), r#"{"leaf":"K4"}"#);
        let node = OreCertificate::Node {
            edge_side: Box::new(leaf.clone()),
            xy: [0, 1],
            split_side: Box::new(leaf.clone()),
            z: 0,
            split: [vec![1, 2], vec![3]],
        };
        let json = serde_json::to_string(&node).unwrap();
        assert!(json.contains(r#""xy":[0,1]"#), "{json}");
        let back: OreCertificate = serde_json::from_str(&json).unwrap();
        assert_eq!(back, node);
        assert_eq!(back.replay().unwrap(), h7());
        assert_eq!(back.order(), 7);
    }

    #[test]
    fn exhaustive_generation_small_levels() {
        let level4 = generate_4_ore(4).unwrap();
        assert_eq!(level4.len(), 1);
        assert_eq!(level4[0].1, OreCertificate::leaf());

        let upto7 = generate_4_ore(7).unwrap();
        assert_eq!(upto7.len(), 2);
        assert!(are_isomorphic(&upto7[1].0, &h7()));

        let upto10 = generate_4_ore(10).unwrap();
        assert!(upto10.len() > 2);
        for (g, cert) in &upto10 {
            assert_eq!(&cert.replay().unwrap(), g);
            assert!(is_k_critical(g, 4), "{g:?}");
            assert_eq!(g.edge_count() * 3, 5 * g.n() - 2);
        }
        // No two emitted graphs are isomorphic.
        let canon: BTreeSet<String> =
            upto10.iter().map(|(g, _)| canonical_graph6(g)).collect();
        assert_eq!(canon.len(), upto10.len());
    }

    #[test]
    fn compositions_put_degree_four_on_a_merge() {
        // In every composition performed, x or y ends with degree ≥ 4.
        for (_, cert) in generate_4_ore(10).unwrap() {
            cert.replay_visit(&mut |_, _, comp| {
                let dx = comp.graph.degree(comp.x_pos);
                let dy = comp.graph.degree(comp.y_pos);
                assert!(dx.max(dy) >= 4, "merged degrees {dx},{dy}");
            })
            .unwrap();
        }
    }

    #[test]
    fn random_generation_is_seeded() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let (g, cert) = random_4_ore(13, &mut rng).unwrap();
        assert_eq!(g.n(), 13);
        assert_eq!(cert.replay().unwrap(), g);
        assert!(is_k_critical(&g, 4));
        let mut rng2 = ChaCha8Rng::seed_from_u64(11);
        let (g2, cert2) = random_4_ore(13, &mut rng2).unwrap();
        assert_eq!(g, g2);
        assert_eq!(cert, cert2);
        assert!(random_4_ore(9, &mut rng).is_err());
    }

    #[test]
    fn recognition_base_cases() {
        assert_eq!(is_4_ore(&Graph::complete(4)), Some(OreCertificate::leaf()));
        assert!(is_4_ore(&Graph::cycle(5)).is_none()); // not 4-critical
        assert!(is_4_ore(&Graph::wheel(5)).is_none()); // 4-critical, 3-connected
        assert!(is_4_ore(&Graph::complete(5)).is_none());
    }

    #[test]
    fn recognition_finds_h7_decomposition() {
        let cert = is_4_ore(&h7()).expect("H7 is 4-Ore");
        match &cert {
            OreCertificate::Node { edge_side, split_side, .. } => {
                assert_eq!(**edge_side, OreCertificate::leaf());
                assert_eq!(**split_side, OreCertificate::leaf());
            }
            _ => panic!("H7 is not a leaf"),
        }
        assert!(are_isomorphic(&cert.replay().unwrap(), &h7()));
    }

    #[test]
    fn recognition_handles_relabelings() {
        // The Moser spindle is H₇ in disguise: two rhombi (6,5,4,3) and
        // (6,2,1,0) share the degree-4 vertex 6, tips 3 and 0 joined.
        let spindle = Graph::from_edges(
            7,
            &[
                (6, 5),
                (6, 4),
                (5, 4),
                (5, 3),
                (4, 3),
                (6, 2),
                (6, 1),
                (2, 1),
                (2, 0),
                (1, 0),
                (3, 0),
            ],
        )
        .unwrap();
        assert!(are_isomorphic(&spindle, &h7()));
        let cert = is_4_ore(&spindle).expect("isomorphic to H7");
        assert!(are_isomorphic(&cert.replay().unwrap(), &spindle));
    }

    #[test]
    fn recognition_round_trips_generated_graphs() {
        for (g, _) in generate_4_ore(10).unwrap() {
            let cert = is_4_ore(&g).expect("generated graphs are 4-Ore");
            assert!(are_isomorphic(&cert.replay().unwrap(), &g), "{g:?}");
        }
    }

    #[test]
    fn uncollapsible_vertices() {
        let k4 = Graph::complete(4);
        for v in 0..4 {
            assert!(is_uncollapsible_vertex(&k4, v).unwrap());
        }
        // In H₇ only the degree-4 vertex is uncollapsible: each K₄-side
        // vertex set minus its seam pair collapses and avoids the others.
        let g = h7();
        for v in 0..7 {
            assert_eq!(is_uncollapsible_vertex(&g, v).unwrap(), v == 0, "vertex {v}");
        }
        assert!(is_uncollapsible_vertex(&Graph::cycle(5), 0).is_err());
    }

    #[test]
    fn uncollapsible_splits() {
        let k4 = Graph::complete(4);
        for z in 0..4 {
            for (p1, p2) in unordered_splits(&k4, z) {
                assert!(!is_uncollapsible_split(&k4, z, (&p1, &p2)).unwrap());
            }
        }
        let g = h7();
        let mut found = Vec::new();
        for v in 0..7 {
            for (p1, p2) in unordered_splits(&g, v) {
                if is_uncollapsible_split(&g, v, (&p1, &p2)).unwrap() {
                    // Both split halves keep degree ≥ 2.
                    assert!(p1.card() >= 2 && p2.card() >= 2);
                    found.push((v, p1.to_vec(), p2.to_vec()));
                }
            }
        }
        // Exactly the two balanced splits of the degree-4 vertex that break
        // both of its triangles.
        assert_eq!(
            found,
            vec![
                (0, vec![2, 4], vec![3, 5]),
                (0, vec![2, 5], vec![3, 4]),
            ]
        );
    }

    #[test]
    fn diamond_detection() {
        let g = h7();
        let ds = diamonds(&g);
        assert!(ds.contains(&Diamond { internal: (2, 3), ends: (0, 1) }));
        // K₄'s diamonds: internals any adjacent pair, ends the other two.
        assert_eq!(diamonds(&Graph::complete(4)).len(), 6);
        assert_eq!(diamond_case(&Graph::complete(4)), Some(1));
        assert_eq!(diamond_case(&g), Some(1));
        // Larger 4-Ore graphs fall into case 2 or 3.
        for (g, _) in generate_4_ore(10).unwrap() {
            if g.n() == 10 && g.ore_degree() == Some(7) {
                let case = diamond_case(&g);
                assert!(case == Some(2) || case == Some(3), "{g:?}: {case:?}");
            }
        }
        assert_eq!(diamond_case(&Graph::wheel(5)), None);
    }
}
