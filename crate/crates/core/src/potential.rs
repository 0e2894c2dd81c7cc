//! The potential function and the small-s classification.
//!
//! For a host graph G and R ⊆ V(G):
//!
//! ```text
//! p(R) = 4.8·|R| − 3·|E(G[R])| + 0.6·α(G[D₃(G) ∩ R])
//! ```
//!
//! where D₃(G) is the set of vertices of degree ≤ 3 *in the host* and α is the
//! independence number. Values are exact in fifths ([`Scaled`]).

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::scaled::Scaled;

/// 4.8 per vertex.
const W_VERTEX: i64 = 24;
/// 3 per induced edge.
const W_EDGE: i64 = 15;
/// 0.6 per independence unit.
const W_ALPHA: i64 = 3;

fn edges_within(g: &Graph, bits: u64) -> i64 {
    let mut twice = 0u32;
    for v in crate::graph::bits_of(bits) {
        twice += (g.row(v) & bits).count_ones();
    }
    (twice / 2) as i64
}

/// Potential of a subset of the host's vertices (0 for the empty set, every
/// term being an empty sum).
pub fn potential(g: &Graph, r: &VertexSet) -> Result<Scaled> {
    if r.space() != g.n() {
        return Err(Error::Argument("subset over a different label space".into()));
    }
    let d3 = g.d3_set();
    let alpha = g.alpha_in(&d3.intersect(r))? as i64;
    Ok(Scaled(
        W_VERTEX * r.card() as i64 - W_EDGE * edges_within(g, r.bits()) + W_ALPHA * alpha,
    ))
}

/// Potential of the whole vertex set.
pub fn graph_potential(g: &Graph) -> Result<Scaled> {
    potential(g, &g.vertex_set())
}

/// Minimum of `potential` over all non-empty subsets, with the first witness
/// in ascending bitmask order. Exhaustive with subtree pruning; capped at
/// n ≤ 24.
pub fn min_potential(g: &Graph) -> Result<(Scaled, VertexSet)> {
    let n = g.n();
    if n == 0 {
        return Err(Error::Argument("min_potential needs at least one vertex".into()));
    }
    if n > 24 {
        return Err(Error::Size(format!("min_potential enumerates subsets; n={n} > 24")));
    }
    // Most negative conceivable contribution of the still-undecided vertices
    // 0..v if all joined with every incident edge (the α term only raises the
    // value).
    let mut prefix_gain = vec![0i64; n + 1];
    for v in 0..n {
        prefix_gain[v + 1] = prefix_gain[v] + (W_VERTEX - W_EDGE * g.degree(v) as i64).min(0);
    }
    let d3 = g.d3_set().bits();
    struct State<'a> {
        g: &'a Graph,
        d3: u64,
        prefix_gain: Vec<i64>,
        best: i64,
        best_mask: u64,
    }
    // Vertices are decided from the highest index down, exclude before
    // include, so complete masks appear in ascending numeric order and the
    // strict improvement test keeps the first witness of the minimum.
    fn rec(st: &mut State, v: usize, mask: u64, count: i64, edges: i64) {
        let base = W_VERTEX * count - W_EDGE * edges;
        if v == 0 {
            if count == 0 {
                return;
            }
            // α ≥ 1 exactly when the subset meets D₃; skip the search if even
            // that floor cannot beat the incumbent.
            let floor = base + if st.d3 & mask != 0 { W_ALPHA } else { 0 };
            if floor >= st.best {
                return;
            }
            let p = base + W_ALPHA * st.g.alpha_mask(st.d3 & mask) as i64;
            if p < st.best {
                st.best = p;
                st.best_mask = mask;
            }
            return;
        }
        if base + st.prefix_gain[v] >= st.best {
            return;
        }
        let w = v - 1;
        rec(st, w, mask, count, edges);
        let extra = (st.g.row(w) & mask).count_ones() as i64;
        rec(st, w, mask | 1u64 << w, count + 1, edges + extra);
    }
    let mut st = State { g, d3, prefix_gain, best: i64::MAX, best_mask: 0 };
    rec(&mut st, n, 0, 0, 0);
    debug_assert!(st.best_mask != 0);
    Ok((Scaled(st.best), VertexSet::from_bits(n, st.best_mask)?))
}

/// `s(H) = |E(H)| − |V(H)| + α(H)`; additive over components.
pub fn s_value(h: &Graph) -> i64 {
    h.edge_count() as i64 - h.n() as i64 + h.independence_number() as i64
}

/// Shapes of connected graphs with s ≤ 2, plus `Large` for everything else.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SmallS {
    /// s = 0: a single vertex.
    Vertex,
    /// s = 0: a single edge.
    Edge,
    /// s = 1: a triangle.
    Triangle,
    /// s = 1: a path with two edges.
    PathTwo,
    /// s = 1: a path with three edges.
    PathThree,
    /// s = 2: the four-cycle.
    CycleFour,
    /// s = 2: the five-cycle.
    CycleFive,
    /// s = 2: a triangle with one pendant edge.
    TrianglePendantEdge,
    /// s = 2: a triangle with a pendant path of two edges.
    TrianglePendantPathTwo,
    /// s = 2: any tree with independence number three.
    TreeAlphaThree,
    /// s ≥ 3.
    Large,
}

impl SmallS {
    /// The s-value this shape certifies, `None` for `Large`.
    pub fn s_level(&self) -> Option<i64> {
        match self {
            SmallS::Vertex | SmallS::Edge => Some(0),
            SmallS::Triangle | SmallS::PathTwo | SmallS::PathThree => Some(1),
            SmallS::CycleFour
            | SmallS::CycleFive
            | SmallS::TrianglePendantEdge
            | SmallS::TrianglePendantPathTwo
            | SmallS::TreeAlphaThree => Some(2),
            SmallS::Large => None,
        }
    }
}

/// Structural classification of a connected graph by its s-value shape.
/// Rejects disconnected input.
pub fn classify_small_s(h: &Graph) -> Result<SmallS> {
    if h.n() == 0 || !h.is_connected() {
        return Err(Error::Argument("classify_small_s needs a connected graph".into()));
    }
    let n = h.n();
    let m = h.edge_count();
    if n == 1 {
        return Ok(SmallS::Vertex);
    }
    if m == n - 1 {
        // Trees: s = α − 1; trees with α ≤ 2 are K2, P3, P4.
        return Ok(match h.independence_number() {
            1 => SmallS::Edge,
            2 => {
                if n == 3 {
                    SmallS::PathTwo
                } else {
                    SmallS::PathThree
                }
            }
            3 => SmallS::TreeAlphaThree,
            _ => SmallS::Large,
        });
    }
    if m == n {
        // Unicyclic: peel leaves to expose the cycle.
        let mut alive = crate::graph::low_mask(n);
        loop {
            let mut peeled = alive;
            for v in crate::graph::bits_of(alive) {
                if (h.row(v) & alive).count_ones() <= 1 {
                    peeled &= !(1u64 << v);
                }
            }
            if peeled == alive {
                break;
            }
            alive = peeled;
        }
        let cycle_len = alive.count_ones() as usize;
        return Ok(match (cycle_len, n) {
            (3, 3) => SmallS::Triangle,
            (3, 4) => SmallS::TrianglePendantEdge,
            (3, 5) => {
                // The two off-cycle vertices must form a pendant path hooked
                // to a single cycle vertex.
                let off: Vec<usize> = crate::graph::bits_of(crate::graph::low_mask(n) & !alive).collect();
                let (a, b) = (off[0], off[1]);
                let leaf_shape = h.has_edge(a, b)
                    && (h.degree(a) == 1) != (h.degree(b) == 1) // one inner, one leaf
                    && h.degree(a).max(h.degree(b)) == 2;
                if leaf_shape {
                    SmallS::TrianglePendantPathTwo
                } else {
                    SmallS::Large
                }
            }
            (4, 4) => SmallS::CycleFour,
            (5, 5) => SmallS::CycleFive,
            _ => SmallS::Large,
        });
    }
    Ok(SmallS::Large)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ore::h7;

    #[test]
    fn known_whole_graph_potentials() {
        // 4.8·1 + 0.6 = 5.4; 9.6 − 3 + 0.6 = 7.2; 14.4 − 9 + 0.6 = 6;
        // 19.2 − 18 + 0.6 = 1.8; 33.6 − 33 + 1.2 = 1.8.
        assert_eq!(graph_potential(&Graph::empty(1).unwrap()).unwrap(), Scaled(27));
        assert_eq!(graph_potential(&Graph::complete(2)).unwrap(), Scaled(36));
        assert_eq!(graph_potential(&Graph::complete(3)).unwrap(), Scaled(30));
        assert_eq!(graph_potential(&Graph::complete(4)).unwrap(), Scaled(9));
        assert_eq!(graph_potential(&h7()).unwrap(), Scaled(9));
    }

    #[test]
    fn odd_wheel_potentials() {
        // Hub degree k > 3, rim is C_k: p = 24(k+1) − 30k + 3·(k−1)/2 fifths.
        assert_eq!(graph_potential(&Graph::wheel(5)).unwrap(), Scaled(0));
        assert_eq!(graph_potential(&Graph::wheel(7)).unwrap(), Scaled(-9));
        assert_eq!(graph_potential(&Graph::wheel(9)).unwrap(), Scaled(-18));
    }

    #[test]
    fn subset_potentials_in_h7() {
        let g = h7();
        // Edge-side K4−e block {0,1,2,3}: 4 vertices, 5 edges, D₃ part {1,2,3}
        // induces a triangle: 96 − 75 + 3 = 24 (= 4.8).
        let r = VertexSet::from_slice(7, &[0, 1, 2, 3]).unwrap();
        assert_eq!(potential(&g, &r).unwrap(), Scaled(24));
        assert_eq!(potential(&g, &VertexSet::empty(7)).unwrap(), Scaled(0));
    }

    #[test]
    fn min_potential_witnesses() {
        let (p, w) = min_potential(&Graph::complete(4)).unwrap();
        assert_eq!((p, w), (Scaled(9), VertexSet::full(4)));
        let (p, w) = min_potential(&h7()).unwrap();
        assert_eq!(p, Scaled(9));
        assert_eq!(w, VertexSet::full(7));
        assert!(min_potential(&Graph::empty(0).unwrap()).is_err());
    }

    #[test]
    fn min_potential_matches_plain_scan() {
        // Independent oracle: direct loop over all subsets, no pruning.
        for g in [Graph::wheel(5), Graph::cycle(6), h7(), Graph::complete(5)] {
            let n = g.n();
            let d3 = g.d3_set();
            let mut best = Scaled(i64::MAX);
            let mut witness = 0u64;
            for mask in 1u64..1 << n {
                let r = VertexSet::from_bits(n, mask).unwrap();
                let e = g
                    .edges()
                    .iter()
                    .filter(|&&(u, v)| r.contains(u) && r.contains(v))
                    .count() as i64;
                let a = g.alpha_in(&d3.intersect(&r)).unwrap() as i64;
                let p = Scaled(24 * r.card() as i64 - 15 * e + 3 * a);
                if p < best {
                    best = p;
                    witness = mask;
                }
            }
            let (p, w) = min_potential(&g).unwrap();
            assert_eq!(p, best, "{g:?}");
            assert_eq!(w.bits(), witness, "{g:?}");
        }
    }

    #[test]
    fn s_values() {
        assert_eq!(s_value(&Graph::complete(4)), 3);
        assert_eq!(s_value(&Graph::cycle(5)), 2);
        assert_eq!(s_value(&Graph::path(4)), 1);
        assert_eq!(s_value(&Graph::empty(1).unwrap()), 0);
        let (d3h7, _) = h7().d3_subgraph();
        assert_eq!(s_value(&d3h7), 3);
        // Additivity over components: a triangle (s = 1) plus a five-vertex
        // path (s = 4 − 5 + 3 = 2).
        let two = Graph::from_edges(8, &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 6), (6, 7)])
            .unwrap();
        assert_eq!(s_value(&two), 1 + 2);
    }

    #[test]
    fn classification_oracles() {
        use SmallS::*;
        let tri_pendant = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 0), (0, 3)]).unwrap();
        let tri_tail2 = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 0), (0, 3), (3, 4)]).unwrap();
        let tri_two_pendants =
            Graph::from_edges(5, &[(0, 1), (1, 2), (2, 0), (0, 3), (1, 4)]).unwrap();
        let claw_two_pendants =
            Graph::from_edges(6, &[(0, 1), (0, 2), (0, 3), (1, 4), (2, 5)]).unwrap();
        let cases = [
            (Graph::empty(1).unwrap(), Vertex),
            (Graph::complete(2), Edge),
            (Graph::complete(3), Triangle),
            (Graph::path(3), PathTwo),
            (Graph::path(4), PathThree),
            (Graph::cycle(4), CycleFour),
            (Graph::cycle(5), CycleFive),
            (tri_pendant, TrianglePendantEdge),
            (tri_tail2, TrianglePendantPathTwo),
            (Graph::path(5), TreeAlphaThree),
            (Graph::path(6), TreeAlphaThree),
            (claw_two_pendants, TreeAlphaThree),
            (Graph::path(7), Large),
            (Graph::cycle(6), Large),
            (tri_two_pendants, Large),
            (Graph::complete(4), Large),
        ];
        for (g, want) in cases {
            let got = classify_small_s(&g).unwrap();
            assert_eq!(got, want, "{g:?}");
            match got.s_level() {
                Some(s) => assert_eq!(s, s_value(&g), "{g:?}"),
                None => assert!(s_value(&g) >= 3, "{g:?}"),
            }
        }
        let disconnected = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert!(classify_small_s(&disconnected).is_err());
    }
}
