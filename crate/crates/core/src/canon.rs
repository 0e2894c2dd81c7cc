//! Canonical labeling by permutation backtracking.
//!
//! Vertices are first partitioned by iterated neighborhood refinement (start
//! from degrees, re-color by sorted neighbor colors until stable); the search
//! then minimizes the upper-triangle adjacency bitstring over all placements
//! that respect the refined color blocks, pruning against the best string
//! found so far. Equal canonical strings ⟺ isomorphic graphs.

use crate::error::{Error, Result};
use crate::graph::{bits_of, Graph};
use crate::graph6::to_graph6;

/// Documented cap for the public entry point: beyond this, callers should
/// bring pre-canonicalized input streams instead.
pub const CANON_MAX_N: usize = 12;

/// Canonical graph6 string; `Err` for n > 12.
pub fn canonical_form(g: &Graph) -> Result<String> {
    if g.n() > CANON_MAX_N {
        return Err(Error::Size(format!(
            "canonical_form handles n <= {CANON_MAX_N}; canonicalize n={} upstream",
            g.n()
        )));
    }
    Ok(canonical_graph6(g))
}

/// Same canonicalizer without the public size cap; it is exponential in the
/// worst case and is kept crate-internal for generator deduplication, where
/// the graphs are small and sparse.
pub(crate) fn canonical_graph6(g: &Graph) -> String {
    to_graph6(&canonical_relabel(g)).expect("canonical input stays within graph6 range")
}

pub fn are_isomorphic(a: &Graph, b: &Graph) -> bool {
    if a.n() != b.n() || a.edge_count() != b.edge_count() {
        return false;
    }
    let (ca, ha) = refine(a);
    let (cb, hb) = refine(b);
    let _ = (ca, cb);
    if ha != hb {
        return false;
    }
    canonical_graph6(a) == canonical_graph6(b)
}

/// Stable vertex coloring: start from degrees, iterate
/// color ← rank of (color, sorted neighbor colors). Returns per-vertex colors
/// and the sorted color histogram (an isomorphism invariant).
fn refine(g: &Graph) -> (Vec<u32>, Vec<(u32, usize)>) {
    let n = g.n();
    let mut color: Vec<u32> = (0..n).map(|v| g.degree(v) as u32).collect();
    normalize(&mut color);
    loop {
        let mut sig: Vec<(u32, Vec<u32>, usize)> = (0..n)
            .map(|v| {
                let mut nb: Vec<u32> = bits_of(g.row(v)).map(|w| color[w]).collect();
                nb.sort_unstable();
                (color[v], nb, v)
            })
            .collect();
        sig.sort();
        let mut next = vec![0u32; n];
        let mut rank = 0u32;
        for i in 0..n {
            if i > 0 && (sig[i].0, &sig[i].1) != (sig[i - 1].0, &sig[i - 1].1) {
                rank += 1;
            }
            next[sig[i].2] = rank;
        }
        if next == color {
            break;
        }
        color = next;
    }
    let mut hist = std::collections::BTreeMap::new();
    for &c in &color {
        *hist.entry(c).or_insert(0usize) += 1;
    }
    (color, hist.into_iter().collect())
}

fn normalize(color: &mut [u32]) {
    let mut vals: Vec<u32> = color.to_vec();
    vals.sort_unstable();
    vals.dedup();
    for c in color.iter_mut() {
        *c = vals.binary_search(c).unwrap() as u32;
    }
}

struct Search<'a> {
    g: &'a Graph,
    n: usize,
    class_of_pos: Vec<u32>,
    color: Vec<u32>,
    placed: Vec<usize>,
    used: u64,
    cols: Vec<u64>,
    best_cols: Option<Vec<u64>>,
    best_perm: Vec<usize>,
}

impl<'a> Search<'a> {
    fn dfs(&mut self, pos: usize) {
        if pos == self.n {
            if self
                .best_cols
                .as_ref()
                .map_or(true, |b| self.cols.as_slice() < b.as_slice())
            {
                self.best_cols = Some(self.cols.clone());
                self.best_perm = self.placed.clone();
            }
            return;
        }
        // Column value of candidate v: adjacency bits toward placed vertices,
        // earlier positions more significant.
        let mut cands: Vec<(u64, usize)> = Vec::new();
        for v in 0..self.n {
            if self.used >> v & 1 == 1 || self.color[v] != self.class_of_pos[pos] {
                continue;
            }
            let mut col = 0u64;
            for (i, &p) in self.placed.iter().enumerate() {
                col |= u64::from(self.g.has_edge(p, v)) << (pos - 1 - i);
            }
            cands.push((col, v));
        }
        cands.sort_unstable();
        // Candidates interchangeable with an earlier same-column candidate by
        // a transposition automorphism (N(u)∖{v} = N(v)∖{u}) reach exactly the
        // same column sequences; exploring the first suffices. This collapses
        // the factorial blowup on twin classes (stars, complete blocks).
        let mut filtered: Vec<(u64, usize)> = Vec::with_capacity(cands.len());
        'cand: for (col, v) in cands {
            for &(kept_col, u) in filtered.iter().rev() {
                if kept_col != col {
                    break;
                }
                if self.g.row(u) & !(1u64 << v) == self.g.row(v) & !(1u64 << u) {
                    continue 'cand;
                }
            }
            filtered.push((col, v));
        }
        for (col, v) in filtered {
            if let Some(b) = &self.best_cols {
                // Along the live path the prefix never exceeds the best prefix;
                // when equal, larger columns (ascending order) cannot win.
                if self.cols[..pos] == b[..pos] && col > b[pos] {
                    break;
                }
            }
            self.placed.push(v);
            self.used |= 1u64 << v;
            self.cols.push(col);
            self.dfs(pos + 1);
            self.cols.pop();
            self.used &= !(1u64 << v);
            self.placed.pop();
        }
    }
}

/// Canonical placement order: entry `pos` is the old vertex that lands at
/// canonical position `pos`.
pub(crate) fn canonical_order(g: &Graph) -> Vec<usize> {
    let n = g.n();
    if n <= 1 {
        return (0..n).collect();
    }
    let (color, _) = refine(g);
    let mut ordered: Vec<u32> = color.clone();
    ordered.sort_unstable();
    let mut search = Search {
        g,
        n,
        class_of_pos: ordered,
        color,
        placed: Vec::with_capacity(n),
        used: 0,
        cols: Vec::with_capacity(n),
        best_cols: None,
        best_perm: Vec::new(),
    };
    search.dfs(0);
    debug_assert_eq!(search.best_perm.len(), n);
    search.best_perm
}

pub(crate) fn canonical_relabel(g: &Graph) -> Graph {
    let n = g.n();
    let perm = canonical_order(g);
    let mut edges = Vec::with_capacity(g.edge_count());
    for i in 0..n {
        for j in i + 1..n {
            if g.has_edge(perm[i], perm[j]) {
                edges.push((i, j));
            }
        }
    }
    Graph::from_edges(n, &edges).expect("relabeling preserves simple-graph shape")
}

/// An explicit isomorphism `a → b` (vector over a's labels), or `None`.
/// Composes the two canonical placements; the result is checked edge-by-edge
/// in debug builds.
pub(crate) fn find_isomorphism(a: &Graph, b: &Graph) -> Option<Vec<usize>> {
    if !are_isomorphic(a, b) {
        return None;
    }
    let oa = canonical_order(a); // canonical pos -> a-label
    let ob = canonical_order(b);
    let mut map = vec![0usize; a.n()];
    for pos in 0..a.n() {
        map[oa[pos]] = ob[pos];
    }
    debug_assert!(a
        .edges()
        .iter()
        .all(|&(u, v)| b.has_edge(map[u], map[v])));
    Some(map)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn relabel(g: &Graph, perm: &[usize]) -> Graph {
        let mut edges = Vec::new();
        for (u, v) in g.edges() {
            edges.push((perm[u], perm[v]));
        }
        Graph::from_edges(g.n(), &edges).unwrap()
    }

    fn permutations(n: usize) -> Vec<Vec<usize>> {
        if n == 1 {
            return vec![vec![0]];
        }
        let mut out = Vec::new();
        for p in permutations(n - 1) {
            for pos in 0..n {
                let mut q: Vec<usize> = p.iter().map(|&x| if x >= pos { x + 1 } else { x }).collect();
                q.push(pos);
                out.push(q);
            }
        }
        out
    }

    #[test]
    fn k4_minus_edge_all_relabelings_agree() {
        let g = Graph::complete(4).delete_edge(0, 1).unwrap();
        let mut strings: Vec<String> = permutations(4)
            .iter()
            .map(|p| canonical_form(&relabel(&g, p)).unwrap())
            .collect();
        strings.sort();
        strings.dedup();
        assert_eq!(strings.len(), 1);
    }

    #[test]
    fn random_relabelings_are_invariant() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for trial in 0..60 {
            let n = rng.gen_range(2..=10);
            let mut g = Graph::empty(n).unwrap();
            for u in 0..n {
                for v in u + 1..n {
                    if rng.gen_bool(0.4) {
                        g = g.add_edge(u, v).unwrap();
                    }
                }
            }
            let base = canonical_form(&g).unwrap();
            for _ in 0..5 {
                let mut perm: Vec<usize> = (0..n).collect();
                for i in (1..n).rev() {
                    let j = rng.gen_range(0..=i);
                    perm.swap(i, j);
                }
                assert_eq!(canonical_form(&relabel(&g, &perm)).unwrap(), base, "trial {trial}");
            }
        }
    }

    #[test]
    fn distinguishes_same_degree_sequence() {
        // C6 vs two triangles: both 2-regular on six vertices.
        let c6 = Graph::cycle(6);
        let tri2 = Graph::from_edges(6, &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]).unwrap();
        assert!(!are_isomorphic(&c6, &tri2));
        // K_{3,3} vs the triangular prism: both 3-regular on six vertices.
        let k33 = Graph::from_edges(
            6,
            &[(0, 3), (0, 4), (0, 5), (1, 3), (1, 4), (1, 5), (2, 3), (2, 4), (2, 5)],
        )
        .unwrap();
        let prism =
            Graph::from_edges(6, &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (0, 3), (1, 4), (2, 5)])
                .unwrap();
        assert!(!are_isomorphic(&k33, &prism));
    }

    #[test]
    fn petersen_two_constructions() {
        let standard = Graph::from_edges(
            10,
            &[
                (0, 1), (1, 2), (2, 3), (3, 4), (4, 0),
                (5, 7), (7, 9), (9, 6), (6, 8), (8, 5),
                (0, 5), (1, 6), (2, 7), (3, 8), (4, 9),
            ],
        )
        .unwrap();
        // Kneser K(5,2): vertices are the 2-subsets of {0..4}, adjacent iff disjoint.
        let pairs: Vec<(usize, usize)> = (0..5)
            .flat_map(|a| (a + 1..5).map(move |b| (a, b)))
            .collect();
        let mut edges = Vec::new();
        for i in 0..pairs.len() {
            for j in i + 1..pairs.len() {
                let (a, b) = pairs[i];
                let (c, d) = pairs[j];
                if a != c && a != d && b != c && b != d {
                    edges.push((i, j));
                }
            }
        }
        let kneser = Graph::from_edges(10, &edges).unwrap();
        assert!(are_isomorphic(&standard, &kneser));
    }

    #[test]
    fn size_cap() {
        assert!(canonical_form(&Graph::path(13)).is_err());
        assert!(canonical_form(&Graph::path(12)).is_ok());
    }

    #[test]
    fn canonical_of_small() {
        assert_eq!(canonical_form(&Graph::empty(0).unwrap()).unwrap(), "?");
        assert_eq!(canonical_form(&Graph::empty(1).unwrap()).unwrap(), "@");
        assert_eq!(canonical_form(&Graph::complete(4)).unwrap(), "C~");
    }
}
