//! Dense small-graph kernel: simple undirected graphs on up to 64 labeled
//! vertices, stored as one `u64` adjacency row per vertex.
//!
//! Every surgery operation is pure (returns a fresh graph) and reports how old
//! labels map into the result, so callers can trace vertices through chains of
//! deletions, identifications and splits.

use crate::error::{Error, Result};
use std::fmt;

/// Hard cap imposed by the one-word adjacency rows.
pub const MAX_N: usize = 64;

#[inline]
pub(crate) fn low_mask(n: usize) -> u64 {
    debug_assert!(n <= 64);
    if n == 64 {
        !0
    } else {
        (1u64 << n) - 1
    }
}

/// Iterate the set bit positions of a word, ascending.
#[inline]
pub(crate) fn bits_of(mut m: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if m == 0 {
            None
        } else {
            let v = m.trailing_zeros() as usize;
            m &= m - 1;
            Some(v)
        }
    })
}

// ---------------------------------------------------------------------------
// VertexSet
// ---------------------------------------------------------------------------

/// A subset of the vertices of a graph on `n` labels.
///
/// Carries `n` so that set/graph pairings with mismatched label spaces are
/// rejected instead of silently misinterpreting bits.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet {
    bits: u64,
    n: usize,
}

impl VertexSet {
    pub fn empty(n: usize) -> Self {
        debug_assert!(n <= MAX_N);
        VertexSet { bits: 0, n }
    }

    pub fn full(n: usize) -> Self {
        debug_assert!(n <= MAX_N);
        VertexSet { bits: low_mask(n), n }
    }

    pub fn single(n: usize, v: usize) -> Self {
        assert!(v < n, "vertex {v} out of range for n={n}");
        VertexSet { bits: 1u64 << v, n }
    }

    /// Build from raw bits; rejects bits at or above `n`.
    pub fn from_bits(n: usize, bits: u64) -> Result<Self> {
        if n > MAX_N {
            return Err(Error::Size(format!("n={n} exceeds {MAX_N}")));
        }
        if bits & !low_mask(n) != 0 {
            return Err(Error::Argument(format!(
                "vertex set bits {bits:#x} overflow n={n}"
            )));
        }
        Ok(VertexSet { bits, n })
    }

    pub fn from_slice(n: usize, vs: &[usize]) -> Result<Self> {
        let mut s = VertexSet::empty(n);
        for &v in vs {
            if v >= n {
                return Err(Error::Argument(format!("vertex {v} out of range for n={n}")));
            }
            s.bits |= 1u64 << v;
        }
        Ok(s)
    }

    #[inline]
    pub fn bits(&self) -> u64 {
        self.bits
    }

    #[inline]
    pub fn space(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn card(&self) -> usize {
        self.bits.count_ones() as usize
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.bits == 0
    }

    #[inline]
    pub fn contains(&self, v: usize) -> bool {
        v < self.n && self.bits >> v & 1 == 1
    }

    pub fn insert(&mut self, v: usize) {
        assert!(v < self.n);
        self.bits |= 1u64 << v;
    }

    pub fn remove(&mut self, v: usize) {
        assert!(v < self.n);
        self.bits &= !(1u64 << v);
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> {
        bits_of(self.bits)
    }

    pub fn min(&self) -> Option<usize> {
        if self.bits == 0 {
            None
        } else {
            Some(self.bits.trailing_zeros() as usize)
        }
    }

    fn check_pair(&self, other: &VertexSet) {
        assert!(
            self.n == other.n,
            "vertex sets over different label spaces: {} vs {}",
            self.n,
            other.n
        );
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        self.check_pair(other);
        VertexSet { bits: self.bits | other.bits, n: self.n }
    }

    pub fn intersect(&self, other: &VertexSet) -> VertexSet {
        self.check_pair(other);
        VertexSet { bits: self.bits & other.bits, n: self.n }
    }

    pub fn minus(&self, other: &VertexSet) -> VertexSet {
        self.check_pair(other);
        VertexSet { bits: self.bits & !other.bits, n: self.n }
    }

    pub fn complement(&self) -> VertexSet {
        VertexSet { bits: !self.bits & low_mask(self.n), n: self.n }
    }

    pub fn is_subset_of(&self, other: &VertexSet) -> bool {
        self.check_pair(other);
        self.bits & !other.bits == 0
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

// ---------------------------------------------------------------------------
// Graph
// ---------------------------------------------------------------------------

/// Simple undirected graph on vertices `0..n`, `n <= 64`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

impl Graph {
    pub fn empty(n: usize) -> Result<Graph> {
        if n > MAX_N {
            return Err(Error::Size(format!("n={n} exceeds {MAX_N} vertices")));
        }
        Ok(Graph { n, adj: vec![0; n] })
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::Argument(format!("edge ({u},{v}) out of range for n={n}")));
            }
            if u == v {
                return Err(Error::Argument(format!("loop at vertex {u}")));
            }
            g.adj[u] |= 1u64 << v;
            g.adj[v] |= 1u64 << u;
        }
        Ok(g)
    }

    pub fn complete(n: usize) -> Graph {
        assert!(n <= MAX_N);
        let all = low_mask(n);
        let adj = (0..n).map(|v| all & !(1u64 << v)).collect();
        Graph { n, adj }
    }

    pub fn cycle(n: usize) -> Graph {
        assert!(n >= 3 && n <= MAX_N);
        Graph::from_edges(n, &(0..n).map(|i| (i, (i + 1) % n)).collect::<Vec<_>>()).unwrap()
    }

    pub fn path(n: usize) -> Graph {
        assert!(n >= 1 && n <= MAX_N);
        Graph::from_edges(n, &(1..n).map(|i| (i - 1, i)).collect::<Vec<_>>()).unwrap()
    }

    /// Odd or even wheel: cycle on `k` rim vertices `0..k` plus hub `k`.
    pub fn wheel(k: usize) -> Graph {
        assert!(k >= 3 && k < MAX_N);
        let mut edges: Vec<(usize, usize)> = (0..k).map(|i| (i, (i + 1) % k)).collect();
        edges.extend((0..k).map(|i| (i, k)));
        Graph::from_edges(k + 1, &edges).unwrap()
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u] >> v & 1 == 1
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    /// Adjacency row of `v` as raw bits.
    #[inline]
    pub fn row(&self, v: usize) -> u64 {
        self.adj[v]
    }

    pub fn neighbor_set(&self, v: usize) -> VertexSet {
        VertexSet { bits: self.adj[v], n: self.n }
    }

    pub fn vertex_set(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    /// Edges in lexicographic order, `u < v`.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for v in bits_of(self.adj[u] >> u >> 1) {
                out.push((u, u + 1 + v));
            }
        }
        out
    }

    pub fn min_degree(&self) -> Option<usize> {
        (0..self.n).map(|v| self.degree(v)).min()
    }

    pub fn max_degree(&self) -> Option<usize> {
        (0..self.n).map(|v| self.degree(v)).max()
    }

    fn check_set(&self, s: &VertexSet) -> Result<()> {
        if s.space() != self.n {
            return Err(Error::Argument(format!(
                "vertex set over n={} paired with graph on n={}",
                s.space(),
                self.n
            )));
        }
        Ok(())
    }

    // -- edge surgery -------------------------------------------------------

    /// New graph with edge `uv` added. Labels are unchanged.
    pub fn add_edge(&self, u: usize, v: usize) -> Result<Graph> {
        if u >= self.n || v >= self.n {
            return Err(Error::Argument(format!("edge ({u},{v}) out of range")));
        }
        if u == v {
            return Err(Error::Argument(format!("loop at vertex {u}")));
        }
        if self.has_edge(u, v) {
            return Err(Error::Argument(format!("edge ({u},{v}) already present")));
        }
        let mut g = self.clone();
        g.adj[u] |= 1u64 << v;
        g.adj[v] |= 1u64 << u;
        Ok(g)
    }

    /// New graph with edge `uv` removed. Labels are unchanged.
    pub fn delete_edge(&self, u: usize, v: usize) -> Result<Graph> {
        if !self.has_edge(u, v) {
            return Err(Error::Argument(format!("edge ({u},{v}) not present")));
        }
        let mut g = self.clone();
        g.adj[u] &= !(1u64 << v);
        g.adj[v] &= !(1u64 << u);
        Ok(g)
    }

    // -- vertex surgery -----------------------------------------------------

    /// Delete a set of vertices. Returns the new graph and the old-to-new
    /// label map (`None` for deleted labels); survivors keep their order.
    pub fn delete_vertices(&self, kill: &VertexSet) -> Result<(Graph, Vec<Option<usize>>)> {
        self.check_set(kill)?;
        let keep = kill.complement();
        self.induced(&keep)
    }

    /// Induced subgraph on `keep`; same map convention as `delete_vertices`.
    pub fn induced(&self, keep: &VertexSet) -> Result<(Graph, Vec<Option<usize>>)> {
        self.check_set(keep)?;
        let mut map = vec![None; self.n];
        let mut next = 0usize;
        for v in keep.iter() {
            map[v] = Some(next);
            next += 1;
        }
        let mut g = Graph::empty(next)?;
        for v in keep.iter() {
            let nv = map[v].unwrap();
            for w in bits_of(self.adj[v] & keep.bits()) {
                let nw = map[w].unwrap();
                if nv < nw {
                    g.adj[nv] |= 1u64 << nw;
                    g.adj[nw] |= 1u64 << nv;
                }
            }
        }
        Ok((g, map))
    }

    /// Identify each part of `parts` to a single vertex; vertices outside all
    /// parts survive as singletons. Returns the new graph and the total
    /// old-to-new map. New labels follow the minimum old label of each group.
    ///
    /// An edge inside a part would become a loop: that is an error unless
    /// `allow_internal_edges` is set, in which case it is dropped.
    pub fn identify_vertices(
        &self,
        parts: &[VertexSet],
        allow_internal_edges: bool,
    ) -> Result<(Graph, Vec<usize>)> {
        let mut seen = VertexSet::empty(self.n);
        for p in parts {
            self.check_set(p)?;
            if p.is_empty() {
                return Err(Error::Argument("empty identification part".into()));
            }
            if !p.intersect(&seen).is_empty() {
                return Err(Error::Argument("identification parts overlap".into()));
            }
            seen = seen.union(p);
            if !allow_internal_edges {
                for v in p.iter() {
                    if self.adj[v] & p.bits() != 0 {
                        return Err(Error::Argument(format!(
                            "identifying adjacent vertices (edge inside part {p})"
                        )));
                    }
                }
            }
        }
        // Group id per old vertex: parts first, then untouched singletons.
        let mut group = vec![usize::MAX; self.n];
        let mut group_min: Vec<usize> = Vec::new();
        for p in parts {
            let id = group_min.len();
            for v in p.iter() {
                group[v] = id;
            }
            group_min.push(p.min().unwrap());
        }
        for v in 0..self.n {
            if group[v] == usize::MAX {
                group[v] = group_min.len();
                group_min.push(v);
            }
        }
        // Order groups by their minimum old label.
        let mut order: Vec<usize> = (0..group_min.len()).collect();
        order.sort_by_key(|&gid| group_min[gid]);
        let mut new_of_group = vec![0usize; group_min.len()];
        for (new, &gid) in order.iter().enumerate() {
            new_of_group[gid] = new;
        }
        let map: Vec<usize> = (0..self.n).map(|v| new_of_group[group[v]]).collect();
        let mut g = Graph::empty(group_min.len())?;
        for u in 0..self.n {
            for w in bits_of(self.adj[u]) {
                let (a, b) = (map[u], map[w]);
                if a != b {
                    g.adj[a] |= 1u64 << b;
                    g.adj[b] |= 1u64 << a;
                }
            }
        }
        Ok((g, map))
    }

    /// Split vertex `z` into `z1` (keeps label `z`, neighbors `p1`) and `z2`
    /// (fresh label `n`, neighbors `p2`). `p1 ⊎ p2` must partition `N(z)` into
    /// two non-empty sides. Other labels are unchanged.
    pub fn split_vertex(
        &self,
        z: usize,
        p1: &VertexSet,
        p2: &VertexSet,
    ) -> Result<(Graph, usize, usize)> {
        self.check_set(p1)?;
        self.check_set(p2)?;
        if z >= self.n {
            return Err(Error::Argument(format!("vertex {z} out of range")));
        }
        if self.n + 1 > MAX_N {
            return Err(Error::Size(format!("split would exceed {MAX_N} vertices")));
        }
        let nz = self.adj[z];
        if p1.bits() & p2.bits() != 0
            || p1.bits() | p2.bits() != nz
            || p1.is_empty()
            || p2.is_empty()
        {
            return Err(Error::Argument(format!(
                "split parts must partition N({z}) into two non-empty sides"
            )));
        }
        let n = self.n + 1;
        let mut g = Graph::empty(n)?;
        for u in 0..self.n {
            if u == z {
                continue;
            }
            g.adj[u] = self.adj[u] & !(1u64 << z);
        }
        let z2 = self.n;
        g.adj[z] = p1.bits();
        g.adj[z2] = p2.bits();
        for v in p1.iter() {
            g.adj[v] |= 1u64 << z;
        }
        for v in p2.iter() {
            g.adj[v] |= 1u64 << z2;
        }
        Ok((g, z, z2))
    }

    // -- structure ----------------------------------------------------------

    /// Max of `d(u) + d(v)` over edges `uv`; `None` for edgeless graphs.
    pub fn ore_degree(&self) -> Option<usize> {
        let mut best = None;
        for u in 0..self.n {
            for v in bits_of(self.adj[u] >> u >> 1) {
                let s = self.degree(u) + self.degree(u + 1 + v);
                best = Some(best.map_or(s, |b: usize| b.max(s)));
            }
        }
        best
    }

    /// Vertices of degree at most three.
    pub fn d3_set(&self) -> VertexSet {
        let mut s = VertexSet::empty(self.n);
        for v in 0..self.n {
            if self.degree(v) <= 3 {
                s.insert(v);
            }
        }
        s
    }

    /// Induced subgraph on the degree-≤3 vertices together with that set.
    pub fn d3_subgraph(&self) -> (Graph, VertexSet) {
        let s = self.d3_set();
        let (g, _) = self.induced(&s).expect("d3 set is over this graph");
        (g, s)
    }

    /// Vertices of `r` with at least one neighbor outside `r`.
    /// `r` must be a proper subset of the vertex set.
    pub fn boundary(&self, r: &VertexSet) -> Result<VertexSet> {
        self.check_set(r)?;
        if r.bits() == low_mask(self.n) {
            return Err(Error::Argument("boundary of the full vertex set".into()));
        }
        let outside = !r.bits() & low_mask(self.n);
        let mut b = VertexSet::empty(self.n);
        for v in r.iter() {
            if self.adj[v] & outside != 0 {
                b.insert(v);
            }
        }
        Ok(b)
    }

    /// Vertices reachable from `start` inside `mask`.
    pub(crate) fn reach(&self, mask: u64, start: usize) -> u64 {
        debug_assert!(mask >> start & 1 == 1);
        let mut seen = 1u64 << start;
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0u64;
            for v in bits_of(frontier) {
                next |= self.adj[v];
            }
            next &= mask & !seen;
            seen |= next;
            frontier = next;
        }
        seen
    }

    /// Connected components, each as a vertex set, ordered by minimum vertex.
    pub fn components(&self) -> Vec<VertexSet> {
        let mut left = low_mask(self.n);
        let mut out = Vec::new();
        while left != 0 {
            let start = left.trailing_zeros() as usize;
            let comp = self.reach(left, start);
            out.push(VertexSet { bits: comp, n: self.n });
            left &= !comp;
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        if self.n <= 1 {
            return true;
        }
        self.reach(low_mask(self.n), 0) == low_mask(self.n)
    }

    /// All unordered pairs `{x,y}` whose removal disconnects the graph,
    /// each with the components of `G − {x,y}`.
    pub fn two_separations(&self) -> Result<Vec<((usize, usize), Vec<VertexSet>)>> {
        if self.n < 4 {
            return Err(Error::Argument("two_separations needs n >= 4".into()));
        }
        if !self.is_connected() {
            return Err(Error::Argument("two_separations needs a connected graph".into()));
        }
        let mut out = Vec::new();
        for x in 0..self.n {
            for y in x + 1..self.n {
                let mask = low_mask(self.n) & !(1u64 << x) & !(1u64 << y);
                let start = mask.trailing_zeros() as usize;
                if self.reach(mask, start) != mask {
                    let mut comps = Vec::new();
                    let mut left = mask;
                    while left != 0 {
                        let s = left.trailing_zeros() as usize;
                        let c = self.reach(mask, s);
                        comps.push(VertexSet { bits: c, n: self.n });
                        left &= !c;
                    }
                    out.push(((x, y), comps));
                }
            }
        }
        Ok(out)
    }

    // -- independence -------------------------------------------------------

    /// Independence number of the induced subgraph on `within`.
    pub fn alpha_in(&self, within: &VertexSet) -> Result<usize> {
        self.check_set(within)?;
        Ok(self.alpha_mask(within.bits()))
    }

    pub fn independence_number(&self) -> usize {
        self.alpha_mask(low_mask(self.n))
    }

    /// Branch and bound: branch on a maximum-degree vertex, bound by a greedy
    /// clique cover, fold in degree-≤1 vertices greedily.
    pub(crate) fn alpha_mask(&self, mask: u64) -> usize {
        let mut best = 0;
        self.alpha_rec(mask, 0, &mut best);
        best
    }

    fn clique_cover_bound(&self, mask: u64) -> usize {
        let mut left = mask;
        let mut k = 0;
        while left != 0 {
            let v = left.trailing_zeros() as usize;
            let mut clique = 1u64 << v;
            let mut common = self.adj[v] & left;
            while common != 0 {
                let w = common.trailing_zeros() as usize;
                clique |= 1u64 << w;
                common &= self.adj[w];
            }
            left &= !clique;
            k += 1;
        }
        k
    }

    fn alpha_rec(&self, mut mask: u64, have: usize, best: &mut usize) {
        let mut have = have;
        'reduce: loop {
            if mask == 0 {
                *best = (*best).max(have);
                return;
            }
            if have + self.clique_cover_bound(mask) <= *best {
                return;
            }
            let mut top_v = usize::MAX;
            let mut top_d = 0usize;
            for v in bits_of(mask) {
                let d = (self.adj[v] & mask).count_ones() as usize;
                if d <= 1 {
                    // A vertex of degree ≤ 1 is in some maximum independent set.
                    mask &= !((self.adj[v] & mask) | 1u64 << v);
                    have += 1;
                    continue 'reduce;
                }
                if d > top_d {
                    top_d = d;
                    top_v = v;
                }
            }
            // Branch: take top_v or drop it.
            self.alpha_rec(mask & !(self.adj[top_v] | 1u64 << top_v), have + 1, best);
            self.alpha_rec(mask & !(1u64 << top_v), have, best);
            return;
        }
    }

    /// All independent sets of maximum cardinality inside `within`.
    pub fn maximum_independent_sets_in(&self, within: &VertexSet) -> Result<Vec<VertexSet>> {
        self.check_set(within)?;
        let target = self.alpha_mask(within.bits());
        let mut out = Vec::new();
        let mut cur = 0u64;
        self.enum_is(within.bits(), target, &mut cur, &mut out);
        Ok(out.into_iter().map(|bits| VertexSet { bits, n: self.n }).collect())
    }

    fn enum_is(&self, mask: u64, need: usize, cur: &mut u64, out: &mut Vec<u64>) {
        if need == 0 {
            out.push(*cur);
            return;
        }
        if (mask.count_ones() as usize) < need {
            return;
        }
        let v = mask.trailing_zeros() as usize;
        // Include v.
        *cur |= 1u64 << v;
        self.enum_is(mask & !(self.adj[v] | 1u64 << v), need - 1, cur, out);
        *cur &= !(1u64 << v);
        // Exclude v.
        self.enum_is(mask & !(1u64 << v), need, cur, out);
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, m={}; ", self.n, self.edge_count())?;
        for (i, (u, v)) in self.edges().iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{u}-{v}")?;
        }
        write!(f, ")")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn petersen() -> Graph {
        // Outer C5 on 0..5, inner pentagram on 5..10, spokes i−(i+5).
        Graph::from_edges(
            10,
            &[
                (0, 1), (1, 2), (2, 3), (3, 4), (4, 0),
                (5, 7), (7, 9), (9, 6), (6, 8), (8, 5),
                (0, 5), (1, 6), (2, 7), (3, 8), (4, 9),
            ],
        )
        .unwrap()
    }

    #[test]
    fn degrees_and_edges() {
        let k4 = Graph::complete(4);
        assert_eq!(k4.edge_count(), 6);
        assert_eq!(k4.ore_degree(), Some(6));
        assert_eq!(k4.edges(), vec![(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]);
        let p = petersen();
        assert_eq!(p.edge_count(), 15);
        assert!(p.is_connected());
        assert_eq!(p.min_degree(), Some(3));
        assert_eq!(p.ore_degree(), Some(6));
    }

    #[test]
    fn independence_oracles() {
        assert_eq!(Graph::cycle(5).independence_number(), 2);
        assert_eq!(Graph::cycle(7).independence_number(), 3);
        assert_eq!(petersen().independence_number(), 4);
        assert_eq!(Graph::complete(6).independence_number(), 1);
        assert_eq!(Graph::empty(6).unwrap().independence_number(), 6);
        // K_{3,3}
        let k33 = Graph::from_edges(
            6,
            &[(0, 3), (0, 4), (0, 5), (1, 3), (1, 4), (1, 5), (2, 3), (2, 4), (2, 5)],
        )
        .unwrap();
        assert_eq!(k33.independence_number(), 3);
    }

    #[test]
    fn alpha_matches_subset_enumeration() {
        // Independent oracle: full subset scan on every graph over a fixed pool.
        let pool = [
            Graph::cycle(6),
            Graph::path(7),
            Graph::wheel(5),
            petersen(),
            Graph::complete(5),
        ];
        for g in &pool {
            let n = g.n();
            let mut naive = 0usize;
            for mask in 0u64..(1 << n) {
                let mut ok = true;
                'outer: for u in bits_of(mask) {
                    if g.row(u) & mask != 0 {
                        ok = false;
                        break 'outer;
                    }
                }
                if ok {
                    naive = naive.max(mask.count_ones() as usize);
                }
            }
            assert_eq!(g.independence_number(), naive, "{g:?}");
        }
    }

    #[test]
    fn maximum_independent_sets_enumeration() {
        let c5 = Graph::cycle(5);
        let sets = c5.maximum_independent_sets_in(&c5.vertex_set()).unwrap();
        assert_eq!(sets.len(), 5); // C5 has five maximum independent pairs
        for s in &sets {
            assert_eq!(s.card(), 2);
        }
    }

    #[test]
    fn surgery_delete_and_induce() {
        let k4 = Graph::complete(4);
        let (g, map) = k4.delete_vertices(&VertexSet::from_slice(4, &[1]).unwrap()).unwrap();
        assert_eq!(g.n(), 3);
        assert_eq!(g.edge_count(), 3);
        assert_eq!(map, vec![Some(0), None, Some(1), Some(2)]);
    }

    #[test]
    fn surgery_identify() {
        // P4: 0-1-2-3; identifying the two ends yields C3.
        let p4 = Graph::path(4);
        let parts = [VertexSet::from_slice(4, &[0, 3]).unwrap()];
        let (g, map) = p4.identify_vertices(&parts, false).unwrap();
        assert_eq!(g.n(), 3);
        assert_eq!(g.edge_count(), 3);
        assert_eq!(map, vec![0, 1, 2, 0]);
        // Identifying adjacent vertices is rejected…
        let bad = [VertexSet::from_slice(4, &[0, 1]).unwrap()];
        assert!(p4.identify_vertices(&bad, false).is_err());
        // …unless internal edges may be dropped.
        let (g2, _) = p4.identify_vertices(&bad, true).unwrap();
        assert_eq!(g2.n(), 3);
        assert_eq!(g2.edge_count(), 2);
    }

    #[test]
    fn surgery_split() {
        let k4 = Graph::complete(4);
        let p1 = VertexSet::from_slice(4, &[1, 2]).unwrap();
        let p2 = VertexSet::from_slice(4, &[3]).unwrap();
        let (g, z1, z2) = k4.split_vertex(0, &p1, &p2).unwrap();
        assert_eq!((g.n(), z1, z2), (5, 0, 4));
        assert_eq!(g.edge_count(), 6);
        assert_eq!(g.degree(z1), 2);
        assert_eq!(g.degree(z2), 1);
        assert!(!g.has_edge(z1, z2));
        // Parts must partition N(z).
        assert!(k4.split_vertex(0, &p1, &p1).is_err());
        let empty = VertexSet::empty(4);
        let all = VertexSet::from_slice(4, &[1, 2, 3]).unwrap();
        assert!(k4.split_vertex(0, &all, &empty).is_err());
    }

    #[test]
    fn boundary_and_components() {
        let p4 = Graph::path(4);
        let r = VertexSet::from_slice(4, &[0, 1]).unwrap();
        assert_eq!(p4.boundary(&r).unwrap().to_vec(), vec![1]);
        assert!(p4.boundary(&VertexSet::full(4)).is_err());
        let two = Graph::from_edges(5, &[(0, 1), (2, 3), (3, 4)]).unwrap();
        let comps = two.components();
        assert_eq!(comps.len(), 2);
        assert_eq!(comps[0].to_vec(), vec![0, 1]);
        assert_eq!(comps[1].to_vec(), vec![2, 3, 4]);
    }

    #[test]
    fn two_separations_oracle() {
        // C4 separates along both diagonals.
        let c4 = Graph::cycle(4);
        let seps = c4.two_separations().unwrap();
        let pairs: Vec<_> = seps.iter().map(|(p, _)| *p).collect();
        assert_eq!(pairs, vec![(0, 2), (1, 3)]);
        // K4 is 3-connected.
        assert!(Graph::complete(4).two_separations().unwrap().is_empty());
    }

    #[test]
    fn vertex_set_basics() {
        let s = VertexSet::from_slice(6, &[0, 2, 5]).unwrap();
        assert_eq!(s.card(), 3);
        assert_eq!(format!("{s}"), "{0,2,5}");
        assert!(VertexSet::from_bits(3, 0b1000).is_err());
        let t = VertexSet::from_slice(6, &[2, 3]).unwrap();
        assert_eq!(s.intersect(&t).to_vec(), vec![2]);
        assert_eq!(s.union(&t).card(), 4);
        assert_eq!(s.complement().to_vec(), vec![1, 3, 4]);
    }
}
