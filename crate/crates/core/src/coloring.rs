//! Proper k-colorings by deterministic backtracking.
//!
//! Colors are `1..=k`. The search assigns vertices in increasing label order
//! and tries colors ascending with forward checking, so `find_coloring`
//! returns the lexicographically least proper assignment and enumeration
//! yields assignment vectors in lexicographic order.

use crate::error::{Error, Result};
use crate::graph::{bits_of, Graph, VertexSet};

/// A proper coloring of the induced subgraph on `domain`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Coloring {
    domain: VertexSet,
    colors: Vec<u8>, // indexed by vertex label; 0 outside the domain
}

impl Coloring {
    pub fn domain(&self) -> VertexSet {
        self.domain
    }

    /// Color of `v`; panics outside the domain.
    pub fn color(&self, v: usize) -> u8 {
        assert!(self.domain.contains(v), "vertex {v} not in coloring domain");
        self.colors[v]
    }

    /// Assignment vector over the domain in increasing vertex order.
    pub fn assignment(&self) -> Vec<u8> {
        self.domain.iter().map(|v| self.colors[v]).collect()
    }

    /// Color classes 1..=k as vertex sets (possibly empty).
    pub fn classes(&self, k: u8) -> Vec<VertexSet> {
        let mut out = vec![VertexSet::empty(self.domain.space()); k as usize];
        for v in self.domain.iter() {
            out[(self.colors[v] - 1) as usize].insert(v);
        }
        out
    }

    pub fn is_proper(&self, g: &Graph) -> bool {
        self.domain
            .iter()
            .all(|v| bits_of(g.row(v) & self.domain.bits()).all(|w| self.colors[v] != self.colors[w]))
    }
}

/// Forbidden colors on a root set: a coloring respects the constraint when
/// every root avoids its forbidden color.
#[derive(Clone, Debug)]
pub struct ForbiddenAssignment {
    roots: VertexSet,
    forbidden: Vec<u8>,
}

impl ForbiddenAssignment {
    /// `f` must assign exactly the roots, each once, colors ≥ 1.
    pub fn new(roots: VertexSet, f: &[(usize, u8)]) -> Result<Self> {
        let mut forbidden = vec![0u8; roots.space()];
        let mut seen = VertexSet::empty(roots.space());
        for &(v, c) in f {
            if !roots.contains(v) {
                return Err(Error::Argument(format!("assignment at non-root vertex {v}")));
            }
            if seen.contains(v) {
                return Err(Error::Argument(format!("vertex {v} assigned twice")));
            }
            if c == 0 {
                return Err(Error::Argument("colors start at 1".into()));
            }
            seen.insert(v);
            forbidden[v] = c;
        }
        if seen != roots {
            return Err(Error::Argument("assignment must cover every root".into()));
        }
        Ok(ForbiddenAssignment { roots, forbidden })
    }

    pub fn roots(&self) -> VertexSet {
        self.roots
    }

    fn mask_at(&self, v: usize) -> u32 {
        if self.roots.contains(v) {
            1u32 << (self.forbidden[v] - 1)
        } else {
            0
        }
    }
}

/// Lexicographically least proper k-coloring of all of `g` respecting the
/// constraint, or `None`.
pub fn find_coloring(g: &Graph, k: usize, forbid: Option<&ForbiddenAssignment>) -> Option<Coloring> {
    assert!(k >= 1 && k <= 32);
    let n = g.n();
    if let Some(f) = forbid {
        assert_eq!(f.roots.space(), n, "constraint over a different label space");
    }
    let full = (1u32 << k) - 1;
    let mut avail: Vec<u32> = (0..n)
        .map(|v| full & !forbid.map_or(0, |f| f.mask_at(v)))
        .collect();
    let mut colors = vec![0u8; n];
    if bt(g, 0, &mut colors, &mut avail) {
        let c = Coloring { domain: VertexSet::full(n), colors };
        debug_assert!(c.is_proper(g));
        Some(c)
    } else {
        None
    }
}

fn bt(g: &Graph, pos: usize, colors: &mut [u8], avail: &mut Vec<u32>) -> bool {
    let n = g.n();
    if pos == n {
        return true;
    }
    let later = g.row(pos) & !((1u64 << pos) | ((1u64 << pos) - 1));
    let mut a = avail[pos];
    while a != 0 {
        let c = a.trailing_zeros();
        a &= a - 1;
        // Forward check: pruning a color from every later neighbor must leave
        // each of them a non-empty palette.
        let saved = avail.clone();
        let mut ok = true;
        for w in bits_of(later) {
            avail[w] &= !(1u32 << c);
            if avail[w] == 0 {
                ok = false;
                break;
            }
        }
        if ok {
            colors[pos] = c as u8 + 1;
            if bt(g, pos + 1, colors, avail) {
                return true;
            }
        }
        *avail = saved;
    }
    colors[pos] = 0;
    false
}

pub fn chromatic_number(g: &Graph) -> usize {
    if g.n() == 0 {
        return 0;
    }
    for k in 1..=g.n() {
        if find_coloring(g, k, None).is_some() {
            return k;
        }
    }
    unreachable!("n colors always suffice")
}

/// Edge-deletion criticality: χ(g) ≥ k while every single-edge deletion is
/// (k−1)-colorable. Vertex criticality, connectivity and minimum degree ≥ k−1
/// all follow; the latter two are double-checked in debug builds.
pub fn is_k_critical(g: &Graph, k: usize) -> bool {
    assert!(k >= 2);
    // Critical graphs are connected; without this gate a disconnected graph
    // whose χ lives entirely in one component (K₄ plus an isolated vertex)
    // would slip through the edge-deletion test.
    if g.edge_count() == 0 || !g.is_connected() {
        return false;
    }
    if find_coloring(g, k - 1, None).is_some() {
        return false;
    }
    for (u, v) in g.edges() {
        let h = g.delete_edge(u, v).expect("edge enumerated from the graph");
        if find_coloring(&h, k - 1, None).is_none() {
            return false;
        }
    }
    debug_assert!(g.is_connected());
    debug_assert!(g.min_degree().unwrap() >= k - 1);
    true
}

/// Streaming enumeration of the proper k-colorings of the induced subgraph on
/// `domain`, in lexicographic order of the assignment vector.
pub fn enumerate_colorings(g: &Graph, k: usize, domain: VertexSet) -> Colorings<'_> {
    assert!(k >= 1 && k <= 32);
    assert_eq!(domain.space(), g.n(), "domain over a different label space");
    Colorings {
        g,
        k: k as u8,
        verts: domain.to_vec(),
        domain,
        partial: Vec::new(),
        started: false,
        done: false,
    }
}

pub struct Colorings<'a> {
    g: &'a Graph,
    k: u8,
    verts: Vec<usize>,
    domain: VertexSet,
    partial: Vec<u8>,
    started: bool,
    done: bool,
}

impl Colorings<'_> {
    fn feasible(&self, pos: usize, c: u8) -> bool {
        let v = self.verts[pos];
        for q in 0..pos {
            if self.partial[q] == c && self.g.has_edge(self.verts[q], v) {
                return false;
            }
        }
        true
    }

    fn emit(&self) -> Coloring {
        let mut colors = vec![0u8; self.g.n()];
        for (q, &v) in self.verts.iter().enumerate() {
            colors[v] = self.partial[q];
        }
        Coloring { domain: self.domain, colors }
    }
}

impl Iterator for Colorings<'_> {
    type Item = Coloring;

    fn next(&mut self) -> Option<Coloring> {
        if self.done {
            return None;
        }
        let m = self.verts.len();
        if m == 0 {
            // Exactly one coloring of the empty domain.
            self.done = true;
            return Some(self.emit());
        }
        let mut pos;
        if self.started {
            pos = m - 1; // advance past the assignment emitted last time
        } else {
            self.started = true;
            self.partial = vec![0; m];
            pos = 0;
        }
        loop {
            let mut chosen = 0u8;
            for c in self.partial[pos] + 1..=self.k {
                if self.feasible(pos, c) {
                    chosen = c;
                    break;
                }
            }
            if chosen == 0 {
                self.partial[pos] = 0;
                if pos == 0 {
                    self.done = true;
                    return None;
                }
                pos -= 1;
            } else {
                self.partial[pos] = chosen;
                if pos == m - 1 {
                    let out = self.emit();
                    debug_assert!(out.is_proper(self.g));
                    return Some(out);
                }
                pos += 1;
            }
        }
    }
}

/// Is there a proper k-coloring of `g` in which every root avoids `f`?
pub fn is_f_k_colorable(g: &Graph, f: &ForbiddenAssignment, k: usize) -> bool {
    find_coloring(g, k, Some(f)).is_some()
}

/// Boundary colorability of the rooted graph `(g, roots)`: for every
/// non-constant `f : roots → {1..k}` some proper k-coloring of `g` avoids `f`
/// pointwise. Needs at least two roots for "non-constant" to mean anything.
pub fn is_boundary_k_colorable(g: &Graph, roots: VertexSet, k: usize) -> Result<bool> {
    if roots.space() != g.n() {
        return Err(Error::Argument("roots over a different label space".into()));
    }
    if roots.card() < 2 {
        return Err(Error::Argument("boundary colorability needs at least two roots".into()));
    }
    let rv = roots.to_vec();
    let mut f = vec![1u8; rv.len()];
    loop {
        if f.iter().any(|&c| c != f[0]) {
            let pairs: Vec<(usize, u8)> = rv.iter().copied().zip(f.iter().copied()).collect();
            let fa = ForbiddenAssignment::new(roots, &pairs)?;
            if !is_f_k_colorable(g, &fa, k) {
                return Ok(false);
            }
        }
        // Odometer over k^|roots| functions.
        let mut i = 0;
        loop {
            if i == f.len() {
                return Ok(true);
            }
            if f[i] < k as u8 {
                f[i] += 1;
                break;
            }
            f[i] = 1;
            i += 1;
        }
    }
}
