//! Collapsible, tight, and cocollapsible subsets, and critical complements.
//!
//! A proper subset R (|R| ≥ 2) of a 4-critical host is *collapsible* when
//! every 3-coloring of G[R] gives all boundary vertices (those with outside
//! neighbors) the same color; sets with |∂R| ≤ 1 qualify vacuously. Its
//! *critical complement* merges ∂R into one vertex and deletes the interior.
//! R is *cocollapsible* when (G[R], ∂R) is boundary-3-colorable and every
//! boundary vertex has exactly one outside neighbor.

use crate::coloring::{find_coloring, is_boundary_k_colorable, is_k_critical};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

fn three_colorable(g: &Graph) -> bool {
    find_coloring(g, 3, None).is_some()
}

/// The collapsibility test with no host preconditions, for callers that
/// quantify over subsets of graphs known to have 3-colorable proper induced
/// subgraphs (4-critical hosts, split graphs of 4-critical hosts). Requires
/// `r` proper with |r| ≥ 2.
///
/// Every 3-coloring of G[r] is constant on ∂r ⟺ |∂r| ≤ 1, or ∂r is
/// independent in G[r] and no G[r]+uv over boundary pairs is 3-colorable
/// (a separating coloring exists exactly when some pair can differ).
pub(crate) fn collapsible_unchecked(g: &Graph, r: &VertexSet) -> bool {
    let boundary = g.boundary(r).expect("subset checked by callers");
    if boundary.card() <= 1 {
        return true;
    }
    let (sub, map) = g.induced(r).expect("subset checked by callers");
    debug_assert!(
        three_colorable(&sub),
        "callers guarantee 3-colorable proper induced subgraphs"
    );
    let bs: Vec<usize> = boundary.iter().map(|v| map[v].unwrap()).collect();
    for i in 0..bs.len() {
        for j in i + 1..bs.len() {
            if sub.has_edge(bs[i], bs[j]) {
                return false;
            }
            let joined = sub.add_edge(bs[i], bs[j]).expect("just checked non-adjacent");
            if three_colorable(&joined) {
                return false;
            }
        }
    }
    true
}

fn require_host_and_subset(g: &Graph, r: &VertexSet) -> Result<()> {
    if r.space() != g.n() {
        return Err(Error::Argument("subset over a different label space".into()));
    }
    if !is_k_critical(g, 4) {
        return Err(Error::Argument(
            "collapsibility is defined in 4-critical hosts".into(),
        ));
    }
    if r.card() < 2 || r.card() == g.n() {
        return Err(Error::Argument(format!(
            "collapsible sets are proper with at least 2 vertices; got |r| = {}",
            r.card()
        )));
    }
    Ok(())
}

/// Is every 3-coloring of G[r] constant on the boundary of `r`?
pub fn is_collapsible(g: &Graph, r: &VertexSet) -> Result<bool> {
    require_host_and_subset(g, r)?;
    Ok(collapsible_unchecked(g, r))
}

/// Merge the boundary of a collapsible `r` into a single vertex and delete
/// the interior. Returns the complement graph and the merged vertex's label.
/// The complement of a collapsible set is 4-critical (asserted).
pub fn critical_complement(g: &Graph, r: &VertexSet) -> Result<(Graph, usize)> {
    if !is_collapsible(g, r)? {
        return Err(Error::Argument(
            "critical complements exist only for collapsible sets".into(),
        ));
    }
    let boundary = g.boundary(r).expect("validated");
    let keep = r.complement().union(&boundary);
    let (h, map) = g.induced(&keep).expect("subset of V");
    let pivot = boundary.iter().next().expect("connected host, proper r");
    let merged: Vec<usize> = boundary.iter().map(|v| map[v].unwrap()).collect();
    let part = VertexSet::from_slice(h.n(), &merged).expect("image labels");
    let (w, idmap) = h
        .identify_vertices(&[part], false)
        .expect("collapsible boundaries are independent");
    let v = idmap[map[pivot].unwrap()];
    assert!(is_k_critical(&w, 4), "complement of a collapsible set is 4-critical");
    Ok((w, v))
}

/// Is G[r]+uv 4-critical (not merely non-3-colorable) for every boundary
/// pair u, v? Requires a collapsible `r`.
pub fn is_tight_collapsible(g: &Graph, r: &VertexSet) -> Result<bool> {
    if !is_collapsible(g, r)? {
        return Err(Error::Argument("tightness is defined for collapsible sets".into()));
    }
    let boundary = g.boundary(r).expect("validated");
    let (sub, map) = g.induced(r).expect("validated");
    let bs: Vec<usize> = boundary.iter().map(|v| map[v].unwrap()).collect();
    for i in 0..bs.len() {
        for j in i + 1..bs.len() {
            let joined = sub.add_edge(bs[i], bs[j]).expect("boundary is independent");
            if !is_k_critical(&joined, 4) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Cocollapsibility of a proper subset, and whether the instance is
/// nontrivial (more than one vertex outside `r`). The second flag classifies
/// the subset only when the first is true.
pub fn is_cocollapsible(g: &Graph, r: &VertexSet) -> Result<(bool, bool)> {
    if r.space() != g.n() {
        return Err(Error::Argument("subset over a different label space".into()));
    }
    if r.card() == g.n() {
        return Err(Error::Argument("cocollapsible sets are proper subsets".into()));
    }
    let nontrivial = g.n() - r.card() > 1;
    let boundary = g.boundary(r).expect("validated");
    for v in boundary.iter() {
        let outside = g.neighbor_set(v).intersect(&r.complement());
        if outside.card() != 1 {
            return Ok((false, nontrivial));
        }
    }
    let (sub, map) = g.induced(r).expect("validated");
    let ok = if boundary.card() < 2 {
        true
    } else {
        let roots: Vec<usize> = boundary.iter().map(|v| map[v].unwrap()).collect();
        let roots = VertexSet::from_slice(sub.n(), &roots).expect("image labels");
        is_boundary_k_colorable(&sub, roots, 3)?
    };
    Ok((ok, nontrivial))
}
