//! Isomorph-free exhaustive generation of small graphs by orderly extension.
//!
//! Every canonical representative on `k` vertices is extended by a new
//! highest-labeled vertex over all neighbor subsets; a candidate is kept
//! exactly when its labeling equals its own canonical form. Because the
//! canonical order is the lexicographically minimal column-major triangle
//! string, deleting the highest vertex of a canonically labeled graph leaves
//! a canonically labeled graph, so every isomorphism class on `k + 1`
//! vertices is produced from exactly one (parent, subset) pair.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::iso::is_canonically_labeled;

/// Cap for internal generation; beyond this, use an external graph6 catalog.
pub const MAX_GENERATION_ORDER: usize = 10;

/// All canonically labeled children of `parent` obtained by adding one vertex.
pub fn extend(parent: &Graph, mut visit: impl FnMut(Graph)) {
    let k = parent.order();
    for neighbors in 0u64..(1 << k) {
        let child = parent.with_added_vertex(neighbors);
        if is_canonically_labeled(&child) {
            visit(child);
        }
    }
}

/// One canonically labeled representative per isomorphism class of order `n`
/// (all graphs, connected or not).
pub fn representatives(n: usize) -> Result<Vec<Graph>> {
    if n == 0 || n > MAX_GENERATION_ORDER {
        return Err(Error::GenerationRange {
            got: n,
            max: MAX_GENERATION_ORDER,
        });
    }
    let mut level = vec![Graph::empty(1)?];
    for _ in 1..n {
        let mut next = Vec::new();
        for parent in &level {
            extend(parent, |child| next.push(child));
        }
        level = next;
    }
    Ok(level)
}

/// Exactly one representative per isomorphism class, optionally filtered to
/// connected graphs.
pub fn generate_graphs(n: usize, connected_only: bool) -> Result<Vec<Graph>> {
    let mut graphs = representatives(n)?;
    if connected_only {
        graphs.retain(Graph::is_connected);
    }
    Ok(graphs)
}
