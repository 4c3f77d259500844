//! Canonical labeling, isomorphism testing, and recognition of the extremal
//! graphs and families.
//!
//! The canonical form of a graph is its lexicographically minimal
//! upper-triangle adjacency bit-string over all vertex relabelings, in graph6
//! bit order (column-major: one column per vertex, listing adjacencies to all
//! lower positions). The search fills canonical positions left to right,
//! keeping at each level exactly the partial labelings that achieve the
//! minimal next column; siblings that differ by a transposition of twin
//! vertices are collapsed, which keeps unions of cliques and other
//! twin-heavy graphs (the extremal constructions here) cheap.
//!
//! Column-major bit order gives the form a property the generator in
//! [`crate::generate`] relies on: deleting the highest canonical position of
//! a minimally labeled graph leaves a minimally labeled graph.

use crate::constructions::{build_f, build_g};
use crate::counting::independence_number;
use crate::error::{Error, Result};
use crate::graph::{bit, iter_set, Graph};

/// Isomorphism-invariant representative of a graph.
///
/// `cols[k]` holds the adjacency column of canonical position `k + 1`
/// against positions `0..=k`, bit `i` set iff position `i` is adjacent.
/// Equal forms ⇔ isomorphic graphs.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm {
    n: usize,
    cols: Vec<u64>,
}

impl CanonicalForm {
    pub fn order(&self) -> usize {
        self.n
    }

    /// Wrap a graph already known to be canonically labeled (e.g. produced by
    /// the orderly generator) without re-running the search.
    pub(crate) fn assume_canonical(g: &Graph) -> CanonicalForm {
        debug_assert!(is_canonically_labeled(g));
        CanonicalForm {
            n: g.order(),
            cols: g.triangle_columns(),
        }
    }

    /// The canonically relabeled graph.
    pub fn to_graph(&self) -> Graph {
        let mut edges = Vec::new();
        for (k, &col) in self.cols.iter().enumerate() {
            for i in iter_set(col) {
                edges.push((i, k + 1));
            }
        }
        Graph::new(self.n, &edges).expect("canonical form encodes a valid graph")
    }

    /// graph6 encoding of the canonical relabeling.
    pub fn to_graph6(&self) -> String {
        self.to_graph().to_graph6()
    }
}

/// Transposing `u` and `v` is an automorphism iff they are twins
/// (equal neighborhoods apart from each other).
#[inline]
fn twin_transposition(adj: &[u64], u: usize, v: usize) -> bool {
    adj[u] & !bit(v) == adj[v] & !bit(u)
}

/// One partial labeling surviving the minimal-column search.
#[derive(Clone)]
struct Prefix {
    used: u64,
    /// `col_of[w]`: adjacency bits of `w` against the chosen positions,
    /// bit-reversed (position `i` at bit `63 - i`) so that numeric order
    /// equals lexicographic order on the column.
    col_of: Vec<u64>,
}

/// Core search. Returns the minimal columns (bit-reversed), or `None` as soon
/// as some level beats `reference` when early-exit is requested.
fn min_columns(g: &Graph, reference: Option<&[u64]>) -> Option<Vec<u64>> {
    let n = g.order();
    let adj: Vec<u64> = g.vertices().map(|v| g.neighbors(v)).collect();
    let full = g.full_set();
    let mut survivors = vec![Prefix {
        used: 0,
        col_of: vec![0; n],
    }];
    let mut cols = Vec::with_capacity(n.saturating_sub(1));
    for k in 0..n {
        let mut min_col = u64::MAX;
        let mut picks: Vec<(usize, usize)> = Vec::new();
        for (si, s) in survivors.iter().enumerate() {
            let mut explored: Vec<usize> = Vec::new();
            for w in iter_set(full & !s.used) {
                if explored.iter().any(|&v| twin_transposition(&adj, v, w)) {
                    continue;
                }
                explored.push(w);
                let col = s.col_of[w];
                if col < min_col {
                    min_col = col;
                    picks.clear();
                }
                if col == min_col {
                    picks.push((si, w));
                }
            }
        }
        if k >= 1 {
            if let Some(reference) = reference {
                let ref_col = mirror_bits(reference[k - 1]);
                debug_assert!(min_col <= ref_col, "reference labeling beats the minimum");
                if min_col != ref_col {
                    return None;
                }
            }
            cols.push(min_col);
        }
        let mut next = Vec::with_capacity(picks.len());
        for (si, w) in picks {
            let s = &survivors[si];
            let mut col_of = s.col_of.clone();
            for x in iter_set(adj[w] & full & !s.used & !bit(w)) {
                col_of[x] |= 1 << (63 - k);
            }
            next.push(Prefix {
                used: s.used | bit(w),
                col_of,
            });
        }
        survivors = next;
    }
    Some(cols)
}

/// Swap between the plain convention (bit `i` = position `i`) and the
/// search's comparison convention (position `i` at bit `63 - i`); involution.
fn mirror_bits(col: u64) -> u64 {
    iter_set(col).fold(0, |acc, i| acc | bit(63 - i))
}

/// Canonical form of a graph; invariant under vertex relabeling.
pub fn canonical_form(g: &Graph) -> CanonicalForm {
    let cols = min_columns(g, None).expect("unconditional search always completes");
    CanonicalForm {
        n: g.order(),
        cols: cols.into_iter().map(mirror_bits).collect(),
    }
}

/// Lexicographic order on triangle bit-strings given as plain columns
/// (earlier bit = more significant).
fn lex_less(a: u64, b: u64) -> bool {
    if a == b {
        return false;
    }
    let j = (a ^ b).trailing_zeros();
    a & (1 << j) == 0
}

/// Whether transposing positions `i` and `i + 1` strictly lowers the
/// triangle string. Cheap necessary-condition filter for canonicity.
fn adjacent_swap_lowers(g: &Graph, cols: &[u64], i: usize) -> bool {
    let low = bit(i) - 1;
    // columns at positions < i are untouched; walk the affected suffix
    for (k, &col) in cols.iter().enumerate().skip(i.saturating_sub(1)) {
        let position = k + 1;
        let new_col = if position == i {
            g.neighbors(i + 1) & low
        } else if position == i + 1 {
            (g.neighbors(i) & low) | (col & bit(i))
        } else if (col >> i ^ col >> (i + 1)) & 1 != 0 {
            col ^ (bit(i) | bit(i + 1))
        } else {
            col
        };
        if new_col != col {
            return lex_less(new_col, col);
        }
    }
    false
}

/// Whether the graph's own labeling already is the canonical one.
///
/// Equivalent to `canonical_form(g).to_graph() == *g` but exits as soon as a
/// better labeling is known to exist.
pub fn is_canonically_labeled(g: &Graph) -> bool {
    let triangle = g.triangle_columns();
    for i in 0..g.order().saturating_sub(1) {
        if adjacent_swap_lowers(g, &triangle, i) {
            return false;
        }
    }
    min_columns(g, Some(&triangle)).is_some()
}

/// Isomorphism test via canonical forms, with cheap invariant prefilters.
pub fn are_isomorphic(a: &Graph, b: &Graph) -> bool {
    if a.order() != b.order() || a.edge_count() != b.edge_count() {
        return false;
    }
    if degree_multiset(a) != degree_multiset(b) {
        return false;
    }
    canonical_form(a) == canonical_form(b)
}

fn degree_multiset(g: &Graph) -> Vec<usize> {
    let mut d: Vec<usize> = g.vertices().map(|v| g.degree(v)).collect();
    d.sort_unstable();
    d
}

/// Which extremal construction, if any, a graph matches.
#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
pub enum FamilyKind {
    /// Isomorphic to G(n,α), the disjoint balanced cliques.
    #[serde(rename = "G-extremal")]
    GExtremal,
    /// Isomorphic to F(n,α) (the n/α ≥ 2 regime).
    #[serde(rename = "F-extremal")]
    FExtremal,
    /// Member of ℱ(n,α) in the n/α < 2 regime.
    #[serde(rename = "family-member")]
    FamilyMember,
    /// The cycle C₅ at (n,α) = (5,2).
    #[serde(rename = "C5-exception")]
    C5Exception,
    #[serde(rename = "none")]
    None,
}

impl std::fmt::Display for FamilyKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            FamilyKind::GExtremal => "G-extremal",
            FamilyKind::FExtremal => "F-extremal",
            FamilyKind::FamilyMember => "family-member",
            FamilyKind::C5Exception => "C5-exception",
            FamilyKind::None => "none",
        };
        f.write_str(s)
    }
}

/// Result of matching a graph against the extremal constructions for (n,α).
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct FamilyDescriptor {
    pub n: usize,
    pub alpha: usize,
    pub kind: FamilyKind,
    /// Every vertex that can serve as the special cutvertex x₀.
    pub special_cutvertices: Vec<usize>,
}

/// Vertices whose removal leaves a graph isomorphic to G(n−1,α).
fn special_cutvertex_candidates(g: &Graph, alpha: usize) -> Result<Vec<usize>> {
    let n = g.order();
    debug_assert!(n >= 2);
    let target = build_g(n - 1, alpha)?;
    let target_edges = target.edge_count();
    let target_form = canonical_form(&target);
    let mut found = Vec::new();
    for v in g.vertices() {
        if g.edge_count() - g.degree(v) != target_edges {
            continue;
        }
        let residual = g.delete_vertex(v)?;
        if canonical_form(&residual) == target_form {
            found.push(v);
        }
    }
    Ok(found)
}

/// Classify a graph of order `n` and independence number `alpha` against the
/// extremal constructions. Both parameters are re-checked.
pub fn classify_extremal(g: &Graph, n: usize, alpha: usize) -> Result<FamilyDescriptor> {
    if g.order() != n {
        return Err(Error::OrderMismatch {
            supplied: n,
            actual: g.order(),
        });
    }
    let actual = independence_number(g);
    if actual != alpha {
        return Err(Error::AlphaMismatch {
            supplied: alpha,
            actual,
        });
    }

    let mut kind = FamilyKind::None;
    let mut special = Vec::new();

    if are_isomorphic(g, &build_g(n, alpha)?) {
        kind = FamilyKind::GExtremal;
    } else if alpha < n && n >= 2 * alpha {
        if are_isomorphic(g, &build_f(n, alpha)?) {
            kind = FamilyKind::FExtremal;
            special = special_cutvertex_candidates(g, alpha)?;
        } else if (n, alpha) == (5, 2) && are_isomorphic(g, &Graph::cycle(5)?) {
            kind = FamilyKind::C5Exception;
        }
    } else if alpha < n && g.is_connected() {
        special = special_cutvertex_candidates(g, alpha)?;
        if !special.is_empty() {
            kind = FamilyKind::FamilyMember;
        }
    }

    Ok(FamilyDescriptor {
        n,
        alpha,
        kind,
        special_cutvertices: special,
    })
}
