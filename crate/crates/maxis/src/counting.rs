//! Exact independence number, maximum-independent-set counts, and per-vertex
//! membership counts.
//!
//! The kernel is a branch-and-bound over vertex bitmasks: branch on a
//! maximum-degree vertex (lowest index on ties), either excluding it or
//! including it and deleting its closed neighborhood, pruned by a greedy
//! clique-cover upper bound. Counting runs the same recursion but adds exact
//! `u128` counts at the merge points instead of tracking a single best set.
//! Disconnected graphs are split into components first; the independence
//! number adds up and the counts multiply across components.

use crate::error::{Error, Result};
use crate::graph::{bit, iter_set, Graph, VertexSet};

/// Cap for [`enumerate_mis`]; beyond this the set lists explode.
pub const MAX_ENUMERATION_VERTICES: usize = 30;

/// Result of an exact maximum-independent-set count.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CountResult {
    /// Independence number.
    pub alpha: usize,
    /// Number of maximum independent sets.
    pub num_mis: u128,
    /// `per_vertex[u]` = number of maximum independent sets containing `u`.
    pub per_vertex: Option<Vec<u128>>,
}

fn overflow() -> ! {
    panic!("maximum independent set count overflowed 128 bits")
}

fn checked_add(a: u128, b: u128) -> u128 {
    a.checked_add(b).unwrap_or_else(|| overflow())
}

fn checked_mul(a: u128, b: u128) -> u128 {
    a.checked_mul(b).unwrap_or_else(|| overflow())
}

/// Binomial coefficient as u128; hard error on overflow.
fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = checked_mul(acc, (n - i) as u128) / (i as u128 + 1);
    }
    acc
}

/// Greedy clique cover of the vertices in `mask`; the number of cliques is an
/// upper bound on the independence number of the induced subgraph.
fn clique_cover_bound(adj: &[u64], mask: VertexSet) -> usize {
    let mut rem = mask;
    let mut cliques = 0;
    while rem != 0 {
        let v = rem.trailing_zeros() as usize;
        rem &= !bit(v);
        cliques += 1;
        let mut cand = adj[v] & rem;
        while cand != 0 {
            let u = cand.trailing_zeros() as usize;
            rem &= !bit(u);
            cand &= adj[u] & rem & !bit(u);
        }
    }
    cliques
}

/// Branch vertex: maximum degree within `mask`, lowest index on ties.
fn branch_vertex(adj: &[u64], mask: VertexSet) -> (usize, usize) {
    let mut best_v = mask.trailing_zeros() as usize;
    let mut best_deg = 0;
    for v in iter_set(mask) {
        let deg = (adj[v] & mask).count_ones() as usize;
        if deg > best_deg {
            best_deg = deg;
            best_v = v;
        }
    }
    (best_v, best_deg)
}

fn alpha_rec(adj: &[u64], mask: VertexSet, current: usize, best: &mut usize) {
    if mask == 0 {
        *best = (*best).max(current);
        return;
    }
    let (v, deg) = branch_vertex(adj, mask);
    if deg == 0 {
        *best = (*best).max(current + mask.count_ones() as usize);
        return;
    }
    if current + clique_cover_bound(adj, mask) <= *best {
        return;
    }
    alpha_rec(adj, mask & !(adj[v] | bit(v)), current + 1, best);
    alpha_rec(adj, mask & !bit(v), current, best);
}

/// Number of independent sets of size exactly `need` inside `mask`.
fn count_rec(adj: &[u64], mask: VertexSet, need: usize) -> u128 {
    if need == 0 {
        return 1;
    }
    let free = mask.count_ones() as usize;
    if free < need {
        return 0;
    }
    let (v, deg) = branch_vertex(adj, mask);
    if deg == 0 {
        return binomial(free, need);
    }
    if clique_cover_bound(adj, mask) < need {
        return 0;
    }
    let with_v = count_rec(adj, mask & !(adj[v] | bit(v)), need - 1);
    let without_v = count_rec(adj, mask & !bit(v), need);
    checked_add(with_v, without_v)
}

fn alpha_of_mask(adj: &[u64], mask: VertexSet) -> usize {
    let mut best = 0;
    alpha_rec(adj, mask, 0, &mut best);
    best
}

/// Exact independence number.
pub fn independence_number(g: &Graph) -> usize {
    let adj: Vec<u64> = g.vertices().map(|v| g.neighbors(v)).collect();
    g.components()
        .into_iter()
        .map(|comp| alpha_of_mask(&adj, comp))
        .sum()
}

/// Exact number of maximum independent sets, without per-vertex counts.
pub fn count_mis(g: &Graph) -> CountResult {
    count_impl(g, false)
}

/// Exact count including `per_vertex[u]` for every vertex.
pub fn count_mis_per_vertex(g: &Graph) -> CountResult {
    count_impl(g, true)
}

fn count_impl(g: &Graph, per_vertex: bool) -> CountResult {
    let adj: Vec<u64> = g.vertices().map(|v| g.neighbors(v)).collect();
    let comps = g.components();
    let mut alphas = Vec::with_capacity(comps.len());
    let mut counts = Vec::with_capacity(comps.len());
    for &comp in &comps {
        let a = alpha_of_mask(&adj, comp);
        alphas.push(a);
        counts.push(count_rec(&adj, comp, a));
    }
    let alpha: usize = alphas.iter().sum();
    let num_mis = counts.iter().fold(1u128, |acc, &c| checked_mul(acc, c));
    let per_vertex = per_vertex.then(|| {
        let mut pv = vec![0u128; g.order()];
        for (i, &comp) in comps.iter().enumerate() {
            let others: u128 = counts
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != i)
                .fold(1u128, |acc, (_, &c)| checked_mul(acc, c));
            for u in iter_set(comp) {
                let local = count_rec(&adj, comp & !(adj[u] | bit(u)), alphas[i] - 1);
                pv[u] = checked_mul(local, others);
            }
        }
        pv
    });
    CountResult {
        alpha,
        num_mis,
        per_vertex,
    }
}

/// Number of maximum independent sets containing `u`.
pub fn mis_count_containing(g: &Graph, u: usize) -> u128 {
    let adj: Vec<u64> = g.vertices().map(|v| g.neighbors(v)).collect();
    let alpha = independence_number(g);
    let rest = g.full_set() & !(g.neighbors(u) | bit(u));
    if alpha_of_mask(&adj, rest) + 1 != alpha {
        return 0;
    }
    count_rec(&adj, rest, alpha - 1)
}

/// Every maximum independent set, as sorted vertex lists, sorted overall.
pub fn enumerate_mis(g: &Graph) -> Result<Vec<Vec<usize>>> {
    if g.order() > MAX_ENUMERATION_VERTICES {
        return Err(Error::TooLargeForEnumeration {
            got: g.order(),
            max: MAX_ENUMERATION_VERTICES,
        });
    }
    let adj: Vec<u64> = g.vertices().map(|v| g.neighbors(v)).collect();
    let alpha = independence_number(g);
    let mut sets = Vec::new();
    enumerate_rec(&adj, g.full_set(), alpha, 0, &mut sets);
    let mut out: Vec<Vec<usize>> = sets.into_iter().map(|s| iter_set(s).collect()).collect();
    out.sort();
    Ok(out)
}

fn enumerate_rec(adj: &[u64], mask: VertexSet, need: usize, chosen: VertexSet, out: &mut Vec<VertexSet>) {
    if need == 0 {
        out.push(chosen);
        return;
    }
    if (mask.count_ones() as usize) < need || clique_cover_bound(adj, mask) < need {
        return;
    }
    let (v, _) = branch_vertex(adj, mask);
    enumerate_rec(adj, mask & !(adj[v] | bit(v)), need - 1, chosen | bit(v), out);
    enumerate_rec(adj, mask & !bit(v), need, chosen, out);
}

/// Some vertex contained in no maximum independent set (lowest index), if any.
pub fn vertex_in_no_mis(g: &Graph) -> Option<usize> {
    let counts = count_mis_per_vertex(g);
    let pv = counts.per_vertex.expect("per-vertex counts requested");
    pv.iter().position(|&c| c == 0)
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Independent-set scan over all 2^n subsets; the test oracle.
    fn brute(g: &Graph) -> (usize, u128, Vec<u128>) {
        let n = g.order();
        let adj: Vec<u64> = g.vertices().map(|v| g.neighbors(v)).collect();
        let mut alpha = 0usize;
        let mut count = 0u128;
        let mut pv = vec![0u128; n];
        for mask in 0u64..(1 << n) {
            if iter_set(mask).all(|v| adj[v] & mask == 0) {
                let size = mask.count_ones() as usize;
                match size.cmp(&alpha) {
                    std::cmp::Ordering::Greater => {
                        alpha = size;
                        count = 1;
                        pv = vec![0; n];
                        for v in iter_set(mask) {
                            pv[v] = 1;
                        }
                    }
                    std::cmp::Ordering::Equal => {
                        count += 1;
                        for v in iter_set(mask) {
                            pv[v] += 1;
                        }
                    }
                    std::cmp::Ordering::Less => {}
                }
            }
        }
        (alpha, count, pv)
    }

    fn petersen() -> Graph {
        Graph::new(
            10,
            &[
                (0, 1),
                (1, 2),
                (2, 3),
                (3, 4),
                (4, 0),
                (5, 7),
                (7, 9),
                (9, 6),
                (6, 8),
                (8, 5),
                (0, 5),
                (1, 6),
                (2, 7),
                (3, 8),
                (4, 9),
            ],
        )
        .unwrap()
    }

    #[test]
    fn independence_number_examples() {
        assert_eq!(independence_number(&Graph::complete(6).unwrap()), 1);
        assert_eq!(independence_number(&Graph::cycle(5).unwrap()), 2);
        let p = petersen();
        let (alpha, _, _) = brute(&p);
        assert_eq!(alpha, 4);
        assert_eq!(independence_number(&p), 4);
    }

    #[test]
    fn count_examples() {
        let c5 = Graph::cycle(5).unwrap();
        let r = count_mis(&c5);
        assert_eq!((r.alpha, r.num_mis), (2, 5));

        let k4 = Graph::complete(4).unwrap();
        let r = count_mis_per_vertex(&k4);
        assert_eq!((r.alpha, r.num_mis), (1, 4));
        assert_eq!(r.per_vertex.unwrap(), vec![1, 1, 1, 1]);

        let p4 = Graph::path(4).unwrap();
        let r = count_mis_per_vertex(&p4);
        assert_eq!((r.alpha, r.num_mis), (2, 3));
        assert_eq!(r.per_vertex.unwrap(), vec![2, 1, 1, 2]);
    }

    #[test]
    fn count_matches_brute_on_assorted_graphs() {
        let graphs = vec![
            Graph::cycle(5).unwrap(),
            Graph::cycle(6).unwrap(),
            Graph::path(7).unwrap(),
            Graph::complete(5).unwrap(),
            petersen(),
            Graph::new(6, &[(0, 1), (2, 3), (4, 5)]).unwrap(),
            Graph::new(7, &[(0, 1), (0, 2), (0, 3), (0, 4), (0, 5), (0, 6)]).unwrap(),
        ];
        for g in graphs {
            let (alpha, count, pv) = brute(&g);
            let r = count_mis_per_vertex(&g);
            assert_eq!(r.alpha, alpha, "{g:?}");
            assert_eq!(r.num_mis, count, "{g:?}");
            assert_eq!(r.per_vertex.as_deref().unwrap(), pv.as_slice(), "{g:?}");
        }
    }

    #[test]
    fn per_vertex_identity() {
        for g in [Graph::cycle(7).unwrap(), petersen(), Graph::path(6).unwrap()] {
            let r = count_mis_per_vertex(&g);
            let total: u128 = r.per_vertex.as_deref().unwrap().iter().sum();
            assert_eq!(total, r.alpha as u128 * r.num_mis);
        }
    }

    #[test]
    fn deleting_vertex_in_no_mis_preserves_counts() {
        let star = Graph::new(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        assert_eq!(vertex_in_no_mis(&star), Some(0));
        let reduced = star.delete_vertex(0).unwrap();
        let before = count_mis(&star);
        let after = count_mis(&reduced);
        assert_eq!(before.alpha, after.alpha);
        assert_eq!(before.num_mis, after.num_mis);
    }

    #[test]
    fn vertex_in_no_mis_examples() {
        assert_eq!(vertex_in_no_mis(&Graph::cycle(5).unwrap()), None);
        let k13 = Graph::new(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        assert_eq!(vertex_in_no_mis(&k13), Some(0));
    }

    #[test]
    fn enumerate_examples() {
        let c5 = Graph::cycle(5).unwrap();
        let sets = enumerate_mis(&c5).unwrap();
        assert_eq!(sets.len(), 5);
        assert!(sets.iter().all(|s| s.len() == 2));

        let k3 = Graph::complete(3).unwrap();
        assert_eq!(enumerate_mis(&k3).unwrap(), vec![vec![0], vec![1], vec![2]]);

        assert!(matches!(
            enumerate_mis(&Graph::empty(31).unwrap()),
            Err(Error::TooLargeForEnumeration { got: 31, max: 30 })
        ));
    }

    #[test]
    fn enumeration_agrees_with_count() {
        for g in [Graph::cycle(6).unwrap(), petersen(), Graph::path(5).unwrap()] {
            let sets = enumerate_mis(&g).unwrap();
            let r = count_mis(&g);
            assert_eq!(sets.len() as u128, r.num_mis);
            let mut dedup = sets.clone();
            dedup.dedup();
            assert_eq!(dedup.len(), sets.len());
        }
    }

    #[test]
    fn mis_count_containing_matches_per_vertex() {
        for g in [Graph::cycle(7).unwrap(), petersen()] {
            let r = count_mis_per_vertex(&g);
            let pv = r.per_vertex.unwrap();
            for v in g.vertices() {
                assert_eq!(mis_count_containing(&g, v), pv[v]);
            }
        }
    }

    #[test]
    fn adding_edge_never_increases_alpha_or_count_at_fixed_alpha() {
        let g = Graph::cycle(6).unwrap();
        let before = count_mis(&g);
        for u in 0..6 {
            for v in u + 1..6 {
                if g.has_edge(u, v) {
                    continue;
                }
                let after = count_mis(&g.add_edge(u, v).unwrap());
                assert!(after.alpha <= before.alpha);
                if after.alpha == before.alpha {
                    assert!(after.num_mis <= before.num_mis);
                }
            }
        }
    }
}
