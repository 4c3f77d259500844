#![allow(dead_code)] // each test binary uses its own subset of the oracles

//! Independent test oracles: exhaustive subset scans and brute-force labeled
//! isomorphism, deliberately sharing no code with the library's counting and
//! canonical-labeling paths.

use maxis::graph::{iter_set, Graph};
use rand::rngs::StdRng;
use rand::RngExt;

/// Exhaustive 2^n subset scan: (independence number, #MIS, per-vertex #MIS).
pub fn brute_force_mis(g: &Graph) -> (usize, u128, Vec<u128>) {
    let n = g.order();
    assert!(n <= 20, "oracle is exponential");
    let adj: Vec<u64> = g.vertices().map(|v| g.neighbors(v)).collect();
    let mut alpha = 0usize;
    let mut count = 0u128;
    let mut per_vertex = vec![0u128; n];
    for mask in 0u64..(1 << n) {
        if iter_set(mask).any(|v| adj[v] & mask != 0) {
            continue;
        }
        let size = mask.count_ones() as usize;
        if size > alpha {
            alpha = size;
            count = 0;
            per_vertex = vec![0; n];
        }
        if size == alpha {
            count += 1;
            for v in iter_set(mask) {
                per_vertex[v] += 1;
            }
        }
    }
    (alpha, count, per_vertex)
}

pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..n {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out
}

/// Upper-triangle pairs (u, v), u < v, in graph6 bit order.
pub fn triangle_pairs(n: usize) -> Vec<(usize, usize)> {
    (1..n).flat_map(|v| (0..v).map(move |u| (u, v))).collect()
}

fn permute_edge_mask(mask: u64, perm: &[usize], pairs: &[(usize, usize)], index: &[Vec<usize>]) -> u64 {
    let mut out = 0u64;
    for (i, &(u, v)) in pairs.iter().enumerate() {
        if mask & (1 << i) != 0 {
            let (a, b) = (perm[u], perm[v]);
            let (a, b) = (a.min(b), a.max(b));
            out |= 1 << index[a][b];
        }
    }
    out
}

/// Count isomorphism classes of graphs of order `n` by brute force over all
/// labeled graphs and all vertex permutations. Independent of the library's
/// generator and canonical form.
pub fn labeled_class_count(n: usize, connected_only: bool) -> usize {
    let pairs = triangle_pairs(n);
    let nbits = pairs.len();
    assert!(nbits <= 15, "oracle is doubly exponential");
    let mut index = vec![vec![0usize; n]; n];
    for (i, &(u, v)) in pairs.iter().enumerate() {
        index[u][v] = i;
    }
    let perms = permutations(n);
    let mut classes = 0;
    for mask in 0u64..(1 << nbits) {
        let is_min = perms
            .iter()
            .all(|p| permute_edge_mask(mask, p, &pairs, &index) >= mask);
        if !is_min {
            continue;
        }
        if connected_only {
            let edges: Vec<_> = pairs
                .iter()
                .enumerate()
                .filter(|&(i, _)| mask & (1 << i) != 0)
                .map(|(_, &e)| e)
                .collect();
            if !Graph::new(n, &edges).unwrap().is_connected() {
                continue;
            }
        }
        classes += 1;
    }
    classes
}

pub fn random_graph(rng: &mut StdRng, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.random_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, &edges).unwrap()
}

pub fn random_connected_graph(rng: &mut StdRng, n: usize, p: f64) -> Graph {
    loop {
        let g = random_graph(rng, n, p);
        if g.is_connected() {
            return g;
        }
    }
}
