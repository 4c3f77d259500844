//! Small undirected simple graphs with bitset adjacency, plus the graph6
//! interchange format.
//!
//! Vertices are `0..n`. Each neighborhood is a single `u64` bitmask, which
//! caps the supported order at [`MAX_VERTICES`] — the same cap as the
//! single-byte graph6 range. Graph values are immutable; the edge operations
//! return new graphs, so values can be shared freely across threads.

use std::fmt;

use crate::error::{Error, Result};

/// Largest supported graph order (single-byte graph6 range).
pub const MAX_VERTICES: usize = 62;

/// A set of vertices as a bitmask.
pub type VertexSet = u64;

#[inline]
pub(crate) const fn bit(v: usize) -> u64 {
    1u64 << v
}

/// Iterate the vertices of a bitmask in increasing order.
pub fn iter_set(mut set: VertexSet) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if set == 0 {
            None
        } else {
            let v = set.trailing_zeros() as usize;
            set &= set - 1;
            Some(v)
        }
    })
}

/// An undirected simple graph on vertices `0..n`, `n <= 62`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

impl Graph {
    /// Edgeless graph of the given order.
    pub fn empty(n: usize) -> Result<Self> {
        if n == 0 || n > MAX_VERTICES {
            return Err(Error::OrderOutOfRange(n));
        }
        Ok(Graph {
            n,
            adj: vec![0; n],
        })
    }

    /// Graph with exactly the given edges; duplicates collapse.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Self::empty(n)?;
        for &(u, v) in edges {
            g.check_vertex(u)?;
            g.check_vertex(v)?;
            if u == v {
                return Err(Error::LoopEdge(u));
            }
            g.adj[u] |= bit(v);
            g.adj[v] |= bit(u);
        }
        g.debug_check();
        Ok(g)
    }

    /// Complete graph K_n.
    pub fn complete(n: usize) -> Result<Self> {
        let mut g = Self::empty(n)?;
        let all = g.full_set();
        for v in 0..n {
            g.adj[v] = all & !bit(v);
        }
        Ok(g)
    }

    /// Cycle C_n (requires n >= 3).
    pub fn cycle(n: usize) -> Result<Self> {
        let edges: Vec<_> = (0..n).map(|v| (v, (v + 1) % n)).collect();
        Self::new(n, &edges)
    }

    /// Path P_n with edges 0-1-...-(n-1).
    pub fn path(n: usize) -> Result<Self> {
        let edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
        Self::new(n, &edges)
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|a| a.count_ones() as usize).sum::<usize>() / 2
    }

    /// Bitmask of all vertices.
    pub fn full_set(&self) -> VertexSet {
        if self.n == 64 {
            u64::MAX
        } else {
            (1u64 << self.n) - 1
        }
    }

    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.n
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u] & bit(v) != 0
    }

    /// Open neighborhood N(v) as a bitmask.
    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.adj[v]
    }

    /// Closed neighborhood N[v] as a bitmask.
    pub fn closed_neighborhood(&self, v: usize) -> VertexSet {
        self.adj[v] | bit(v)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| iter_set(self.adj[u] & !(bit(u + 1).wrapping_sub(1))).map(move |v| (u, v)))
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v >= self.n {
            Err(Error::VertexOutOfRange {
                vertex: v,
                order: self.n,
            })
        } else {
            Ok(())
        }
    }

    fn debug_check(&self) {
        #[cfg(debug_assertions)]
        for v in 0..self.n {
            debug_assert_eq!(self.adj[v] & bit(v), 0, "loop at {v}");
            debug_assert_eq!(self.adj[v] & !self.full_set(), 0, "stray bits at {v}");
            for u in iter_set(self.adj[v]) {
                debug_assert_ne!(self.adj[u] & bit(v), 0, "asymmetric edge {u}-{v}");
            }
        }
    }

    /// New graph with the edge present. Idempotent on existing edges.
    pub fn add_edge(&self, u: usize, v: usize) -> Result<Self> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::LoopEdge(u));
        }
        let mut g = self.clone();
        g.adj[u] |= bit(v);
        g.adj[v] |= bit(u);
        g.debug_check();
        Ok(g)
    }

    /// New graph with the edge absent. Idempotent on missing edges.
    pub fn remove_edge(&self, u: usize, v: usize) -> Result<Self> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::LoopEdge(u));
        }
        let mut g = self.clone();
        g.adj[u] &= !bit(v);
        g.adj[v] &= !bit(u);
        g.debug_check();
        Ok(g)
    }

    /// Subgraph induced by `keep`, vertices relabeled in increasing order.
    pub fn induced(&self, keep: VertexSet) -> Result<Self> {
        let keep = keep & self.full_set();
        let verts: Vec<usize> = iter_set(keep).collect();
        if verts.is_empty() {
            return Err(Error::OrderOutOfRange(0));
        }
        let mut g = Self::empty(verts.len())?;
        for (i, &u) in verts.iter().enumerate() {
            for (j, &v) in verts.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.adj[i] |= bit(j);
                    g.adj[j] |= bit(i);
                }
            }
        }
        g.debug_check();
        Ok(g)
    }

    /// `G - v`: remove a vertex, shifting higher labels down by one.
    pub fn delete_vertex(&self, v: usize) -> Result<Self> {
        self.check_vertex(v)?;
        self.induced(self.full_set() & !bit(v))
    }

    /// Extend by one vertex labeled `n`, adjacent to the vertices of `neighbors`.
    pub(crate) fn with_added_vertex(&self, neighbors: VertexSet) -> Self {
        debug_assert!(self.n < MAX_VERTICES);
        debug_assert_eq!(neighbors & !self.full_set(), 0);
        let mut adj = self.adj.clone();
        adj.push(neighbors);
        for u in iter_set(neighbors) {
            adj[u] |= bit(self.n);
        }
        let g = Graph {
            n: self.n + 1,
            adj,
        };
        g.debug_check();
        g
    }

    /// Relabel through `perm`, where `perm[v]` is the new label of `v`.
    pub fn permuted(&self, perm: &[usize]) -> Self {
        debug_assert_eq!(perm.len(), self.n);
        let mut adj = vec![0u64; self.n];
        for v in 0..self.n {
            for u in iter_set(self.adj[v]) {
                adj[perm[v]] |= bit(perm[u]);
            }
        }
        let g = Graph { n: self.n, adj };
        g.debug_check();
        g
    }

    /// Vertices reachable from `start` while staying inside `within`.
    pub(crate) fn reachable(&self, start: usize, within: VertexSet) -> VertexSet {
        debug_assert_ne!(within & bit(start), 0);
        let mut seen = bit(start);
        let mut frontier = bit(start);
        while frontier != 0 {
            let mut next = 0u64;
            for v in iter_set(frontier) {
                next |= self.adj[v] & within & !seen;
            }
            seen |= next;
            frontier = next;
        }
        seen
    }

    pub fn is_connected(&self) -> bool {
        self.reachable(0, self.full_set()) == self.full_set()
    }

    /// Connected components as bitmasks, ordered by smallest vertex.
    pub fn components(&self) -> Vec<VertexSet> {
        let mut out = Vec::new();
        let mut left = self.full_set();
        while left != 0 {
            let v = left.trailing_zeros() as usize;
            let comp = self.reachable(v, left);
            out.push(comp);
            left &= !comp;
        }
        out
    }

    /// Whether removing `v` disconnects the graph. Errors on disconnected input.
    pub fn is_cutvertex(&self, v: usize) -> Result<bool> {
        self.check_vertex(v)?;
        if !self.is_connected() {
            return Err(Error::NotConnected);
        }
        if self.n == 1 {
            return Ok(false);
        }
        let rest = self.full_set() & !bit(v);
        let start = rest.trailing_zeros() as usize;
        Ok(self.reachable(start, rest) != rest)
    }

    /// Upper-triangle adjacency bits in graph6 order: x(0,1), x(0,2), x(1,2),
    /// x(0,3), ... — one column per vertex `v >= 1`, each column packed into a
    /// `u64` with bit `u` set iff `u ~ v` for `u < v`.
    pub fn triangle_columns(&self) -> Vec<u64> {
        (1..self.n)
            .map(|v| self.adj[v] & (bit(v) - 1))
            .collect()
    }

    /// Standard graph6 encoding (single-byte order, n <= 62).
    pub fn to_graph6(&self) -> String {
        let mut bytes = vec![(self.n as u8) + 63];
        let mut acc: u32 = 0;
        let mut nbits = 0;
        for v in 1..self.n {
            for u in 0..v {
                acc = (acc << 1) | u32::from(self.has_edge(u, v));
                nbits += 1;
                if nbits == 6 {
                    bytes.push(acc as u8 + 63);
                    acc = 0;
                    nbits = 0;
                }
            }
        }
        if nbits > 0 {
            acc <<= 6 - nbits;
            bytes.push(acc as u8 + 63);
        }
        String::from_utf8(bytes).expect("graph6 bytes are printable ASCII")
    }

    /// Decode one graph6 line (no trailing newline).
    pub fn from_graph6(line: &str) -> Result<Self> {
        let bytes = line.as_bytes();
        if bytes.is_empty() {
            return Err(Error::Graph6Empty);
        }
        for (index, &byte) in bytes.iter().enumerate() {
            if !(63..=126).contains(&byte) {
                return Err(Error::Graph6Byte { byte, index });
            }
        }
        if bytes[0] == 126 {
            // multi-byte order marker; anything it encodes is above our cap
            return Err(Error::Graph6Order(63));
        }
        let n = (bytes[0] - 63) as usize;
        if n == 0 || n > MAX_VERTICES {
            return Err(Error::OrderOutOfRange(n));
        }
        let nbits = n * (n - 1) / 2;
        let expected = 1 + nbits.div_ceil(6);
        if bytes.len() != expected {
            return Err(Error::Graph6Length {
                expected,
                got: bytes.len(),
            });
        }
        let mut g = Self::empty(n)?;
        let mut idx = 0;
        'outer: for v in 1..n {
            for u in 0..v {
                let byte = bytes[1 + idx / 6] - 63;
                let b = (byte >> (5 - idx % 6)) & 1;
                if b != 0 {
                    g.adj[u] |= bit(v);
                    g.adj[v] |= bit(u);
                }
                idx += 1;
                if idx == nbits {
                    break 'outer;
                }
            }
        }
        g.debug_check();
        Ok(g)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges=[", self.n)?;
        for (i, (u, v)) in self.edges().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{u}-{v}")?;
        }
        write!(f, "])")
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_graph6())
    }
}
