//! The proof-style graph transformations: rewiring a vertex into a true twin
//! of an anchor, saturating that operation until it no longer applies, and
//! deleting anchor-neighborhood boundary edges while preserving connectivity
//! and the independence number.
//!
//! Every operation is a pure graph-to-graph function. A run on one graph is
//! sequential; distinct graphs can be transformed concurrently.

use crate::counting::{count_mis, count_mis_per_vertex, independence_number};
use crate::error::{Error, Result};
use crate::graph::{bit, iter_set, Graph, VertexSet};

/// One application of the true-twin rewiring.
#[derive(Clone, Debug)]
pub struct TwinStep {
    pub before: Graph,
    pub after: Graph,
    /// Anchor vertex x; its closed neighborhood is fixed across the run.
    pub x: usize,
    /// The rewired vertex y.
    pub y: usize,
    /// N[x], identical in `before` and `after`.
    pub closed_neighborhood: VertexSet,
}

/// A vertex contained in the maximum number of maximum independent sets,
/// lowest index on ties. Errors on disconnected input.
pub fn best_anchor(g: &Graph) -> Result<usize> {
    if !g.is_connected() {
        return Err(Error::NotConnected);
    }
    let counts = count_mis_per_vertex(g);
    let pv = counts.per_vertex.expect("per-vertex counts requested");
    let best = pv
        .iter()
        .enumerate()
        .max_by(|a, b| a.1.cmp(b.1).then(b.0.cmp(&a.0)))
        .map(|(v, _)| v)
        .expect("graphs are nonempty");
    Ok(best)
}

/// Turn `y` into a true twin of `x`: delete all edges at `y`, then join `y`
/// to every vertex of N[x] ∖ {y}. If `y` already is a true twin of `x` the
/// graph comes back unchanged.
///
/// Preserves connectivity, N[x], and the independence number.
pub fn make_true_twin(g: &Graph, x: usize, y: usize) -> Result<Graph> {
    let nx = g.closed_neighborhood(x);
    if y >= g.order() || nx & bit(y) == 0 {
        return Err(Error::NotInClosedNeighborhood { x, y });
    }
    if g.closed_neighborhood(y) == nx {
        return Ok(g.clone());
    }
    if g.is_cutvertex(y)? {
        return Err(Error::CutvertexRewire(y));
    }
    let mut h = g.clone();
    for v in iter_set(g.neighbors(y)) {
        h = h.remove_edge(y, v)?;
    }
    for v in iter_set(nx & !bit(y)) {
        h = h.add_edge(y, v)?;
    }
    debug_assert_eq!(h.closed_neighborhood(x), nx);
    debug_assert!(h.is_connected());
    Ok(h)
}

/// Run the true-twin operation to saturation from the anchor
/// `best_anchor(g)`: repeatedly rewire the lowest-index non-cutvertex
/// y ∈ N[x] with N[y] ≠ N[x], until none remains.
pub fn moon_moser_saturate(g: &Graph) -> Result<Vec<TwinStep>> {
    let x = best_anchor(g)?;
    let nx = g.closed_neighborhood(x);
    let mut current = g.clone();
    let mut steps = Vec::new();
    loop {
        let candidate = iter_set(nx).find(|&y| {
            current.closed_neighborhood(y) != nx
                && !current
                    .is_cutvertex(y)
                    .expect("saturation keeps the graph connected")
        });
        let Some(y) = candidate else {
            break;
        };
        let next = make_true_twin(&current, x, y)?;
        steps.push(TwinStep {
            before: current,
            after: next.clone(),
            x,
            y,
            closed_neighborhood: nx,
        });
        current = next;
        debug_assert!(steps.len() <= nx.count_ones() as usize, "saturation must terminate");
    }
    Ok(steps)
}

/// One edge removal performed by [`reduce_edges`].
#[derive(Clone, Debug)]
pub struct ReduceStep {
    pub removed: (usize, usize),
    pub graph: Graph,
}

/// Remove, in lexicographic order and as long as possible, edges between
/// N[anchor] and the rest of the graph whose removal keeps the graph
/// connected and the independence number unchanged.
pub fn reduce_edges(g: &Graph, anchor: usize) -> Result<Graph> {
    Ok(reduce_edges_trace(g, anchor)?.0)
}

/// Like [`reduce_edges`], also reporting each removal.
pub fn reduce_edges_trace(g: &Graph, anchor: usize) -> Result<(Graph, Vec<ReduceStep>)> {
    if !g.is_connected() {
        return Err(Error::NotConnected);
    }
    if anchor >= g.order() {
        return Err(Error::VertexOutOfRange {
            vertex: anchor,
            order: g.order(),
        });
    }
    let nx = g.closed_neighborhood(anchor);
    let alpha = independence_number(g);
    let mut current = g.clone();
    let mut steps = Vec::new();
    loop {
        let edges: Vec<(usize, usize)> = current.edges().collect();
        let mut removed_one = false;
        for (u, v) in edges {
            let crosses = (nx & bit(u) != 0) != (nx & bit(v) != 0);
            if !crosses {
                continue;
            }
            let candidate = current.remove_edge(u, v)?;
            if candidate.is_connected() && independence_number(&candidate) == alpha {
                steps.push(ReduceStep {
                    removed: (u, v),
                    graph: candidate.clone(),
                });
                current = candidate;
                removed_one = true;
                break;
            }
        }
        if !removed_one {
            break;
        }
    }
    Ok((current, steps))
}

/// A named transformation selectable at runtime. Output is the step
/// sequence; each step carries the intermediate graph and a log line.
pub trait Transform: Sync {
    fn name(&self) -> &'static str;
    fn describe(&self) -> &'static str;
    fn apply(&self, g: &Graph) -> Result<TransformRun>;
}

/// Outcome of applying a transform to one input graph.
#[derive(Clone, Debug)]
pub struct TransformRun {
    pub final_graph: Graph,
    /// (graph after the step, log line) per step, in order.
    pub steps: Vec<(Graph, String)>,
}

struct TwinSaturate;

impl Transform for TwinSaturate {
    fn name(&self) -> &'static str {
        "twin-saturate"
    }
    fn describe(&self) -> &'static str {
        "rewire neighborhood vertices into true twins of the best anchor until stable"
    }
    fn apply(&self, g: &Graph) -> Result<TransformRun> {
        let steps = moon_moser_saturate(g)?;
        let final_graph = steps.last().map(|s| s.after.clone()).unwrap_or_else(|| g.clone());
        let steps = steps
            .into_iter()
            .map(|s| {
                let r = count_mis(&s.after);
                let line = format!(
                    "twin\tx={}\ty={}\talpha={}\tnum_mis={}",
                    s.x, s.y, r.alpha, r.num_mis
                );
                (s.after, line)
            })
            .collect();
        Ok(TransformRun { final_graph, steps })
    }
}

struct ReduceEdges;

impl Transform for ReduceEdges {
    fn name(&self) -> &'static str {
        "reduce-edges"
    }
    fn describe(&self) -> &'static str {
        "delete removable edges between N[anchor] and the rest"
    }
    fn apply(&self, g: &Graph) -> Result<TransformRun> {
        let anchor = best_anchor(g)?;
        let (final_graph, steps) = reduce_edges_trace(g, anchor)?;
        let steps = steps
            .into_iter()
            .map(|s| {
                let r = count_mis(&s.graph);
                let line = format!(
                    "remove\tedge={}-{}\talpha={}\tnum_mis={}",
                    s.removed.0, s.removed.1, r.alpha, r.num_mis
                );
                (s.graph, line)
            })
            .collect();
        Ok(TransformRun { final_graph, steps })
    }
}

/// Registry of the transformations, in CLI listing order.
pub const TRANSFORMS: &[&dyn Transform] = &[&TwinSaturate, &ReduceEdges];

/// Look up a transformation by its registered name.
pub fn transform(name: &str) -> Result<&'static dyn Transform> {
    TRANSFORMS
        .iter()
        .find(|t| t.name() == name)
        .copied()
        .ok_or_else(|| Error::UnknownName {
            what: "transform",
            name: name.to_string(),
            known: TRANSFORMS
                .iter()
                .map(|t| t.name())
                .collect::<Vec<_>>()
                .join(", "),
        })
}
