//! Good edges and good graphs.
//!
//! An edge `uv` is good when `N[u] ∪ N[v]` is the whole vertex set. A graph
//! is good when it is connected, has at least one edge, and every edge is
//! good. Edgeless graphs (including `K_1`) are excluded by convention.

use std::fmt;

use crate::error::GraphError;
use crate::graph::Graph;
use crate::traversal::is_connected;

/// Verdict for one edge.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EdgeGoodness {
    Good,
    /// `witness` is adjacent to neither endpoint.
    Bad { witness: usize },
}

impl EdgeGoodness {
    pub fn is_good(&self) -> bool {
        matches!(self, EdgeGoodness::Good)
    }

    pub fn witness(&self) -> Option<usize> {
        match *self {
            EdgeGoodness::Good => None,
            EdgeGoodness::Bad { witness } => Some(witness),
        }
    }
}

/// Lowest vertex outside `N[u] ∪ N[v]`, if any.
fn uncovered(g: &Graph, u: usize, v: usize) -> Option<usize> {
    let covered = g.neighbor_mask(u) | g.neighbor_mask(v) | 1 << u | 1 << v;
    let missing = g.vertex_mask() & !covered;
    (missing != 0).then(|| missing.trailing_zeros() as usize)
}

pub fn is_good_edge(g: &Graph, u: usize, v: usize) -> Result<EdgeGoodness, GraphError> {
    g.check_vertex(u)?;
    g.check_vertex(v)?;
    if !g.has_edge(u, v) {
        return Err(GraphError::NotAnEdge(u, v));
    }
    Ok(match uncovered(g, u, v) {
        None => EdgeGoodness::Good,
        Some(witness) => EdgeGoodness::Bad { witness },
    })
}

/// Per-edge verdicts plus the overall membership verdict.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GoodnessReport {
    /// One entry per edge `(u, v)`, `u < v`, in edge order.
    pub edges: Vec<((usize, usize), EdgeGoodness)>,
    pub connected: bool,
    pub is_good_graph: bool,
}

impl GoodnessReport {
    pub fn bad_edges(&self) -> impl Iterator<Item = ((usize, usize), usize)> + '_ {
        self.edges
            .iter()
            .filter_map(|&(e, verdict)| verdict.witness().map(|w| (e, w)))
    }

    pub fn verdict(&self, u: usize, v: usize) -> Option<EdgeGoodness> {
        let key = (u.min(v), u.max(v));
        self.edges
            .iter()
            .find(|(e, _)| *e == key)
            .map(|&(_, verdict)| verdict)
    }
}

impl fmt::Display for GoodnessReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &((u, v), verdict) in &self.edges {
            match verdict {
                EdgeGoodness::Good => writeln!(f, "{u}-{v} good")?,
                EdgeGoodness::Bad { witness } => {
                    writeln!(f, "{u}-{v} bad (misses {witness})")?
                }
            }
        }
        write!(
            f,
            "good graph: {}",
            if self.is_good_graph { "yes" } else { "no" }
        )
    }
}

pub fn is_good_graph(g: &Graph) -> GoodnessReport {
    let edges: Vec<_> = g
        .edges()
        .map(|(u, v)| {
            let verdict = match uncovered(g, u, v) {
                None => EdgeGoodness::Good,
                Some(witness) => EdgeGoodness::Bad { witness },
            };
            ((u, v), verdict)
        })
        .collect();
    let connected = is_connected(g);
    let is_good_graph = connected && !edges.is_empty() && edges.iter().all(|(_, v)| v.is_good());
    GoodnessReport {
        edges,
        connected,
        is_good_graph,
    }
}

/// Shorthand for `is_good_graph(g).is_good_graph` without building the report.
pub fn is_good(g: &Graph) -> bool {
    g.size() > 0 && is_connected(g) && g.edges().all(|(u, v)| uncovered(g, u, v).is_none())
}
