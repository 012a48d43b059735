//! Simple undirected graphs on at most [`MAX_ORDER`] vertices.
//!
//! Adjacency is one `u64` bitmask row per vertex, so neighborhoods and vertex
//! subsets are plain word operations.

use std::fmt;

use crate::error::GraphError;

/// Hard cap on the order of a [`Graph`].
pub const MAX_ORDER: usize = 62;

/// Iterator over the set bits of a word, lowest first.
#[derive(Clone, Copy, Debug)]
pub struct Bits(pub u64);

impl Iterator for Bits {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let c = self.0.count_ones() as usize;
        (c, Some(c))
    }
}

impl ExactSizeIterator for Bits {}

#[inline]
pub(crate) fn full_mask(n: usize) -> u64 {
    if n == 0 {
        0
    } else {
        u64::MAX >> (64 - n)
    }
}

/// A subset of the vertices of some host graph.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct VertexSet {
    host: usize,
    bits: u64,
}

impl VertexSet {
    pub fn empty(host: usize) -> Self {
        debug_assert!(host <= MAX_ORDER);
        VertexSet { host, bits: 0 }
    }

    pub fn full(host: usize) -> Self {
        debug_assert!(host <= MAX_ORDER);
        VertexSet {
            host,
            bits: full_mask(host),
        }
    }

    /// Builds a set from a raw mask, rejecting bits at or above `host`.
    pub fn from_bits(host: usize, bits: u64) -> Result<Self, GraphError> {
        if host > MAX_ORDER {
            return Err(GraphError::Unsupported(format!(
                "order {host} exceeds {MAX_ORDER}"
            )));
        }
        let stray = bits & !full_mask(host);
        if stray != 0 {
            return Err(GraphError::InvalidVertex {
                vertex: stray.trailing_zeros() as usize,
                order: host,
            });
        }
        Ok(VertexSet { host, bits })
    }

    pub fn from_vertices<I>(host: usize, vertices: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = usize>,
    {
        let mut set = VertexSet::empty(host);
        for v in vertices {
            set.insert(v)?;
        }
        Ok(set)
    }

    pub fn insert(&mut self, v: usize) -> Result<(), GraphError> {
        if v >= self.host {
            return Err(GraphError::InvalidVertex {
                vertex: v,
                order: self.host,
            });
        }
        self.bits |= 1 << v;
        Ok(())
    }

    #[inline]
    pub fn contains(&self, v: usize) -> bool {
        v < self.host && self.bits >> v & 1 == 1
    }

    #[inline]
    pub fn bits(&self) -> u64 {
        self.bits
    }

    #[inline]
    pub fn host_order(&self) -> usize {
        self.host
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.bits.count_ones() as usize
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.bits == 0
    }

    pub fn iter(&self) -> Bits {
        Bits(self.bits)
    }

    /// Vertices of the host that are not members.
    pub fn complement(&self) -> Self {
        VertexSet {
            host: self.host,
            bits: !self.bits & full_mask(self.host),
        }
    }

    pub fn union(&self, other: &VertexSet) -> Self {
        VertexSet {
            host: self.host.max(other.host),
            bits: self.bits | other.bits,
        }
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str("}")
    }
}

/// Degree of a vertex together with the ascending degrees of its neighbors.
///
/// A vertex with profile `(d_1, ..., d_q)` has degree `q`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct DegreeProfile {
    neighbor_degrees: Vec<usize>,
}

impl DegreeProfile {
    pub fn degree(&self) -> usize {
        self.neighbor_degrees.len()
    }

    pub fn neighbor_degrees(&self) -> &[usize] {
        &self.neighbor_degrees
    }

    /// True when every neighbor has degree `d`.
    pub fn all_neighbors_have_degree(&self, d: usize) -> bool {
        self.neighbor_degrees.iter().all(|&x| x == d)
    }
}

impl fmt::Display for DegreeProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, d) in self.neighbor_degrees.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{d}")?;
        }
        f.write_str(")")
    }
}

/// Result of deleting a vertex set: the remaining induced subgraph, relabeled
/// compactly in ascending original order, and the map back to original labels.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InducedSubgraph {
    pub graph: Graph,
    /// `original[new] = old`.
    pub original: Vec<usize>,
}

impl InducedSubgraph {
    pub fn new_label(&self, old: usize) -> Option<usize> {
        self.original.binary_search(&old).ok()
    }
}

/// A simple undirected graph with vertices `0..n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    rows: Vec<u64>,
    m: usize,
}

impl Graph {
    /// The edgeless graph of order `n`.
    pub fn empty(n: usize) -> Result<Self, GraphError> {
        check_order(n)?;
        Ok(Graph {
            rows: vec![0; n],
            m: 0,
        })
    }

    /// Strict constructor: self-loops, out-of-range indices and repeated
    /// edges are all errors.
    pub fn from_edge_list(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub(crate) fn from_rows(rows: Vec<u64>) -> Self {
        debug_assert!(rows.len() <= MAX_ORDER);
        let twice: u32 = rows.iter().map(|r| r.count_ones()).sum();
        let g = Graph {
            m: twice as usize / 2,
            rows,
        };
        debug_assert!(g.is_well_formed());
        g
    }

    fn is_well_formed(&self) -> bool {
        let n = self.order();
        self.rows.iter().enumerate().all(|(v, &row)| {
            row & !full_mask(n) == 0
                && row >> v & 1 == 0
                && Bits(row).all(|u| self.rows[u] >> v & 1 == 1)
        })
    }

    pub(crate) fn add_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        let n = self.order();
        for w in [u, v] {
            if w >= n {
                return Err(GraphError::InvalidVertex {
                    vertex: w,
                    order: n,
                });
            }
        }
        if u == v {
            return Err(GraphError::InvalidEdge(u));
        }
        if self.has_edge(u, v) {
            return Err(GraphError::DuplicateEdge(u.min(v), u.max(v)));
        }
        self.rows[u] |= 1 << v;
        self.rows[v] |= 1 << u;
        self.m += 1;
        Ok(())
    }

    /// Copy of the graph with edge `uv` removed.
    pub fn without_edge(&self, u: usize, v: usize) -> Result<Graph, GraphError> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if !self.has_edge(u, v) {
            return Err(GraphError::NotAnEdge(u, v));
        }
        let mut rows = self.rows.clone();
        rows[u] &= !(1 << v);
        rows[v] &= !(1 << u);
        Ok(Graph {
            rows,
            m: self.m - 1,
        })
    }

    /// Copy of the graph with edge `uv` added.
    pub fn with_edge(&self, u: usize, v: usize) -> Result<Graph, GraphError> {
        let mut g = self.clone();
        g.add_edge(u, v)?;
        Ok(g)
    }

    /// Order `n`.
    #[inline]
    pub fn order(&self) -> usize {
        self.rows.len()
    }

    /// Size `m`.
    #[inline]
    pub fn size(&self) -> usize {
        self.m
    }

    #[inline]
    pub fn rows(&self) -> &[u64] {
        &self.rows
    }

    #[inline]
    pub fn vertex_mask(&self) -> u64 {
        full_mask(self.order())
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.order() && v < self.order() && self.rows[u] >> v & 1 == 1
    }

    /// Open neighborhood as a raw mask. Panics if `v` is out of range.
    #[inline]
    pub fn neighbor_mask(&self, v: usize) -> u64 {
        self.rows[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.rows[v].count_ones() as usize
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.order()).map(|v| self.degree(v)).collect()
    }

    pub(crate) fn check_vertex(&self, v: usize) -> Result<(), GraphError> {
        if v < self.order() {
            Ok(())
        } else {
            Err(GraphError::InvalidVertex {
                vertex: v,
                order: self.order(),
            })
        }
    }

    /// `N(v)`.
    pub fn neighborhood(&self, v: usize) -> Result<VertexSet, GraphError> {
        self.check_vertex(v)?;
        Ok(VertexSet {
            host: self.order(),
            bits: self.rows[v],
        })
    }

    /// `N[v] = N(v) ∪ {v}`.
    pub fn closed_neighborhood(&self, v: usize) -> Result<VertexSet, GraphError> {
        self.check_vertex(v)?;
        Ok(VertexSet {
            host: self.order(),
            bits: self.rows[v] | 1 << v,
        })
    }

    /// Edges `(u, v)` with `u < v`, ordered by `u` then `v`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.rows
            .iter()
            .enumerate()
            .flat_map(|(u, &row)| Bits(row & !full_mask(u + 1)).map(move |v| (u, v)))
    }

    /// `G - S`: the subgraph induced on the vertices outside `S`.
    pub fn delete_vertices(&self, removed: &VertexSet) -> Result<InducedSubgraph, GraphError> {
        if removed.host_order() != self.order() {
            if let Some(v) = removed.iter().find(|&v| v >= self.order()) {
                return Err(GraphError::InvalidVertex {
                    vertex: v,
                    order: self.order(),
                });
            }
        }
        let keep = self.vertex_mask() & !removed.bits();
        let original: Vec<usize> = Bits(keep).collect();
        Ok(InducedSubgraph {
            graph: self.induced(keep),
            original,
        })
    }

    /// Subgraph induced on `keep`, relabeled in ascending order.
    pub(crate) fn induced(&self, keep: u64) -> Graph {
        let kept: Vec<usize> = Bits(keep).collect();
        let rows = kept
            .iter()
            .map(|&old| {
                let nb = self.rows[old] & keep;
                kept.iter()
                    .enumerate()
                    .filter(|(_, &w)| nb >> w & 1 == 1)
                    .fold(0u64, |acc, (new, _)| acc | 1 << new)
            })
            .collect();
        Graph::from_rows(rows)
    }

    /// Applies `perm`, where `perm[old] = new`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Graph, GraphError> {
        let n = self.order();
        if perm.len() != n {
            return Err(GraphError::Unsupported(format!(
                "permutation of length {} for order {n}",
                perm.len()
            )));
        }
        let mut seen = 0u64;
        for &p in perm {
            if p >= n || seen >> p & 1 == 1 {
                return Err(GraphError::Unsupported("not a permutation".into()));
            }
            seen |= 1 << p;
        }
        let mut rows = vec![0u64; n];
        for (u, v) in self.edges() {
            rows[perm[u]] |= 1 << perm[v];
            rows[perm[v]] |= 1 << perm[u];
        }
        Ok(Graph { rows, m: self.m })
    }

    /// δ(G).
    pub fn min_degree(&self) -> Result<usize, GraphError> {
        (0..self.order())
            .map(|v| self.degree(v))
            .min()
            .ok_or(GraphError::EmptyGraph)
    }

    /// Δ(G).
    pub fn max_degree(&self) -> Result<usize, GraphError> {
        (0..self.order())
            .map(|v| self.degree(v))
            .max()
            .ok_or(GraphError::EmptyGraph)
    }

    pub fn degree_profile(&self, v: usize) -> Result<DegreeProfile, GraphError> {
        self.check_vertex(v)?;
        let mut neighbor_degrees: Vec<usize> = Bits(self.rows[v]).map(|u| self.degree(u)).collect();
        neighbor_degrees.sort_unstable();
        Ok(DegreeProfile { neighbor_degrees })
    }

    /// The complement graph on the same vertex set.
    pub fn complement(&self) -> Graph {
        let all = self.vertex_mask();
        let rows = self
            .rows
            .iter()
            .enumerate()
            .map(|(v, &row)| !row & all & !(1 << v))
            .collect();
        Graph::from_rows(rows)
    }
}

fn check_order(n: usize) -> Result<(), GraphError> {
    if n > MAX_ORDER {
        Err(GraphError::Unsupported(format!(
            "order {n} exceeds {MAX_ORDER}"
        )))
    } else {
        Ok(())
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges=[", self.order())?;
        for (i, (u, v)) in self.edges().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{u}-{v}")?;
        }
        f.write_str("])")
    }
}
