//! Connectivity, cycles, bridges and cut vertices.

use crate::graph::{Bits, Graph, VertexSet};

/// Vertex mask of the component of `start` inside the subgraph induced by `within`.
pub(crate) fn component_of(rows: &[u64], within: u64, start: usize) -> u64 {
    let mut seen = 1u64 << start;
    let mut frontier = seen;
    while frontier != 0 {
        let mut next = 0;
        for v in Bits(frontier) {
            next |= rows[v];
        }
        frontier = next & within & !seen;
        seen |= frontier;
    }
    seen
}

/// Connected components as vertex masks, ordered by smallest member.
pub fn components(g: &Graph) -> Vec<u64> {
    components_within(g.rows(), g.vertex_mask())
}

pub(crate) fn components_within(rows: &[u64], within: u64) -> Vec<u64> {
    let mut rest = within;
    let mut out = Vec::new();
    while rest != 0 {
        let c = component_of(rows, within, rest.trailing_zeros() as usize);
        out.push(c);
        rest &= !c;
    }
    out
}

/// The 0-vertex graph is not connected; a single vertex is.
pub fn is_connected(g: &Graph) -> bool {
    g.order() > 0 && component_of(g.rows(), g.vertex_mask(), 0) == g.vertex_mask()
}

/// A forest has exactly `n - c` edges; anything more closes a cycle.
pub fn has_cycle(g: &Graph) -> bool {
    g.size() + components(g).len() > g.order()
}

struct LowLink<'a> {
    g: &'a Graph,
    order: Vec<usize>,
    low: Vec<usize>,
    clock: usize,
    bridges: Vec<(usize, usize)>,
    cut: u64,
}

const UNSEEN: usize = usize::MAX;

impl<'a> LowLink<'a> {
    fn run(g: &'a Graph) -> Self {
        let n = g.order();
        let mut ll = LowLink {
            g,
            order: vec![UNSEEN; n],
            low: vec![UNSEEN; n],
            clock: 0,
            bridges: Vec::new(),
            cut: 0,
        };
        for root in 0..n {
            if ll.order[root] == UNSEEN {
                let children = ll.visit(root, None);
                if children >= 2 {
                    ll.cut |= 1 << root;
                } else {
                    ll.cut &= !(1 << root);
                }
            }
        }
        ll.bridges.sort_unstable();
        ll
    }

    /// Returns the number of DFS children of `v`.
    fn visit(&mut self, v: usize, parent: Option<usize>) -> usize {
        self.order[v] = self.clock;
        self.low[v] = self.clock;
        self.clock += 1;
        let mut children = 0;
        for u in Bits(self.g.neighbor_mask(v)) {
            if Some(u) == parent {
                continue;
            }
            if self.order[u] == UNSEEN {
                children += 1;
                self.visit(u, Some(v));
                self.low[v] = self.low[v].min(self.low[u]);
                if self.low[u] > self.order[v] {
                    self.bridges.push((v.min(u), v.max(u)));
                }
                if self.low[u] >= self.order[v] {
                    self.cut |= 1 << v;
                }
            } else {
                self.low[v] = self.low[v].min(self.order[u]);
            }
        }
        children
    }
}

/// Edges whose removal increases the number of components, as `(u, v)` with
/// `u < v`, sorted.
pub fn bridges(g: &Graph) -> Vec<(usize, usize)> {
    LowLink::run(g).bridges
}

/// Vertices whose removal increases the number of components.
pub fn cut_vertices(g: &Graph) -> VertexSet {
    let cut = LowLink::run(g).cut;
    VertexSet::from_bits(g.order(), cut).expect("cut vertices lie inside the graph")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family;

    fn triangle_with_pendant() -> Graph {
        Graph::from_edge_list(4, &[(0, 1), (1, 2), (0, 2), (0, 3)]).unwrap()
    }

    #[test]
    fn connectivity() {
        assert!(is_connected(&family::complete_bipartite(2, 3).unwrap()));
        assert!(!is_connected(
            &Graph::from_edge_list(4, &[(0, 1), (2, 3)]).unwrap()
        ));
        assert!(is_connected(&Graph::empty(1).unwrap()));
        assert!(!is_connected(&Graph::empty(0).unwrap()));
    }

    #[test]
    fn cycles() {
        assert!(!has_cycle(&family::star(5).unwrap()));
        assert!(has_cycle(&family::cycle(5).unwrap()));
        assert!(has_cycle(&family::k4_minus_edge()));
        assert!(!has_cycle(&Graph::empty(0).unwrap()));
        // a forest with two trees
        assert!(!has_cycle(
            &Graph::from_edge_list(5, &[(0, 1), (1, 2), (3, 4)]).unwrap()
        ));
    }

    #[test]
    fn bridge_examples() {
        assert_eq!(
            bridges(&family::path(4).unwrap()),
            vec![(0, 1), (1, 2), (2, 3)]
        );
        assert!(bridges(&family::cycle(6).unwrap()).is_empty());
        assert_eq!(bridges(&triangle_with_pendant()), vec![(0, 3)]);
    }

    #[test]
    fn cut_vertex_examples() {
        assert_eq!(cut_vertices(&family::path(3).unwrap()).to_vec(), vec![1]);
        assert!(cut_vertices(&family::cycle(5).unwrap()).is_empty());
        assert_eq!(cut_vertices(&triangle_with_pendant()).to_vec(), vec![0]);
        // two triangles sharing vertex 2, plus an isolated vertex
        let bowtie =
            Graph::from_edge_list(6, &[(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)]).unwrap();
        assert_eq!(cut_vertices(&bowtie).to_vec(), vec![2]);
        assert!(bridges(&bowtie).is_empty());
    }
}
