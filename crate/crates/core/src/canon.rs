//! Canonical keys for small graphs.
//!
//! The key is the smallest upper-triangle adjacency string, read column by
//! column as in graph6, over all vertex orderings that respect an
//! isomorphism-invariant vertex coloring. The coloring starts from degrees and
//! is optionally refined by neighbor colors; vertices may only be permuted
//! within a color class. Partial strings are compared against the best string
//! found so far, which prunes most of the search.

use std::env;
use std::fmt;

use crate::error::GraphError;
use crate::graph::{Bits, Graph};

/// Default largest order accepted by [`canonical_key`].
pub const DEFAULT_CANON_CAP: usize = 10;
/// Largest cap that fits the key in one word (11 vertices, 55 bits).
pub const MAX_CANON_CAP: usize = 11;
/// Environment variable overriding the canonicalization cap.
pub const CANON_CAP_ENV: &str = "SIGMA_CANON_CAP";

/// Isomorphism-class fingerprint. Equal keys iff isomorphic graphs.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct CanonicalKey {
    order: u8,
    bits: u64,
}

impl CanonicalKey {
    /// Opaque byte form: order followed by the big-endian adjacency word.
    pub fn to_bytes(&self) -> [u8; 9] {
        let mut out = [0u8; 9];
        out[0] = self.order;
        out[1..].copy_from_slice(&self.bits.to_be_bytes());
        out
    }

    pub fn order(&self) -> usize {
        self.order as usize
    }

    /// The canonical representative: the graph whose labeling realizes the key.
    pub fn to_graph(&self) -> Graph {
        let n = self.order as usize;
        let total = n * n.saturating_sub(1) / 2;
        let mut rows = vec![0u64; n];
        let mut k = 0;
        for j in 1..n {
            for i in 0..j {
                if self.bits >> (total - 1 - k) & 1 == 1 {
                    rows[i] |= 1 << j;
                    rows[j] |= 1 << i;
                }
                k += 1;
            }
        }
        Graph::from_rows(rows)
    }
}

impl fmt::Display for CanonicalKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for b in self.to_bytes() {
            write!(f, "{b:02x}")?;
        }
        Ok(())
    }
}

/// How the vertex coloring that restricts the permutation search is built.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Partition {
    /// Degree classes only.
    Degree,
    /// Degree classes refined by neighbor colors until stable.
    Refined,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CanonOptions {
    pub cap: usize,
    pub partition: Partition,
}

impl Default for CanonOptions {
    fn default() -> Self {
        CanonOptions {
            cap: DEFAULT_CANON_CAP,
            partition: Partition::Refined,
        }
    }
}

impl CanonOptions {
    /// Defaults, with the cap taken from `SIGMA_CANON_CAP` when set and valid.
    pub fn from_env() -> Self {
        let mut opts = CanonOptions::default();
        if let Some(cap) = env::var(CANON_CAP_ENV).ok().and_then(|v| v.parse().ok()) {
            opts.cap = usize::min(cap, MAX_CANON_CAP);
        }
        opts
    }
}

/// Canonical key with default options.
pub fn canonical_key(g: &Graph) -> Result<CanonicalKey, GraphError> {
    canonical_key_with(g, &CanonOptions::default())
}

pub fn canonical_key_with(g: &Graph, opts: &CanonOptions) -> Result<CanonicalKey, GraphError> {
    let n = g.order();
    let cap = opts.cap.min(MAX_CANON_CAP);
    if n > cap {
        return Err(GraphError::Unsupported(format!(
            "canonical labeling of order {n} exceeds the cap {cap}"
        )));
    }
    let colors = match opts.partition {
        Partition::Degree => g.degrees(),
        Partition::Refined => refine(g),
    };
    Ok(Search::new(g, &colors).run())
}

/// Canonical representative together with its key.
pub fn canonical_form(g: &Graph) -> Result<(Graph, CanonicalKey), GraphError> {
    let key = canonical_key(g)?;
    Ok((key.to_graph(), key))
}

/// Color refinement starting from degrees. Colors are ranks of sorted
/// signatures, so they do not depend on the input labeling.
fn refine(g: &Graph) -> Vec<usize> {
    let n = g.order();
    let mut colors = g.degrees();
    let mut classes = count_classes(&colors);
    loop {
        let signatures: Vec<(usize, Vec<usize>)> = (0..n)
            .map(|v| {
                let mut nb: Vec<usize> = Bits(g.neighbor_mask(v)).map(|u| colors[u]).collect();
                nb.sort_unstable();
                (colors[v], nb)
            })
            .collect();
        let mut distinct = signatures.clone();
        distinct.sort();
        distinct.dedup();
        let next: Vec<usize> = signatures
            .iter()
            .map(|s| distinct.binary_search(s).expect("signature present"))
            .collect();
        let next_classes = distinct.len();
        colors = next;
        if next_classes == classes {
            return colors;
        }
        classes = next_classes;
    }
}

fn count_classes(colors: &[usize]) -> usize {
    let mut c = colors.to_vec();
    c.sort_unstable();
    c.dedup();
    c.len()
}

struct Search<'a> {
    rows: &'a [u64],
    n: usize,
    total_bits: usize,
    /// `slot_cell[pos]`: vertex mask allowed at position `pos`.
    slot_cell: Vec<u64>,
    placed: Vec<usize>,
    best: Option<u64>,
}

impl<'a> Search<'a> {
    fn new(g: &'a Graph, colors: &[usize]) -> Self {
        let n = g.order();
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&v| colors[v]);
        let slot_cell = order
            .iter()
            .map(|&v| {
                (0..n)
                    .filter(|&u| colors[u] == colors[v])
                    .fold(0u64, |m, u| m | 1 << u)
            })
            .collect();
        Search {
            rows: g.rows(),
            n,
            total_bits: n * n.saturating_sub(1) / 2,
            slot_cell,
            placed: Vec::with_capacity(n),
            best: None,
        }
    }

    fn run(mut self) -> CanonicalKey {
        self.extend(0, 0);
        CanonicalKey {
            order: self.n as u8,
            bits: self.best.unwrap_or(0),
        }
    }

    /// `prefix` holds the bits of columns `0..pos`.
    fn extend(&mut self, pos: usize, prefix: u64) {
        if pos == self.n {
            if self.best.is_none_or(|b| prefix < b) {
                self.best = Some(prefix);
            }
            return;
        }
        let used = self.placed.iter().fold(0u64, |m, &v| m | 1 << v);
        let prefix_len = pos * (pos + 1) / 2;
        for v in Bits(self.slot_cell[pos] & !used) {
            // column `pos`: adjacency of v to the vertices at positions 0..pos
            let mut col = 0u64;
            for &u in &self.placed {
                col = col << 1 | (self.rows[v] >> u & 1);
            }
            let next = prefix << pos | col;
            if let Some(best) = self.best {
                if next > best >> (self.total_bits - prefix_len) {
                    continue;
                }
            }
            self.placed.push(v);
            self.extend(pos + 1, next);
            self.placed.pop();
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family;
    use crate::traversal::is_connected;

    fn all_labeled(n: usize) -> impl Iterator<Item = Graph> {
        let pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|j| (0..j).map(move |i| (i, j)))
            .collect();
        (0u64..1 << pairs.len()).map(move |mask| {
            let edges: Vec<_> = Bits(mask).map(|k| pairs[k]).collect();
            Graph::from_edge_list(n, &edges).unwrap()
        })
    }

    #[test]
    fn bipartite_square_is_cycle() {
        assert_eq!(
            canonical_key(&family::cycle(4).unwrap()).unwrap(),
            canonical_key(&family::complete_bipartite(2, 2).unwrap()).unwrap()
        );
    }

    #[test]
    fn two_connected_classes_on_three_vertices() {
        let mut keys: Vec<_> = all_labeled(3)
            .filter(is_connected)
            .map(|g| canonical_key(&g).unwrap())
            .collect();
        keys.sort();
        keys.dedup();
        assert_eq!(keys.len(), 2);
        assert!(keys.contains(&canonical_key(&family::path(3).unwrap()).unwrap()));
        assert!(keys.contains(&canonical_key(&family::complete(3).unwrap()).unwrap()));
    }

    #[test]
    fn representative_realizes_key() {
        for g in all_labeled(5).step_by(37) {
            let (rep, key) = canonical_form(&g).unwrap();
            assert_eq!(canonical_key(&rep).unwrap(), key);
            assert_eq!(rep.size(), g.size());
        }
    }

    #[test]
    fn partitions_induce_same_classes() {
        // The two colorings give different representatives but must agree on
        // which graphs are isomorphic.
        let degree_only = CanonOptions {
            partition: Partition::Degree,
            ..CanonOptions::default()
        };
        let graphs: Vec<Graph> = all_labeled(5).step_by(7).collect();
        let refined: Vec<_> = graphs.iter().map(|g| canonical_key(g).unwrap()).collect();
        let coarse: Vec<_> = graphs
            .iter()
            .map(|g| canonical_key_with(g, &degree_only).unwrap())
            .collect();
        for i in 0..graphs.len() {
            for j in 0..i {
                assert_eq!(refined[i] == refined[j], coarse[i] == coarse[j]);
            }
        }
    }

    #[test]
    fn cap_enforced() {
        let g = Graph::empty(11).unwrap();
        assert!(matches!(canonical_key(&g), Err(GraphError::Unsupported(_))));
        let wide = CanonOptions {
            cap: 11,
            ..CanonOptions::default()
        };
        assert!(canonical_key_with(&g, &wide).is_ok());
        assert!(canonical_key(&Graph::empty(0).unwrap()).is_ok());
    }

    #[test]
    fn petersen_is_handled() {
        let outer: Vec<_> = (0..5).map(|i| (i, (i + 1) % 5)).collect();
        let spokes: Vec<_> = (0..5).map(|i| (i, i + 5)).collect();
        let inner: Vec<_> = (0..5).map(|i| (5 + i, 5 + (i + 2) % 5)).collect();
        let edges: Vec<_> = outer.into_iter().chain(spokes).chain(inner).collect();
        let p = Graph::from_edge_list(10, &edges).unwrap();
        let shifted = p.relabel(&[3, 1, 4, 0, 5, 9, 2, 6, 8, 7]).unwrap();
        assert_eq!(canonical_key(&p).unwrap(), canonical_key(&shifted).unwrap());
    }
}
