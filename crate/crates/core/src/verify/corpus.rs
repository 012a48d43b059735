use std::collections::{BTreeMap, BTreeSet};
use std::io::BufRead;

use crate::canon::{canonical_key, canonical_key_with, CanonOptions, CanonicalKey, Partition};
use crate::error::{GraphError, VerifyError};
use crate::graph::{Bits, Graph};
use crate::io::graph6_lines;
use crate::traversal::is_connected;

use super::par_map;

/// Largest order the built-in generator produces.
pub const MAX_BUILTIN_ORDER: usize = 8;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Provenance {
    BuiltIn,
    ExternalGraph6File,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Strategy {
    /// Extend each connected graph of order `n - 1` by a vertex joined to
    /// every nonempty subset. Complete because every connected graph has a
    /// vertex whose removal leaves it connected.
    VertexExtension,
    /// Grow all graphs of order `n` one edge at a time from the edgeless
    /// graph, then keep the connected ones.
    EdgeAugmentation,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GeneratorConfig {
    pub strategy: Strategy,
    pub partition: Partition,
    /// Worker threads, 0 for one per core.
    pub workers: usize,
}

impl Default for GeneratorConfig {
    fn default() -> Self {
        GeneratorConfig {
            strategy: Strategy::VertexExtension,
            partition: Partition::Refined,
            workers: 0,
        }
    }
}

/// Pairwise non-isomorphic connected graphs of one order, sorted by size and
/// then canonical key.
#[derive(Clone, Debug)]
pub struct GraphCorpus {
    order: usize,
    graphs: Vec<Graph>,
    keys: Vec<CanonicalKey>,
    provenance: Provenance,
}

impl GraphCorpus {
    pub fn order(&self) -> usize {
        self.order
    }

    pub fn graphs(&self) -> &[Graph] {
        &self.graphs
    }

    pub fn keys(&self) -> &[CanonicalKey] {
        &self.keys
    }

    pub fn len(&self) -> usize {
        self.graphs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.graphs.is_empty()
    }

    pub fn provenance(&self) -> Provenance {
        self.provenance
    }

    pub fn iter(&self) -> impl Iterator<Item = &Graph> {
        self.graphs.iter()
    }

    /// Builds a corpus from arbitrary graphs of one order, enforcing the
    /// corpus invariants: connected, right order, no isomorphic pair.
    fn from_graphs(
        order: usize,
        graphs: Vec<(usize, Graph)>,
        provenance: Provenance,
    ) -> Result<GraphCorpus, VerifyError> {
        let opts = CanonOptions::from_env();
        let mut seen: BTreeMap<(usize, CanonicalKey), (usize, Graph)> = BTreeMap::new();
        for (line, g) in graphs {
            if g.order() != order {
                return Err(VerifyError::InvalidCorpus {
                    line,
                    reason: format!("order {} in a corpus of order {order}", g.order()),
                });
            }
            if !is_connected(&g) {
                return Err(VerifyError::InvalidCorpus {
                    line,
                    reason: "graph is not connected".into(),
                });
            }
            let key = canonical_key_with(&g, &opts)?;
            if let Some((first, _)) = seen.get(&(g.size(), key)) {
                return Err(VerifyError::InvalidCorpus {
                    line,
                    reason: format!("isomorphic to the graph on line {first}"),
                });
            }
            seen.insert((g.size(), key), (line, g));
        }
        let (keys, graphs) = seen.into_iter().map(|((_, k), (_, g))| (k, g)).unzip();
        Ok(GraphCorpus {
            order,
            graphs,
            keys,
            provenance,
        })
    }

    /// Reads a graph6 file, one graph per line, and groups it by order.
    /// Corpora come back in ascending order.
    pub fn from_graph6_reader<R: BufRead>(reader: R) -> Result<Vec<GraphCorpus>, VerifyError> {
        let mut by_order: BTreeMap<usize, Vec<(usize, Graph)>> = BTreeMap::new();
        for (line, parsed) in graph6_lines(reader) {
            let g = parsed.map_err(|e| VerifyError::InvalidCorpus {
                line,
                reason: e.to_string(),
            })?;
            by_order.entry(g.order()).or_default().push((line, g));
        }
        by_order
            .into_iter()
            .map(|(n, graphs)| GraphCorpus::from_graphs(n, graphs, Provenance::ExternalGraph6File))
            .collect()
    }

    /// Corpus of the given graphs, each assumed distinct; used for ad hoc
    /// checks on hand-picked graphs.
    pub fn from_list(order: usize, graphs: Vec<Graph>) -> Result<GraphCorpus, VerifyError> {
        let numbered = graphs.into_iter().enumerate().map(|(i, g)| (i + 1, g)).collect();
        GraphCorpus::from_graphs(order, numbered, Provenance::ExternalGraph6File)
    }
}

/// All connected graphs of order `n` up to isomorphism, `1 <= n <= 8`.
pub fn enumerate_connected(n: usize) -> Result<GraphCorpus, GraphError> {
    enumerate_connected_with(n, &GeneratorConfig::default())
}

pub fn enumerate_connected_with(
    n: usize,
    config: &GeneratorConfig,
) -> Result<GraphCorpus, GraphError> {
    if !(1..=MAX_BUILTIN_ORDER).contains(&n) {
        return Err(GraphError::Unsupported(format!(
            "built-in generator covers orders 1..={MAX_BUILTIN_ORDER}, asked for {n}"
        )));
    }
    let opts = CanonOptions {
        partition: config.partition,
        ..CanonOptions::default()
    };
    let keys = match config.strategy {
        Strategy::VertexExtension => by_vertex_extension(n, &opts, config.workers)?,
        Strategy::EdgeAugmentation => by_edge_augmentation(n, &opts, config.workers)?,
    };
    // Representatives always come from the default canonical form so corpora
    // from different configurations are directly comparable.
    let mut entries: Vec<(usize, CanonicalKey, Graph)> = keys
        .into_iter()
        .map(|k| {
            let g = k.to_graph();
            let key = canonical_key(&g)?;
            Ok((g.size(), key, key.to_graph()))
        })
        .collect::<Result<_, GraphError>>()?;
    entries.sort_by_key(|(m, k, _)| (*m, *k));
    let (keys, graphs) = entries.into_iter().map(|(_, k, g)| (k, g)).unzip();
    Ok(GraphCorpus {
        order: n,
        graphs,
        keys,
        provenance: Provenance::BuiltIn,
    })
}

fn with_new_vertex(g: &Graph, attach: u64) -> Graph {
    let v = g.order();
    let mut rows: Vec<u64> = g.rows().to_vec();
    for u in Bits(attach) {
        rows[u] |= 1 << v;
    }
    rows.push(attach);
    Graph::from_rows(rows)
}

fn collect_keys(
    batches: Vec<Result<Vec<CanonicalKey>, GraphError>>,
) -> Result<BTreeSet<CanonicalKey>, GraphError> {
    let mut all = BTreeSet::new();
    for batch in batches {
        all.extend(batch?);
    }
    Ok(all)
}

fn by_vertex_extension(
    n: usize,
    opts: &CanonOptions,
    workers: usize,
) -> Result<BTreeSet<CanonicalKey>, GraphError> {
    let mut level: BTreeSet<CanonicalKey> = BTreeSet::from([canonical_key_with(&Graph::empty(1)?, opts)?]);
    for order in 2..=n {
        let parents: Vec<Graph> = level.iter().map(|k| k.to_graph()).collect();
        let batches = par_map(&parents, workers, |_, g| {
            let mut keys = (1u64..1 << (order - 1))
                .map(|attach| canonical_key_with(&with_new_vertex(g, attach), opts))
                .collect::<Result<Vec<_>, _>>()?;
            keys.sort_unstable();
            keys.dedup();
            Ok(keys)
        });
        level = collect_keys(batches)?;
    }
    Ok(level)
}

fn by_edge_augmentation(
    n: usize,
    opts: &CanonOptions,
    workers: usize,
) -> Result<BTreeSet<CanonicalKey>, GraphError> {
    let mut level: BTreeSet<CanonicalKey> = BTreeSet::from([canonical_key_with(&Graph::empty(n)?, opts)?]);
    let mut connected = BTreeSet::new();
    for _ in 0..=n * (n - 1) / 2 {
        let graphs: Vec<Graph> = level.iter().map(|k| k.to_graph()).collect();
        for (g, k) in graphs.iter().zip(&level) {
            if is_connected(g) {
                connected.insert(*k);
            }
        }
        let batches = par_map(&graphs, workers, |_, g| {
            let mut keys = Vec::new();
            for v in 1..n {
                for u in 0..v {
                    if !g.has_edge(u, v) {
                        keys.push(canonical_key_with(&g.with_edge(u, v)?, opts)?);
                    }
                }
            }
            keys.sort_unstable();
            keys.dedup();
            Ok(keys)
        });
        level = collect_keys(batches)?;
    }
    Ok(connected)
}
