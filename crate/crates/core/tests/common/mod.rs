#![allow(dead_code)]

use rand::Rng;
use sigma_core::Graph;

/// Every labeled graph on `n` vertices, in edge-mask order.
pub fn all_labeled(n: usize) -> impl Iterator<Item = Graph> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
    (0u64..1 << pairs.len()).map(move |mask| {
        let edges: Vec<_> = pairs
            .iter()
            .enumerate()
            .filter(|(k, _)| mask >> k & 1 == 1)
            .map(|(_, &e)| e)
            .collect();
        Graph::from_edge_list(n, &edges).unwrap()
    })
}

/// G(n, p) with a random `p` per graph.
pub fn random_graph<R: Rng>(rng: &mut R, n: usize) -> Graph {
    let p: f64 = rng.gen();
    let mut edges = Vec::new();
    for j in 1..n {
        for i in 0..j {
            if rng.gen::<f64>() < p {
                edges.push((i, j));
            }
        }
    }
    Graph::from_edge_list(n, &edges).unwrap()
}

/// Minimum adjacency string over all `n!` orderings, no pruning.
pub fn brute_canon(g: &Graph) -> (usize, u64) {
    let n = g.order();
    let mut perm: Vec<usize> = (0..n).collect();
    let mut best = u64::MAX;
    let encode = |perm: &[usize]| {
        let mut bits = 0u64;
        for j in 1..n {
            for i in 0..j {
                bits = bits << 1 | g.has_edge(perm[i], perm[j]) as u64;
            }
        }
        bits
    };
    // Heap's algorithm
    let mut c = vec![0usize; n];
    best = best.min(encode(&perm));
    let mut i = 0;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                perm.swap(0, i);
            } else {
                perm.swap(c[i], i);
            }
            best = best.min(encode(&perm));
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    (n, best)
}

/// Number of connected components by repeated DFS over `has_edge`.
pub fn component_count(g: &Graph, skip_vertex: Option<usize>, skip_edge: Option<(usize, usize)>) -> usize {
    let n = g.order();
    let mut seen = vec![false; n];
    let mut count = 0;
    for s in 0..n {
        if seen[s] || Some(s) == skip_vertex {
            continue;
        }
        count += 1;
        let mut stack = vec![s];
        seen[s] = true;
        while let Some(v) = stack.pop() {
            for (u, flag) in seen.iter_mut().enumerate() {
                let cut = skip_edge.is_some_and(|(a, b)| (a, b) == (v.min(u), v.max(u)));
                if !*flag && Some(u) != skip_vertex && g.has_edge(v, u) && !cut {
                    *flag = true;
                    stack.push(u);
                }
            }
        }
    }
    count
}
