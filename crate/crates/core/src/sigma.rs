//! Exact counts of k-nearly independent vertex subsets.
//!
//! `σ_k(G)` is the number of vertex subsets inducing exactly `k` edges; the
//! empty set counts toward `σ_0`. Brute force handles every `k`. For `k = 0`
//! and `k = 1` there are recursions on vertex deletion:
//!
//! ```text
//! σ0(G) = σ0(G - v) + σ0(G - N[v])
//! σ1(G) = σ1(G - v) + σ1(G - N[v]) + Σ_{u ∈ N(v)} σ0(G - (N[u] ∪ N[v]))
//! ```
//!
//! The three σ1 terms count subsets without `v`, with `v` isolated in the
//! subset, and with `v` an endpoint of the single induced edge `uv`.
//! Every subgraph reached is an induced subgraph of the root, so the memo is
//! keyed by the root-vertex mask of that subgraph.

use std::collections::HashMap;
use std::env;

use crate::error::SigmaError;
use crate::graph::{Bits, Graph, VertexSet};
use crate::traversal::component_of;

/// Default largest order accepted by [`sigma_bruteforce`].
pub const DEFAULT_BRUTE_CAP: usize = 24;
/// Environment variable overriding the brute-force cap.
pub const BRUTE_CAP_ENV: &str = "SIGMA_BRUTE_CAP";

/// Brute-force cap from `SIGMA_BRUTE_CAP`, falling back to the default.
pub fn brute_cap_from_env() -> usize {
    env::var(BRUTE_CAP_ENV)
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or(DEFAULT_BRUTE_CAP)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Method {
    BruteForce,
    Recursive,
    /// Recursive per component, combined across components.
    Convolution,
}

/// `σ_k(G)` together with how it was obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SigmaCount {
    pub k: usize,
    pub value: u64,
    pub method: Method,
}

/// Number of edges with both endpoints in `s`.
pub fn induced_edge_count(g: &Graph, s: &VertexSet) -> usize {
    let mask = s.bits() & g.vertex_mask();
    let twice: u32 = Bits(mask)
        .map(|v| (g.neighbor_mask(v) & mask).count_ones())
        .sum();
    twice as usize / 2
}

/// `σ_k(G)` by enumerating all `2^n` subsets, with the default cap.
pub fn sigma_bruteforce(g: &Graph, k: usize) -> Result<SigmaCount, SigmaError> {
    sigma_bruteforce_capped(g, k, DEFAULT_BRUTE_CAP)
}

pub fn sigma_bruteforce_capped(g: &Graph, k: usize, cap: usize) -> Result<SigmaCount, SigmaError> {
    check_cap(g, cap)?;
    let value = if k > g.size() {
        0
    } else {
        let mut counter = SubsetWalk::new(g, Some(k));
        counter.walk(0, 0, 0);
        counter.tally[k]
    };
    Ok(SigmaCount {
        k,
        value,
        method: Method::BruteForce,
    })
}

/// All of `σ_0, ..., σ_m` by brute force. The entries sum to `2^n`.
pub fn sigma_spectrum(g: &Graph) -> Result<Vec<u64>, SigmaError> {
    sigma_spectrum_capped(g, DEFAULT_BRUTE_CAP)
}

pub fn sigma_spectrum_capped(g: &Graph, cap: usize) -> Result<Vec<u64>, SigmaError> {
    check_cap(g, cap)?;
    let mut counter = SubsetWalk::new(g, None);
    counter.walk(0, 0, 0);
    Ok(counter.tally)
}

fn check_cap(g: &Graph, cap: usize) -> Result<(), SigmaError> {
    if g.order() > cap {
        Err(SigmaError::TooLarge {
            order: g.order(),
            cap,
        })
    } else {
        Ok(())
    }
}

/// Include/exclude walk over vertices, carrying the running induced edge
/// count. With a target `k`, branches already past `k` are cut.
struct SubsetWalk<'a> {
    rows: &'a [u64],
    limit: Option<usize>,
    tally: Vec<u64>,
}

impl<'a> SubsetWalk<'a> {
    fn new(g: &'a Graph, limit: Option<usize>) -> Self {
        SubsetWalk {
            rows: g.rows(),
            limit,
            tally: vec![0; g.size() + 1],
        }
    }

    fn walk(&mut self, v: usize, chosen: u64, edges: usize) {
        if v == self.rows.len() {
            self.tally[edges] += 1;
            return;
        }
        self.walk(v + 1, chosen, edges);
        let with = edges + (self.rows[v] & chosen).count_ones() as usize;
        if self.limit.is_none_or(|k| with <= k) {
            self.walk(v + 1, chosen | 1 << v, with);
        }
    }
}

/// Per-root cache of `σ0` and `σ1` values, keyed by the root-vertex subset
/// inducing each subgraph.
#[derive(Debug, Default)]
pub struct MemoTable {
    root: Option<Vec<u64>>,
    disabled: bool,
    sigma0: HashMap<u64, u64>,
    sigma1: HashMap<u64, u64>,
    hits: u64,
    misses: u64,
}

impl MemoTable {
    pub fn new() -> Self {
        MemoTable::default()
    }

    /// A table that never stores anything; every lookup misses.
    pub fn disabled() -> Self {
        MemoTable {
            disabled: true,
            ..MemoTable::default()
        }
    }

    pub fn hits(&self) -> u64 {
        self.hits
    }

    pub fn misses(&self) -> u64 {
        self.misses
    }

    pub fn len(&self) -> usize {
        self.sigma0.len() + self.sigma1.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Cached `(σ0, σ1)` for the subgraph induced by `subset`, if present.
    pub fn get(&self, subset: &VertexSet) -> (Option<u64>, Option<u64>) {
        (
            self.sigma0.get(&subset.bits()).copied(),
            self.sigma1.get(&subset.bits()).copied(),
        )
    }

    fn bind(&mut self, g: &Graph) -> Result<(), SigmaError> {
        match &self.root {
            None => {
                self.root = Some(g.rows().to_vec());
                Ok(())
            }
            Some(rows) if rows.as_slice() == g.rows() => Ok(()),
            Some(_) => Err(SigmaError::MemoRootMismatch),
        }
    }

    fn lookup(&mut self, table: Table, key: u64) -> Option<u64> {
        if self.disabled {
            return None;
        }
        let found = match table {
            Table::Zero => self.sigma0.get(&key),
            Table::One => self.sigma1.get(&key),
        }
        .copied();
        if found.is_some() {
            self.hits += 1;
        } else {
            self.misses += 1;
        }
        found
    }

    fn store(&mut self, table: Table, key: u64, value: u64) {
        if self.disabled {
            return;
        }
        let map = match table {
            Table::Zero => &mut self.sigma0,
            Table::One => &mut self.sigma1,
        };
        let prev = map.insert(key, value);
        debug_assert!(prev.is_none_or(|p| p == value), "memo entry rewritten");
    }
}

#[derive(Clone, Copy)]
enum Table {
    Zero,
    One,
}

fn add(a: u64, b: u64) -> Result<u64, SigmaError> {
    a.checked_add(b).ok_or(SigmaError::Overflow)
}

fn mul(a: u64, b: u64) -> Result<u64, SigmaError> {
    a.checked_mul(b).ok_or(SigmaError::Overflow)
}

/// Combines `(σ0, σ1)` pairs of vertex-disjoint parts into the pair for their
/// union: `σ0` multiplies, and the single induced edge lies in exactly one
/// part, so `σ1(A ∪ B) = σ1(A)σ0(B) + σ0(A)σ1(B)`. The empty list yields the
/// pair of the 0-vertex graph, `(1, 0)`.
pub fn sigma_components(parts: &[(u64, u64)]) -> Result<(u64, u64), SigmaError> {
    parts.iter().try_fold((1u64, 0u64), |(z, o), &(pz, po)| {
        Ok((mul(z, pz)?, add(mul(o, pz)?, mul(z, po)?)?))
    })
}

struct Engine<'a> {
    rows: &'a [u64],
    memo: &'a mut MemoTable,
}

impl Engine<'_> {
    /// Maximum degree inside `alive`, ties to the smallest label.
    fn pivot(&self, alive: u64) -> usize {
        let mut best = alive.trailing_zeros() as usize;
        let mut best_deg = 0;
        for v in Bits(alive) {
            let d = (self.rows[v] & alive).count_ones();
            if d > best_deg {
                best = v;
                best_deg = d;
            }
        }
        best
    }

    /// Splits off the component of the lowest vertex when `alive` is disconnected.
    fn split(&self, alive: u64) -> Option<(u64, u64)> {
        let c = component_of(self.rows, alive, alive.trailing_zeros() as usize);
        (c != alive).then_some((c, alive & !c))
    }

    fn sigma0(&mut self, alive: u64) -> Result<u64, SigmaError> {
        if alive == 0 {
            return Ok(1);
        }
        if alive & (alive - 1) == 0 {
            return Ok(2);
        }
        if let Some(v) = self.memo.lookup(Table::Zero, alive) {
            return Ok(v);
        }
        let value = if let Some((part, rest)) = self.split(alive) {
            mul(self.sigma0(part)?, self.sigma0(rest)?)?
        } else {
            let v = self.pivot(alive);
            let without_v = alive & !(1 << v);
            let without_closed = alive & !(self.rows[v] | 1 << v);
            add(self.sigma0(without_v)?, self.sigma0(without_closed)?)?
        };
        self.memo.store(Table::Zero, alive, value);
        Ok(value)
    }

    fn sigma1(&mut self, alive: u64) -> Result<u64, SigmaError> {
        if alive & alive.wrapping_sub(1) == 0 {
            // at most one vertex
            return Ok(0);
        }
        if let Some(v) = self.memo.lookup(Table::One, alive) {
            return Ok(v);
        }
        let value = if let Some((part, rest)) = self.split(alive) {
            let a = (self.sigma0(part)?, self.sigma1(part)?);
            let b = (self.sigma0(rest)?, self.sigma1(rest)?);
            sigma_components(&[a, b])?.1
        } else {
            let v = self.pivot(alive);
            let closed_v = self.rows[v] | 1 << v;
            let mut total = add(
                self.sigma1(alive & !(1 << v))?,
                self.sigma1(alive & !closed_v)?,
            )?;
            for u in Bits(self.rows[v] & alive) {
                let closed_u = self.rows[u] | 1 << u;
                total = add(total, self.sigma0(alive & !(closed_u | closed_v))?)?;
            }
            total
        };
        self.memo.store(Table::One, alive, value);
        Ok(value)
    }
}

fn top_level_method(g: &Graph) -> Method {
    if g.order() > 0 && component_of(g.rows(), g.vertex_mask(), 0) != g.vertex_mask() {
        Method::Convolution
    } else {
        Method::Recursive
    }
}

/// `σ0(G)` by the deletion recursion. `σ0` of the 0-vertex graph is 1.
pub fn sigma0_recursive(g: &Graph, memo: &mut MemoTable) -> Result<SigmaCount, SigmaError> {
    memo.bind(g)?;
    let value = Engine {
        rows: g.rows(),
        memo,
    }
    .sigma0(g.vertex_mask())?;
    Ok(SigmaCount {
        k: 0,
        value,
        method: top_level_method(g),
    })
}

/// `σ1(G)` by the deletion recursion. `σ1` of the 0-vertex graph is 0.
pub fn sigma1_recursive(g: &Graph, memo: &mut MemoTable) -> Result<SigmaCount, SigmaError> {
    memo.bind(g)?;
    let value = Engine {
        rows: g.rows(),
        memo,
    }
    .sigma1(g.vertex_mask())?;
    Ok(SigmaCount {
        k: 1,
        value,
        method: top_level_method(g),
    })
}

/// `σ1(G)` with a fresh memo table.
pub fn sigma1(g: &Graph) -> Result<u64, SigmaError> {
    Ok(sigma1_recursive(g, &mut MemoTable::new())?.value)
}

/// `σ0(G)` with a fresh memo table.
pub fn sigma0(g: &Graph) -> Result<u64, SigmaError> {
    Ok(sigma0_recursive(g, &mut MemoTable::new())?.value)
}
