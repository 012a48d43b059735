//! Standard graph families with fixed labelings.
//!
//! Paths and cycles follow vertex order, `K_{r,s}` puts its `r`-side on
//! `0..r`, the star `K_{1,n-1}` has its center at 0, and `K_4 - e` is `K_4`
//! without the edge `2-3`.

use std::fmt;
use std::str::FromStr;

use crate::error::GraphError;
use crate::graph::Graph;

fn invalid(msg: impl Into<String>) -> GraphError {
    GraphError::InvalidFamilyParams(msg.into())
}

/// `P_n`, `n >= 1`.
pub fn path(n: usize) -> Result<Graph, GraphError> {
    if n == 0 {
        return Err(invalid("path needs n >= 1"));
    }
    let edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
    Graph::from_edge_list(n, &edges).map_err(|e| invalid(e.to_string()))
}

/// `C_n`, `n >= 3`.
pub fn cycle(n: usize) -> Result<Graph, GraphError> {
    if n < 3 {
        return Err(invalid("cycle needs n >= 3"));
    }
    let mut edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
    edges.push((n - 1, 0));
    Graph::from_edge_list(n, &edges).map_err(|e| invalid(e.to_string()))
}

/// `K_n`, `n >= 1`.
pub fn complete(n: usize) -> Result<Graph, GraphError> {
    if n == 0 {
        return Err(invalid("complete graph needs n >= 1"));
    }
    Ok(Graph::empty(n).map_err(|e| invalid(e.to_string()))?.complement())
}

/// `K_{r,s}` with parts `0..r` and `r..r+s`.
pub fn complete_bipartite(r: usize, s: usize) -> Result<Graph, GraphError> {
    if r == 0 || s == 0 {
        return Err(invalid("complete bipartite graph needs r, s >= 1"));
    }
    let edges: Vec<_> = (0..r)
        .flat_map(|x| (r..r + s).map(move |y| (x, y)))
        .collect();
    Graph::from_edge_list(r + s, &edges).map_err(|e| invalid(e.to_string()))
}

/// The star `K_{1,n-1}` on `n >= 2` vertices.
pub fn star(n: usize) -> Result<Graph, GraphError> {
    if n < 2 {
        return Err(invalid("star needs n >= 2"));
    }
    complete_bipartite(1, n - 1)
}

/// `K_4` minus the edge `2-3`.
pub fn k4_minus_edge() -> Graph {
    Graph::from_edge_list(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)])
        .expect("fixed edge list is valid")
}

/// A named family together with its parameters.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    Path(usize),
    Cycle(usize),
    Complete(usize),
    Star(usize),
    CompleteBipartite(usize, usize),
    K4MinusEdge,
}

impl Family {
    /// Looks a family up by name. `params` holds `n` for the one-parameter
    /// families and `r, s` for `bipartite`.
    pub fn from_name(name: &str, params: &[usize]) -> Result<Family, GraphError> {
        let one = || match params {
            [n] => Ok(*n),
            _ => Err(invalid(format!("{name} takes exactly one parameter n"))),
        };
        Ok(match name.to_ascii_lowercase().as_str() {
            "path" | "p" => Family::Path(one()?),
            "cycle" | "c" => Family::Cycle(one()?),
            "complete" | "k" => Family::Complete(one()?),
            "star" => Family::Star(one()?),
            "bipartite" | "kbip" | "complete-bipartite" => match params {
                [r, s] => Family::CompleteBipartite(*r, *s),
                _ => return Err(invalid("bipartite takes two parameters r s")),
            },
            "k4-e" | "k4e" | "k4-minus-e" => {
                if !params.is_empty() {
                    return Err(invalid("k4-e takes no parameters"));
                }
                Family::K4MinusEdge
            }
            other => return Err(invalid(format!("unknown family {other:?}"))),
        })
    }

    pub fn build(&self) -> Result<Graph, GraphError> {
        match *self {
            Family::Path(n) => path(n),
            Family::Cycle(n) => cycle(n),
            Family::Complete(n) => complete(n),
            Family::Star(n) => star(n),
            Family::CompleteBipartite(r, s) => complete_bipartite(r, s),
            Family::K4MinusEdge => Ok(k4_minus_edge()),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Family::Path(n) => write!(f, "P{n}"),
            Family::Cycle(n) => write!(f, "C{n}"),
            Family::Complete(n) => write!(f, "K{n}"),
            Family::Star(n) => write!(f, "K1,{}", n.saturating_sub(1)),
            Family::CompleteBipartite(r, s) => write!(f, "K{r},{s}"),
            Family::K4MinusEdge => f.write_str("K4-e"),
        }
    }
}

/// Compact notation: `P5`, `C6`, `K4`, `K2,3`, `S7` (star on 7 vertices), `K4-e`.
impl FromStr for Family {
    type Err = GraphError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim();
        if t.eq_ignore_ascii_case("k4-e") {
            return Ok(Family::K4MinusEdge);
        }
        let (head, rest) = t.split_at(t.find(|c: char| c.is_ascii_digit()).unwrap_or(t.len()));
        let nums: Result<Vec<usize>, _> = rest.split(',').map(|x| x.trim().parse()).collect();
        let nums = nums.map_err(|_| invalid(format!("cannot parse family {s:?}")))?;
        match (head.to_ascii_uppercase().as_str(), nums.as_slice()) {
            ("P", [n]) => Ok(Family::Path(*n)),
            ("C", [n]) => Ok(Family::Cycle(*n)),
            ("K", [n]) => Ok(Family::Complete(*n)),
            ("S", [n]) => Ok(Family::Star(*n)),
            ("K", [r, s]) => Ok(Family::CompleteBipartite(*r, *s)),
            _ => Err(invalid(format!("cannot parse family {s:?}"))),
        }
    }
}
