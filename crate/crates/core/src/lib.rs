//! Exact counting of k-nearly independent vertex subsets.
//!
//! A vertex subset is *k-nearly independent* when it induces exactly `k`
//! edges; `σ_k(G)` counts them. This crate provides
//!
//! * bitmask [`Graph`]s with graph6 and edge-list I/O, standard families,
//!   bridges, cut vertices and canonical keys;
//! * `σ_k` by brute force and `σ0`/`σ1` by memoized deletion recursions
//!   ([`sigma`]);
//! * good-edge and good-graph predicates ([`goodness`]);
//! * exhaustive corpora of small connected graphs and checkers for the
//!   known lower bounds on `σ1` and their extremal graphs ([`verify`]).

pub mod canon;
pub mod error;
pub mod family;
pub mod goodness;
pub mod graph;
pub mod io;
pub mod sigma;
pub mod traversal;
pub mod verify;

pub use canon::{canonical_form, canonical_key, CanonicalKey};
pub use error::{GraphError, SigmaError, VerifyError};
pub use family::Family;
pub use goodness::{is_good, is_good_edge, is_good_graph, EdgeGoodness, GoodnessReport};
pub use graph::{DegreeProfile, Graph, InducedSubgraph, VertexSet, MAX_ORDER};
pub use io::{from_graph6, parse_edge_list, to_graph6};
pub use sigma::{
    induced_edge_count, sigma0, sigma0_recursive, sigma1, sigma1_recursive, sigma_bruteforce,
    sigma_components, sigma_spectrum, MemoTable, Method, SigmaCount,
};
pub use traversal::{bridges, components, cut_vertices, has_cycle, is_connected};
