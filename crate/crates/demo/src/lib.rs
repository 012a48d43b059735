//! wasm-bindgen bindings behind `www/index.html`.
//!
//! Every export takes and returns plain strings; results are JSON objects.
//! The `*_json` functions hold the logic and are callable natively.

use serde::Serialize;
use wasm_bindgen::prelude::*;

use sigma_core::sigma::sigma_spectrum_capped;
use sigma_core::verify::{bound_for_cyclic, enumerate_connected, find_minimum};
use sigma_core::{
    bridges, cut_vertices, from_graph6, has_cycle, is_connected, is_good, is_good_graph,
    parse_edge_list, sigma0, sigma1, to_graph6, Family, Graph,
};

/// Largest order for which the full spectrum is shown.
pub const SPECTRUM_CAP: usize = 20;
/// Largest order for the exhaustive minimum search.
pub const SEARCH_CAP: usize = 8;

#[derive(Serialize, Debug)]
pub struct BadEdge {
    pub u: usize,
    pub v: usize,
    pub witness: usize,
}

#[derive(Serialize, Debug)]
pub struct Analysis {
    pub graph6: String,
    pub n: usize,
    pub m: usize,
    pub edges: Vec<(usize, usize)>,
    pub sigma0: u64,
    pub sigma1: u64,
    pub spectrum: Option<Vec<u64>>,
    pub connected: bool,
    pub cyclic: bool,
    pub good: bool,
    pub bad_edges: Vec<BadEdge>,
    pub bridges: Vec<(usize, usize)>,
    pub cut_vertices: Vec<usize>,
    pub cyclic_bound: Option<u64>,
}

#[derive(Serialize, Debug)]
pub struct Minimum {
    pub n: usize,
    pub value: u64,
    pub witnesses: Vec<String>,
}

/// Accepts graph6, family shorthand (`P5`, `K2,3`, `K4-e`) or an edge list
/// (`n` then one `u v` per line).
pub fn parse_input(text: &str) -> Result<Graph, String> {
    let t = text.trim();
    if t.contains('\n') || t.chars().all(|c| c.is_ascii_digit()) {
        return parse_edge_list(t).map_err(|e| e.to_string());
    }
    if let Ok(f) = t.parse::<Family>() {
        return f.build().map_err(|e| e.to_string());
    }
    from_graph6(t).map_err(|e| format!("not a family, edge list or graph6 string: {e}"))
}

pub fn analyze_graph(g: &Graph) -> Result<Analysis, String> {
    let err = |e: sigma_core::SigmaError| e.to_string();
    let report = is_good_graph(g);
    Ok(Analysis {
        graph6: to_graph6(g).map_err(|e| e.to_string())?,
        n: g.order(),
        m: g.size(),
        edges: g.edges().collect(),
        sigma0: sigma0(g).map_err(err)?,
        sigma1: sigma1(g).map_err(err)?,
        spectrum: if g.order() <= SPECTRUM_CAP {
            Some(sigma_spectrum_capped(g, SPECTRUM_CAP).map_err(err)?)
        } else {
            None
        },
        connected: is_connected(g),
        cyclic: has_cycle(g),
        good: report.is_good_graph,
        bad_edges: report
            .bad_edges()
            .map(|((u, v), witness)| BadEdge { u, v, witness })
            .collect(),
        bridges: bridges(g),
        cut_vertices: cut_vertices(g).to_vec(),
        cyclic_bound: bound_for_cyclic(g.order()),
    })
}

pub fn analyze_json(text: &str) -> Result<String, String> {
    let a = analyze_graph(&parse_input(text)?)?;
    serde_json::to_string(&a).map_err(|e| e.to_string())
}

/// Adds or removes edge `uv` and returns the new graph6 string.
pub fn toggle_edge_g6(graph6: &str, u: usize, v: usize) -> Result<String, String> {
    let g = from_graph6(graph6).map_err(|e| e.to_string())?;
    let h = if g.has_edge(u, v) {
        g.without_edge(u, v)
    } else {
        g.with_edge(u, v)
    }
    .map_err(|e| e.to_string())?;
    to_graph6(&h).map_err(|e| e.to_string())
}

/// Minimum `σ1` over connected graphs of order `n`, optionally restricted
/// to cyclic and/or good graphs.
pub fn minimum_json(n: usize, cyclic_only: bool, good_only: bool) -> Result<String, String> {
    if n == 0 || n > SEARCH_CAP {
        return Err(format!("order must lie in 1..={SEARCH_CAP}"));
    }
    let corpus = enumerate_connected(n).map_err(|e| e.to_string())?;
    let ext = find_minimum(&corpus, |g| (!cyclic_only || has_cycle(g)) && (!good_only || is_good(g)))
        .map_err(|e| e.to_string())?;
    let witnesses = ext
        .witnesses
        .iter()
        .map(|g| to_graph6(g).map_err(|e| e.to_string()))
        .collect::<Result<_, _>>()?;
    serde_json::to_string(&Minimum {
        n,
        value: ext.value,
        witnesses,
    })
    .map_err(|e| e.to_string())
}

#[wasm_bindgen]
pub fn analyze(text: &str) -> Result<String, JsError> {
    analyze_json(text).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn toggle_edge(graph6: &str, u: usize, v: usize) -> Result<String, JsError> {
    toggle_edge_g6(graph6, u, v).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn minimum(n: usize, cyclic_only: bool, good_only: bool) -> Result<String, JsError> {
    minimum_json(n, cyclic_only, good_only).map_err(|e| JsError::new(&e))
}
