//! Text formats: graph6 and a plain edge list.
//!
//! graph6 here covers orders up to 62, where the size prefix is one byte.
//! Edge bits run over the upper triangle column by column
//! (`(0,1), (0,2), (1,2), (0,3), ...`), six per byte, each byte offset by 63.

use std::io::BufRead;

use crate::error::GraphError;
use crate::graph::{Graph, MAX_ORDER};

const OFFSET: u8 = 63;
const HEADER: &str = ">>graph6<<";

/// Decodes one graph6 line. A trailing newline and the optional `>>graph6<<`
/// header are accepted.
pub fn from_graph6(text: &str) -> Result<Graph, GraphError> {
    let text = text.trim_end_matches(['\n', '\r']);
    let text = text.strip_prefix(HEADER).unwrap_or(text);
    let bytes = text.as_bytes();
    let (&first, payload) = bytes
        .split_first()
        .ok_or_else(|| GraphError::MalformedGraph6("empty input".into()))?;
    if let Some(&bad) = bytes.iter().find(|b| !(OFFSET..=126).contains(*b)) {
        return Err(GraphError::MalformedGraph6(format!(
            "byte {bad} outside 63..=126"
        )));
    }
    if first == 126 {
        return Err(GraphError::Unsupported(
            "multi-byte graph6 size prefix (order > 62)".into(),
        ));
    }
    let n = (first - OFFSET) as usize;
    debug_assert!(n <= MAX_ORDER);
    let nbits = n * n.saturating_sub(1) / 2;
    let nbytes = nbits.div_ceil(6);
    if payload.len() != nbytes {
        return Err(GraphError::MalformedGraph6(format!(
            "order {n} needs {nbytes} payload bytes, found {}",
            payload.len()
        )));
    }
    let bit = |k: usize| (payload[k / 6] - OFFSET) >> (5 - k % 6) & 1 == 1;
    for k in nbits..nbytes * 6 {
        if bit(k) {
            return Err(GraphError::MalformedGraph6("nonzero padding bits".into()));
        }
    }
    let mut g = Graph::empty(n)?;
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bit(k) {
                g.add_edge(i, j)?;
            }
            k += 1;
        }
    }
    Ok(g)
}

/// Encodes a graph of order at most 62 as graph6, without a newline.
pub fn to_graph6(g: &Graph) -> Result<String, GraphError> {
    let n = g.order();
    if n > MAX_ORDER {
        return Err(GraphError::Unsupported(format!(
            "graph6 encoding of order {n}"
        )));
    }
    let nbits = n * n.saturating_sub(1) / 2;
    let mut out = Vec::with_capacity(1 + nbits.div_ceil(6));
    out.push(OFFSET + n as u8);
    let mut chunk = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            chunk = chunk << 1 | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push(OFFSET + chunk);
                chunk = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(OFFSET + (chunk << (6 - filled)));
    }
    Ok(String::from_utf8(out).expect("graph6 bytes are ASCII"))
}

/// Parses the edge-list text format: the first content line holds `n`, each
/// following line holds `u v`. Blank lines and lines starting with `#` are
/// ignored. Errors carry 1-based line numbers.
pub fn parse_edge_list(text: &str) -> Result<Graph, GraphError> {
    let mut order: Option<usize> = None;
    let mut edges = Vec::new();
    let mut lines = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let parse = |tok: &str| {
            tok.parse::<usize>().map_err(|_| GraphError::Parse {
                line: line_no,
                message: format!("expected a nonnegative integer, found {tok:?}"),
            })
        };
        let tokens: Vec<&str> = line.split_whitespace().collect();
        match (order, tokens.as_slice()) {
            (None, [n]) => order = Some(parse(n)?),
            (None, _) => {
                return Err(GraphError::Parse {
                    line: line_no,
                    message: "first line must hold the vertex count".into(),
                })
            }
            (Some(_), [u, v]) => {
                edges.push((parse(u)?, parse(v)?));
                lines.push(line_no);
            }
            (Some(_), _) => {
                return Err(GraphError::Parse {
                    line: line_no,
                    message: "expected `u v`".into(),
                })
            }
        }
    }
    let n = order.ok_or(GraphError::Parse {
        line: text.lines().count().max(1),
        message: "missing vertex count".into(),
    })?;
    let mut g = Graph::empty(n).map_err(|e| GraphError::Parse {
        line: 1,
        message: e.to_string(),
    })?;
    for (&(u, v), &line) in edges.iter().zip(&lines) {
        g.add_edge(u, v).map_err(|e| GraphError::Parse {
            line,
            message: e.to_string(),
        })?;
    }
    Ok(g)
}

/// Renders a graph in the edge-list text format.
pub fn to_edge_list(g: &Graph) -> String {
    let mut s = format!("{}\n", g.order());
    for (u, v) in g.edges() {
        s.push_str(&format!("{u} {v}\n"));
    }
    s
}

/// Streams a graph6 file one line at a time. Blank lines are skipped; each
/// item carries its 1-based line number.
pub fn graph6_lines<R: BufRead>(
    reader: R,
) -> impl Iterator<Item = (usize, Result<Graph, GraphError>)> {
    reader
        .lines()
        .enumerate()
        .filter_map(|(idx, line)| {
            let line_no = idx + 1;
            match line {
                Err(e) => Some((
                    line_no,
                    Err(GraphError::Parse {
                        line: line_no,
                        message: e.to_string(),
                    }),
                )),
                Ok(l) if l.trim().is_empty() => None,
                Ok(l) => Some((line_no, from_graph6(l.trim()))),
            }
        })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family;

    /// Straight transcription of the graph6 definition, kept apart from the
    /// encoder above: collect all bits, pad, then cut into 6-bit groups.
    fn reference_encode(n: usize, edges: &[(usize, usize)]) -> String {
        let mut bits = Vec::new();
        for j in 1..n {
            for i in 0..j {
                bits.push(edges.contains(&(i, j)) || edges.contains(&(j, i)));
            }
        }
        while bits.len() % 6 != 0 {
            bits.push(false);
        }
        let mut s = String::new();
        s.push((63 + n as u8) as char);
        for group in bits.chunks(6) {
            let v = group.iter().fold(0u8, |acc, &b| acc * 2 + b as u8);
            s.push((63 + v) as char);
        }
        s
    }

    #[test]
    fn hand_encoded_examples() {
        assert_eq!(reference_encode(3, &[(0, 1), (0, 2), (1, 2)]), "Bw");
        assert_eq!(reference_encode(2, &[(0, 1)]), "A_");
        assert_eq!(reference_encode(3, &[]), "B?");
        assert_eq!(reference_encode(0, &[]), "?");

        assert_eq!(from_graph6("Bw").unwrap(), family::complete(3).unwrap());
        assert_eq!(from_graph6("A_").unwrap(), family::path(2).unwrap());
        let e3 = from_graph6("B?").unwrap();
        assert_eq!((e3.order(), e3.size()), (3, 0));

        assert_eq!(to_graph6(&family::complete(3).unwrap()).unwrap(), "Bw");
        assert_eq!(to_graph6(&Graph::empty(0).unwrap()).unwrap(), "?");
        assert_eq!(to_graph6(&family::path(2).unwrap()).unwrap(), "A_");
    }

    #[test]
    fn matches_reference_on_known_graph() {
        // same 5-vertex graph as the petgraph test vector "DQc"
        let edges = [(0, 2), (0, 4), (1, 3), (3, 4)];
        let g = Graph::from_edge_list(5, &edges).unwrap();
        assert_eq!(reference_encode(5, &edges), "DQc");
        assert_eq!(to_graph6(&g).unwrap(), "DQc");
    }

    #[test]
    fn malformed_inputs() {
        assert!(matches!(from_graph6(""), Err(GraphError::MalformedGraph6(_))));
        assert!(matches!(from_graph6("B"), Err(GraphError::MalformedGraph6(_))));
        assert!(matches!(from_graph6("Bww"), Err(GraphError::MalformedGraph6(_))));
        assert!(matches!(from_graph6("B "), Err(GraphError::MalformedGraph6(_))));
        // 'x' sets a padding bit for n = 3
        assert!(matches!(from_graph6("Bx"), Err(GraphError::MalformedGraph6(_))));
        assert!(matches!(from_graph6("~?@?"), Err(GraphError::Unsupported(_))));
        assert_eq!(from_graph6(">>graph6<<Bw\n").unwrap().size(), 3);
    }

    #[test]
    fn oversized_encode_rejected() {
        // Graph itself caps at 62, so the encoder error is unreachable through
        // the public constructors; the decoder is the only way in.
        assert!(Graph::empty(63).is_err());
        let g = Graph::empty(62).unwrap();
        let s = to_graph6(&g).unwrap();
        assert_eq!(from_graph6(&s).unwrap(), g);
    }

    #[test]
    fn edge_list_format() {
        let g = parse_edge_list("# triangle\n3\n0 1\n1 2\n\n# closing edge\n0 2\n").unwrap();
        assert_eq!(g, family::complete(3).unwrap());
        assert_eq!(parse_edge_list(&to_edge_list(&g)).unwrap(), g);
        assert_eq!(
            parse_edge_list("3\n0 1\n0 x\n"),
            Err(GraphError::Parse {
                line: 3,
                message: "expected a nonnegative integer, found \"x\"".into()
            })
        );
        assert!(matches!(
            parse_edge_list("3\n0 1\n1 0\n"),
            Err(GraphError::Parse { line: 3, .. })
        ));
        assert!(matches!(
            parse_edge_list("2\n1 1\n"),
            Err(GraphError::Parse { line: 2, .. })
        ));
        assert!(matches!(parse_edge_list("# nothing\n"), Err(GraphError::Parse { .. })));
        assert!(matches!(parse_edge_list("3 4\n"), Err(GraphError::Parse { line: 1, .. })));
    }

    #[test]
    fn streaming_lines() {
        let data = "Bw\n\nA_\nB\n";
        let items: Vec<_> = graph6_lines(data.as_bytes()).collect();
        assert_eq!(items.len(), 3);
        assert_eq!(items[1].0, 3);
        assert!(items[1].1.is_ok());
        assert_eq!(items[2].0, 4);
        assert!(items[2].1.is_err());
    }
}
