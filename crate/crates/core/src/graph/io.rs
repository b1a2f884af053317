//! JSON edge lists, graph6, and DOT.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use super::{Graph, GraphError, Vertex};

/// `{"n": 5, "edges": [[0, 1], ...], "labels": ["1", ...]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeList {
    pub n: usize,
    pub edges: Vec<[Vertex; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
}

impl From<&Graph> for EdgeList {
    fn from(g: &Graph) -> Self {
        EdgeList {
            n: g.vertex_count(),
            edges: g.edges().into_iter().map(|(u, v)| [u, v]).collect(),
            labels: g.labels().map(|l| l.to_vec()),
        }
    }
}

impl TryFrom<EdgeList> for Graph {
    type Error = GraphError;

    fn try_from(e: EdgeList) -> Result<Self, Self::Error> {
        let pairs: Vec<(Vertex, Vertex)> = e.edges.iter().map(|&[u, v]| (u, v)).collect();
        let g = Graph::from_edges(e.n, &pairs)?;
        match e.labels {
            Some(l) => g.with_labels(l),
            None => Ok(g),
        }
    }
}

pub fn to_json(g: &Graph) -> String {
    serde_json::to_string(&EdgeList::from(g)).expect("edge list serializes")
}

pub fn from_json(text: &str) -> Result<Graph, GraphError> {
    let e: EdgeList =
        serde_json::from_str(text).map_err(|err| GraphError::Malformed(err.to_string()))?;
    Graph::try_from(e)
}

/// Encodes `g` in graph6 format (no header, no trailing newline).
pub fn to_graph6(g: &Graph) -> String {
    let n = g.vertex_count();
    let mut out = String::new();
    if n <= 62 {
        out.push((n as u8 + 63) as char);
    } else if n <= 258_047 {
        out.push('~');
        for shift in [12, 6, 0] {
            out.push((((n >> shift) & 63) as u8 + 63) as char);
        }
    } else {
        out.push_str("~~");
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push((((n >> shift) & 63) as u8 + 63) as char);
        }
    }
    let mut bits = Vec::with_capacity(n * n.saturating_sub(1) / 2);
    for v in 1..n {
        for u in 0..v {
            bits.push(g.adjacent(u, v));
        }
    }
    for chunk in bits.chunks(6) {
        let mut byte = 0u8;
        for i in 0..6 {
            byte <<= 1;
            if chunk.get(i).copied().unwrap_or(false) {
                byte |= 1;
            }
        }
        out.push((byte + 63) as char);
    }
    out
}

pub fn from_graph6(text: &str) -> Result<Graph, GraphError> {
    let text = text.trim();
    let text = text.strip_prefix(">>graph6<<").unwrap_or(text);
    let bytes = text.as_bytes();
    let bad = |why: &str| GraphError::Malformed(format!("graph6: {why}"));
    if bytes.iter().any(|&b| !(63..=126).contains(&b)) {
        return Err(bad("byte outside 63..=126"));
    }
    let sextet = |i: usize| -> Result<usize, GraphError> {
        bytes
            .get(i)
            .map(|&b| (b - 63) as usize)
            .ok_or_else(|| bad("truncated header"))
    };
    let (n, start) = match bytes.first() {
        None => return Err(bad("empty input")),
        Some(b'~') if bytes.get(1) == Some(&b'~') => {
            let mut n = 0;
            for i in 2..8 {
                n = (n << 6) | sextet(i)?;
            }
            (n, 8)
        }
        Some(b'~') => {
            let mut n = 0;
            for i in 1..4 {
                n = (n << 6) | sextet(i)?;
            }
            (n, 4)
        }
        Some(_) => (sextet(0)?, 1),
    };
    let pairs = n * n.saturating_sub(1) / 2;
    let expected = pairs.div_ceil(6);
    if bytes.len() - start != expected {
        return Err(bad("body length does not match vertex count"));
    }
    let mut edges = Vec::new();
    let mut k = 0;
    for v in 1..n {
        for u in 0..v {
            let byte = bytes[start + k / 6] - 63;
            if byte & (1 << (5 - k % 6)) != 0 {
                edges.push((u, v));
            }
            k += 1;
        }
    }
    Graph::from_edges(n, &edges)
}

/// DOT text with vertex labels; `name` becomes the graph identifier.
pub fn to_dot(g: &Graph, name: &str) -> String {
    let ident: String = name
        .chars()
        .map(|c| if c.is_ascii_alphanumeric() { c } else { '_' })
        .collect();
    let mut out = format!("graph {ident} {{\n");
    for v in 0..g.vertex_count() {
        let _ = writeln!(out, "  {v} [label=\"{}\"];", g.label(v).replace('"', "\\\""));
    }
    for (u, v) in g.edges() {
        let _ = writeln!(out, "  {u} -- {v};");
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::catalog::{complete, cycle, odd_graph, DEFAULT_VERTEX_CAP};

    #[test]
    fn graph6_known_strings() {
        // reference encodings from the format description
        assert_eq!(to_graph6(&complete(4, 10).unwrap()), "C~");
        assert_eq!(to_graph6(&cycle(5, 10).unwrap()), "Dhc");
        assert_eq!(to_graph6(&odd_graph(3, DEFAULT_VERTEX_CAP).unwrap()).len(), 9);
    }

    #[test]
    fn graph6_round_trip_large_header() {
        let g = cycle(100, 1000).unwrap();
        let s = to_graph6(&g);
        assert!(s.starts_with('~'));
        let back = from_graph6(&s).unwrap();
        assert_eq!(back.edges(), g.edges());
    }

    #[test]
    fn graph6_rejects_garbage() {
        assert!(from_graph6("").is_err());
        assert!(from_graph6("D").is_err());
        assert!(from_graph6("D\u{7f}").is_err());
    }

    #[test]
    fn json_round_trip() {
        let g = odd_graph(3, DEFAULT_VERTEX_CAP).unwrap();
        let back = from_json(&to_json(&g)).unwrap();
        assert_eq!(back.edges(), g.edges());
        assert_eq!(back.label(0), "12");
        assert!(from_json("{\"n\": 2, \"edges\": [[0, 2]]}").is_err());
    }

    #[test]
    fn dot_lists_every_edge() {
        let g = cycle(5, 10).unwrap();
        let dot = to_dot(&g, "c5");
        assert_eq!(dot.matches(" -- ").count(), 5);
        assert!(dot.starts_with("graph c5 {"));
    }
}
