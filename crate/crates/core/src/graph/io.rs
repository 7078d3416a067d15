//! Edge-list text format and DOT output.
//!
//! The edge list has one edge per line as two whitespace-separated ids.
//! Lines starting with `#` and blank lines are skipped. An optional header
//! `n <count>` before the first edge fixes the vertex count; otherwise it is
//! the largest id plus one.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use super::{Edge, EdgeSet, Graph, VertexId};
use crate::error::{Error, Result};

pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut declared: Option<usize> = None;
    let mut seen_edge = false;
    let mut edges: Vec<(usize, Edge)> = Vec::new();
    let mut present = BTreeSet::new();

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let err = |message: String| Error::Parse {
            line: line_no,
            message,
        };
        let fields: Vec<&str> = line.split_whitespace().collect();

        if fields[0] == "n" {
            if seen_edge || declared.is_some() {
                return Err(err("vertex-count header must precede all edges".into()));
            }
            let [_, count] = fields[..] else {
                return Err(err(format!("expected `n <count>`, got `{line}`")));
            };
            let count = count
                .parse()
                .map_err(|_| err(format!("invalid vertex count `{count}`")))?;
            declared = Some(count);
            continue;
        }

        let [a, b] = fields[..] else {
            return Err(err(format!("expected two vertex ids, got `{line}`")));
        };
        let id = |s: &str| -> Result<VertexId> {
            s.parse()
                .map_err(|_| err(format!("invalid vertex id `{s}`")))
        };
        let (a, b) = (id(a)?, id(b)?);
        if a == b {
            return Err(err(format!("self-loop on vertex {a}")));
        }
        if let Some(n) = declared {
            if a.max(b) >= n {
                return Err(err(format!(
                    "vertex {} exceeds declared count {n}",
                    a.max(b)
                )));
            }
        }
        let e = Edge::new(a, b);
        if !present.insert(e) {
            return Err(err(format!("duplicate edge {e}")));
        }
        seen_edge = true;
        edges.push((line_no, e));
    }

    let n = declared.unwrap_or_else(|| edges.iter().map(|(_, e)| e.v() + 1).max().unwrap_or(0));
    Graph::from_edges(n, edges.into_iter().map(|(_, e)| e))
}

/// Writes the header and one line per edge, so isolated vertices survive a
/// round trip.
pub fn serialize_edge_list(g: &Graph) -> String {
    let mut out = format!("n {}\n", g.n());
    for e in g.edges() {
        let _ = writeln!(out, "{} {}", e.u(), e.v());
    }
    out
}

/// Renders `g` as an undirected DOT graph. Vertices of `independent` are
/// drawn as double circles and `mono` edges in bold. When `labels` is given
/// it must have one entry per vertex.
pub fn to_dot(
    g: &Graph,
    independent: &BTreeSet<VertexId>,
    mono: &EdgeSet,
    labels: Option<&[String]>,
) -> String {
    let mut out = String::from("graph G {\n");
    for v in g.vertices() {
        let mut attrs = Vec::new();
        if independent.contains(&v) {
            attrs.push("shape=doublecircle".to_string());
        }
        if let Some(labels) = labels {
            attrs.push(format!("label=\"{v}: {}\"", labels[v]));
        }
        if attrs.is_empty() {
            let _ = writeln!(out, "  {v};");
        } else {
            let _ = writeln!(out, "  {v} [{}];", attrs.join(", "));
        }
    }
    for e in g.edges() {
        if mono.contains(e) {
            let _ = writeln!(out, "  {} -- {} [style=bold];", e.u(), e.v());
        } else {
            let _ = writeln!(out, "  {} -- {};", e.u(), e.v());
        }
    }
    out.push_str("}\n");
    out
}
