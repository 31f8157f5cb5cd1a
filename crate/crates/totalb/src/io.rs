//! Text formats. Graphs use a DIMACS-like edge list:
//!
//! ```text
//! c optional comment lines
//! p 3 2
//! e 0 1
//! e 1 2
//! ```
//!
//! Vertex ids are 0-based; edge ids follow the order of the `e` lines.
//! Colourings travel as the colouring JSON; DOT is output only.

use std::fmt::Write as _;

use thiserror::Error;

use crate::colouring::TotalColouring;
use crate::graph::{Graph, GraphError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {message}")]
pub struct ParseError {
    /// 1-based; 0 when the problem is the input as a whole.
    pub line: usize,
    pub message: String,
}

fn err(line: usize, message: impl Into<String>) -> ParseError {
    ParseError { line, message: message.into() }
}

fn number(tok: Option<&str>, line: usize, what: &str) -> Result<usize, ParseError> {
    let tok = tok.ok_or_else(|| err(line, format!("missing {what}")))?;
    tok.parse().map_err(|_| err(line, format!("{what} `{tok}` is not a non-negative integer")))
}

pub fn parse_edge_list(text: &str) -> Result<Graph, ParseError> {
    let mut header: Option<(usize, usize, usize)> = None;
    let mut g = Graph::new(0);
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let mut toks = raw.split_whitespace();
        match toks.next() {
            None | Some("c") => continue,
            Some("p") => {
                if header.is_some() {
                    return Err(err(line, "second `p` line"));
                }
                let n = number(toks.next(), line, "vertex count")?;
                let m = number(toks.next(), line, "edge count")?;
                header = Some((n, m, line));
                g = Graph::new(n);
            }
            Some("e") => {
                let Some((n, _, _)) = header else {
                    return Err(err(line, "edge before the `p` line"));
                };
                let u = number(toks.next(), line, "first endpoint")?;
                let v = number(toks.next(), line, "second endpoint")?;
                if u >= n || v >= n {
                    return Err(err(line, format!("edge ({u}, {v}) names a vertex outside 0..{n}")));
                }
                g.add_edge(u, v).map_err(|e| match e {
                    GraphError::SelfLoop(x) => err(line, format!("self-loop at vertex {x}")),
                    GraphError::DuplicateEdge(a, b) => err(line, format!("duplicate edge ({a}, {b})")),
                    other => err(line, other.to_string()),
                })?;
            }
            Some(other) => return Err(err(line, format!("unknown record `{other}`"))),
        }
        if let Some(extra) = toks.next() {
            return Err(err(line, format!("unexpected trailing token `{extra}`")));
        }
    }
    let (_, m, at) = header.ok_or_else(|| err(0, "no `p` line"))?;
    if g.edge_count() != m {
        return Err(err(at, format!("header promises {m} edges, found {}", g.edge_count())));
    }
    Ok(g)
}

pub fn write_edge_list(g: &Graph) -> String {
    let mut s = format!("p {} {}\n", g.vertex_count(), g.edge_count());
    for &(u, v) in g.edges() {
        writeln!(s, "e {u} {v}").unwrap();
    }
    s
}

/// Graphviz rendering; vertices and edges carry their colours when given.
pub fn to_dot(g: &Graph, c: Option<&TotalColouring>) -> String {
    let mut s = String::from("graph G {\n  node [shape=circle];\n");
    for v in 0..g.vertex_count() {
        match c.and_then(|c| c.get(crate::Element::Vertex(v))) {
            Some(col) => writeln!(s, "  {v} [label=\"{v}\\n{col}\"];").unwrap(),
            None => writeln!(s, "  {v};").unwrap(),
        }
    }
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        match c.and_then(|c| c.get(crate::Element::Edge(e))) {
            Some(col) => writeln!(s, "  {u} -- {v} [label=\"{col}\"];").unwrap(),
            None => writeln!(s, "  {u} -- {v};").unwrap(),
        }
    }
    s.push_str("}\n");
    s
}
