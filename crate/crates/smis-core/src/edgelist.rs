//! Plain-text edge list format.
//!
//! First meaningful line is `n m`, followed by `m` lines `u v` with 0-based
//! endpoints. `#` starts a comment (whole line or trailing); blank lines
//! are ignored.

use crate::graph::{EdgeList, Graph, GraphError};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum EdgeListError {
    #[error("missing 'n m' header line")]
    MissingHeader,
    #[error("line {line}: expected '{expected}', got {got:?}")]
    Malformed {
        line: usize,
        expected: &'static str,
        got: String,
    },
    #[error("declared {declared} edges, found {found}")]
    WrongEdgeCount { declared: usize, found: usize },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

fn meaningful(line: &str) -> &str {
    line.split('#').next().unwrap_or("").trim()
}

/// Parses the text format into an [`EdgeList`] (unnormalized).
pub fn parse_edge_list(text: &str) -> Result<EdgeList, EdgeListError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, meaningful(l)))
        .filter(|(_, l)| !l.is_empty());

    let (line_no, header) = lines.next().ok_or(EdgeListError::MissingHeader)?;
    let mut hdr = header.split_whitespace();
    let parse_num = |tok: Option<&str>| -> Result<usize, EdgeListError> {
        tok.and_then(|t| t.parse().ok())
            .ok_or(EdgeListError::Malformed {
                line: line_no,
                expected: "n m",
                got: header.to_string(),
            })
    };
    let n = parse_num(hdr.next())?;
    let m = parse_num(hdr.next())?;
    if hdr.next().is_some() {
        return Err(EdgeListError::Malformed {
            line: line_no,
            expected: "n m",
            got: header.to_string(),
        });
    }

    let mut edges = Vec::with_capacity(m);
    for (line_no, body) in lines {
        let mut it = body.split_whitespace();
        let bad = || EdgeListError::Malformed {
            line: line_no,
            expected: "u v",
            got: body.to_string(),
        };
        let u: usize = it.next().and_then(|t| t.parse().ok()).ok_or_else(bad)?;
        let v: usize = it.next().and_then(|t| t.parse().ok()).ok_or_else(bad)?;
        if it.next().is_some() {
            return Err(bad());
        }
        edges.push((u, v));
    }
    if edges.len() != m {
        return Err(EdgeListError::WrongEdgeCount {
            declared: m,
            found: edges.len(),
        });
    }
    Ok(EdgeList::new(n, edges))
}

/// Parses the text format directly into a [`Graph`].
pub fn parse_edge_list_graph(text: &str) -> Result<Graph, EdgeListError> {
    Ok(Graph::from_edge_list(&parse_edge_list(text)?)?)
}

/// Emits the text format with normalized (u < v, sorted) edges.
pub fn emit_edge_list(g: &Graph) -> String {
    let edges = g.edges();
    let mut out = format!("{} {}\n", g.vertex_count(), edges.len());
    for (u, v) in edges {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}
