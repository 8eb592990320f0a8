//! The line-oriented graph file format.
//!
//! ```text
//! # comment
//! vertex v1
//! vertex v2
//! edge e v1 v2
//! ```

use lpa_core::{Graph, GraphError};
use thiserror::Error;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum GraphFileErrorKind {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("{0}")]
    Syntax(String),
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("line {line}: {kind}")]
pub struct GraphFileError {
    pub line: usize,
    pub kind: GraphFileErrorKind,
}

pub fn parse_graph(text: &str) -> Result<Graph, GraphFileError> {
    let mut builder = Graph::builder();
    for (i, raw) in text.lines().enumerate() {
        let at = |kind: GraphFileErrorKind| GraphFileError { line: i + 1, kind };
        let line = raw.split('#').next().unwrap_or("").trim();
        let words: Vec<&str> = line.split_whitespace().collect();
        match words.as_slice() {
            [] => {}
            ["vertex", id] => {
                builder.vertex(id).map_err(|e| at(e.into()))?;
            }
            ["edge", id, src, dst] => {
                builder.edge(id, src, dst).map_err(|e| at(e.into()))?;
            }
            ["vertex", ..] => return Err(at(syntax("expected `vertex <id>`"))),
            ["edge", ..] => return Err(at(syntax("expected `edge <id> <src> <dst>`"))),
            [other, ..] => return Err(at(syntax(&format!("unknown directive `{other}`")))),
        }
    }
    Ok(builder.build())
}

fn syntax(msg: &str) -> GraphFileErrorKind {
    GraphFileErrorKind::Syntax(msg.to_string())
}

/// The graph in file syntax; `parse_graph` inverts it.
pub fn write_graph(g: &Graph) -> String {
    let mut out = String::new();
    for v in g.vertices() {
        out.push_str(&format!("vertex {}\n", g.vertex_name(v)));
    }
    for e in g.edges() {
        let (s, r) = (g.source(e), g.range(e));
        out.push_str(&format!("edge {} {} {}\n", g.edge_name(e), g.vertex_name(s), g.vertex_name(r)));
    }
    out
}
