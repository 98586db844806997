//! Line-oriented text formats for graphs and partitions.
//!
//! Graph file:
//!
//! ```text
//! # comment
//! undirected
//! 4
//! e 1 3 2
//! e 2 3
//! ```
//!
//! The first significant line is `directed` or `undirected`, the second the
//! vertex count, then one `e u v [m]` line per edge (multiplicity defaults to
//! 1). Partition files list one class per line as space-separated ids. In
//! both formats blank lines and lines starting with `#` are skipped.

use std::fmt::Write as _;

use thiserror::Error;

use crate::graph::{GraphError, Multigraph, Orientation, VertexId};
use crate::partition::{PartitionError, VertexPartition};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FormatError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("missing {0}")]
    Missing(&'static str),
    #[error("line {line}: {source}")]
    Graph { line: usize, source: GraphError },
    #[error(transparent)]
    Partition(#[from] PartitionError),
}

fn syntax(line: usize, message: impl Into<String>) -> FormatError {
    FormatError::Syntax { line, message: message.into() }
}

/// Non-comment lines with their 1-based line numbers.
fn significant_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

pub fn parse_graph(text: &str) -> Result<Multigraph, FormatError> {
    let mut lines = significant_lines(text);
    let (hline, header) = lines.next().ok_or(FormatError::Missing("orientation header"))?;
    let orientation = match header {
        "directed" => Orientation::Directed,
        "undirected" => Orientation::Undirected,
        other => return Err(syntax(hline, format!("expected 'directed' or 'undirected', got '{other}'"))),
    };
    let (cline, count) = lines.next().ok_or(FormatError::Missing("vertex count"))?;
    let vertex_count: usize = count
        .parse()
        .map_err(|_| syntax(cline, format!("invalid vertex count '{count}'")))?;

    let mut entries = Vec::new();
    for (line, content) in lines {
        let fields: Vec<&str> = content.split_ascii_whitespace().collect();
        if fields[0] != "e" {
            return Err(syntax(line, format!("expected an 'e u v [m]' edge line, got '{content}'")));
        }
        if !(3..=4).contains(&fields.len()) {
            return Err(syntax(line, "edge lines have the form 'e u v [m]'"));
        }
        let num = |s: &str| -> Result<u32, FormatError> {
            s.parse().map_err(|_| syntax(line, format!("invalid number '{s}'")))
        };
        let (u, v) = (num(fields[1])?, num(fields[2])?);
        let m = fields.get(3).map(|s| num(s)).transpose()?.unwrap_or(1);
        // Validate per line so errors point at the offending entry.
        Multigraph::from_edge_list(orientation, vertex_count, [(u, v, m)])
            .map_err(|source| FormatError::Graph { line, source })?;
        entries.push((u, v, m));
    }
    Multigraph::from_edge_list(orientation, vertex_count, entries)
        .map_err(|source| FormatError::Graph { line: 0, source })
}

/// Canonical serialization: header, vertex count, then edges in sorted order,
/// each with an explicit multiplicity. LF line endings.
pub fn serialize_graph(g: &Multigraph) -> String {
    let mut out = String::new();
    out.push_str(if g.is_directed() { "directed\n" } else { "undirected\n" });
    let _ = writeln!(out, "{}", g.vertex_count());
    for (u, v, m) in g.entries() {
        let _ = writeln!(out, "e {u} {v} {m}");
    }
    out
}

pub fn parse_partition(text: &str, vertex_count: usize) -> Result<VertexPartition, FormatError> {
    let mut classes = Vec::new();
    for (line, content) in significant_lines(text) {
        let class = content
            .split_ascii_whitespace()
            .map(|s| {
                s.parse::<u32>()
                    .ok()
                    .and_then(VertexId::new)
                    .ok_or_else(|| syntax(line, format!("invalid vertex id '{s}'")))
            })
            .collect::<Result<Vec<_>, _>>()?;
        classes.push(class);
    }
    Ok(VertexPartition::new(vertex_count, classes)?)
}

pub fn serialize_partition(p: &VertexPartition) -> String {
    let mut out = String::new();
    for class in p.classes() {
        let line: Vec<String> = class.iter().map(|v| v.to_string()).collect();
        out.push_str(&line.join(" "));
        out.push('\n');
    }
    out
}
