//! Subdivision and multiedge-subdivision of undirected multigraphs.
//!
//! Both operations leave the cutwidth unchanged; the tests check this against
//! the exact solver, along with the witness transfer in both directions.

use thiserror::Error;

use crate::graph::{GraphError, Multigraph, Multiplicity, VertexId};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TransformError {
    #[error("subdivision count must be at least 1")]
    ZeroCount,
    #[error("edge {{{u}, {v}}} has multiplicity {available}, cannot subdivide {requested}")]
    TooManyOccurrences { u: u32, v: u32, available: Multiplicity, requested: Multiplicity },
    #[error("edge {{{u}, {v}}} is not in the graph")]
    MissingEdge { u: u32, v: u32 },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Record of one multiedge-subdivision.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct SubdivisionStep {
    /// Endpoints of the subdivided edge, smaller id first.
    pub edge: (VertexId, VertexId),
    /// Number of occurrences routed through the fresh vertex.
    pub count: Multiplicity,
    pub fresh_vertex: VertexId,
}

/// Moves `count` occurrences of `{u, v}` onto a path `u – w – v` through one
/// fresh vertex `w = |V| + 1`; both new edges get multiplicity `count`.
pub fn multiedge_subdivide(
    g: &Multigraph,
    edge: (VertexId, VertexId),
    count: Multiplicity,
) -> Result<(Multigraph, SubdivisionStep), TransformError> {
    if g.is_directed() {
        return Err(GraphError::ExpectedUndirected.into());
    }
    let (u, v) = if edge.0 <= edge.1 { edge } else { (edge.1, edge.0) };
    g.check(u)?;
    g.check(v)?;
    if count == 0 {
        return Err(TransformError::ZeroCount);
    }
    let available = g.multiplicity(u, v);
    if available == 0 {
        return Err(TransformError::MissingEdge { u: u.get(), v: v.get() });
    }
    if count > available {
        return Err(TransformError::TooManyOccurrences {
            u: u.get(),
            v: v.get(),
            available,
            requested: count,
        });
    }

    let w = VertexId::from_index(g.vertex_count());
    let mut entries: Vec<_> = g
        .entries()
        .filter_map(|(a, b, m)| {
            if (a, b) == (u.get(), v.get()) {
                (m > count).then_some((a, b, m - count))
            } else {
                Some((a, b, m))
            }
        })
        .collect();
    entries.push((u.get(), w.get(), count));
    entries.push((w.get(), v.get(), count));
    let out = Multigraph::from_edge_list(g.orientation(), g.vertex_count() + 1, entries)?;
    Ok((out, SubdivisionStep { edge: (u, v), count, fresh_vertex: w }))
}

/// Subdivides every edge occurrence. Fresh vertices are numbered from
/// `|V| + 1` following the canonical edge order, one per occurrence, so the
/// result is a simple graph on `|V| + |E|` vertices.
pub fn full_subdivision(g: &Multigraph) -> Result<Multigraph, TransformError> {
    if g.is_directed() {
        return Err(GraphError::ExpectedUndirected.into());
    }
    let (n, entries) = subdivided_paths(g);
    let edges = entries.into_iter().flat_map(|(u, w, v)| [(u, w, 1), (w, v, 1)]);
    Ok(Multigraph::from_edge_list(g.orientation(), n, edges)?)
}

/// `(u, w, v)` for every occurrence of every edge `{u, v}` (or arc `(u, v)`)
/// in canonical order, with `w` its fresh midpoint. Also returns the new
/// vertex count.
pub(crate) fn subdivided_paths(g: &Multigraph) -> (usize, Vec<(u32, u32, u32)>) {
    let mut next = g.vertex_count() as u32;
    let mut paths = Vec::new();
    for e in g.edges() {
        for _ in 0..e.multiplicity {
            next += 1;
            paths.push((e.u.get(), next, e.v.get()));
        }
    }
    (next as usize, paths)
}
