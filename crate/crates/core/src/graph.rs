//! Multigraphs with multiset edge semantics, orderings and cuts.

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

/// Multiplicity of a single edge entry.
pub type Multiplicity = u32;

/// Dense 1-based vertex identifier.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexId(u32);

impl VertexId {
    /// Builds an id from its 1-based value. Returns `None` for zero.
    pub fn new(id: u32) -> Option<Self> {
        (id >= 1).then_some(VertexId(id))
    }

    /// Id of the vertex stored at 0-based position `index`.
    pub fn from_index(index: usize) -> Self {
        VertexId(index as u32 + 1)
    }

    pub fn get(self) -> u32 {
        self.0
    }

    /// 0-based position of the vertex.
    pub fn index(self) -> usize {
        self.0 as usize - 1
    }
}

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Orientation {
    Directed,
    Undirected,
}

impl Orientation {
    pub fn is_directed(self) -> bool {
        matches!(self, Orientation::Directed)
    }
}

/// One distinct edge of a multigraph together with how many times it occurs.
///
/// For undirected graphs `u < v` always holds.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge {
    pub u: VertexId,
    pub v: VertexId,
    pub multiplicity: Multiplicity,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("self-loop on vertex {0}")]
    SelfLoop(u32),
    #[error("vertex id {id} out of range 1..={vertex_count}")]
    VertexOutOfRange { id: u32, vertex_count: usize },
    #[error("edge ({u}, {v}) has multiplicity 0")]
    ZeroMultiplicity { u: u32, v: u32 },
    #[error("multiplicity of edge ({u}, {v}) overflows")]
    MultiplicityOverflow { u: u32, v: u32 },
    #[error("expected a directed graph")]
    ExpectedDirected,
    #[error("expected an undirected graph")]
    ExpectedUndirected,
    #[error("not an ordering: {0}")]
    NotAPermutation(String),
    #[error("vertex {0} listed twice")]
    DuplicateVertex(u32),
}

/// Immutable multigraph over vertices `1..=vertex_count`.
///
/// Edges are kept sorted and merged, so two graphs with the same edge multiset
/// compare equal.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Multigraph {
    orientation: Orientation,
    vertex_count: usize,
    edges: Vec<Edge>,
}

impl Multigraph {
    /// Builds a multigraph from `(u, v, multiplicity)` entries.
    ///
    /// Repeated entries for the same pair are summed; for undirected graphs
    /// `(u, v)` and `(v, u)` are the same pair.
    pub fn from_edge_list(
        orientation: Orientation,
        vertex_count: usize,
        entries: impl IntoIterator<Item = (u32, u32, Multiplicity)>,
    ) -> Result<Self, GraphError> {
        let mut merged: BTreeMap<(VertexId, VertexId), Multiplicity> = BTreeMap::new();
        for (u, v, m) in entries {
            let u = checked_id(u, vertex_count)?;
            let v = checked_id(v, vertex_count)?;
            if u == v {
                return Err(GraphError::SelfLoop(u.get()));
            }
            if m == 0 {
                return Err(GraphError::ZeroMultiplicity { u: u.get(), v: v.get() });
            }
            let key = match orientation {
                Orientation::Undirected if v < u => (v, u),
                _ => (u, v),
            };
            let slot = merged.entry(key).or_insert(0);
            *slot = slot.checked_add(m).ok_or(GraphError::MultiplicityOverflow {
                u: key.0.get(),
                v: key.1.get(),
            })?;
        }
        Ok(Multigraph {
            orientation,
            vertex_count,
            edges: merged
                .into_iter()
                .map(|((u, v), multiplicity)| Edge { u, v, multiplicity })
                .collect(),
        })
    }

    pub fn edgeless(orientation: Orientation, vertex_count: usize) -> Self {
        Multigraph { orientation, vertex_count, edges: Vec::new() }
    }

    pub fn orientation(&self) -> Orientation {
        self.orientation
    }

    pub fn is_directed(&self) -> bool {
        self.orientation.is_directed()
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> {
        (0..self.vertex_count).map(VertexId::from_index)
    }

    /// Distinct edges in canonical (sorted) order.
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    /// Sum of all multiplicities, i.e. the cardinality of the edge multiset.
    pub fn total_multiplicity(&self) -> u64 {
        self.edges.iter().map(|e| u64::from(e.multiplicity)).sum()
    }

    /// Multiplicity of the pair `(u, v)`; unordered for undirected graphs.
    pub fn multiplicity(&self, u: VertexId, v: VertexId) -> Multiplicity {
        let key = match self.orientation {
            Orientation::Undirected if v < u => (v, u),
            _ => (u, v),
        };
        self.edges
            .binary_search_by(|e| (e.u, e.v).cmp(&key))
            .map(|i| self.edges[i].multiplicity)
            .unwrap_or(0)
    }

    pub fn contains(&self, v: VertexId) -> bool {
        v.index() < self.vertex_count
    }

    /// Forgets edge directions. Every directed occurrence adds one to the
    /// multiplicity of its unordered pair.
    pub fn underlying_undirected(&self) -> Result<Multigraph, GraphError> {
        if !self.is_directed() {
            return Err(GraphError::ExpectedDirected);
        }
        Ok(self.to_undirected())
    }

    /// Like [`Multigraph::underlying_undirected`], but returns a clone for
    /// graphs that are already undirected.
    pub fn to_undirected(&self) -> Multigraph {
        if !self.is_directed() {
            return self.clone();
        }
        Multigraph::from_edge_list(
            Orientation::Undirected,
            self.vertex_count,
            self.entries(),
        )
        .expect("edges of a valid graph stay valid")
    }

    /// Edges as `(u, v, multiplicity)` triples.
    pub fn entries(&self) -> impl Iterator<Item = (u32, u32, Multiplicity)> + '_ {
        self.edges.iter().map(|e| (e.u.get(), e.v.get(), e.multiplicity))
    }

    /// Subgraph induced by `subset`, with ids re-densified.
    ///
    /// The returned id-map lists the original id of every new vertex: new
    /// vertex `i` (1-based) is `id_map[i - 1]`. Ids keep their relative order.
    pub fn induced_subgraph(
        &self,
        subset: &[VertexId],
    ) -> Result<(Multigraph, Vec<VertexId>), GraphError> {
        let mut new_id = vec![0u32; self.vertex_count];
        let mut id_map: Vec<VertexId> = Vec::with_capacity(subset.len());
        for &v in subset {
            self.check(v)?;
            id_map.push(v);
        }
        id_map.sort_unstable();
        if let Some(w) = id_map.windows(2).find(|w| w[0] == w[1]) {
            return Err(GraphError::DuplicateVertex(w[0].get()));
        }
        for (i, v) in id_map.iter().enumerate() {
            new_id[v.index()] = i as u32 + 1;
        }
        let edges = self.edges.iter().filter_map(|e| {
            let (a, b) = (new_id[e.u.index()], new_id[e.v.index()]);
            (a != 0 && b != 0).then_some((a, b, e.multiplicity))
        });
        let sub = Multigraph::from_edge_list(self.orientation, id_map.len(), edges)?;
        Ok((sub, id_map))
    }

    /// Number of edge occurrences with exactly one endpoint in `left`.
    ///
    /// Orientation is ignored, so on directed graphs this is the cut value of
    /// the underlying undirected multigraph.
    pub fn cut_value(&self, left: &[VertexId]) -> Result<u64, GraphError> {
        let mut side = vec![false; self.vertex_count];
        for &v in left {
            self.check(v)?;
            side[v.index()] = true;
        }
        Ok(self.cut_value_of_mask(&side))
    }

    pub(crate) fn cut_value_of_mask(&self, left: &[bool]) -> u64 {
        self.edges
            .iter()
            .filter(|e| left[e.u.index()] != left[e.v.index()])
            .map(|e| u64::from(e.multiplicity))
            .sum()
    }

    /// Sum of multiplicities of edges incident to each vertex (0-based).
    pub fn degrees(&self) -> Vec<u64> {
        let mut deg = vec![0u64; self.vertex_count];
        for e in &self.edges {
            deg[e.u.index()] += u64::from(e.multiplicity);
            deg[e.v.index()] += u64::from(e.multiplicity);
        }
        deg
    }

    /// Undirected weighted adjacency lists (0-based), one entry per distinct
    /// neighbour with parallel and antiparallel edges summed.
    pub(crate) fn weighted_adjacency(&self) -> Vec<Vec<(usize, u64)>> {
        let und = self.to_undirected();
        let mut adj = vec![Vec::new(); self.vertex_count];
        for e in &und.edges {
            adj[e.u.index()].push((e.v.index(), u64::from(e.multiplicity)));
            adj[e.v.index()].push((e.u.index(), u64::from(e.multiplicity)));
        }
        adj
    }

    /// Connected components of the underlying undirected graph, each sorted
    /// ascending, listed by smallest member.
    pub fn connected_components(&self) -> Vec<Vec<VertexId>> {
        let adj = self.weighted_adjacency();
        let mut seen = vec![false; self.vertex_count];
        let mut components = Vec::new();
        for start in 0..self.vertex_count {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut stack = vec![start];
            let mut members = Vec::new();
            while let Some(v) = stack.pop() {
                members.push(VertexId::from_index(v));
                for &(w, _) in &adj[v] {
                    if !seen[w] {
                        seen[w] = true;
                        stack.push(w);
                    }
                }
            }
            members.sort_unstable();
            components.push(members);
        }
        components
    }

    pub(crate) fn check(&self, v: VertexId) -> Result<(), GraphError> {
        if self.contains(v) {
            Ok(())
        } else {
            Err(GraphError::VertexOutOfRange { id: v.get(), vertex_count: self.vertex_count })
        }
    }
}

fn checked_id(id: u32, vertex_count: usize) -> Result<VertexId, GraphError> {
    match VertexId::new(id) {
        Some(v) if v.index() < vertex_count => Ok(v),
        _ => Err(GraphError::VertexOutOfRange { id, vertex_count }),
    }
}

/// A permutation of all vertices of a graph.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Ordering {
    sequence: Vec<VertexId>,
}

impl Ordering {
    /// Validates that `sequence` lists each of `1..=vertex_count` exactly once.
    pub fn new(sequence: Vec<VertexId>, vertex_count: usize) -> Result<Self, GraphError> {
        if sequence.len() != vertex_count {
            return Err(GraphError::NotAPermutation(format!(
                "{} entries for {} vertices",
                sequence.len(),
                vertex_count
            )));
        }
        let mut seen = vec![false; vertex_count];
        for &v in &sequence {
            if v.index() >= vertex_count {
                return Err(GraphError::VertexOutOfRange { id: v.get(), vertex_count });
            }
            if std::mem::replace(&mut seen[v.index()], true) {
                return Err(GraphError::DuplicateVertex(v.get()));
            }
        }
        Ok(Ordering { sequence })
    }

    pub fn from_ids(ids: &[u32], vertex_count: usize) -> Result<Self, GraphError> {
        let seq = ids
            .iter()
            .map(|&id| VertexId::new(id).ok_or(GraphError::VertexOutOfRange { id, vertex_count }))
            .collect::<Result<Vec<_>, _>>()?;
        Ordering::new(seq, vertex_count)
    }

    /// The ordering `1, 2, ..., vertex_count`.
    pub fn identity(vertex_count: usize) -> Self {
        Ordering { sequence: (0..vertex_count).map(VertexId::from_index).collect() }
    }

    pub fn as_slice(&self) -> &[VertexId] {
        &self.sequence
    }

    pub fn len(&self) -> usize {
        self.sequence.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sequence.is_empty()
    }

    pub fn reversed(&self) -> Self {
        Ordering { sequence: self.sequence.iter().rev().copied().collect() }
    }

    /// `position[v.index()]` is the 0-based rank of `v`.
    pub fn positions(&self) -> Vec<usize> {
        let mut pos = vec![0; self.sequence.len()];
        for (i, v) in self.sequence.iter().enumerate() {
            pos[v.index()] = i;
        }
        pos
    }

    pub fn into_vec(self) -> Vec<VertexId> {
        self.sequence
    }
}

impl fmt::Display for Ordering {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.sequence.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

/// Shorthand for building id lists in tests and generators.
pub fn ids(raw: &[u32]) -> Vec<VertexId> {
    raw.iter().map(|&i| VertexId::new(i).expect("vertex ids are 1-based")).collect()
}
