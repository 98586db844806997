//! Vertex partitions, quotient multigraphs and SCC condensation.

use thiserror::Error;

use crate::graph::{GraphError, Multigraph, Orientation, VertexId};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PartitionError {
    #[error("class {0} is empty")]
    EmptyClass(usize),
    #[error("vertex {0} belongs to more than one class")]
    Overlap(u32),
    #[error("vertex {0} is not covered by any class")]
    Gap(u32),
    #[error("vertex {id} out of range 1..={vertex_count}")]
    OutOfRange { id: u32, vertex_count: usize },
    #[error("partition covers {partition} vertices but the graph has {graph}")]
    SizeMismatch { partition: usize, graph: usize },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Partition of `1..=vertex_count` into nonempty disjoint classes.
///
/// Classes keep the order they were given in; vertices inside a class are
/// sorted.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct VertexPartition {
    classes: Vec<Vec<VertexId>>,
    class_of: Vec<usize>,
}

impl VertexPartition {
    pub fn new(vertex_count: usize, classes: Vec<Vec<VertexId>>) -> Result<Self, PartitionError> {
        let mut class_of = vec![usize::MAX; vertex_count];
        let mut sorted = Vec::with_capacity(classes.len());
        for (ci, mut class) in classes.into_iter().enumerate() {
            if class.is_empty() {
                return Err(PartitionError::EmptyClass(ci));
            }
            for &v in &class {
                if v.index() >= vertex_count {
                    return Err(PartitionError::OutOfRange { id: v.get(), vertex_count });
                }
                if class_of[v.index()] != usize::MAX {
                    return Err(PartitionError::Overlap(v.get()));
                }
                class_of[v.index()] = ci;
            }
            class.sort_unstable();
            sorted.push(class);
        }
        if let Some(gap) = class_of.iter().position(|&c| c == usize::MAX) {
            return Err(PartitionError::Gap(VertexId::from_index(gap).get()));
        }
        Ok(VertexPartition { classes: sorted, class_of })
    }

    pub fn from_ids(vertex_count: usize, classes: &[Vec<u32>]) -> Result<Self, PartitionError> {
        let classes = classes
            .iter()
            .map(|c| {
                c.iter()
                    .map(|&id| {
                        VertexId::new(id).ok_or(PartitionError::OutOfRange { id, vertex_count })
                    })
                    .collect::<Result<Vec<_>, _>>()
            })
            .collect::<Result<Vec<_>, _>>()?;
        VertexPartition::new(vertex_count, classes)
    }

    /// Every vertex in its own class, in id order.
    pub fn singletons(vertex_count: usize) -> Self {
        VertexPartition {
            classes: (0..vertex_count).map(|i| vec![VertexId::from_index(i)]).collect(),
            class_of: (0..vertex_count).collect(),
        }
    }

    /// A single class holding every vertex.
    pub fn whole(vertex_count: usize) -> Self {
        if vertex_count == 0 {
            return VertexPartition { classes: Vec::new(), class_of: Vec::new() };
        }
        VertexPartition {
            classes: vec![(0..vertex_count).map(VertexId::from_index).collect()],
            class_of: vec![0; vertex_count],
        }
    }

    pub fn classes(&self) -> &[Vec<VertexId>] {
        &self.classes
    }

    pub fn class_count(&self) -> usize {
        self.classes.len()
    }

    pub fn vertex_count(&self) -> usize {
        self.class_of.len()
    }

    /// 0-based index of the class containing `v`.
    pub fn class_of(&self, v: VertexId) -> usize {
        self.class_of[v.index()]
    }

    /// The quotient vertex standing for class `index`.
    pub fn class_vertex(index: usize) -> VertexId {
        VertexId::from_index(index)
    }

    pub(crate) fn check_against(&self, g: &Multigraph) -> Result<(), PartitionError> {
        if self.vertex_count() != g.vertex_count() {
            return Err(PartitionError::SizeMismatch {
                partition: self.vertex_count(),
                graph: g.vertex_count(),
            });
        }
        Ok(())
    }
}

/// Internal/external split of an edge multiset.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeClassification {
    pub internal: Multigraph,
    pub external: Multigraph,
}

impl EdgeClassification {
    pub fn internal_multiplicity(&self) -> u64 {
        self.internal.total_multiplicity()
    }

    pub fn external_multiplicity(&self) -> u64 {
        self.external.total_multiplicity()
    }
}

/// Merges every class to one vertex; class `i` becomes vertex `i + 1`.
/// Internal edges disappear, external multiplicities are kept.
pub fn quotient_multigraph(
    g: &Multigraph,
    p: &VertexPartition,
) -> Result<Multigraph, PartitionError> {
    p.check_against(g)?;
    let edges = g.edges().iter().filter_map(|e| {
        let (a, b) = (p.class_of(e.u), p.class_of(e.v));
        (a != b).then(|| (a as u32 + 1, b as u32 + 1, e.multiplicity))
    });
    Ok(Multigraph::from_edge_list(g.orientation(), p.class_count(), edges)?)
}

/// Splits the edges of `g` into those inside a class and those across
/// classes. Both halves live on the full vertex set of `g`.
pub fn classify_edges(
    g: &Multigraph,
    p: &VertexPartition,
) -> Result<EdgeClassification, PartitionError> {
    p.check_against(g)?;
    let (inside, across): (Vec<_>, Vec<_>) =
        g.entries().partition(|&(u, v, _)| {
            p.class_of(VertexId::from_index(u as usize - 1))
                == p.class_of(VertexId::from_index(v as usize - 1))
        });
    Ok(EdgeClassification {
        internal: Multigraph::from_edge_list(g.orientation(), g.vertex_count(), inside)?,
        external: Multigraph::from_edge_list(g.orientation(), g.vertex_count(), across)?,
    })
}

/// Strongly connected components, in reverse topological order of the
/// condensation (sink components first).
pub fn scc_partition(g: &Multigraph) -> Result<VertexPartition, PartitionError> {
    if !g.is_directed() {
        return Err(GraphError::ExpectedDirected.into());
    }
    let n = g.vertex_count();
    let mut out: Vec<Vec<usize>> = vec![Vec::new(); n];
    for e in g.edges() {
        out[e.u.index()].push(e.v.index());
    }
    let classes = tarjan(&out)
        .into_iter()
        .map(|c| c.into_iter().map(VertexId::from_index).collect())
        .collect();
    VertexPartition::new(n, classes)
}

/// Iterative Tarjan. Components come out in reverse topological order.
fn tarjan(out: &[Vec<usize>]) -> Vec<Vec<usize>> {
    const UNSEEN: usize = usize::MAX;
    let n = out.len();
    let mut index = vec![UNSEEN; n];
    let mut low = vec![0; n];
    let mut on_stack = vec![false; n];
    let mut stack = Vec::new();
    let mut components = Vec::new();
    let mut next = 0;

    for root in 0..n {
        if index[root] != UNSEEN {
            continue;
        }
        // (vertex, position in its out-list)
        let mut call: Vec<(usize, usize)> = vec![(root, 0)];
        index[root] = next;
        low[root] = next;
        next += 1;
        stack.push(root);
        on_stack[root] = true;

        while let Some(frame) = call.last_mut() {
            let v = frame.0;
            if let Some(&w) = out[v].get(frame.1) {
                frame.1 += 1;
                if index[w] == UNSEEN {
                    index[w] = next;
                    low[w] = next;
                    next += 1;
                    stack.push(w);
                    on_stack[w] = true;
                    call.push((w, 0));
                } else if on_stack[w] {
                    low[v] = low[v].min(index[w]);
                }
                continue;
            }
            call.pop();
            if let Some(&(parent, _)) = call.last() {
                low[parent] = low[parent].min(low[v]);
            }
            if low[v] == index[v] {
                let mut comp = Vec::new();
                loop {
                    let w = stack.pop().expect("tarjan stack");
                    on_stack[w] = false;
                    comp.push(w);
                    if w == v {
                        break;
                    }
                }
                comp.sort_unstable();
                components.push(comp);
            }
        }
    }
    components
}

/// Condensation multigraph together with the SCC partition it came from.
pub fn condensation(g: &Multigraph) -> Result<(Multigraph, VertexPartition), PartitionError> {
    let p = scc_partition(g)?;
    let q = quotient_multigraph(g, &p)?;
    Ok((q, p))
}

/// Kahn's algorithm; `None` when `g` has a directed cycle.
pub fn topological_order(g: &Multigraph) -> Option<Vec<VertexId>> {
    debug_assert_eq!(g.orientation(), Orientation::Directed);
    let n = g.vertex_count();
    let mut indeg = vec![0usize; n];
    let mut out: Vec<Vec<usize>> = vec![Vec::new(); n];
    for e in g.edges() {
        indeg[e.v.index()] += 1;
        out[e.u.index()].push(e.v.index());
    }
    let mut ready: Vec<usize> = (0..n).rev().filter(|&v| indeg[v] == 0).collect();
    let mut order = Vec::with_capacity(n);
    while let Some(v) = ready.pop() {
        order.push(VertexId::from_index(v));
        for &w in &out[v] {
            indeg[w] -= 1;
            if indeg[w] == 0 {
                ready.push(w);
            }
        }
    }
    (order.len() == n).then_some(order)
}
