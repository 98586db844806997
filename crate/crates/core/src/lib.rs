//! Exact cutwidth of multigraphs and bounds from vertex partitions.
//!
//! The pieces:
//!
//! * [`graph`]: multigraphs with edge multiplicities, orderings and cuts.
//! * [`solver`]: width of a given ordering and exact minimum cutwidth.
//! * [`partition`]: vertex partitions, quotients, SCCs and condensations.
//! * [`compose`]: orderings compatible with a partition, with `2x + y` and
//!   `1.5x + y` certificates.
//! * [`transforms`]: subdivision and multiedge-subdivision.
//! * [`generators`]: the lower-bound families and seeded random instances.
//! * [`format`]: the graph and partition text formats.
//! * [`verify`]: property suites behind `cutwidth verify`.
//!
//! Cutwidth of a directed graph always means the cutwidth of its underlying
//! undirected multigraph.

pub mod compose;
pub mod format;
pub mod generators;
pub mod graph;
pub mod partition;
pub mod solver;
pub mod transforms;
pub mod verify;

pub use compose::{
    audit_class, choose_orientation, class_edge_decomposition, compose_compatible,
    compose_simple, compose_theorem, optimal_orders, BoundCertificate, BoundKind, ClassAudit,
    ClassDirection, ComposeError, EdgeDecomposition, OrientationChoice,
};
pub use graph::{Edge, GraphError, Multigraph, Multiplicity, Ordering, Orientation, VertexId};
pub use partition::{
    classify_edges, condensation, quotient_multigraph, scc_partition, EdgeClassification,
    PartitionError, VertexPartition,
};
pub use solver::{
    exact_cutwidth, exact_cutwidth_with_budget, exact_cutwidth_within, ordering_cutwidth,
    CutwidthResult, SolveError, DEFAULT_BUDGET,
};
pub use transforms::{full_subdivision, multiedge_subdivide, SubdivisionStep, TransformError};
