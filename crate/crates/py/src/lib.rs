//! Python bindings for the `cutwidth` crate.
//!
//! Vertices are the 1-based integers used throughout the Rust crate;
//! partitions are lists of classes, each a list of vertex ids.

use std::fmt::Display;

use pyo3::create_exception;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use cutwidth::format::{parse_graph, serialize_graph};
use cutwidth::generators;
use cutwidth::{
    BoundCertificate, ComposeError, Multigraph, Ordering, Orientation, SolveError, VertexId,
    VertexPartition, DEFAULT_BUDGET,
};

create_exception!(cutwidth_py, BudgetExceededError, PyValueError);

fn value_error(e: impl Display) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn solve_error(e: SolveError) -> PyErr {
    match e {
        SolveError::BudgetExceeded { .. } => BudgetExceededError::new_err(e.to_string()),
        other => value_error(other),
    }
}

fn compose_error(e: ComposeError) -> PyErr {
    match e {
        ComposeError::Solve(s) => solve_error(s),
        other => value_error(other),
    }
}

fn raw(ids: &[VertexId]) -> Vec<u32> {
    ids.iter().map(|v| v.get()).collect()
}

fn classes_of(p: &VertexPartition) -> Vec<Vec<u32>> {
    p.classes().iter().map(|c| raw(c)).collect()
}

fn partition(g: &Multigraph, classes: &[Vec<u32>]) -> PyResult<VertexPartition> {
    VertexPartition::from_ids(g.vertex_count(), classes).map_err(value_error)
}

fn ordering(g: &Multigraph, ids: &[u32]) -> PyResult<Ordering> {
    Ordering::from_ids(ids, g.vertex_count()).map_err(value_error)
}

/// A multigraph on vertices `1..=vertex_count`.
///
/// `edges` holds `(u, v)` or `(u, v, multiplicity)` tuples; parallel entries
/// are merged.
#[pyclass(name = "Multigraph", module = "cutwidth_py", frozen, eq)]
#[derive(PartialEq)]
pub struct PyMultigraph {
    inner: Multigraph,
}

impl From<Multigraph> for PyMultigraph {
    fn from(inner: Multigraph) -> Self {
        PyMultigraph { inner }
    }
}

#[pymethods]
impl PyMultigraph {
    #[new]
    #[pyo3(signature = (vertex_count, edges, directed = false))]
    fn new(vertex_count: usize, edges: Vec<Vec<u32>>, directed: bool) -> PyResult<Self> {
        let entries = edges
            .iter()
            .map(|e| match e[..] {
                [u, v] => Ok((u, v, 1)),
                [u, v, m] => Ok((u, v, m)),
                _ => Err(value_error("edges are (u, v) or (u, v, multiplicity)")),
            })
            .collect::<PyResult<Vec<_>>>()?;
        let orientation = if directed { Orientation::Directed } else { Orientation::Undirected };
        Ok(Multigraph::from_edge_list(orientation, vertex_count, entries)
            .map_err(value_error)?
            .into())
    }

    /// Parses the line-oriented graph text format.
    #[staticmethod]
    fn parse(text: &str) -> PyResult<Self> {
        Ok(parse_graph(text).map_err(value_error)?.into())
    }

    fn serialize(&self) -> String {
        serialize_graph(&self.inner)
    }

    #[getter]
    fn directed(&self) -> bool {
        self.inner.is_directed()
    }

    #[getter]
    fn vertex_count(&self) -> usize {
        self.inner.vertex_count()
    }

    /// Canonical `(u, v, multiplicity)` triples.
    #[getter]
    fn edges(&self) -> Vec<(u32, u32, u32)> {
        self.inner.entries().collect()
    }

    #[getter]
    fn total_multiplicity(&self) -> u64 {
        self.inner.total_multiplicity()
    }

    fn multiplicity(&self, u: u32, v: u32) -> PyResult<u32> {
        let id = |x: u32| {
            VertexId::new(x)
                .filter(|v| self.inner.contains(*v))
                .ok_or_else(|| value_error(format!("vertex {x} is not in the graph")))
        };
        Ok(self.inner.multiplicity(id(u)?, id(v)?))
    }

    fn to_undirected(&self) -> Self {
        self.inner.to_undirected().into()
    }

    /// Multiplicity crossing the cut `(left, rest)`.
    fn cut_value(&self, left: Vec<u32>) -> PyResult<u64> {
        let ids: Vec<VertexId> = left
            .iter()
            .map(|&x| VertexId::new(x).ok_or_else(|| value_error("vertex ids start at 1")))
            .collect::<PyResult<_>>()?;
        self.inner.cut_value(&ids).map_err(value_error)
    }

    fn __repr__(&self) -> String {
        format!(
            "Multigraph(vertex_count={}, edges={:?}, directed={})",
            self.inner.vertex_count(),
            self.edges(),
            if self.inner.is_directed() { "True" } else { "False" }
        )
    }
}

/// An ordering together with the bound it witnesses.
#[pyclass(name = "BoundCertificate", module = "cutwidth_py", frozen)]
pub struct PyBoundCertificate {
    inner: BoundCertificate,
}

#[pymethods]
impl PyBoundCertificate {
    #[getter]
    fn ordering(&self) -> Vec<u32> {
        raw(self.inner.ordering.as_slice())
    }

    #[getter]
    fn achieved(&self) -> u64 {
        self.inner.achieved
    }

    #[getter]
    fn x(&self) -> u64 {
        self.inner.x
    }

    #[getter]
    fn y(&self) -> u64 {
        self.inner.y
    }

    /// `"simple_2x_plus_y"` or `"theorem_1_5x_plus_y"`.
    #[getter]
    fn kind(&self) -> String {
        self.inner.kind.to_string()
    }

    /// Twice the guaranteed bound, an integer.
    #[getter]
    fn bound_doubled(&self) -> u64 {
        self.inner.bound_doubled()
    }

    /// Per-class `"forward"` / `"reverse"`, in partition order.
    #[getter]
    fn directions(&self) -> Vec<String> {
        self.inner.directions.iter().map(|d| d.to_string()).collect()
    }

    fn holds(&self) -> bool {
        self.inner.holds()
    }

    fn __repr__(&self) -> String {
        format!(
            "BoundCertificate(kind={}, achieved={}, x={}, y={}, bound={})",
            self.inner.kind,
            self.inner.achieved,
            self.inner.x,
            self.inner.y,
            self.inner.bound_display()
        )
    }
}

/// Exact cutwidth and an optimal ordering. Directed graphs are solved on
/// their underlying undirected multigraph.
#[pyfunction]
#[pyo3(signature = (g, budget = DEFAULT_BUDGET))]
fn exact_cutwidth(g: PyRef<'_, PyMultigraph>, budget: usize) -> PyResult<(u64, Vec<u32>)> {
    let und = g.inner.to_undirected();
    let r = cutwidth::exact_cutwidth_with_budget(&und, budget).map_err(solve_error)?;
    Ok((r.value, raw(r.witness.as_slice())))
}

#[pyfunction]
fn ordering_cutwidth(g: PyRef<'_, PyMultigraph>, ordering_ids: Vec<u32>) -> PyResult<u64> {
    let ord = ordering(&g.inner, &ordering_ids)?;
    cutwidth::ordering_cutwidth(&g.inner, &ord).map_err(value_error)
}

/// Crossing multiplicity after each proper prefix of the ordering.
#[pyfunction]
fn prefix_cuts(g: PyRef<'_, PyMultigraph>, ordering_ids: Vec<u32>) -> PyResult<Vec<u64>> {
    let ord = ordering(&g.inner, &ordering_ids)?;
    cutwidth::solver::prefix_cuts(&g.inner, &ord).map_err(value_error)
}

#[pyfunction]
fn scc_partition(g: PyRef<'_, PyMultigraph>) -> PyResult<Vec<Vec<u32>>> {
    Ok(classes_of(&cutwidth::scc_partition(&g.inner).map_err(value_error)?))
}

#[pyfunction]
fn condensation(g: PyRef<'_, PyMultigraph>) -> PyResult<(PyMultigraph, Vec<Vec<u32>>)> {
    let (c, p) = cutwidth::condensation(&g.inner).map_err(value_error)?;
    Ok((c.into(), classes_of(&p)))
}

#[pyfunction]
fn quotient_multigraph(g: PyRef<'_, PyMultigraph>, classes: Vec<Vec<u32>>) -> PyResult<PyMultigraph> {
    let p = partition(&g.inner, &classes)?;
    Ok(cutwidth::quotient_multigraph(&g.inner, &p).map_err(value_error)?.into())
}

type Compose = fn(
    &Multigraph,
    &VertexPartition,
    &Ordering,
    &[Vec<VertexId>],
) -> Result<BoundCertificate, ComposeError>;

fn compose(
    g: &Multigraph,
    classes: &[Vec<u32>],
    quotient_ordering: Option<Vec<u32>>,
    class_orderings: Option<Vec<Vec<u32>>>,
    budget: usize,
    f: Compose,
) -> PyResult<PyBoundCertificate> {
    let und = g.to_undirected();
    let p = partition(&und, classes)?;
    let (q, orders) = match (quotient_ordering, class_orderings) {
        (Some(q), Some(orders)) => {
            let q = Ordering::from_ids(&q, p.class_count()).map_err(value_error)?;
            let orders = orders
                .iter()
                .map(|o| {
                    o.iter()
                        .map(|&x| VertexId::new(x).ok_or_else(|| value_error("vertex ids start at 1")))
                        .collect::<PyResult<Vec<_>>>()
                })
                .collect::<PyResult<Vec<_>>>()?;
            (q, orders)
        }
        (None, None) => cutwidth::optimal_orders(&und, &p, budget).map_err(compose_error)?,
        _ => return Err(value_error("give both quotient_ordering and class_orderings, or neither")),
    };
    let inner = f(&und, &p, &q, &orders).map_err(compose_error)?;
    Ok(PyBoundCertificate { inner })
}

/// Partition-compatible ordering of width at most `2x + y`. Without explicit
/// orderings, optimal quotient and class orderings are computed exactly.
#[pyfunction]
#[pyo3(signature = (g, classes, quotient_ordering = None, class_orderings = None, budget = DEFAULT_BUDGET))]
fn compose_simple(
    g: PyRef<'_, PyMultigraph>,
    classes: Vec<Vec<u32>>,
    quotient_ordering: Option<Vec<u32>>,
    class_orderings: Option<Vec<Vec<u32>>>,
    budget: usize,
) -> PyResult<PyBoundCertificate> {
    compose(&g.inner, &classes, quotient_ordering, class_orderings, budget, cutwidth::compose_simple)
}

/// As `compose_simple`, reversing classes where needed for `1.5x + y`.
#[pyfunction]
#[pyo3(signature = (g, classes, quotient_ordering = None, class_orderings = None, budget = DEFAULT_BUDGET))]
fn compose_theorem(
    g: PyRef<'_, PyMultigraph>,
    classes: Vec<Vec<u32>>,
    quotient_ordering: Option<Vec<u32>>,
    class_orderings: Option<Vec<Vec<u32>>>,
    budget: usize,
) -> PyResult<PyBoundCertificate> {
    compose(&g.inner, &classes, quotient_ordering, class_orderings, budget, cutwidth::compose_theorem)
}

#[pyfunction]
fn full_subdivision(g: PyRef<'_, PyMultigraph>) -> PyResult<PyMultigraph> {
    Ok(cutwidth::full_subdivision(&g.inner).map_err(value_error)?.into())
}

/// Reroutes `count` occurrences of `{u, v}` through a fresh vertex; returns
/// the new graph and the fresh vertex id.
#[pyfunction]
fn multiedge_subdivide(
    g: PyRef<'_, PyMultigraph>,
    u: u32,
    v: u32,
    count: u32,
) -> PyResult<(PyMultigraph, u32)> {
    let id = |x: u32| VertexId::new(x).ok_or_else(|| value_error("vertex ids start at 1"));
    let (h, step) =
        cutwidth::multiedge_subdivide(&g.inner, (id(u)?, id(v)?), count).map_err(value_error)?;
    Ok((h.into(), step.fresh_vertex.get()))
}

#[pyfunction]
fn gen_lower_g(x: u32, y: u32) -> PyResult<(PyMultigraph, Vec<Vec<u32>>)> {
    let (g, p) = generators::gen_lower_g(x, y).map_err(value_error)?;
    Ok((g.into(), classes_of(&p)))
}

#[pyfunction]
fn gen_lower_k(x: u32, y: u32) -> PyResult<PyMultigraph> {
    Ok(generators::gen_lower_k(x, y).map_err(value_error)?.into())
}

#[pyfunction]
fn gen_lower_h(x: u32, y: u32) -> PyResult<PyMultigraph> {
    Ok(generators::gen_lower_h(x, y).map_err(value_error)?.into())
}

#[pyfunction]
fn gen_nolow(n: usize) -> PyResult<PyMultigraph> {
    Ok(generators::gen_nolow_gn(n).map_err(value_error)?.into())
}

#[pyfunction]
#[pyo3(signature = (seed, vertex_count, max_multiplicity = 3, edge_density = 0.4, class_count = 1))]
fn gen_random(
    seed: u64,
    vertex_count: usize,
    max_multiplicity: u32,
    edge_density: f64,
    class_count: usize,
) -> PyResult<(PyMultigraph, Vec<Vec<u32>>)> {
    let (g, p) =
        generators::gen_random(seed, vertex_count, max_multiplicity, edge_density, class_count)
            .map_err(value_error)?;
    Ok((g.into(), classes_of(&p)))
}

#[pymodule]
pub fn cutwidth_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyMultigraph>()?;
    m.add_class::<PyBoundCertificate>()?;
    m.add("BudgetExceededError", m.py().get_type::<BudgetExceededError>())?;
    m.add("DEFAULT_BUDGET", DEFAULT_BUDGET)?;
    m.add_function(wrap_pyfunction!(exact_cutwidth, m)?)?;
    m.add_function(wrap_pyfunction!(ordering_cutwidth, m)?)?;
    m.add_function(wrap_pyfunction!(prefix_cuts, m)?)?;
    m.add_function(wrap_pyfunction!(scc_partition, m)?)?;
    m.add_function(wrap_pyfunction!(condensation, m)?)?;
    m.add_function(wrap_pyfunction!(quotient_multigraph, m)?)?;
    m.add_function(wrap_pyfunction!(compose_simple, m)?)?;
    m.add_function(wrap_pyfunction!(compose_theorem, m)?)?;
    m.add_function(wrap_pyfunction!(full_subdivision, m)?)?;
    m.add_function(wrap_pyfunction!(multiedge_subdivide, m)?)?;
    m.add_function(wrap_pyfunction!(gen_lower_g, m)?)?;
    m.add_function(wrap_pyfunction!(gen_lower_k, m)?)?;
    m.add_function(wrap_pyfunction!(gen_lower_h, m)?)?;
    m.add_function(wrap_pyfunction!(gen_nolow, m)?)?;
    m.add_function(wrap_pyfunction!(gen_random, m)?)?;
    Ok(())
}
