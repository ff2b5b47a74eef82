//! Python bindings. Curvature values cross the boundary as
//! `fractions.Fraction`.

use std::collections::BTreeMap;

use lly_core::classify::{self, ClassificationResult, VerificationReport};
use lly_core::curvature::{self, CurvatureReport, Distribution};
use lly_core::graph::{self as graph, Graph};
use lly_core::Rational;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

/// `(graph6, pair, message)`
type ViolationTuple = (String, Option<(usize, usize)>, String);

fn value_error(e: impl std::fmt::Display) -> PyErr {
    PyValueError::new_err(e.to_string())
}

/// Finite undirected simple graph on vertices `0..n`.
#[pyclass(name = "Graph", module = "lly", frozen, eq, from_py_object)]
#[derive(Clone, PartialEq)]
pub struct PyGraph {
    inner: Graph,
}

impl PyGraph {
    fn vertex(&self, v: usize) -> PyResult<usize> {
        self.inner.check_vertex(v).map_err(value_error)?;
        Ok(v)
    }
}

#[pymethods]
impl PyGraph {
    #[new]
    #[pyo3(signature = (n, edges=Vec::new()))]
    fn new(n: usize, edges: Vec<(usize, usize)>) -> PyResult<Self> {
        Graph::new(n, &edges).map(|inner| Self { inner }).map_err(value_error)
    }

    #[staticmethod]
    fn from_graph6(text: &str) -> PyResult<Self> {
        graph::parse_graph6(text.trim()).map(|inner| Self { inner }).map_err(value_error)
    }

    #[staticmethod]
    fn from_edgelist(text: &str) -> PyResult<Self> {
        graph::parse_edgelist(text).map(|inner| Self { inner }).map_err(value_error)
    }

    #[getter]
    fn n(&self) -> usize {
        self.inner.n()
    }

    fn edges(&self) -> Vec<(usize, usize)> {
        self.inner.edges().to_vec()
    }

    fn neighbors(&self, v: usize) -> PyResult<Vec<usize>> {
        Ok(self.inner.neighbors(self.vertex(v)?).to_vec())
    }

    fn degree(&self, v: usize) -> PyResult<usize> {
        Ok(self.inner.degree(self.vertex(v)?))
    }

    fn max_degree(&self) -> usize {
        self.inner.max_degree()
    }

    fn min_degree(&self) -> usize {
        self.inner.min_degree()
    }

    /// Shortest-path distances from `source`; `None` where unreachable.
    fn distances(&self, source: usize) -> PyResult<Vec<Option<u32>>> {
        self.inner.bfs_distances(source).map_err(value_error)
    }

    fn is_connected(&self) -> bool {
        self.inner.is_connected()
    }

    fn is_c4_free(&self) -> bool {
        self.inner.is_c4_free()
    }

    fn is_triangle_free(&self) -> bool {
        self.inner.is_triangle_free()
    }

    fn edge_in_cycle(&self, u: usize, v: usize, k: usize) -> PyResult<bool> {
        self.inner.edge_in_cycle(u, v, k).map_err(value_error)
    }

    fn is_isomorphic(&self, other: &PyGraph) -> PyResult<bool> {
        graph::is_isomorphic(&self.inner, &other.inner).map_err(value_error)
    }

    /// Canonical labelling key, equal for isomorphic graphs.
    fn canonical_form(&self) -> PyResult<String> {
        graph::canonical_form(&self.inner).map(|f| f.to_string()).map_err(value_error)
    }

    fn to_graph6(&self) -> String {
        graph::emit_graph6(&self.inner)
    }

    fn to_edgelist(&self) -> String {
        graph::emit_edgelist(&self.inner)
    }

    fn __len__(&self) -> usize {
        self.inner.n()
    }

    fn __repr__(&self) -> String {
        format!("Graph.from_graph6({:?})", graph::emit_graph6(&self.inner))
    }
}

/// Per-edge curvature of a connected graph.
#[pyclass(name = "CurvatureReport", module = "lly", frozen)]
pub struct PyCurvatureReport {
    report: CurvatureReport,
}

#[pymethods]
impl PyCurvatureReport {
    #[getter]
    fn graph(&self) -> PyGraph {
        PyGraph { inner: self.report.graph.clone() }
    }

    /// `(u, v, kappa)` triples sorted by edge.
    #[getter]
    fn edges(&self) -> Vec<(usize, usize, Rational)> {
        self.report.rows.iter().map(|r| (r.u, r.v, r.kappa.clone())).collect()
    }

    #[getter]
    fn min_kappa(&self) -> Rational {
        self.report.min_kappa.clone()
    }

    #[getter]
    fn positively_curved(&self) -> bool {
        self.report.positively_curved
    }

    fn __repr__(&self) -> String {
        format!(
            "CurvatureReport(edges={}, min_kappa={}, positively_curved={})",
            self.report.rows.len(),
            self.report.min_kappa,
            if self.report.positively_curved { "True" } else { "False" }
        )
    }
}

#[pyclass(name = "Classification", module = "lly", frozen)]
pub struct PyClassification {
    result: ClassificationResult,
}

#[pymethods]
impl PyClassification {
    #[getter]
    fn n_max(&self) -> usize {
        self.result.n_max
    }

    #[getter]
    fn survivors(&self) -> Vec<PyGraph> {
        self.result.survivors.iter().map(|s| PyGraph { inner: s.graph.clone() }).collect()
    }

    #[getter]
    fn min_kappas(&self) -> Vec<Rational> {
        self.result.survivors.iter().map(|s| s.report.min_kappa.clone()).collect()
    }

    #[getter]
    fn matched_known_set(&self) -> bool {
        self.result.matched_known_set
    }
}

#[pyclass(name = "VerificationReport", module = "lly", frozen)]
pub struct PyVerificationReport {
    report: VerificationReport,
}

#[pymethods]
impl PyVerificationReport {
    #[getter]
    fn suite(&self) -> String {
        self.report.suite.clone()
    }

    #[getter]
    fn graphs_checked(&self) -> usize {
        self.report.graphs_checked
    }

    #[getter]
    fn instances_checked(&self) -> usize {
        self.report.instances_checked
    }

    /// `(graph6, pair, message)` for each counterexample.
    #[getter]
    fn violations(&self) -> Vec<ViolationTuple> {
        self.report.violations.iter().map(|v| (v.graph6.clone(), v.pair, v.message.clone())).collect()
    }

    fn passed(&self) -> bool {
        self.report.passed()
    }
}

#[pyfunction]
#[pyo3(signature = (name, param=None))]
fn family(name: &str, param: Option<usize>) -> PyResult<PyGraph> {
    graph::family(name, param).map(|inner| PyGraph { inner }).map_err(value_error)
}

#[pyfunction]
fn lly_curvature(py: Python<'_>, g: &PyGraph, x: usize, y: usize) -> PyResult<Rational> {
    py.detach(|| curvature::lly_curvature(&g.inner, x, y)).map_err(value_error)
}

/// Same value through the lazy-walk limit; slower, used as a cross-check.
#[pyfunction]
fn lly_via_limit(py: Python<'_>, g: &PyGraph, x: usize, y: usize) -> PyResult<Rational> {
    py.detach(|| curvature::lly_via_limit(&g.inner, x, y)).map_err(value_error)
}

#[pyfunction]
fn alpha_ricci(py: Python<'_>, g: &PyGraph, x: usize, y: usize, alpha: Rational) -> PyResult<Rational> {
    py.detach(|| curvature::alpha_ricci(&g.inner, x, y, &alpha)).map_err(value_error)
}

/// Transport distance between two distributions given as
/// `{vertex: mass}` with exact masses.
#[pyfunction]
fn wasserstein(
    py: Python<'_>,
    g: &PyGraph,
    m1: BTreeMap<usize, Rational>,
    m2: BTreeMap<usize, Rational>,
) -> PyResult<Rational> {
    let m1 = Distribution::new(m1.into_iter().collect()).map_err(value_error)?;
    let m2 = Distribution::new(m2.into_iter().collect()).map_err(value_error)?;
    py.detach(|| curvature::wasserstein(&m1, &m2, &g.inner.distance_matrix()))
        .map(|(value, _)| value)
        .map_err(value_error)
}

#[pyfunction]
fn curvature_report(py: Python<'_>, g: &PyGraph) -> PyResult<PyCurvatureReport> {
    py.detach(|| curvature::curvature_report(&g.inner)).map(|report| PyCurvatureReport { report }).map_err(value_error)
}

#[pyfunction(name = "classify")]
#[pyo3(signature = (n_max=7))]
fn classify_graphs(py: Python<'_>, n_max: usize) -> PyResult<PyClassification> {
    py.detach(|| classify::classify_theorem_15(n_max)).map(|result| PyClassification { result }).map_err(value_error)
}

/// Runs a verification suite over `graphs`, or over every connected graph
/// on at most six vertices plus the named families when omitted.
#[pyfunction]
#[pyo3(signature = (suite, graphs=None))]
fn verify(py: Python<'_>, suite: &str, graphs: Option<Vec<PyGraph>>) -> PyResult<PyVerificationReport> {
    let corpus: Vec<Graph> = match graphs {
        Some(gs) => gs.into_iter().map(|g| g.inner).collect(),
        None => {
            let mut all = classify::connected_corpus(6).map_err(value_error)?;
            all.extend(classify::named_corpus());
            all
        }
    };
    let run = match suite {
        "lemma31" => classify::verify_lemma_31,
        "lemma32" => classify::verify_lemma_32,
        "lemma33" => classify::verify_lemma_33,
        "lemma21" => classify::verify_edge_reduction,
        "duality" => classify::verify_duality,
        "oracle" => classify::verify_oracle,
        other => return Err(PyValueError::new_err(format!("unknown suite {other:?}"))),
    };
    py.detach(|| run(&corpus)).map(|report| PyVerificationReport { report }).map_err(value_error)
}

#[pymodule]
pub fn lly(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyGraph>()?;
    m.add_class::<PyCurvatureReport>()?;
    m.add_class::<PyClassification>()?;
    m.add_class::<PyVerificationReport>()?;
    m.add_function(wrap_pyfunction!(family, m)?)?;
    m.add_function(wrap_pyfunction!(lly_curvature, m)?)?;
    m.add_function(wrap_pyfunction!(lly_via_limit, m)?)?;
    m.add_function(wrap_pyfunction!(alpha_ricci, m)?)?;
    m.add_function(wrap_pyfunction!(wasserstein, m)?)?;
    m.add_function(wrap_pyfunction!(curvature_report, m)?)?;
    m.add_function(wrap_pyfunction!(classify_graphs, m)?)?;
    m.add_function(wrap_pyfunction!(verify, m)?)?;
    Ok(())
}
