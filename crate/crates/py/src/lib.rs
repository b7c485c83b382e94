//! Python module `pytotdom`: graphs, exact solvers, family classification,
//! product decompositions, quotients and verification campaigns.
//!
//! Structured results (classifications, reports, records) are returned as
//! plain dicts and lists mirroring the JSON the CLI prints.

use pyo3::create_exception;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::{PyBool, PyDict, PyList, PyString};
use serde_json::Value;

use totdom::corpus;
use totdom::families;
use totdom::gn;
use totdom::harness::{self, CampaignConfig, CampaignKind, CampaignParams};
use totdom::iso;
use totdom::solvers;
use totdom::{cartesian_product, VertexSet};

create_exception!(pytotdom, TotdomError, PyValueError);

fn err(e: totdom::Error) -> PyErr {
    TotdomError::new_err(e.to_string())
}

fn to_py<'py>(py: Python<'py>, v: &Value) -> PyResult<Bound<'py, PyAny>> {
    Ok(match v {
        Value::Null => py.None().into_bound(py),
        Value::Bool(b) => PyBool::new(py, *b).to_owned().into_any(),
        Value::Number(n) => match (n.as_u64(), n.as_i64()) {
            (Some(u), _) => u.into_pyobject(py)?.into_any(),
            (None, Some(i)) => i.into_pyobject(py)?.into_any(),
            _ => n.as_f64().unwrap_or(f64::NAN).into_pyobject(py)?.into_any(),
        },
        Value::String(s) => PyString::new(py, s).into_any(),
        Value::Array(items) => {
            let list = PyList::empty(py);
            for x in items {
                list.append(to_py(py, x)?)?;
            }
            list.into_any()
        }
        Value::Object(map) => {
            let dict = PyDict::new(py);
            for (k, x) in map {
                dict.set_item(k, to_py(py, x)?)?;
            }
            dict.into_any()
        }
    })
}

fn serialize<'py, T: serde::Serialize>(py: Python<'py>, x: &T) -> PyResult<Bound<'py, PyAny>> {
    let v = serde_json::to_value(x).map_err(|e| TotdomError::new_err(e.to_string()))?;
    to_py(py, &v)
}

/// A simple undirected graph on vertices `0..n`.
#[pyclass(name = "Graph", module = "pytotdom", skip_from_py_object)]
#[derive(Clone)]
pub struct PyGraph {
    inner: totdom::Graph,
}

impl From<totdom::Graph> for PyGraph {
    fn from(inner: totdom::Graph) -> Self {
        Self { inner }
    }
}

#[pymethods]
impl PyGraph {
    #[new]
    #[pyo3(signature = (n, edges = Vec::new()))]
    fn new(n: usize, edges: Vec<(usize, usize)>) -> PyResult<Self> {
        totdom::Graph::from_edges(n, &edges).map(Self::from).map_err(err)
    }

    #[staticmethod]
    fn from_graph6(line: &str) -> PyResult<Self> {
        corpus::parse_graph6(line).map(Self::from).map_err(err)
    }

    #[staticmethod]
    fn complete(n: usize) -> PyResult<Self> {
        totdom::Graph::complete(n).map(Self::from).map_err(err)
    }

    #[staticmethod]
    fn path(n: usize) -> PyResult<Self> {
        totdom::Graph::path(n).map(Self::from).map_err(err)
    }

    #[staticmethod]
    fn cycle(n: usize) -> PyResult<Self> {
        totdom::Graph::cycle(n).map(Self::from).map_err(err)
    }

    #[staticmethod]
    fn k2() -> Self {
        totdom::Graph::k2().into()
    }

    /// The graph `G_n`: an `n`-clique with a pendant `P_3` end at each vertex.
    #[staticmethod]
    fn gn(n: usize) -> PyResult<Self> {
        gn::build_gn(n).map(|g| g.graph.into()).map_err(err)
    }

    fn to_graph6(&self) -> PyResult<String> {
        corpus::write_graph6(&self.inner).map_err(err)
    }

    #[getter]
    fn n(&self) -> usize {
        self.inner.n()
    }

    fn edges(&self) -> Vec<(usize, usize)> {
        self.inner.edges().collect()
    }

    fn neighbors(&self, v: usize) -> PyResult<Vec<usize>> {
        self.inner.neighborhood(v).map(|s| s.to_vec()).map_err(err)
    }

    fn has_edge(&self, u: usize, v: usize) -> bool {
        self.inner.has_edge(u, v)
    }

    fn is_connected(&self) -> bool {
        self.inner.is_connected()
    }

    fn is_total_dominating(&self, vertices: Vec<usize>) -> PyResult<bool> {
        let s = VertexSet::from_vertices(self.inner.n(), vertices).map_err(err)?;
        Ok(self.inner.is_total_dominating(&s))
    }

    /// `G □ H`, with vertex `(g, h)` at index `g * H.n + h`.
    fn cartesian(&self, other: &PyGraph) -> Self {
        cartesian_product(&self.inner, &other.inner).into_graph().into()
    }

    fn is_isomorphic(&self, other: &PyGraph) -> bool {
        iso::is_isomorphic(&self.inner, &other.inner)
    }

    fn canonical(&self) -> Self {
        iso::canonical_graph(&self.inner).into()
    }

    fn __len__(&self) -> usize {
        self.inner.n()
    }

    fn __eq__(&self, other: &PyGraph) -> bool {
        self.inner == other.inner
    }

    fn __repr__(&self) -> String {
        match corpus::write_graph6(&self.inner) {
            Ok(g6) => format!("Graph.from_graph6({g6:?})"),
            Err(_) => format!("Graph(n={}, edges={})", self.inner.n(), self.inner.edge_count()),
        }
    }
}

/// `(γ_t(G), least minimum TD-set)`.
#[pyfunction]
fn gamma_t(g: &PyGraph) -> PyResult<(usize, Vec<usize>)> {
    let s = solvers::gamma_t(&g.inner).map_err(err)?;
    Ok((s.value, s.certificate.to_vec()))
}

#[pyfunction]
fn gamma(g: &PyGraph) -> (usize, Vec<usize>) {
    let s = solvers::gamma(&g.inner);
    (s.value, s.certificate.to_vec())
}

#[pyfunction]
fn rho_2(g: &PyGraph) -> (usize, Vec<usize>) {
    let s = solvers::rho_2(&g.inner);
    (s.value, s.certificate.to_vec())
}

#[pyfunction]
#[pyo3(signature = (g, limit = solvers::DEFAULT_ENUMERATION_LIMIT))]
fn all_min_td_sets(g: &PyGraph, limit: usize) -> PyResult<Vec<Vec<usize>>> {
    let sets = solvers::all_min_td_sets(&g.inner, limit).map_err(err)?;
    Ok(sets.iter().map(VertexSet::to_vec).collect())
}

/// `{"f1": ..., "f2": ..., "f3": ...}` with witnesses, `None` for non-members.
#[pyfunction]
fn classify<'py>(py: Python<'py>, g: &PyGraph) -> PyResult<Bound<'py, PyAny>> {
    let c = families::classify(&g.inner).map_err(err)?;
    serialize(py, &c)
}

/// Decomposes the minimum TD-set `d` (product vertex indices) of `G □ H`.
#[pyfunction]
fn decompose<'py>(py: Python<'py>, g: &PyGraph, h: &PyGraph, d: Vec<usize>) -> PyResult<Bound<'py, PyAny>> {
    let n = g.inner.n() * h.inner.n();
    let d = VertexSet::from_vertices(n, d).map_err(err)?;
    let report = families::decompose_product_tdset(&g.inner, &h.inner, &d).map_err(err)?;
    serialize(py, &report)
}

#[pyfunction]
fn quotient<'py>(py: Python<'py>, g: &PyGraph, h: &PyGraph) -> PyResult<Bound<'py, PyAny>> {
    let r = harness::quotient(&g.inner, &h.inner).map_err(err)?;
    serialize(py, &r)
}

/// The explicit TD-set of `G_k □ G_n` as `(g, h)` pairs.
#[pyfunction]
fn gn_product_tdset(k: usize, n: usize) -> PyResult<Vec<(usize, usize)>> {
    let d = gn::gn_product_tdset(k, n).map_err(err)?;
    let nh = 3 * n;
    Ok(d.iter().map(|v| (v / nh, v % nh)).collect())
}

#[pyfunction]
#[pyo3(signature = (k, n, cap = gn::DEFAULT_EXACT_CAP))]
fn gn_bounds<'py>(py: Python<'py>, k: usize, n: usize, cap: usize) -> PyResult<Bound<'py, PyAny>> {
    let b = gn::gn_bounds_check(k, n, cap).map_err(err)?;
    serialize(py, &b)
}

#[pyfunction]
fn enumerate_connected(n: usize) -> PyResult<Vec<PyGraph>> {
    Ok(corpus::enumerate_connected(n).map_err(err)?.into_iter().map(PyGraph::from).collect())
}

/// Runs a campaign (`"ho"`, `"q1"`, `"thm2"`, `"thm3"`, `"prop1"`) over the
/// enumerated connected graphs with at most `g_max` and `h_max` vertices.
#[pyfunction]
#[pyo3(signature = (kind, g_max, h_max = 0, jobs = 0))]
fn verify<'py>(py: Python<'py>, kind: &str, g_max: usize, h_max: usize, jobs: usize) -> PyResult<Bound<'py, PyAny>> {
    let kind: CampaignKind = kind.parse().map_err(err)?;
    let g = corpus::connected_corpus(1, g_max).map_err(err)?;
    let h = if kind.is_pairwise() {
        corpus::connected_corpus(1, h_max).map_err(err)?
    } else {
        Vec::new()
    };
    let mut cfg = CampaignConfig::new(kind, g, h);
    cfg.params = CampaignParams {
        g_corpus: format!("connected<={g_max}"),
        h_corpus: kind.is_pairwise().then(|| format!("connected<={h_max}")),
        ..CampaignParams::default()
    };
    cfg.jobs = jobs;
    let report = py.detach(|| harness::run_campaign(&cfg)).map_err(err)?;
    serialize(py, &report)
}

#[pymodule]
fn pytotdom(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add("TotdomError", m.py().get_type::<TotdomError>())?;
    m.add_class::<PyGraph>()?;
    m.add_function(wrap_pyfunction!(gamma_t, m)?)?;
    m.add_function(wrap_pyfunction!(gamma, m)?)?;
    m.add_function(wrap_pyfunction!(rho_2, m)?)?;
    m.add_function(wrap_pyfunction!(all_min_td_sets, m)?)?;
    m.add_function(wrap_pyfunction!(classify, m)?)?;
    m.add_function(wrap_pyfunction!(decompose, m)?)?;
    m.add_function(wrap_pyfunction!(quotient, m)?)?;
    m.add_function(wrap_pyfunction!(gn_product_tdset, m)?)?;
    m.add_function(wrap_pyfunction!(gn_bounds, m)?)?;
    m.add_function(wrap_pyfunction!(enumerate_connected, m)?)?;
    m.add_function(wrap_pyfunction!(verify, m)?)?;
    Ok(())
}
