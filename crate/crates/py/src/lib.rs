//! Python extension module exposing the graph type, exact invariants,
//! extremal constructions, and exhaustive verifiers.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::{PyDict, PyList};

use cei_core::graph::{sequential_join, Graph};
use cei_core::invariants::{self, Rational};
use cei_core::search::{self, SearchConfig};
use cei_core::{canonical_form, constructions, graph6};

fn err(e: cei_core::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn fraction<'py>(py: Python<'py>, r: &Rational) -> PyResult<Bound<'py, PyAny>> {
    let fractions = py.import("fractions")?;
    fractions.getattr("Fraction")?.call1((r.to_string(),))
}

fn json_to_py<'py>(py: Python<'py>, v: &serde_json::Value) -> PyResult<Bound<'py, PyAny>> {
    Ok(match v {
        serde_json::Value::Null => py.None().into_bound(py),
        serde_json::Value::Bool(b) => b.into_pyobject(py)?.to_owned().into_any(),
        serde_json::Value::Number(n) => {
            if let Some(i) = n.as_i64() {
                i.into_pyobject(py)?.into_any()
            } else {
                n.as_f64().unwrap().into_pyobject(py)?.into_any()
            }
        }
        serde_json::Value::String(s) => s.into_pyobject(py)?.into_any(),
        serde_json::Value::Array(items) => {
            let list = PyList::empty(py);
            for item in items {
                list.append(json_to_py(py, item)?)?;
            }
            list.into_any()
        }
        serde_json::Value::Object(map) => {
            let dict = PyDict::new(py);
            for (key, value) in map {
                dict.set_item(key, json_to_py(py, value)?)?;
            }
            dict.into_any()
        }
    })
}

/// Undirected simple graph.
#[pyclass(name = "Graph", frozen, from_py_object)]
#[derive(Clone)]
struct PyGraph {
    inner: Graph,
}

#[pymethods]
impl PyGraph {
    #[staticmethod]
    fn empty(n: usize) -> Self {
        PyGraph { inner: Graph::empty(n) }
    }

    #[staticmethod]
    fn complete(n: usize) -> Self {
        PyGraph { inner: Graph::complete(n) }
    }

    #[staticmethod]
    fn path(n: usize) -> Self {
        PyGraph { inner: Graph::path(n) }
    }

    #[staticmethod]
    fn cycle(n: usize) -> PyResult<Self> {
        Ok(PyGraph { inner: Graph::cycle(n).map_err(err)? })
    }

    #[staticmethod]
    fn star(n: usize) -> Self {
        PyGraph { inner: Graph::star(n) }
    }

    #[staticmethod]
    fn from_graph6(text: &str) -> PyResult<Self> {
        Ok(PyGraph { inner: graph6::decode(text).map_err(err)? })
    }

    #[getter]
    fn n(&self) -> usize {
        self.inner.n()
    }

    fn edge_count(&self) -> usize {
        self.inner.edge_count()
    }

    fn edges(&self) -> Vec<(usize, usize)> {
        self.inner.edges().collect()
    }

    fn has_edge(&self, u: usize, v: usize) -> bool {
        self.inner.has_edge(u, v)
    }

    fn add_edge(&self, u: usize, v: usize) -> PyResult<Self> {
        Ok(PyGraph { inner: self.inner.add_edge(u, v).map_err(err)? })
    }

    fn remove_edge(&self, u: usize, v: usize) -> PyResult<Self> {
        Ok(PyGraph { inner: self.inner.remove_edge(u, v).map_err(err)? })
    }

    fn join(&self, other: &PyGraph) -> Self {
        PyGraph { inner: self.inner.join(&other.inner) }
    }

    fn disjoint_union(&self, other: &PyGraph) -> Self {
        PyGraph { inner: self.inner.disjoint_union(&other.inner) }
    }

    fn is_connected(&self) -> PyResult<bool> {
        self.inner.is_connected().map_err(err)
    }

    fn to_graph6(&self) -> String {
        graph6::encode(&self.inner)
    }

    fn canonical_form(&self) -> PyResult<String> {
        Ok(canonical_form(&self.inner).map_err(err)?.into_string())
    }

    fn __repr__(&self) -> String {
        format!("Graph(n={}, edges={})", self.inner.n(), self.inner.edge_count())
    }

    fn __eq__(&self, other: &PyGraph) -> bool {
        self.inner == other.inner
    }
}

#[pyfunction]
fn sequential_join_graphs(parts: Vec<PyGraph>) -> PyResult<PyGraph> {
    let parts: Vec<Graph> = parts.into_iter().map(|p| p.inner).collect();
    Ok(PyGraph { inner: sequential_join(&parts).map_err(err)? })
}

#[pyfunction]
fn cei<'py>(py: Python<'py>, g: &PyGraph) -> PyResult<Bound<'py, PyAny>> {
    fraction(py, &invariants::cei(&g.inner).map_err(err)?)
}

#[pyfunction]
fn eci(g: &PyGraph) -> PyResult<usize> {
    invariants::eci(&g.inner).map_err(err)
}

#[pyfunction]
fn degrees(g: &PyGraph) -> Vec<usize> {
    invariants::degrees(&g.inner)
}

#[pyfunction]
fn eccentricities(g: &PyGraph) -> PyResult<Vec<usize>> {
    invariants::eccentricities(&g.inner).map_err(err)
}

#[pyfunction]
fn diameter(g: &PyGraph) -> PyResult<usize> {
    invariants::diameter(&g.inner).map_err(err)
}

#[pyfunction]
fn radius(g: &PyGraph) -> PyResult<usize> {
    invariants::radius(&g.inner).map_err(err)
}

#[pyfunction]
fn vertex_connectivity(g: &PyGraph) -> PyResult<usize> {
    invariants::vertex_connectivity(&g.inner).map_err(err)
}

#[pyfunction]
fn independence_number(g: &PyGraph) -> usize {
    invariants::independence_number(&g.inner)
}

#[pyfunction]
fn summarize<'py>(py: Python<'py>, g: &PyGraph) -> PyResult<Bound<'py, PyDict>> {
    let s = invariants::summarize(&g.inner).map_err(err)?;
    let dict = PyDict::new(py);
    dict.set_item("n", s.n)?;
    dict.set_item("edges", s.edges)?;
    dict.set_item("min_degree", s.min_degree)?;
    dict.set_item("max_degree", s.max_degree)?;
    dict.set_item("radius", s.radius)?;
    dict.set_item("diameter", s.diameter)?;
    dict.set_item("connectivity", s.connectivity)?;
    dict.set_item("independence_number", s.independence_number)?;
    dict.set_item("cei", fraction(py, &s.cei)?)?;
    dict.set_item("eci", s.eci)?;
    Ok(dict)
}

#[pyfunction]
fn build_g_nkd(n: usize, k: usize, d: usize) -> PyResult<PyGraph> {
    Ok(PyGraph { inner: constructions::build_g_nkd(n, k, d).map_err(err)? })
}

#[pyfunction]
fn build_h_nkd(n: usize, k: usize, d: usize, s: usize) -> PyResult<PyGraph> {
    Ok(PyGraph { inner: constructions::build_h_nkd(n, k, d, s).map_err(err)? })
}

#[pyfunction]
fn enumerate_h_family(n: usize, k: usize, d: usize) -> PyResult<Vec<PyGraph>> {
    Ok(constructions::enumerate_h_family(n, k, d)
        .map_err(err)?
        .into_iter()
        .map(|inner| PyGraph { inner })
        .collect())
}

#[pyfunction]
fn build_s_nalpha(n: usize, k: usize, alpha: usize) -> PyResult<PyGraph> {
    Ok(PyGraph { inner: constructions::build_s_nalpha(n, k, alpha).map_err(err)? })
}

#[pyfunction]
fn build_m_ndelta(n: usize, k: usize, delta: usize) -> PyResult<PyGraph> {
    Ok(PyGraph { inner: constructions::build_m_ndelta(n, k, delta).map_err(err)? })
}

#[pyfunction]
#[pyo3(signature = (n, cap = search::DEFAULT_ENUM_CAP, workers = 0))]
fn enumerate_connected(n: usize, cap: usize, workers: usize) -> PyResult<Vec<PyGraph>> {
    let cfg = SearchConfig { cap, workers };
    Ok(search::enumerate_connected(n, &cfg)
        .map_err(err)?
        .into_iter()
        .map(|inner| PyGraph { inner })
        .collect())
}

fn report_to_py<'py, T: serde::Serialize>(py: Python<'py>, report: &T) -> PyResult<Bound<'py, PyAny>> {
    let value = serde_json::to_value(report)
        .map_err(|e| PyValueError::new_err(e.to_string()))?;
    json_to_py(py, &value)
}

#[pyfunction]
#[pyo3(signature = (n, k, d, cap = search::DEFAULT_ENUM_CAP, workers = 0))]
fn verify_theorem1<'py>(
    py: Python<'py>,
    n: usize,
    k: usize,
    d: usize,
    cap: usize,
    workers: usize,
) -> PyResult<Bound<'py, PyAny>> {
    let cfg = SearchConfig { cap, workers };
    report_to_py(py, &search::verify_theorem1(n, k, d, &cfg, None).map_err(err)?)
}

#[pyfunction]
#[pyo3(signature = (n, k, alpha, cap = search::DEFAULT_ENUM_CAP, workers = 0))]
fn verify_theorem2<'py>(
    py: Python<'py>,
    n: usize,
    k: usize,
    alpha: usize,
    cap: usize,
    workers: usize,
) -> PyResult<Bound<'py, PyAny>> {
    let cfg = SearchConfig { cap, workers };
    report_to_py(py, &search::verify_theorem2(n, k, alpha, &cfg, None).map_err(err)?)
}

#[pyfunction]
#[pyo3(signature = (n, k, delta, cap = search::DEFAULT_ENUM_CAP, workers = 0))]
fn verify_theorem3<'py>(
    py: Python<'py>,
    n: usize,
    k: usize,
    delta: usize,
    cap: usize,
    workers: usize,
) -> PyResult<Bound<'py, PyAny>> {
    let cfg = SearchConfig { cap, workers };
    report_to_py(py, &search::verify_theorem3(n, k, delta, &cfg, None).map_err(err)?)
}

#[pyfunction]
#[pyo3(signature = (max_n, cap = search::DEFAULT_ENUM_CAP, workers = 0))]
fn check_lemma1<'py>(
    py: Python<'py>,
    max_n: usize,
    cap: usize,
    workers: usize,
) -> PyResult<Bound<'py, PyAny>> {
    let cfg = SearchConfig { cap, workers };
    report_to_py(py, &search::check_lemma1(max_n, &cfg).map_err(err)?)
}

#[pymodule]
fn cei_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyGraph>()?;
    m.add_function(wrap_pyfunction!(sequential_join_graphs, m)?)?;
    m.add_function(wrap_pyfunction!(cei, m)?)?;
    m.add_function(wrap_pyfunction!(eci, m)?)?;
    m.add_function(wrap_pyfunction!(degrees, m)?)?;
    m.add_function(wrap_pyfunction!(eccentricities, m)?)?;
    m.add_function(wrap_pyfunction!(diameter, m)?)?;
    m.add_function(wrap_pyfunction!(radius, m)?)?;
    m.add_function(wrap_pyfunction!(vertex_connectivity, m)?)?;
    m.add_function(wrap_pyfunction!(independence_number, m)?)?;
    m.add_function(wrap_pyfunction!(summarize, m)?)?;
    m.add_function(wrap_pyfunction!(build_g_nkd, m)?)?;
    m.add_function(wrap_pyfunction!(build_h_nkd, m)?)?;
    m.add_function(wrap_pyfunction!(enumerate_h_family, m)?)?;
    m.add_function(wrap_pyfunction!(build_s_nalpha, m)?)?;
    m.add_function(wrap_pyfunction!(build_m_ndelta, m)?)?;
    m.add_function(wrap_pyfunction!(enumerate_connected, m)?)?;
    m.add_function(wrap_pyfunction!(verify_theorem1, m)?)?;
    m.add_function(wrap_pyfunction!(verify_theorem2, m)?)?;
    m.add_function(wrap_pyfunction!(verify_theorem3, m)?)?;
    m.add_function(wrap_pyfunction!(check_lemma1, m)?)?;
    Ok(())
}
