//! Python bindings. Vertices are 0-based, weights cross the boundary as
//! strings (`"3"`, `"-2/5"`) and anything whose `str()` parses as one, so
//! `int` and `fractions.Fraction` both work.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::PyDict;

use skewspec::format::{parse_wdg, write_wdg};
use skewspec::rational::{parse_rational, to_canonical_string};
use skewspec::signing::parse_signing_spec;
use skewspec::{InvarianceVerdict, Rational, SkewSigning, WeightedDigraph, DEFAULT_CAP};

fn err(e: skewspec::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn weight(obj: &Bound<'_, PyAny>) -> PyResult<Rational> {
    parse_rational(&obj.str()?.to_cow()?).map_err(PyValueError::new_err)
}

fn signing(d: &WeightedDigraph, spec: Option<&str>) -> PyResult<Option<SkewSigning>> {
    parse_signing_spec(d, spec.unwrap_or("none")).map_err(err)
}

/// A weighted digraph with exact rational arc weights.
#[pyclass(name = "Digraph", module = "skewspec", frozen)]
struct PyDigraph {
    inner: WeightedDigraph,
}

#[pymethods]
impl PyDigraph {
    /// `arcs` is a list of `(u, v, weight)`.
    #[new]
    fn new(n: usize, arcs: Vec<(usize, usize, Bound<'_, PyAny>)>) -> PyResult<Self> {
        let arcs = arcs
            .iter()
            .map(|(u, v, w)| Ok(((*u, *v), weight(w)?)))
            .collect::<PyResult<Vec<_>>>()?;
        Ok(Self { inner: WeightedDigraph::new(n, arcs).map_err(err)? })
    }

    /// Unit weights on both arcs of every edge.
    #[staticmethod]
    fn from_graph(edges: Vec<(usize, usize)>, n: usize) -> PyResult<Self> {
        Ok(Self { inner: WeightedDigraph::from_graph(&edges, n).map_err(err)? })
    }

    #[staticmethod]
    fn from_wdg(text: &str) -> PyResult<Self> {
        Ok(Self { inner: parse_wdg(text).map_err(err)? })
    }

    fn to_wdg(&self) -> String {
        write_wdg(&self.inner)
    }

    #[getter]
    fn n(&self) -> usize {
        self.inner.vertex_count()
    }

    #[getter]
    fn arcs(&self) -> Vec<(usize, usize, String)> {
        self.inner.arcs().map(|((u, v), w)| (u, v, to_canonical_string(w))).collect()
    }

    #[getter]
    fn digons(&self) -> Vec<(usize, usize)> {
        self.inner.digons()
    }

    fn is_pwls(&self) -> bool {
        self.inner.is_pwls()
    }

    fn validate(&self) -> Vec<String> {
        self.inner.validate_pwls().violations.iter().map(|v| v.to_string()).collect()
    }

    fn __repr__(&self) -> String {
        format!("Digraph(n={}, arcs={})", self.inner.vertex_count(), self.inner.arc_count())
    }
}

/// Characteristic polynomial, optionally of a skew-signing given as
/// `"all-plus"` or `"bits:..."`.
#[pyfunction]
#[pyo3(signature = (d, signing=None))]
fn char_poly(d: &PyDigraph, signing: Option<&str>) -> PyResult<String> {
    let m = match self::signing(&d.inner, signing)? {
        Some(s) => skewspec::apply_signing(&d.inner, &s).map_err(err)?,
        None => d.inner.to_matrix(),
    };
    Ok(skewspec::char_poly(&m).to_string())
}

/// Coefficients `a_1..a_n` as strings.
#[pyfunction]
#[pyo3(signature = (d, signing=None))]
fn char_poly_coeffs(d: &PyDigraph, signing: Option<&str>) -> PyResult<Vec<String>> {
    let m = match self::signing(&d.inner, signing)? {
        Some(s) => skewspec::apply_signing(&d.inner, &s).map_err(err)?,
        None => d.inner.to_matrix(),
    };
    Ok(skewspec::char_poly(&m).coeffs().iter().map(to_canonical_string).collect())
}

#[pyfunction]
fn decide_invariance<'py>(py: Python<'py>, d: &PyDigraph) -> PyResult<Bound<'py, PyDict>> {
    let verdict = skewspec::decide_invariance(&d.inner).map_err(err)?;
    let out = PyDict::new(py);
    out.set_item("invariant", verdict.is_invariant())?;
    out.set_item("common_poly", verdict.common_poly().map(|p| p.to_string()))?;
    out.set_item("mu", verdict.certificate().map(|c| c.mu_strings()))?;
    let (even, asym) = match &verdict {
        InvarianceVerdict::Invariant { .. } => (None, None),
        InvarianceVerdict::NotInvariant { even_cycle, asymmetry, .. } => (
            even_cycle.as_ref().map(|c| c.vertices().to_vec()),
            asymmetry.as_ref().map(|a| a.cycle.vertices().to_vec()),
        ),
    };
    out.set_item("even_cycle", even)?;
    out.set_item("asymmetric_cycle", asym)?;
    Ok(out)
}

#[pyfunction]
#[pyo3(signature = (d, cap=DEFAULT_CAP))]
fn brute_force_invariance<'py>(py: Python<'py>, d: &PyDigraph, cap: usize) -> PyResult<Bound<'py, PyDict>> {
    let inner = &d.inner;
    let outcome = py.detach(|| skewspec::brute_force_invariance(inner, cap)).map_err(err)?;
    let out = PyDict::new(py);
    out.set_item("invariant", outcome.invariant())?;
    out.set_item("signings", outcome.signings)?;
    out.set_item("distinct_polys", outcome.polys.iter().map(|p| p.to_string()).collect::<Vec<_>>())?;
    out.set_item(
        "distinguishing_pair",
        outcome.distinguishing.as_ref().map(|(a, b)| (a.bits(), b.bits())),
    )?;
    Ok(out)
}

/// The polynomial shared by every skew-signing; raises `ValueError` when
/// the signings disagree.
#[pyfunction]
fn invariant_char_poly(d: &PyDigraph) -> PyResult<String> {
    Ok(skewspec::invariant_char_poly(&d.inner).map_err(err)?.to_string())
}

#[pyfunction]
fn signed_cycle_coefficient(d: &PyDigraph, signing: &str, q: usize) -> PyResult<String> {
    let s = self::signing(&d.inner, Some(signing))?
        .ok_or_else(|| PyValueError::new_err("a signing is required"))?;
    Ok(to_canonical_string(&skewspec::signed_cycle_coefficient(&d.inner, &s, q).map_err(err)?))
}

#[pyfunction]
#[pyo3(signature = (edges, n, cap=DEFAULT_CAP))]
fn orientations_of_graph<'py>(
    py: Python<'py>,
    edges: Vec<(usize, usize)>,
    n: usize,
    cap: usize,
) -> PyResult<Bound<'py, PyDict>> {
    let summary = py.detach(|| skewspec::orientations_of_graph(&edges, n, cap)).map_err(err)?;
    let out = PyDict::new(py);
    out.set_item("all_same", summary.all_same)?;
    out.set_item("distinct_polys", summary.distinct_polys.iter().map(|p| p.to_string()).collect::<Vec<_>>())?;
    Ok(out)
}

/// Directed cycles up to `max_len` (default `n`), each starting at its
/// smallest vertex.
#[pyfunction]
#[pyo3(signature = (d, max_len=None))]
fn cycles(d: &PyDigraph, max_len: Option<usize>) -> PyResult<Vec<Vec<usize>>> {
    let max_len = max_len.unwrap_or(d.inner.vertex_count().max(1));
    let found = skewspec::enumerate_cycles(&d.inner, max_len).map_err(err)?;
    Ok(found.iter().map(|c| c.vertices().to_vec()).collect())
}

#[pymodule]
#[pyo3(name = "skewspec")]
fn skewspec_module(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyDigraph>()?;
    m.add_function(wrap_pyfunction!(char_poly, m)?)?;
    m.add_function(wrap_pyfunction!(char_poly_coeffs, m)?)?;
    m.add_function(wrap_pyfunction!(decide_invariance, m)?)?;
    m.add_function(wrap_pyfunction!(brute_force_invariance, m)?)?;
    m.add_function(wrap_pyfunction!(invariant_char_poly, m)?)?;
    m.add_function(wrap_pyfunction!(signed_cycle_coefficient, m)?)?;
    m.add_function(wrap_pyfunction!(orientations_of_graph, m)?)?;
    m.add_function(wrap_pyfunction!(cycles, m)?)?;
    Ok(())
}
