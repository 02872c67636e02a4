//! Python bindings. Verdicts and reports cross the boundary as JSON and
//! come back as plain dicts.

use hardyops_core::audit::{self, AuditConfig, DEFAULT_FAIL_THRESHOLD, DEFAULT_MAX_BASIS, DEFAULT_PASS_THRESHOLD};
use hardyops_core::{kernel, report, truncated, verdict, Complex, Error};
use pyo3::exceptions::{PyMemoryError, PyValueError};
use pyo3::prelude::*;
use serde::Serialize;

fn to_py(e: Error) -> PyErr {
    match e {
        Error::ResourceLimit { .. } => PyMemoryError::new_err(e.to_string()),
        _ => PyValueError::new_err(e.to_string()),
    }
}

fn to_dict<'py, T: Serialize>(py: Python<'py>, value: &T) -> PyResult<Bound<'py, PyAny>> {
    let text = report::to_json_pretty(value).map_err(to_py)?;
    py.import("json")?.call_method1("loads", (text,))
}

/// A Blaschke–monomial inner function on the polydisc.
#[pyclass(name = "InnerSymbol", module = "hardyops", frozen, eq, skip_from_py_object)]
#[derive(Clone, PartialEq)]
struct PySymbol(hardyops_core::InnerSymbol);

#[pymethods]
impl PySymbol {
    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        hardyops_core::InnerSymbol::from_json(text).map(Self).map_err(to_py)
    }

    #[staticmethod]
    fn one(n: usize) -> Self {
        Self(hardyops_core::InnerSymbol::one(n))
    }

    #[staticmethod]
    fn monomial(n: usize, var: usize, exponent: u32) -> PyResult<Self> {
        hardyops_core::InnerSymbol::monomial(n, var, exponent).map(Self).map_err(to_py)
    }

    #[staticmethod]
    fn blaschke(n: usize, var: usize, alpha: Complex) -> PyResult<Self> {
        hardyops_core::InnerSymbol::blaschke(n, var, alpha).map(Self).map_err(to_py)
    }

    #[staticmethod]
    fn blaschke_product(n: usize, var: usize, zeros: Vec<Complex>) -> PyResult<Self> {
        hardyops_core::InnerSymbol::blaschke_product(n, var, &zeros).map(Self).map_err(to_py)
    }

    fn to_json(&self) -> String {
        self.0.to_json()
    }

    #[getter]
    fn n(&self) -> usize {
        self.0.n()
    }

    #[getter]
    fn constant(&self) -> Complex {
        self.0.constant()
    }

    fn is_constant(&self) -> bool {
        self.0.is_constant()
    }

    /// Zero counts per variable.
    fn blaschke_degree(&self) -> Vec<u32> {
        self.0.blaschke_degree().per_variable
    }

    fn evaluate(&self, point: Vec<Complex>) -> PyResult<Complex> {
        self.0.evaluate(&point).map_err(to_py)
    }

    /// Row-major Taylor coefficients on the box `[0..cap]^n`.
    fn taylor_coefficients(&self, cap: usize) -> Vec<Complex> {
        self.0.taylor_coefficients(cap).as_slice().to_vec()
    }

    fn multiply(&self, other: &Self) -> PyResult<Self> {
        self.0.multiply(&other.0).map(Self).map_err(to_py)
    }

    fn __mul__(&self, other: &Self) -> PyResult<Self> {
        self.multiply(other)
    }

    /// Whether `self` divides `other`.
    fn divides(&self, other: &Self) -> PyResult<bool> {
        self.0.divides(&other.0).map_err(to_py)
    }

    fn try_divide(&self, divisor: &Self) -> PyResult<Option<Self>> {
        Ok(self.0.try_divide(&divisor.0).map_err(to_py)?.map(Self))
    }

    fn gcd(&self, other: &Self) -> PyResult<Self> {
        self.0.gcd(&other.0).map(Self).map_err(to_py)
    }

    fn is_separated(&self, other: &Self) -> PyResult<bool> {
        self.0.is_separated(&other.0).map_err(to_py)
    }

    fn tail_bound(&self, cap: usize) -> f64 {
        truncated::tail_bound(&self.0, cap)
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("InnerSymbol({})", self.0)
    }
}

#[pyfunction]
fn commuting_verdict<'py>(py: Python<'py>, phi1: &PySymbol, phi2: &PySymbol) -> PyResult<Bound<'py, PyAny>> {
    to_dict(py, &verdict::commuting_verdict(&phi1.0, &phi2.0).map_err(to_py)?)
}

#[pyfunction]
fn finite_rank_verdict<'py>(py: Python<'py>, phi1: &PySymbol, phi2: &PySymbol) -> PyResult<Bound<'py, PyAny>> {
    to_dict(py, &verdict::finite_rank_verdict(&phi1.0, &phi2.0).map_err(to_py)?)
}

/// Partial isometry and isometry of the truncated Toeplitz operator with
/// symbol `phi2` on the model space of `phi1`.
#[pyfunction]
fn tto_verdict<'py>(py: Python<'py>, phi1: &PySymbol, phi2: &PySymbol) -> PyResult<Bound<'py, PyAny>> {
    to_dict(py, &verdict::tto_isometry_verdict(&phi1.0, &phi2.0).map_err(to_py)?)
}

#[pyfunction]
fn intersection_symbol(phi1: &PySymbol, phi2: &PySymbol) -> PyResult<Option<PySymbol>> {
    Ok(verdict::intersection_symbol(&phi1.0, &phi2.0).map_err(to_py)?.map(PySymbol))
}

#[pyfunction]
fn product_rank(phi1: &PySymbol, phi2: &PySymbol) -> PyResult<usize> {
    Ok(kernel::product_rank(&phi1.0, &phi2.0).map_err(to_py)?.rank)
}

/// Exact matrix of the truncated Toeplitz operator for a one-variable
/// model symbol, as a list of rows.
#[pyfunction]
fn exact_tto(phi1: &PySymbol, phi2: &PySymbol) -> PyResult<Vec<Vec<Complex>>> {
    let m = kernel::exact_tto(&phi1.0, &phi2.0).map_err(to_py)?;
    Ok((0..m.nrows())
        .map(|i| (0..m.ncols()).map(|j| Complex::new(m[(i, j)].re, m[(i, j)].im)).collect())
        .collect())
}

fn config(
    degree: Option<usize>,
    margin: Option<usize>,
    pass_threshold: f64,
    fail_threshold: f64,
    max_basis: usize,
) -> AuditConfig {
    AuditConfig {
        degree,
        margin,
        pass_threshold,
        fail_threshold,
        max_basis,
        ..AuditConfig::default()
    }
}

#[pyfunction]
#[pyo3(signature = (phi1, phi2, degree=None, margin=None, pass_threshold=DEFAULT_PASS_THRESHOLD, fail_threshold=DEFAULT_FAIL_THRESHOLD, max_basis=DEFAULT_MAX_BASIS))]
#[allow(clippy::too_many_arguments)]
fn numeric_audit<'py>(
    py: Python<'py>,
    phi1: &PySymbol,
    phi2: &PySymbol,
    degree: Option<usize>,
    margin: Option<usize>,
    pass_threshold: f64,
    fail_threshold: f64,
    max_basis: usize,
) -> PyResult<Bound<'py, PyAny>> {
    let cfg = config(degree, margin, pass_threshold, fail_threshold, max_basis);
    let (a, b) = (phi1.0.clone(), phi2.0.clone());
    let report = py.detach(move || audit::numeric_audit(&a, &b, &cfg)).map_err(to_py)?;
    to_dict(py, &report)
}

#[pyfunction]
#[pyo3(signature = (trials, seed, dimensions=vec![1, 2, 3], degree=None, margin=None, pass_threshold=DEFAULT_PASS_THRESHOLD, fail_threshold=DEFAULT_FAIL_THRESHOLD, max_basis=DEFAULT_MAX_BASIS))]
#[allow(clippy::too_many_arguments)]
fn random_audit<'py>(
    py: Python<'py>,
    trials: usize,
    seed: u64,
    dimensions: Vec<usize>,
    degree: Option<usize>,
    margin: Option<usize>,
    pass_threshold: f64,
    fail_threshold: f64,
    max_basis: usize,
) -> PyResult<Bound<'py, PyAny>> {
    let cfg = config(degree, margin, pass_threshold, fail_threshold, max_basis);
    let summary = py
        .detach(move || audit::random_audit(trials, seed, &dimensions, &cfg))
        .map_err(to_py)?;
    to_dict(py, &summary)
}

#[pymodule]
fn hardyops(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PySymbol>()?;
    m.add_function(wrap_pyfunction!(commuting_verdict, m)?)?;
    m.add_function(wrap_pyfunction!(finite_rank_verdict, m)?)?;
    m.add_function(wrap_pyfunction!(tto_verdict, m)?)?;
    m.add_function(wrap_pyfunction!(intersection_symbol, m)?)?;
    m.add_function(wrap_pyfunction!(product_rank, m)?)?;
    m.add_function(wrap_pyfunction!(exact_tto, m)?)?;
    m.add_function(wrap_pyfunction!(numeric_audit, m)?)?;
    m.add_function(wrap_pyfunction!(random_audit, m)?)?;
    Ok(())
}
