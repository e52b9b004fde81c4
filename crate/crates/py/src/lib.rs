use std::collections::BTreeMap;

use logarr::arrgmt::Arrangement;
use logarr::cycle::{class_data, Check, Report, Verifier, VerifyOptions};
use logarr::fixtures;
use logarr::Error;
use num_bigint::BigInt;
use pyo3::exceptions::{PyIndexError, PyRuntimeError, PyValueError};
use pyo3::prelude::*;
use serde_json::json;

fn to_py(e: Error) -> PyErr {
    match e {
        Error::Parse { .. } | Error::InvalidArrangement(_) => PyValueError::new_err(e.to_string()),
        Error::IndexOutOfRange { .. } => PyIndexError::new_err(e.to_string()),
        other => PyRuntimeError::new_err(other.to_string()),
    }
}

/// A central arrangement given by the rows of its defining forms.
#[pyclass(name = "Arrangement", module = "logarr", frozen)]
struct PyArrangement {
    inner: Arrangement,
}

#[pymethods]
impl PyArrangement {
    /// Entries may be ints, strings such as "3/2", or anything whose `str` is a rational.
    #[new]
    #[pyo3(signature = (rows, name = "arrangement", labels = None))]
    fn new(rows: Vec<Vec<Bound<'_, PyAny>>>, name: &str, labels: Option<Vec<String>>) -> PyResult<Self> {
        let mut matrix = Vec::with_capacity(rows.len());
        for row in &rows {
            let entries = row.iter().map(|x| Ok(x.str()?.to_string())).collect::<PyResult<Vec<String>>>()?;
            matrix.push(entries);
        }
        let mut v = json!({ "name": name, "matrix": matrix });
        if let Some(l) = labels {
            v["labels"] = json!(l);
        }
        Ok(PyArrangement { inner: Arrangement::from_json_value(&v).map_err(to_py)? })
    }

    #[staticmethod]
    fn boolean(l: usize) -> Self {
        PyArrangement { inner: Arrangement::boolean(l) }
    }

    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        Ok(PyArrangement { inner: Arrangement::from_json(text).map_err(to_py)? })
    }

    fn to_json(&self) -> String {
        self.inner.to_json()
    }

    #[getter]
    fn name(&self) -> &str {
        self.inner.name()
    }

    #[getter]
    fn dim(&self) -> usize {
        self.inner.dim()
    }

    #[getter]
    fn rank(&self) -> usize {
        self.inner.rank()
    }

    fn __len__(&self) -> usize {
        self.inner.n()
    }

    fn __repr__(&self) -> String {
        format!(
            "Arrangement({:?}, dim={}, n={}, rank={})",
            self.inner.name(),
            self.inner.dim(),
            self.inner.n(),
            self.inner.rank()
        )
    }

    fn is_essential(&self) -> bool {
        self.inner.is_essential()
    }

    fn is_boolean(&self) -> bool {
        self.inner.is_boolean()
    }

    fn essentialize(&self) -> Self {
        PyArrangement { inner: self.inner.essentialize() }
    }

    /// `(deletion, restriction)` at hyperplane `i`.
    fn restrict(&self, i: usize) -> PyResult<(Self, Self)> {
        let tr = self.inner.restrict(i).map_err(to_py)?;
        Ok((PyArrangement { inner: tr.deletion }, PyArrangement { inner: tr.restriction }))
    }

    fn is_bridge(&self, i: usize) -> PyResult<bool> {
        self.inner.is_bridge(i).map_err(to_py)
    }

    fn bridges(&self) -> Vec<usize> {
        self.inner.bridges()
    }

    fn components(&self) -> Vec<Vec<usize>> {
        self.inner.decompose_indices()
    }

    fn lattice_rank_sizes(&self) -> Vec<usize> {
        self.inner.lattice().rank_sizes()
    }

    /// Coefficients of `chi(A, t)` from the constant term up.
    fn char_poly(&self) -> Vec<BigInt> {
        self.inner.char_poly().univariate_coeffs()
    }

    /// `{(i, j): t_ij}`.
    fn tutte(&self) -> Coefficients {
        self.inner.tutte().terms().map(|(&e, c)| (e, c.clone())).collect()
    }

    fn beta(&self) -> BigInt {
        self.inner.beta()
    }
}

/// Outcome of one check.
#[pyclass(name = "Report", module = "logarr", frozen)]
struct PyReport {
    inner: Report,
}

#[pymethods]
impl PyReport {
    #[getter]
    fn fixture(&self) -> &str {
        &self.inner.fixture
    }

    #[getter]
    fn check(&self) -> &str {
        &self.inner.check
    }

    #[getter]
    fn status(&self) -> &'static str {
        self.inner.status.as_str()
    }

    #[getter]
    fn passed(&self) -> bool {
        self.inner.passed()
    }

    fn to_json(&self) -> String {
        self.inner.to_json_value(false).to_string()
    }

    fn __repr__(&self) -> String {
        format!("Report({:?}, {:?}, {})", self.inner.fixture, self.inner.check, self.inner.status.as_str())
    }
}

type Coefficients = BTreeMap<(u32, u32), BigInt>;

/// `[X(A)]` as `{(i, j): c}` for `c h^i k^j`.
#[pyfunction]
fn cycle_class(a: &PyArrangement) -> PyResult<Coefficients> {
    let d = class_data(&a.inner, None).map_err(to_py)?;
    Ok(d.class.poly().terms().map(|(&e, c)| (e, c.clone())).collect())
}

/// `(K, m, n)` with the Hilbert series of `S/I(A)` equal to `K / ((1-t)^m (1-u)^n)`.
#[pyfunction]
#[pyo3(signature = (a, reduced = false))]
fn hilbert_series(a: &PyArrangement, reduced: bool) -> PyResult<(Coefficients, u32, u32)> {
    let d = class_data(&a.inner, None).map_err(to_py)?;
    let (k, m, n) = if reduced { d.series.reduced() } else { (d.series.k.clone(), d.series.m, d.series.n) };
    Ok((k.terms().map(|(&e, c)| (e, c.clone())).collect(), m, n))
}

#[pyfunction]
#[pyo3(signature = (a, check, tame = false, check_bound = 6))]
fn verify(a: &PyArrangement, check: &str, tame: bool, check_bound: u32) -> PyResult<PyReport> {
    let check: Check = check.parse().map_err(|e: Error| PyValueError::new_err(e.to_string()))?;
    let opts = VerifyOptions { tame, check_bound, ..VerifyOptions::default() };
    let r = Verifier::new(&a.inner, opts).run(check).map_err(to_py)?;
    Ok(PyReport { inner: r })
}

#[pyfunction]
fn check_names() -> Vec<&'static str> {
    Check::ALL.iter().map(|c| c.name()).collect()
}

#[pyfunction]
fn fixture_names() -> Vec<String> {
    fixtures::builtin().iter().map(|f| f.name().to_string()).collect()
}

/// A built-in fixture and its tameness flag.
#[pyfunction]
fn fixture(name: &str) -> PyResult<(PyArrangement, bool)> {
    fixtures::builtin()
        .into_iter()
        .find(|f| f.name() == name)
        .map(|f| (PyArrangement { inner: f.arrangement }, f.flags.tame))
        .ok_or_else(|| PyValueError::new_err(format!("no fixture named '{name}'")))
}

#[pymodule]
#[pyo3(name = "logarr")]
fn logarr_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyArrangement>()?;
    m.add_class::<PyReport>()?;
    m.add_function(wrap_pyfunction!(cycle_class, m)?)?;
    m.add_function(wrap_pyfunction!(hilbert_series, m)?)?;
    m.add_function(wrap_pyfunction!(verify, m)?)?;
    m.add_function(wrap_pyfunction!(check_names, m)?)?;
    m.add_function(wrap_pyfunction!(fixture_names, m)?)?;
    m.add_function(wrap_pyfunction!(fixture, m)?)?;
    Ok(())
}
