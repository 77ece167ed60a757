//! Python bindings for the L-function statistics library.
//!
//! Exposes the main types (PrimeTable, LFunctionSpec, PrimeCoefficients,
//! VonMangoldtTable, ZeroData) and the statistics built on them. See
//! python/smoke_test.py for a tour.

use std::path::PathBuf;

use pyo3::exceptions::{PyOSError, PyRuntimeError, PyValueError};
use pyo3::prelude::*;

use lstat_core::{arith, correlations, lfunc, variance, zerostats, Error};

fn to_py(err: Error) -> PyErr {
    match err {
        Error::InvalidArgument(_) | Error::Domain(_) => PyValueError::new_err(err.to_string()),
        Error::Io(_) => PyOSError::new_err(err.to_string()),
        _ => PyRuntimeError::new_err(err.to_string()),
    }
}

#[pyclass(frozen, name = "PrimeTable")]
struct PyPrimeTable {
    inner: arith::PrimeTable,
}

#[pymethods]
impl PyPrimeTable {
    #[new]
    fn new(limit: u64) -> PyResult<Self> {
        Ok(Self {
            inner: arith::PrimeTable::sieve(limit).map_err(to_py)?,
        })
    }

    #[getter]
    fn limit(&self) -> u64 {
        self.inner.limit()
    }

    fn prime_count(&self) -> usize {
        self.inner.primes().len()
    }

    fn primes(&self) -> Vec<u64> {
        self.inner.primes().to_vec()
    }

    fn is_prime(&self, n: u64) -> bool {
        self.inner.is_prime(n)
    }

    fn least_prime_factor(&self, n: u64) -> PyResult<u64> {
        self.inner.least_prime_factor(n).map_err(to_py)
    }

    fn moebius(&self, n: u64) -> PyResult<i8> {
        arith::moebius(n, &self.inner).map_err(to_py)
    }

    fn totient(&self, n: u64) -> PyResult<u64> {
        arith::totient(n, &self.inner).map_err(to_py)
    }

    fn ramanujan_sum(&self, r: i64, n: u64) -> PyResult<i64> {
        arith::ramanujan_sum(r, n, &self.inner).map_err(to_py)
    }
}

#[pyclass(frozen, skip_from_py_object, name = "LFunctionSpec")]
#[derive(Clone)]
struct PyLFunctionSpec {
    inner: lfunc::LFunctionSpec,
}

#[pymethods]
impl PyLFunctionSpec {
    #[staticmethod]
    fn zeta() -> Self {
        Self {
            inner: lfunc::LFunctionSpec::zeta(),
        }
    }

    #[staticmethod]
    fn ramanujan_tau() -> Self {
        Self {
            inner: lfunc::LFunctionSpec::ramanujan_tau(),
        }
    }

    #[staticmethod]
    fn elliptic_curve(weierstrass: [i64; 5], conductor: u64) -> PyResult<Self> {
        Ok(Self {
            inner: lfunc::LFunctionSpec::elliptic_curve(weierstrass, conductor)
                .map_err(to_py)?,
        })
    }

    #[getter]
    fn degree(&self) -> u32 {
        self.inner.degree()
    }

    #[getter]
    fn conductor(&self) -> u64 {
        self.inner.conductor()
    }

    #[getter]
    fn polar_order(&self) -> u32 {
        self.inner.polar_order()
    }

    fn __repr__(&self) -> String {
        format!(
            "LFunctionSpec(degree={}, conductor={}, polar_order={})",
            self.inner.degree(),
            self.inner.conductor(),
            self.inner.polar_order()
        )
    }
}

#[pyclass(frozen, name = "PrimeCoefficients")]
struct PyPrimeCoefficients {
    inner: lfunc::PrimeCoefficients,
}

#[pymethods]
impl PyPrimeCoefficients {
    #[getter]
    fn limit(&self) -> u64 {
        self.inner.limit()
    }

    /// Normalized coefficient lambda(p; F), or None when p is not covered.
    fn lam(&self, p: u64) -> Option<f64> {
        self.inner.lambda(p)
    }

    /// Exact integer coefficient (tau(p) or a_p) as a Python int.
    fn raw(&self, p: u64) -> Option<i128> {
        self.inner.raw_at(p)
    }

    fn bad_primes(&self) -> Vec<u64> {
        self.inner.bad_primes().to_vec()
    }
}

#[pyclass(frozen, name = "VonMangoldtTable")]
struct PyVonMangoldtTable {
    inner: lfunc::VonMangoldtTable,
}

#[pymethods]
impl PyVonMangoldtTable {
    #[getter]
    fn limit(&self) -> u64 {
        self.inner.limit()
    }

    /// Lambda(n; F).
    fn value(&self, n: u64) -> PyResult<f64> {
        self.inner
            .values()
            .get(n as usize)
            .copied()
            .ok_or_else(|| PyValueError::new_err(format!("n = {n} beyond table limit")))
    }

    /// sum_{m <= n} Lambda(m; F).
    fn prefix(&self, n: u64) -> PyResult<f64> {
        self.inner
            .prefix()
            .get(n as usize)
            .copied()
            .ok_or_else(|| PyValueError::new_err(format!("n = {n} beyond table limit")))
    }

    fn spec(&self) -> PyLFunctionSpec {
        PyLFunctionSpec {
            inner: self.inner.spec().clone(),
        }
    }
}

#[pyfunction]
fn tau_values(limit: u64) -> PyResult<Vec<i128>> {
    lfunc::tau_values(limit).map_err(to_py)
}

#[pyfunction]
fn tau_coefficients(limit: u64) -> PyResult<PyPrimeCoefficients> {
    Ok(PyPrimeCoefficients {
        inner: lfunc::tau_coefficients(limit).map_err(to_py)?,
    })
}

#[pyfunction]
fn elliptic_coefficients(
    weierstrass: [i64; 5],
    conductor: u64,
    limit: u64,
) -> PyResult<PyPrimeCoefficients> {
    Ok(PyPrimeCoefficients {
        inner: lfunc::elliptic_coefficients(weierstrass, conductor, limit).map_err(to_py)?,
    })
}

#[pyfunction]
#[pyo3(signature = (spec, coeffs, limit))]
fn von_mangoldt_table(
    spec: &PyLFunctionSpec,
    coeffs: Option<&PyPrimeCoefficients>,
    limit: u64,
) -> PyResult<PyVonMangoldtTable> {
    let pt = arith::PrimeTable::sieve(limit).map_err(to_py)?;
    Ok(PyVonMangoldtTable {
        inner: lfunc::von_mangoldt_table(&spec.inner, coeffs.map(|c| &c.inner), &pt, limit)
            .map_err(to_py)?,
    })
}

#[pyfunction]
fn cache_store(path: PathBuf, coeffs: &PyPrimeCoefficients) -> PyResult<()> {
    lfunc::cache_store(&path, &coeffs.inner).map_err(to_py)
}

#[pyfunction]
fn cache_load(path: PathBuf) -> PyResult<PyPrimeCoefficients> {
    Ok(PyPrimeCoefficients {
        inner: lfunc::cache_load(&path).map_err(to_py)?,
    })
}

#[pyfunction]
fn var_fixed(table: &PyVonMangoldtTable, x: u64, h: f64) -> PyResult<f64> {
    variance::var_fixed(&table.inner, x, h).map_err(to_py)
}

#[pyfunction]
fn var_mult(table: &PyVonMangoldtTable, x: u64, delta: f64) -> PyResult<f64> {
    variance::var_mult(&table.inner, x, delta).map_err(to_py)
}

#[pyfunction]
fn predict_small_h(spec: &PyLFunctionSpec, x: f64, h: f64) -> f64 {
    variance::predict_small_h(&spec.inner, x, h)
}

#[pyfunction]
fn predict_universal(spec: &PyLFunctionSpec, x: f64) -> f64 {
    variance::predict_universal(&spec.inner, x)
}

#[pyfunction]
fn predict_mul_small(spec: &PyLFunctionSpec, x: f64, delta: f64) -> f64 {
    variance::predict_mul_small(&spec.inner, x, delta)
}

#[pyfunction]
fn predict_mul_universal(spec: &PyLFunctionSpec, x: f64, delta: f64) -> f64 {
    variance::predict_mul_universal(&spec.inner, x, delta)
}

#[pyfunction]
fn crossover_h(spec: &PyLFunctionSpec, x: f64) -> f64 {
    variance::crossover_h(&spec.inner, x)
}

/// Rows of (h, log(X/h), Var/h, pred_small_h, pred_universal).
#[pyfunction]
fn variance_scan(
    spec: &PyLFunctionSpec,
    table: &PyVonMangoldtTable,
    x: u64,
    h_min: f64,
    h_max: f64,
    ratio: f64,
) -> PyResult<Vec<(f64, f64, f64, f64, f64)>> {
    let series = variance::variance_scan(&spec.inner, &table.inner, x, h_min, h_max, ratio)
        .map_err(to_py)?;
    Ok(series
        .rows
        .iter()
        .map(|r| (r.h, r.log_ratio, r.empirical, r.pred_small_h, r.pred_universal))
        .collect())
}

/// Running averages [(N', C(r, N'))] plus the Hardy-Littlewood reference.
#[pyfunction]
fn correlation_scan(
    table: &PyVonMangoldtTable,
    r: u64,
    n: u64,
    step: u64,
) -> PyResult<(Vec<(u64, f64)>, Option<f64>)> {
    let series = correlations::correlation_scan(&table.inner, r, n, step).map_err(to_py)?;
    Ok((series.checkpoints, series.hl_reference))
}

/// (value, twin_constant, tail_bound).
#[pyfunction]
fn singular_series(r: i64, prime_cutoff: u64) -> PyResult<(f64, f64, f64)> {
    let s = correlations::singular_series(r, prime_cutoff).map_err(to_py)?;
    Ok((s.value, s.twin_constant, s.tail_bound))
}

#[pyfunction]
fn averaged_hl_asymptotic(r: i64) -> PyResult<f64> {
    correlations::averaged_hl_asymptotic(r).map_err(to_py)
}

#[pyfunction]
fn sine_integral(x: f64) -> f64 {
    correlations::sine_integral(x)
}

#[pyfunction]
fn sine_kernel(x: f64) -> f64 {
    correlations::sine_kernel(x)
}

#[pyfunction]
fn smoothed_correlation_asymptotic(spec: &PyLFunctionSpec, r: f64) -> PyResult<f64> {
    correlations::smoothed_correlation_asymptotic(&spec.inner, r).map_err(to_py)
}

#[pyclass(frozen, name = "ZeroData")]
struct PyZeroData {
    inner: zerostats::ZeroData,
}

#[pymethods]
impl PyZeroData {
    fn count(&self) -> usize {
        self.inner.count()
    }

    fn max_ordinate(&self) -> f64 {
        self.inner.max_ordinate()
    }

    fn ordinate(&self, i: usize) -> PyResult<f64> {
        self.inner
            .ordinates()
            .get(i)
            .copied()
            .ok_or_else(|| PyValueError::new_err("index out of range"))
    }
}

#[pyfunction]
fn load_zeros(path: PathBuf) -> PyResult<PyZeroData> {
    Ok(PyZeroData {
        inner: zerostats::load_zeros(&path).map_err(to_py)?,
    })
}

/// Dict with f, normalized, conj_small_x, conj_large_x, zero_count, tail_bound.
#[pyfunction]
#[pyo3(signature = (zd, x, t, delta_cut = None))]
fn pair_correlation_f(
    py: Python<'_>,
    zd: &PyZeroData,
    x: f64,
    t: f64,
    delta_cut: Option<f64>,
) -> PyResult<Py<pyo3::types::PyDict>> {
    let r = match delta_cut {
        Some(c) => zerostats::pair_correlation_f_truncated(&zd.inner, x, t, c),
        None => zerostats::pair_correlation_f(&zd.inner, x, t),
    }
    .map_err(to_py)?;
    let d = pyo3::types::PyDict::new(py);
    d.set_item("f", r.f_value)?;
    d.set_item("normalized", r.normalized)?;
    d.set_item("conj_small_x", r.conjecture_small_x)?;
    d.set_item("conj_large_x", r.conjecture_large_x)?;
    d.set_item("zero_count", r.zero_count)?;
    d.set_item("tail_bound", r.tail_bound)?;
    Ok(d.into())
}

#[pyfunction]
fn mean_density(spec: &PyLFunctionSpec, t: f64) -> PyResult<f64> {
    zerostats::mean_density(&spec.inner, t).map_err(to_py)
}

#[pyfunction]
fn r2_diagonal_zeta(x: f64, prime_cutoff: u64) -> PyResult<f64> {
    zerostats::r2_diagonal_zeta(x, prime_cutoff).map_err(to_py)
}

#[pyfunction]
fn r2_offdiagonal_zeta(x: f64, t: f64, prime_cutoff: u64) -> PyResult<f64> {
    zerostats::r2_offdiagonal_zeta(x, t, prime_cutoff).map_err(to_py)
}

#[pyfunction]
fn r2_diagonal_rescaled(x: f64, scale: f64, prime_cutoff: u64) -> PyResult<f64> {
    zerostats::r2_diagonal_rescaled(x, scale, prime_cutoff).map_err(to_py)
}

#[pyfunction]
fn r2_offdiagonal_rescaled(x: f64, scale: f64, prime_cutoff: u64) -> PyResult<f64> {
    zerostats::r2_offdiagonal_rescaled(x, scale, prime_cutoff).map_err(to_py)
}

#[pymodule]
fn lstat(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyPrimeTable>()?;
    m.add_class::<PyLFunctionSpec>()?;
    m.add_class::<PyPrimeCoefficients>()?;
    m.add_class::<PyVonMangoldtTable>()?;
    m.add_class::<PyZeroData>()?;
    m.add_function(wrap_pyfunction!(tau_values, m)?)?;
    m.add_function(wrap_pyfunction!(tau_coefficients, m)?)?;
    m.add_function(wrap_pyfunction!(elliptic_coefficients, m)?)?;
    m.add_function(wrap_pyfunction!(von_mangoldt_table, m)?)?;
    m.add_function(wrap_pyfunction!(cache_store, m)?)?;
    m.add_function(wrap_pyfunction!(cache_load, m)?)?;
    m.add_function(wrap_pyfunction!(var_fixed, m)?)?;
    m.add_function(wrap_pyfunction!(var_mult, m)?)?;
    m.add_function(wrap_pyfunction!(predict_small_h, m)?)?;
    m.add_function(wrap_pyfunction!(predict_universal, m)?)?;
    m.add_function(wrap_pyfunction!(predict_mul_small, m)?)?;
    m.add_function(wrap_pyfunction!(predict_mul_universal, m)?)?;
    m.add_function(wrap_pyfunction!(crossover_h, m)?)?;
    m.add_function(wrap_pyfunction!(variance_scan, m)?)?;
    m.add_function(wrap_pyfunction!(correlation_scan, m)?)?;
    m.add_function(wrap_pyfunction!(singular_series, m)?)?;
    m.add_function(wrap_pyfunction!(averaged_hl_asymptotic, m)?)?;
    m.add_function(wrap_pyfunction!(sine_integral, m)?)?;
    m.add_function(wrap_pyfunction!(sine_kernel, m)?)?;
    m.add_function(wrap_pyfunction!(smoothed_correlation_asymptotic, m)?)?;
    m.add_function(wrap_pyfunction!(load_zeros, m)?)?;
    m.add_function(wrap_pyfunction!(pair_correlation_f, m)?)?;
    m.add_function(wrap_pyfunction!(mean_density, m)?)?;
    m.add_function(wrap_pyfunction!(r2_diagonal_zeta, m)?)?;
    m.add_function(wrap_pyfunction!(r2_offdiagonal_zeta, m)?)?;
    m.add_function(wrap_pyfunction!(r2_diagonal_rescaled, m)?)?;
    m.add_function(wrap_pyfunction!(r2_offdiagonal_rescaled, m)?)?;
    Ok(())
}
