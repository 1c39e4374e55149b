//! Python bindings for the tcores library.
//!
//! Exposes partitions, n-vectors, cyclotomic GBG values and the identity
//! registry as the `tcores_py` extension module.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::PyDict;

use tcores::cyclotomic::{self, ExponentVector};
use tcores::gbg::{self, GbgValue};
use tcores::littlewood;
use tcores::partition::{NVector, Partition};
use tcores::qseries::{self, theta};

fn err(e: tcores::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

#[pyclass(name = "Partition", frozen, from_py_object)]
#[derive(Clone)]
struct PyPartition {
    inner: Partition,
}

#[pymethods]
impl PyPartition {
    #[new]
    fn new(parts: Vec<u64>) -> Self {
        PyPartition { inner: Partition::from_parts(parts) }
    }

    #[staticmethod]
    fn parse(text: &str) -> PyResult<Self> {
        Ok(PyPartition { inner: Partition::parse(text).map_err(err)? })
    }

    fn parts(&self) -> Vec<u64> {
        self.inner.parts().to_vec()
    }

    fn norm(&self) -> u64 {
        self.inner.norm()
    }

    fn conjugate(&self) -> Self {
        PyPartition { inner: self.inner.conjugate() }
    }

    fn durfee(&self) -> usize {
        self.inner.durfee()
    }

    fn beta_set(&self, m: usize) -> Vec<u64> {
        self.inner.beta_set(m)
    }

    fn is_t_core(&self, t: usize) -> bool {
        self.inner.is_t_core(t)
    }

    fn t_core(&self, t: usize) -> Self {
        PyPartition { inner: self.inner.t_core_of(t) }
    }

    fn r_vector(&self, s: usize) -> PyResult<Vec<u64>> {
        Ok(self.inner.r_vector(s).map_err(err)?.counts().to_vec())
    }

    fn n_vector(&self, t: usize) -> PyResult<PyNVector> {
        Ok(PyNVector { inner: self.inner.core_to_nvec(t).map_err(err)? })
    }

    fn __repr__(&self) -> String {
        format!("Partition({:?})", self.inner.parts())
    }

    fn __str__(&self) -> String {
        self.inner.to_string()
    }

    fn __eq__(&self, other: &Self) -> bool {
        self.inner == other.inner
    }

    fn __len__(&self) -> usize {
        self.inner.len()
    }
}

#[pyclass(name = "NVector", frozen, from_py_object)]
#[derive(Clone)]
struct PyNVector {
    inner: NVector,
}

#[pymethods]
impl PyNVector {
    #[new]
    fn new(coords: Vec<i64>) -> PyResult<Self> {
        Ok(PyNVector { inner: NVector::new(coords).map_err(err)? })
    }

    fn coords(&self) -> Vec<i64> {
        self.inner.coords().to_vec()
    }

    fn modulus(&self) -> usize {
        self.inner.modulus()
    }

    fn core_norm(&self) -> u64 {
        self.inner.core_norm()
    }

    fn conjugate(&self) -> Self {
        PyNVector { inner: self.inner.conjugate() }
    }

    fn to_core(&self) -> PyPartition {
        PyPartition { inner: self.inner.to_core() }
    }

    fn __repr__(&self) -> String {
        format!("NVector({:?})", self.inner.coords())
    }

    fn __eq__(&self, other: &Self) -> bool {
        self.inner == other.inner
    }
}

/// Cyclotomic integer in the omega-power basis modulo the s-th cyclotomic
/// polynomial.
#[pyclass(name = "CycValue", frozen, from_py_object)]
#[derive(Clone)]
struct PyCycValue {
    inner: GbgValue,
}

#[pymethods]
impl PyCycValue {
    fn coeffs(&self) -> PyResult<Vec<i64>> {
        self.inner
            .coeffs()
            .iter()
            .map(|c| i64::try_from(c).map_err(|_| PyValueError::new_err("coefficient overflow")))
            .collect()
    }

    fn modulus(&self) -> usize {
        self.inner.modulus()
    }

    fn pretty(&self) -> String {
        self.inner.pretty()
    }

    fn is_zero(&self) -> bool {
        self.inner.is_zero()
    }

    fn __repr__(&self) -> String {
        format!("CycValue({})", self.inner.pretty())
    }

    fn __str__(&self) -> String {
        self.inner.pretty()
    }

    fn __eq__(&self, other: &Self) -> bool {
        self.inner == other.inner
    }
}

/// GBG-rank of a partition at modulus s, from residue counts.
#[pyfunction]
fn gbg_rank(pi: &PyPartition, s: usize) -> PyResult<PyCycValue> {
    Ok(PyCycValue { inner: gbg::gbg_direct(&pi.inner, s).map_err(err)? })
}

/// Closed form of the GBG-rank of the t-core encoded by an n-vector.
#[pyfunction]
fn gbg_formula(n: &PyNVector, s: usize) -> PyResult<PyCycValue> {
    Ok(PyCycValue { inner: gbg::gbg_formula(&n.inner, s).map_err(err)? })
}

/// Census of GBG values over all t-cores; dict with count, bound, equality
/// and the value list.
#[pyfunction]
#[pyo3(signature = (s, t, budget = 10_000_000))]
fn nu<'py>(py: Python<'py>, s: usize, t: usize, budget: u64) -> PyResult<Bound<'py, PyDict>> {
    let census = gbg::nu(s, t, budget).map_err(err)?;
    let out = PyDict::new(py);
    out.set_item("count", census.count())?;
    out.set_item("bound", census.bound)?;
    out.set_item("equality", census.attains_bound())?;
    let values: Vec<PyCycValue> = census
        .values
        .iter()
        .map(|v| PyCycValue { inner: v.clone() })
        .collect();
    out.set_item("values", values)?;
    Ok(out)
}

/// The 27 residue classes for (s,t) = (3,4) with their GBG values.
#[pyfunction]
fn table1() -> Vec<(usize, PyNVector, PyCycValue)> {
    gbg::table1()
        .into_iter()
        .map(|r| {
            (r.index, PyNVector { inner: r.nvec }, PyCycValue { inner: r.value })
        })
        .collect()
}

/// Decides whether equal power sums and products force two exponent vectors
/// to coincide; returns (conditions_hold, equal_forced).
#[pyfunction]
fn lemma14_decide(modulus: usize, j: Vec<u32>, j_tilde: Vec<u32>) -> PyResult<(bool, bool)> {
    let jv = ExponentVector::new(modulus, j).map_err(err)?;
    let jt = ExponentVector::new(modulus, j_tilde).map_err(err)?;
    let outcome = cyclotomic::lemma14_decide(&jv, &jt).map_err(err)?;
    Ok((outcome.conditions_hold, outcome.equal_forced))
}

/// Known counterexample pair of exponent vectors for composite s.
#[pyfunction]
fn counterexample_family(s: usize, t: usize) -> PyResult<(Vec<u32>, Vec<u32>)> {
    let (j, jt) = cyclotomic::counterexample_family(s, t).map_err(err)?;
    Ok((j.exponents().to_vec(), jt.exponents().to_vec()))
}

/// Registered identity ids, univariate then bivariate.
#[pyfunction]
fn registry_ids() -> Vec<String> {
    qseries::REGISTRY_IDS
        .iter()
        .chain(theta::THETA_IDS.iter())
        .map(|s| s.to_string())
        .collect()
}

/// Verifies one registered identity to the given order; dict with holds and
/// the first discrepancy if any.
#[pyfunction]
#[pyo3(signature = (id, order = 60))]
fn check_identity<'py>(py: Python<'py>, id: &str, order: usize) -> PyResult<Bound<'py, PyDict>> {
    let out = PyDict::new(py);
    out.set_item("id", id)?;
    if qseries::REGISTRY_IDS.contains(&id) {
        let report = qseries::check_identity(id, order).map_err(err)?;
        out.set_item("order", report.order)?;
        out.set_item("holds", report.holds)?;
        out.set_item("first_discrepancy", report.first_discrepancy)?;
    } else if theta::THETA_IDS.contains(&id) {
        let report = theta::check_theta_identity(id, (order as i64).max(12)).map_err(err)?;
        out.set_item("order", report.order)?;
        out.set_item("holds", report.holds)?;
        out.set_item("first_discrepancy", report.first_discrepancy)?;
    } else {
        return Err(PyValueError::new_err(format!("unknown identity {id:?}")));
    }
    Ok(out)
}

/// Coefficients of the t-core generating function to the given order.
#[pyfunction]
fn core_generating_function(t: usize, order: usize) -> PyResult<Vec<i64>> {
    qseries::g_t_eta(t, order)
        .coeffs()
        .iter()
        .map(|c| i64::try_from(c).map_err(|_| PyValueError::new_err("coefficient overflow")))
        .collect()
}

/// Littlewood decomposition: (t-core, t-quotient).
#[pyfunction]
fn decompose(pi: &PyPartition, t: usize) -> PyResult<(PyPartition, Vec<PyPartition>)> {
    let d = littlewood::decompose(&pi.inner, t).map_err(err)?;
    let quotient = d.quotient.into_iter().map(|q| PyPartition { inner: q }).collect();
    Ok((PyPartition { inner: d.core }, quotient))
}

/// Inverse of `decompose`.
#[pyfunction]
fn recompose(core: &PyPartition, quotient: Vec<PyPartition>, t: usize) -> PyResult<PyPartition> {
    let d = littlewood::LittlewoodDecomposition {
        core: core.inner.clone(),
        quotient: quotient.into_iter().map(|q| q.inner).collect(),
        t,
    };
    Ok(PyPartition { inner: littlewood::recompose(&d).map_err(err)? })
}

/// All simultaneous (s,t)-cores, sorted by norm then lexicographically.
#[pyfunction]
fn st_cores(s: usize, t: usize) -> PyResult<Vec<PyPartition>> {
    let set = littlewood::st_cores(s, t).map_err(err)?;
    Ok(set.cores.into_iter().map(|pi| PyPartition { inner: pi }).collect())
}

/// Checks that the s-core of every t-core below the norm bound is a t-core.
#[pyfunction]
#[pyo3(signature = (s, t, norm_bound = 30))]
fn olsson_check(s: usize, t: usize, norm_bound: u64) -> PyResult<bool> {
    littlewood::olsson_check(s, t, norm_bound).map_err(err)
}

/// Whether the GBG-rank separates all (s,t)-cores, with the collision fibers.
#[pyfunction]
fn gbg_injectivity<'py>(py: Python<'py>, s: usize, t: usize) -> PyResult<Bound<'py, PyDict>> {
    let report = littlewood::gbg_injectivity_check(s, t).map_err(err)?;
    let out = PyDict::new(py);
    out.set_item("injective", report.injective)?;
    out.set_item("predicted_injective", report.predicted_injective)?;
    let collisions: Vec<(PyCycValue, Vec<PyPartition>)> = report
        .collisions
        .into_iter()
        .map(|(v, pis)| {
            (
                PyCycValue { inner: v },
                pis.into_iter().map(|pi| PyPartition { inner: pi }).collect(),
            )
        })
        .collect();
    out.set_item("collisions", collisions)?;
    Ok(out)
}

#[pymodule]
fn tcores_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyPartition>()?;
    m.add_class::<PyNVector>()?;
    m.add_class::<PyCycValue>()?;
    m.add_function(wrap_pyfunction!(gbg_rank, m)?)?;
    m.add_function(wrap_pyfunction!(gbg_formula, m)?)?;
    m.add_function(wrap_pyfunction!(nu, m)?)?;
    m.add_function(wrap_pyfunction!(table1, m)?)?;
    m.add_function(wrap_pyfunction!(lemma14_decide, m)?)?;
    m.add_function(wrap_pyfunction!(counterexample_family, m)?)?;
    m.add_function(wrap_pyfunction!(registry_ids, m)?)?;
    m.add_function(wrap_pyfunction!(check_identity, m)?)?;
    m.add_function(wrap_pyfunction!(core_generating_function, m)?)?;
    m.add_function(wrap_pyfunction!(decompose, m)?)?;
    m.add_function(wrap_pyfunction!(recompose, m)?)?;
    m.add_function(wrap_pyfunction!(st_cores, m)?)?;
    m.add_function(wrap_pyfunction!(olsson_check, m)?)?;
    m.add_function(wrap_pyfunction!(gbg_injectivity, m)?)?;
    Ok(())
}
