//! Python bindings. Results that are plain data come back as Python
//! lists, dicts and ints; arrangements stay Rust objects.

use intrinsic_arrangements::arrangement::{self as arr, IntPolynomial};
use intrinsic_arrangements::combinatorics::{self as comb, IntPartition};
use intrinsic_arrangements::coordinate;
use intrinsic_arrangements::hook;
use intrinsic_arrangements::linalg::Rational;
use intrinsic_arrangements::partition_lattice;
use intrinsic_arrangements::specht::SpechtRealization;
use intrinsic_arrangements::verify::{self, Suite};
use intrinsic_arrangements::Error;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::PyList;

fn err(e: Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn partition(parts: Vec<usize>) -> PyResult<IntPartition> {
    IntPartition::new(parts).map_err(|e| err(e.into()))
}

/// Python int from an exact integer value, whatever its size.
fn py_int<'py>(py: Python<'py>, digits: String) -> PyResult<Bound<'py, PyAny>> {
    py.import("builtins")?.getattr("int")?.call1((digits,))
}

fn rational_entry<'py>(py: Python<'py>, q: &Rational) -> PyResult<Bound<'py, PyAny>> {
    if q.is_integer() {
        py_int(py, q.numer().to_string())
    } else {
        py.import("fractions")?.getattr("Fraction")?.call1((q.to_string(),))
    }
}

fn vector<'py>(py: Python<'py>, v: &[Rational]) -> PyResult<Bound<'py, PyList>> {
    let items = v.iter().map(|q| rational_entry(py, q)).collect::<PyResult<Vec<_>>>()?;
    PyList::new(py, items)
}

fn coefficients<'py>(py: Python<'py>, p: &IntPolynomial) -> PyResult<Bound<'py, PyList>> {
    let items = p
        .coefficients()
        .iter()
        .map(|c| py_int(py, c.to_string()))
        .collect::<PyResult<Vec<_>>>()?;
    PyList::new(py, items)
}

/// Round-trips a serializable value through `json.loads`.
fn to_python<'py, T: serde::Serialize>(py: Python<'py>, value: &T) -> PyResult<Bound<'py, PyAny>> {
    let text = serde_json::to_string(value).map_err(|e| PyValueError::new_err(e.to_string()))?;
    py.import("json")?.call_method1("loads", (text,))
}

/// A central hyperplane arrangement with exact rational normals.
#[pyclass(name = "Arrangement", module = "intrinsic", frozen)]
struct PyArrangement(arr::Arrangement);

#[pymethods]
impl PyArrangement {
    /// Dimension of the space the hyperplanes live in.
    #[getter]
    fn dim(&self) -> usize {
        self.0.dim()
    }

    #[getter]
    fn ambient_dim(&self) -> usize {
        self.0.ambient().ambient_dim()
    }

    #[getter]
    fn rank(&self) -> usize {
        self.0.rank()
    }

    fn __len__(&self) -> usize {
        self.0.len()
    }

    fn __repr__(&self) -> String {
        format!("Arrangement(hyperplanes={}, dim={})", self.0.len(), self.0.dim())
    }

    fn labels(&self) -> Vec<String> {
        self.0.labels().map(ToString::to_string).collect()
    }

    /// Primitive integer normals in ambient coordinates.
    fn normals<'py>(&self, py: Python<'py>) -> PyResult<Vec<Bound<'py, PyList>>> {
        self.0.hyperplanes().iter().map(|h| vector(py, &h.normal)).collect()
    }

    /// Coefficients of χ(t), lowest degree first.
    fn char_poly<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyList>> {
        coefficients(py, &self.0.char_poly())
    }

    /// χ(t) written out, highest degree first.
    fn char_poly_str(&self) -> String {
        self.0.char_poly().to_string()
    }

    fn whitney_char_poly<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyList>> {
        coefficients(py, &self.0.whitney_char_poly().map_err(err)?)
    }

    fn flats_per_codim(&self) -> Vec<usize> {
        self.0.intersection_lattice().flats_per_codim()
    }

    /// Map from "number of hyperplanes through a codimension-2 flat" to the
    /// number of such flats.
    fn codim2_profile(&self) -> std::collections::BTreeMap<usize, usize> {
        self.0.codim2_profile()
    }

    fn pi1_abelian_rank(&self) -> Option<usize> {
        self.0.pi1_abelian_rank()
    }

    fn delete(&self, index: usize) -> PyResult<PyArrangement> {
        self.0.delete(index).map(PyArrangement).map_err(err)
    }

    fn restrict(&self, index: usize) -> PyResult<PyArrangement> {
        self.0.restrict(index).map(PyArrangement).map_err(err)
    }

    fn essentialize(&self) -> PyArrangement {
        PyArrangement(self.0.essentialize())
    }

    /// Flats with their containing hyperplanes, codimensions and Möbius values.
    fn lattice<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyAny>> {
        to_python(py, &self.0.intersection_lattice())
    }

    fn to_json(&self) -> PyResult<String> {
        serde_json::to_string(&self.0).map_err(|e| PyValueError::new_err(e.to_string()))
    }
}

/// 𝒜_λ for a partition given as a list of weakly decreasing parts.
#[pyfunction]
fn intrinsic_arrangement(lam: Vec<usize>) -> PyResult<PyArrangement> {
    arr::build_intrinsic(&partition(lam)?).map(PyArrangement).map_err(err)
}

#[pyfunction]
fn char_poly(py: Python<'_>, lam: Vec<usize>) -> PyResult<Bound<'_, PyList>> {
    let a = arr::build_intrinsic(&partition(lam)?).map_err(err)?;
    coefficients(py, &a.char_poly())
}

/// Closed form of χ for λ = (2,1^{n−2}).
#[pyfunction]
fn char_poly_hook_chain(py: Python<'_>, n: usize) -> PyResult<Bound<'_, PyList>> {
    coefficients(py, &arr::char_poly_hook_chain(n).map_err(err)?)
}

#[pyfunction]
fn kostka(lam: Vec<usize>, mu: Vec<usize>) -> PyResult<u64> {
    comb::kostka(&partition(lam)?, &partition(mu)?).map_err(err)
}

#[pyfunction]
fn syt_count(lam: Vec<usize>) -> PyResult<usize> {
    Ok(comb::syt_count(&partition(lam)?))
}

#[pyfunction]
fn partitions(n: usize) -> Vec<Vec<usize>> {
    IntPartition::all(n).into_iter().map(Vec::from).collect()
}

/// The arrangement 𝒞 in Λ^k ℚ^n given by the boundary map.
#[pyfunction]
fn hook_arrangement(n: usize, k: usize) -> PyResult<PyArrangement> {
    hook::build_c_arrangement(n, k).map(PyArrangement).map_err(err)
}

#[pyfunction]
fn hook_product_decomposition(py: Python<'_>, n: usize, k: usize) -> PyResult<Bound<'_, PyAny>> {
    to_python(py, &hook::product_decomposition(n, k).map_err(err)?)
}

#[pyfunction]
fn hook_double_and_rank(n: usize, k: usize) -> PyResult<(bool, usize)> {
    hook::verify_double_and_rank(n, k).map_err(err)
}

#[pyfunction]
fn hook_dependency_dim(n: usize, k: usize) -> PyResult<usize> {
    Ok(hook::dependency_space(n, k).map_err(err)?.dim())
}

#[pyfunction]
#[pyo3(signature = (n, k, bound = 4))]
fn hook_min_cycle_support(n: usize, k: usize, bound: usize) -> PyResult<Option<usize>> {
    hook::min_cycle_support(n, k, bound).map_err(err)
}

/// Whether the coordinate hyperplanes restricted to V_λ ⊂ M^{λ′} give 𝒜_λ.
#[pyfunction]
fn tensor_theorem(lam: Vec<usize>) -> PyResult<bool> {
    coordinate::verify_tensor_theorem(&partition(lam)?).map_err(err)
}

/// S^Y(V_λ) as a dict: dimensions, representatives, inclusion pairs.
#[pyfunction]
fn y_lattice(py: Python<'_>, lam: Vec<usize>) -> PyResult<Bound<'_, PyAny>> {
    let real = SpechtRealization::new(&partition(lam)?);
    let lattice = partition_lattice::build_sy_lattice(&real);
    let out = to_python(py, &lattice)?;
    out.set_item("coatomistic", lattice.is_coatomistic())?;
    Ok(out)
}

#[pyfunction]
fn kostka_inequality(py: Python<'_>, lam: Vec<usize>) -> PyResult<Bound<'_, PyAny>> {
    to_python(py, &partition_lattice::kostka_inequality(&partition(lam)?).map_err(err)?)
}

/// Runs a named suite and returns its reports as dicts.
#[pyfunction]
#[pyo3(signature = (suite, n = None))]
fn run_suite<'py>(py: Python<'py>, suite: &str, n: Option<usize>) -> PyResult<Bound<'py, PyAny>> {
    let suite: Suite = suite.parse().map_err(err)?;
    to_python(py, &verify::run_suite(suite, n).map_err(err)?)
}

#[pymodule]
fn intrinsic(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyArrangement>()?;
    m.add_function(wrap_pyfunction!(intrinsic_arrangement, m)?)?;
    m.add_function(wrap_pyfunction!(char_poly, m)?)?;
    m.add_function(wrap_pyfunction!(char_poly_hook_chain, m)?)?;
    m.add_function(wrap_pyfunction!(kostka, m)?)?;
    m.add_function(wrap_pyfunction!(syt_count, m)?)?;
    m.add_function(wrap_pyfunction!(partitions, m)?)?;
    m.add_function(wrap_pyfunction!(hook_arrangement, m)?)?;
    m.add_function(wrap_pyfunction!(hook_product_decomposition, m)?)?;
    m.add_function(wrap_pyfunction!(hook_double_and_rank, m)?)?;
    m.add_function(wrap_pyfunction!(hook_dependency_dim, m)?)?;
    m.add_function(wrap_pyfunction!(hook_min_cycle_support, m)?)?;
    m.add_function(wrap_pyfunction!(tensor_theorem, m)?)?;
    m.add_function(wrap_pyfunction!(y_lattice, m)?)?;
    m.add_function(wrap_pyfunction!(kostka_inequality, m)?)?;
    m.add_function(wrap_pyfunction!(run_suite, m)?)?;
    Ok(())
}
