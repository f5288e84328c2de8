//! Python bindings. Integers cross the boundary as arbitrary-precision
//! ints in both directions; reports cross as JSON strings so Python gets
//! the same bytes the command line prints.

// the #[pyfunction] expansion converts PyErr to PyErr on every fallible
// return, and clippy flags the macro output
#![allow(clippy::useless_conversion)]

use num_bigint::BigInt;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use hessfine_core::error::Error;
use hessfine_core::hessenberg::{self, DenseMatrix};
use hessfine_core::paths::PathFamily;
use hessfine_core::sequences::{self, SequenceId};
use hessfine_core::series::{self, GfId};
use hessfine_core::trudi;
use hessfine_core::verify::{self, Route};

fn err(e: Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

/// A determinant specification: superdiagonal `a0` and the entries walking
/// down the columns.
#[pyclass]
#[derive(Clone)]
struct HTSpec {
    inner: hessenberg::HTSpec,
}

#[pymethods]
impl HTSpec {
    #[new]
    fn new(a0: BigInt, entries: Vec<BigInt>) -> PyResult<Self> {
        Ok(HTSpec {
            inner: hessenberg::HTSpec::new(a0, entries).map_err(err)?,
        })
    }

    #[getter]
    fn a0(&self) -> BigInt {
        self.inner.a0().clone()
    }

    #[getter]
    fn entries(&self) -> Vec<BigInt> {
        self.inner.entries().to_vec()
    }

    #[getter]
    fn order(&self) -> usize {
        self.inner.order()
    }

    /// Determinant by the expansion recurrence.
    fn det(&self) -> BigInt {
        hessenberg::det_recurrence(&self.inner)
    }

    /// All leading determinants D_0 .. D_n.
    fn det_prefix(&self) -> Vec<BigInt> {
        hessenberg::det_prefix(&self.inner)
    }

    /// The full matrix as nested lists.
    fn matrix(&self) -> Vec<Vec<BigInt>> {
        hessenberg::build_matrix(&self.inner).rows().to_vec()
    }

    fn __repr__(&self) -> String {
        format!(
            "HTSpec(a0={}, entries={:?})",
            self.inner.a0(),
            self.inner
                .entries()
                .iter()
                .map(|e| e.to_string())
                .collect::<Vec<_>>()
        )
    }
}

#[pyfunction]
fn seq_term(id: &str, n: usize) -> PyResult<BigInt> {
    let id = SequenceId::parse(id).map_err(err)?;
    sequences::term(id, n).map_err(err)
}

#[pyfunction]
fn seq_prefix(id: &str, len: usize) -> PyResult<Vec<BigInt>> {
    let id = SequenceId::parse(id).map_err(err)?;
    Ok(sequences::prefix(id, len).map_err(err)?.values)
}

#[pyfunction]
fn sequence_ids() -> Vec<&'static str> {
    SequenceId::ALL.iter().map(|id| id.tag()).collect()
}

#[pyfunction]
fn d_plus(entries: Vec<BigInt>) -> BigInt {
    hessenberg::d_plus(&entries)
}

#[pyfunction]
fn d_minus(entries: Vec<BigInt>) -> BigInt {
    hessenberg::d_minus(&entries)
}

#[pyfunction]
fn det_fraction_free(rows: Vec<Vec<BigInt>>) -> PyResult<BigInt> {
    let m = DenseMatrix::from_rows(rows).map_err(err)?;
    Ok(hessenberg::det_fraction_free(&m))
}

#[pyfunction]
fn invert_sequence(values: Vec<BigInt>) -> PyResult<Vec<BigInt>> {
    hessenberg::invert_sequence(&values).map_err(err)
}

#[pyfunction]
fn hankel_det(values: Vec<BigInt>, offset: usize, n: usize) -> PyResult<BigInt> {
    hessenberg::hankel_det(&values, offset, n).map_err(err)
}

#[pyfunction]
fn trudi_partition(a0: BigInt, entries: Vec<BigInt>) -> PyResult<BigInt> {
    trudi::trudi_partition_sum(&a0, &entries).map_err(err)
}

#[pyfunction]
fn trudi_composition(a0: BigInt, entries: Vec<BigInt>) -> PyResult<BigInt> {
    trudi::trudi_composition_sum(&a0, &entries).map_err(err)
}

/// Generating function coefficients as exact decimal or fraction strings.
#[pyfunction]
fn gf_coefficients(id: &str, order: usize) -> PyResult<Vec<String>> {
    let id = GfId::parse(id).map_err(err)?;
    Ok(series::gf_catalog(id, order).coefficient_strings())
}

#[pyfunction]
fn family_count(family: &str, n: usize) -> PyResult<BigInt> {
    let family = PathFamily::parse(family).map_err(err)?;
    hessfine_core::paths::family_cardinality(family, n).map_err(err)
}

#[pyfunction]
fn family_signed_sum(family: &str, n: usize) -> PyResult<BigInt> {
    let family = PathFamily::parse(family).map_err(err)?;
    hessfine_core::paths::family_signed_sum(family, n).map_err(err)
}

#[pyfunction]
fn identity_ids() -> Vec<&'static str> {
    verify::all_identities().iter().map(|s| s.id).collect()
}

/// Runs one identity and returns its JSON report.
#[pyfunction]
#[pyo3(signature = (id, max_n=None, routes=None))]
fn verify_identity(id: &str, max_n: Option<usize>, routes: Option<Vec<String>>) -> PyResult<String> {
    let spec = verify::lookup(id).map_err(err)?;
    let routes = match routes {
        Some(names) => names
            .iter()
            .map(|r| Route::parse(r))
            .collect::<Result<Vec<_>, _>>()
            .map_err(err)?,
        None => verify::default_routes(spec),
    };
    let report = verify::run_identity(spec, max_n, &routes).map_err(err)?;
    Ok(report.to_json())
}

/// Runs the whole catalog and returns a JSON array of reports.
#[pyfunction]
#[pyo3(signature = (max_n=None))]
fn verify_all(max_n: Option<usize>) -> PyResult<String> {
    let reports = verify::run_all(max_n, None).map_err(err)?;
    serde_json::to_string_pretty(&reports).map_err(|e| PyValueError::new_err(e.to_string()))
}

#[pymodule]
fn hessfine(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<HTSpec>()?;
    m.add_function(wrap_pyfunction!(seq_term, m)?)?;
    m.add_function(wrap_pyfunction!(seq_prefix, m)?)?;
    m.add_function(wrap_pyfunction!(sequence_ids, m)?)?;
    m.add_function(wrap_pyfunction!(d_plus, m)?)?;
    m.add_function(wrap_pyfunction!(d_minus, m)?)?;
    m.add_function(wrap_pyfunction!(det_fraction_free, m)?)?;
    m.add_function(wrap_pyfunction!(invert_sequence, m)?)?;
    m.add_function(wrap_pyfunction!(hankel_det, m)?)?;
    m.add_function(wrap_pyfunction!(trudi_partition, m)?)?;
    m.add_function(wrap_pyfunction!(trudi_composition, m)?)?;
    m.add_function(wrap_pyfunction!(gf_coefficients, m)?)?;
    m.add_function(wrap_pyfunction!(family_count, m)?)?;
    m.add_function(wrap_pyfunction!(family_signed_sum, m)?)?;
    m.add_function(wrap_pyfunction!(identity_ids, m)?)?;
    m.add_function(wrap_pyfunction!(verify_identity, m)?)?;
    m.add_function(wrap_pyfunction!(verify_all, m)?)?;
    Ok(())
}
