//! Python bindings, importable as `monoscroll`.
//!
//! Structured results (reports, fits, verdicts) cross the boundary as plain
//! dicts and lists built from the same JSON the command line emits.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use serde::Serialize;

use monoscroll::catalog::{self, Filter};
use monoscroll::scrollcalc::{self, CanonicalScrollInput, ChowClass, DivisorClass, EllFromFormula, Scroll};
use monoscroll::scrollfit;

fn err(e: monoscroll::Error) -> PyErr {
    PyValueError::new_err(format!("[{}] {e}", e.code()))
}

fn to_py<'py, T: Serialize>(py: Python<'py>, x: &T) -> PyResult<Bound<'py, PyAny>> {
    let text = catalog::canonical_json(x);
    py.import("json")?.call_method1("loads", (text,))
}

fn scroll(m: Vec<u32>) -> PyResult<Scroll> {
    Scroll::new(&m).map_err(err)
}

#[pyclass(name = "NumericalSemigroup", frozen)]
struct PySemigroup(monoscroll::NumericalSemigroup);

#[pymethods]
impl PySemigroup {
    #[new]
    fn new(generators: Vec<u32>) -> PyResult<Self> {
        monoscroll::NumericalSemigroup::from_generators(&generators).map(Self).map_err(err)
    }

    /// Semigroup with the given gap set, or `None` if the complement is not closed.
    #[staticmethod]
    fn from_gaps(gaps: Vec<u32>) -> Option<Self> {
        monoscroll::NumericalSemigroup::from_gaps(&gaps).map(Self)
    }

    #[getter]
    fn generators(&self) -> Vec<u32> {
        self.0.generators().to_vec()
    }

    #[getter]
    fn gaps(&self) -> Vec<u32> {
        self.0.gaps()
    }

    #[getter]
    fn frobenius(&self) -> i64 {
        self.0.frobenius()
    }

    #[getter]
    fn conductor(&self) -> u32 {
        self.0.conductor()
    }

    #[getter]
    fn delta(&self) -> u32 {
        self.0.delta()
    }

    #[getter]
    fn multiplicity(&self) -> u32 {
        self.0.multiplicity()
    }

    fn is_symmetric(&self) -> bool {
        self.0.is_symmetric()
    }

    fn eta(&self) -> u32 {
        self.0.eta()
    }

    fn mu(&self) -> u32 {
        self.0.mu()
    }

    fn __contains__(&self, x: i64) -> bool {
        self.0.contains(x)
    }

    fn __eq__(&self, other: &Self) -> bool {
        self.0 == other.0
    }

    fn __repr__(&self) -> String {
        format!("NumericalSemigroup({:?})", self.0.generators())
    }
}

#[pyclass(name = "MonomialCurve", frozen)]
struct PyCurve(monoscroll::MonomialCurve);

#[pymethods]
impl PyCurve {
    /// The curve `(1 : t^a1 : … : t^an)`; the leading 0 is implicit.
    #[new]
    fn new(exponents: Vec<u32>) -> PyResult<Self> {
        monoscroll::MonomialCurve::new(&exponents).map(Self).map_err(err)
    }

    #[getter]
    fn exponents(&self) -> Vec<u32> {
        self.0.exponents().to_vec()
    }

    #[getter]
    fn genus(&self) -> u32 {
        self.0.genus()
    }

    #[getter]
    fn semigroup_p(&self) -> PySemigroup {
        PySemigroup(self.0.semigroup_p().clone())
    }

    #[getter]
    fn semigroup_q(&self) -> PySemigroup {
        PySemigroup(self.0.semigroup_q().clone())
    }

    fn canonical_exponents(&self) -> PyResult<Vec<u32>> {
        self.0.canonical_model().map(|a| a.0).map_err(err)
    }

    fn classify<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyAny>> {
        to_py(py, &self.0.classify())
    }

    fn gonality(&self) -> u32 {
        scrollfit::curve_gonality(&self.0).gonality
    }

    fn pencil_degree(&self, r: u32) -> u32 {
        self.0.pencil_degree(r)
    }

    /// `(least degree, every r attaining it)`.
    fn min_pencil_degree(&self) -> (u32, Vec<u32>) {
        self.0.min_pencil_degree()
    }

    fn canonical_degree_oracle<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyAny>> {
        to_py(py, &self.0.canonical_degree_oracle().map_err(err)?)
    }

    fn report<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyAny>> {
        to_py(py, &catalog::CurveReport::new(&self.0))
    }

    fn report_json(&self) -> String {
        catalog::CurveReport::new(&self.0).to_json_line()
    }

    fn __repr__(&self) -> String {
        format!("MonomialCurve({:?})", self.0.exponents())
    }
}

#[pyfunction]
fn fit_with_difference<'py>(py: Python<'py>, exponents: Vec<u32>, r: u32) -> PyResult<Bound<'py, PyAny>> {
    to_py(py, &scrollfit::fit_with_difference(&exponents, r).map_err(err)?)
}

#[pyfunction]
fn best_fit<'py>(py: Python<'py>, exponents: Vec<u32>) -> PyResult<Bound<'py, PyAny>> {
    to_py(py, &scrollfit::best_fit(&exponents).map_err(err)?)
}

/// Two-line text layout of the determinantal matrix.
#[pyfunction]
fn scroll_matrix(exponents: Vec<u32>, r: u32) -> PyResult<String> {
    scrollfit::scroll_matrix(&exponents, r).map(|m| m.to_string()).map_err(err)
}

/// `(value, in_regime)` from the closed formula.
#[pyfunction]
fn h0_closed(scroll_type: Vec<u32>, a: i64, b: i64) -> PyResult<(i64, bool)> {
    let out = scrollcalc::h0_closed(&scroll(scroll_type)?, a, b);
    Ok((out.value, out.in_regime))
}

#[pyfunction]
fn h0_enum(scroll_type: Vec<u32>, a: i64, b: i64) -> PyResult<i64> {
    Ok(scrollcalc::h0_enum(&scroll(scroll_type)?, a, b))
}

#[pyfunction]
fn ci_invariants<'py>(py: Python<'py>, scroll_type: Vec<u32>, classes: Vec<(i64, i64)>) -> PyResult<Bound<'py, PyAny>> {
    let classes: Vec<DivisorClass> = classes.into_iter().map(|(a, b)| DivisorClass::new(a, b)).collect();
    to_py(py, &scrollcalc::ci_invariants(&scroll(scroll_type)?, &classes).map_err(err)?)
}

/// Degree of a product of divisor classes, or `None` below top codimension.
#[pyfunction]
fn chow_degree(scroll_type: Vec<u32>, classes: Vec<(i64, i64)>) -> PyResult<Option<i64>> {
    let factors: Vec<ChowClass> = classes.into_iter().map(|(a, b)| DivisorClass::new(a, b).into()).collect();
    let product = scrollcalc::chow_product(&scroll(scroll_type)?, &factors);
    Ok(match product {
        scrollcalc::ChowProduct::Degree(n) => Some(n),
        scrollcalc::ChowProduct::Zero => Some(0),
        scrollcalc::ChowProduct::Class(_) => None,
    })
}

/// Bounds for a canonical model on a `d`-fold scroll. Rationals come back as `(num, den)`.
#[pyfunction]
#[allow(clippy::too_many_arguments)]
fn canonical_scroll_constraints<'py>(
    py: Python<'py>,
    g: i64,
    eta: i64,
    mu: i64,
    d: i64,
    ell: i64,
    a: i64,
    b: i64,
    g_prime: i64,
) -> PyResult<Bound<'py, PyAny>> {
    let out = scrollcalc::canonical_scroll_constraints(&CanonicalScrollInput { g, eta, mu, d, ell, a, b, g_prime });
    let ell_from_formula = match out.ell_from_formula {
        EllFromFormula::Value(q) => Some((*q.numer(), *q.denom())),
        EllFromFormula::DegenerateDenominator { .. } => None,
    };
    let dict = pyo3::types::PyDict::new(py);
    dict.set_item("pacan_residual", out.pacan_residual)?;
    dict.set_item("ell_from_formula", ell_from_formula)?;
    dict.set_item("gonality_upper", out.gonality_upper)?;
    dict.set_item("md_upper", (*out.md_upper.numer(), *out.md_upper.denom()))?;
    dict.set_item("m1_lower", out.m1_lower.as_f64())?;
    let b: Vec<(i64, (i64, i64))> = out.b_candidates.iter().map(|(t, q)| (*t, (*q.numer(), *q.denom()))).collect();
    dict.set_item("b_candidates", b)?;
    Ok(dict.into_any())
}

#[pyfunction]
fn enumerate_semigroups(genus: u32) -> PyResult<Vec<PySemigroup>> {
    Ok(catalog::enumerate_semigroups(genus).map_err(err)?.into_iter().map(PySemigroup).collect())
}

#[pyfunction]
fn one_point_curve(s: &PySemigroup) -> PyResult<PyCurve> {
    catalog::one_point_curve(&s.0).map(PyCurve).map_err(err)
}

/// Reports for one-point curves with genus in `min_genus..=max_genus`.
#[pyfunction]
#[pyo3(signature = (min_genus, max_genus, filters = Vec::new()))]
fn build_catalog<'py>(
    py: Python<'py>,
    min_genus: u32,
    max_genus: u32,
    filters: Vec<String>,
) -> PyResult<Bound<'py, PyAny>> {
    let filters: Vec<Filter> =
        filters.iter().map(|f| f.parse().map_err(PyValueError::new_err)).collect::<PyResult<_>>()?;
    let reports = py.detach(|| catalog::build_catalog(min_genus, max_genus, &filters)).map_err(err)?;
    to_py(py, &reports)
}

#[pyfunction]
fn reproduce_paper_fixtures<'py>(py: Python<'py>) -> PyResult<Bound<'py, PyAny>> {
    to_py(py, &catalog::reproduce_paper_fixtures())
}

#[pymodule]
#[pyo3(name = "monoscroll")]
fn monoscroll_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PySemigroup>()?;
    m.add_class::<PyCurve>()?;
    m.add_function(wrap_pyfunction!(fit_with_difference, m)?)?;
    m.add_function(wrap_pyfunction!(best_fit, m)?)?;
    m.add_function(wrap_pyfunction!(scroll_matrix, m)?)?;
    m.add_function(wrap_pyfunction!(h0_closed, m)?)?;
    m.add_function(wrap_pyfunction!(h0_enum, m)?)?;
    m.add_function(wrap_pyfunction!(ci_invariants, m)?)?;
    m.add_function(wrap_pyfunction!(chow_degree, m)?)?;
    m.add_function(wrap_pyfunction!(canonical_scroll_constraints, m)?)?;
    m.add_function(wrap_pyfunction!(enumerate_semigroups, m)?)?;
    m.add_function(wrap_pyfunction!(one_point_curve, m)?)?;
    m.add_function(wrap_pyfunction!(build_catalog, m)?)?;
    m.add_function(wrap_pyfunction!(reproduce_paper_fixtures, m)?)?;
    Ok(())
}
