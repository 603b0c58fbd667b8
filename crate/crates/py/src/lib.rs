//! Python bindings: finite-set primitives, companion search, and the
//! check/lift suite runners with JSON reports.

use dblcheck_core::cli::{
    emit_report, exit_code, run_suite, CheckName, InstanceSel, OutFormat, SuiteConfig,
};
use dblcheck_core::companion::search_companions;
use dblcheck_core::finbase::{
    canonical_finset, coequalizer, compose_functions, pullback, FinFun, FinSet,
};
use dblcheck_core::instances::span::SpanDbl;
use dblcheck_core::suites::span_companion_candidates;
use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;

fn to_py_err(e: dblcheck_core::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

#[pyclass(name = "FinSet", from_py_object)]
#[derive(Clone)]
struct PyFinSet {
    inner: FinSet,
}

#[pymethods]
impl PyFinSet {
    #[new]
    fn new(labels: Vec<String>) -> PyResult<Self> {
        let refs: Vec<&str> = labels.iter().map(|s| s.as_str()).collect();
        Ok(PyFinSet {
            inner: canonical_finset(&refs).map_err(to_py_err)?,
        })
    }

    fn __len__(&self) -> usize {
        self.inner.len()
    }

    fn __repr__(&self) -> String {
        self.inner.to_string()
    }

    fn elements(&self) -> Vec<String> {
        self.inner.elems().iter().map(|e| e.to_string()).collect()
    }
}

#[pyclass(name = "FinFunction", from_py_object)]
#[derive(Clone)]
struct PyFinFun {
    inner: FinFun,
}

#[pymethods]
impl PyFinFun {
    #[new]
    fn new(dom: PyFinSet, cod: PyFinSet, table: Vec<usize>) -> PyResult<Self> {
        Ok(PyFinFun {
            inner: FinFun::new(dom.inner, cod.inner, table).map_err(to_py_err)?,
        })
    }

    fn __repr__(&self) -> String {
        format!(
            "{}→{}{:?}",
            self.inner.dom, self.inner.cod, self.inner.table
        )
    }

    fn table(&self) -> Vec<usize> {
        self.inner.table.clone()
    }

    fn is_bijection(&self) -> bool {
        self.inner.is_bijection()
    }
}

/// g∘f.
#[pyfunction]
fn compose(g: PyFinFun, f: PyFinFun) -> PyResult<PyFinFun> {
    Ok(PyFinFun {
        inner: compose_functions(&g.inner, &f.inner).map_err(to_py_err)?,
    })
}

/// Chosen pullback of a cospan: the agreeing-pair apex and both legs.
#[pyfunction(name = "pullback")]
fn py_pullback(f: PyFinFun, g: PyFinFun) -> PyResult<(PyFinSet, PyFinFun, PyFinFun)> {
    let (apex, p, q) = pullback(&f.inner, &g.inner).map_err(to_py_err)?;
    Ok((
        PyFinSet { inner: apex },
        PyFinFun { inner: p },
        PyFinFun { inner: q },
    ))
}

/// Coequalizer of a parallel pair: the quotient set and projection.
#[pyfunction(name = "coequalizer")]
fn py_coequalizer(f: PyFinFun, g: PyFinFun) -> PyResult<(PyFinSet, PyFinFun)> {
    let (q, pr) = coequalizer(&f.inner, &g.inner).map_err(to_py_err)?;
    Ok((PyFinSet { inner: q }, PyFinFun { inner: pr }))
}

/// All companion structures on spans with apex up to the bound.
#[pyfunction]
fn span_companion_count(f: PyFinFun, apex_bound: usize) -> PyResult<usize> {
    let cands = span_companion_candidates(&f.inner, apex_bound);
    let found = search_companions(&SpanDbl, &f.inner, &cands).map_err(to_py_err)?;
    Ok(found.len())
}

fn build_config(
    instance: &str,
    size: usize,
    level: &str,
    checks: Vec<String>,
    fixtures: Vec<String>,
    replay: Option<String>,
) -> PyResult<SuiteConfig> {
    let instance = match instance {
        "span" => InstanceSel::Span { size },
        "mat" => InstanceSel::Mat { size },
        "square" => InstanceSel::Square,
        path => InstanceSel::File { path: path.into() },
    };
    let mut parsed = Vec::new();
    for c in &checks {
        parsed.push(c.parse::<CheckName>().map_err(to_py_err)?);
    }
    Ok(SuiteConfig {
        instance,
        level: level.to_string(),
        checks: parsed,
        fixtures,
        format: OutFormat::Json,
        filter: replay,
    })
}

/// Run a check suite; returns (exit_code, report) with the report as a
/// parsed JSON object.
#[pyfunction]
#[pyo3(signature = (instance, size=2, level="symmetric", checks=vec!["double".into()], fixtures=vec![], replay=None))]
fn check(
    py: Python<'_>,
    instance: &str,
    size: usize,
    level: &str,
    checks: Vec<String>,
    fixtures: Vec<String>,
    replay: Option<String>,
) -> PyResult<(i32, Py<PyAny>)> {
    let cfg = build_config(instance, size, level, checks, fixtures, replay)?;
    let started = std::time::Instant::now();
    let outcome = run_suite(&cfg);
    let code = exit_code(&outcome);
    match outcome {
        Ok(report) => {
            let json = emit_report(&report, &cfg, started.elapsed().as_millis());
            let loads = py.import("json")?.getattr("loads")?;
            let obj = loads.call1((json,))?;
            Ok((code, obj.unbind()))
        }
        Err(e) => Err(PyRuntimeError::new_err(e.to_string())),
    }
}

/// Build and verify the lifted monoidal bicategory data, optionally with
/// fixture files; returns (exit_code, report).
#[pyfunction]
#[pyo3(signature = (instance, size=2, level="symmetric", fixtures=vec![], replay=None))]
fn lift(
    py: Python<'_>,
    instance: &str,
    size: usize,
    level: &str,
    fixtures: Vec<String>,
    replay: Option<String>,
) -> PyResult<(i32, Py<PyAny>)> {
    let mut checks = vec!["lift".to_string()];
    if !fixtures.is_empty() {
        checks.push("fixtures".into());
    }
    check(py, instance, size, level, checks, fixtures, replay)
}

/// Parse a presentation file and return its canonical serialization.
#[pyfunction]
fn parse_presentation(text: &str) -> PyResult<String> {
    let p = dblcheck_core::cli::presentation::parse_presentation(text).map_err(to_py_err)?;
    Ok(dblcheck_core::cli::presentation::print_presentation(&p))
}

#[pymodule]
fn dblcheck(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyFinSet>()?;
    m.add_class::<PyFinFun>()?;
    m.add_function(wrap_pyfunction!(compose, m)?)?;
    m.add_function(wrap_pyfunction!(py_pullback, m)?)?;
    m.add_function(wrap_pyfunction!(py_coequalizer, m)?)?;
    m.add_function(wrap_pyfunction!(span_companion_count, m)?)?;
    m.add_function(wrap_pyfunction!(check, m)?)?;
    m.add_function(wrap_pyfunction!(lift, m)?)?;
    m.add_function(wrap_pyfunction!(parse_presentation, m)?)?;
    Ok(())
}
