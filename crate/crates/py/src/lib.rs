//! Python bindings: problem setup, series solution evaluation, the
//! special-function and kernel layers, and the discrete verification
//! operators, mirroring the library API.

use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;
use pyo3::types::PyDict;

use frachelm::boundary_data::BoundaryFunction;
use frachelm::frac_kernels::{Kernel, KernelParams};
use frachelm::mittag_leffler::{ml_eval, MlParams, DEFAULT_REL_TOL};
use frachelm::solver::{assemble, CompatPolicy, ProblemSpec, Solution};
use frachelm::spectral_basis::{eigenvalue, modes_through_order, Parity, ProblemKind};
use frachelm::verify::{
    caputo_l1 as lib_caputo_l1, composed_caputo as lib_composed_caputo, pde_residual,
    refinement_study, CaputoGrid,
};

fn value_err(e: impl std::fmt::Display) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn runtime_err(e: impl std::fmt::Display) -> PyErr {
    PyRuntimeError::new_err(e.to_string())
}

fn parse_kind(text: &str) -> PyResult<ProblemKind> {
    match text.to_ascii_lowercase().as_str() {
        "dirichlet" | "d" => Ok(ProblemKind::Dirichlet),
        "neumann" | "n" => Ok(ProblemKind::Neumann),
        "periodic" | "p" => Ok(ProblemKind::Periodic),
        "antiperiodic" | "anti-periodic" | "ap" => Ok(ProblemKind::AntiPeriodic),
        other => Err(value_err(format!("unknown problem kind {other:?}"))),
    }
}

fn parity_name(parity: Parity) -> &'static str {
    match parity {
        Parity::Odd => "sine",
        Parity::Even => "cosine",
    }
}

/// E_{alpha,beta}(z) to the given relative tolerance.
#[pyfunction]
#[pyo3(signature = (alpha, beta, z, rel_tol=None))]
fn ml(alpha: f64, beta: f64, z: f64, rel_tol: Option<f64>) -> PyResult<f64> {
    let params = MlParams::new(alpha, beta).map_err(value_err)?;
    let r = ml_eval(params, z, rel_tol.unwrap_or(DEFAULT_REL_TOL)).map_err(runtime_err)?;
    Ok(r.value)
}

/// The two-point kernels (C(t), S(t)) for order alpha and frequency mu.
#[pyfunction]
fn kernel(alpha: f64, mu: f64, t: f64) -> PyResult<(f64, f64)> {
    let params = KernelParams::new(alpha, mu).map_err(value_err)?;
    let k = Kernel::new(params).map_err(runtime_err)?;
    Ok((k.c(t).map_err(runtime_err)?, k.s(t).map_err(runtime_err)?))
}

/// Eigenstructure table for one problem kind: dicts with family, k,
/// wavenumber, and lambda, in interleaved order.
#[pyfunction]
fn basis(py: Python<'_>, kind: &str, eps: f64, n: u32) -> PyResult<Vec<Py<PyDict>>> {
    let kind = parse_kind(kind)?;
    let mut rows = Vec::new();
    for mode in modes_through_order(kind, n) {
        let d = PyDict::new(py);
        d.set_item("family", parity_name(mode.parity))?;
        d.set_item("k", mode.k)?;
        d.set_item("wavenumber", mode.wavenumber())?;
        d.set_item("lambda", eigenvalue(mode, eps).map_err(value_err)?)?;
        rows.push(d.into());
    }
    Ok(rows)
}

/// Discrete Caputo derivative of uniformly sampled data on [0, 1] by the
/// L1 scheme (finite differences at alpha = 1).
#[pyfunction]
fn caputo_l1(alpha: f64, samples: Vec<f64>) -> PyResult<Vec<f64>> {
    if samples.len() < 5 {
        return Err(value_err("need at least 5 samples (m >= 4)"));
    }
    let grid = CaputoGrid::new(samples.len() - 1, alpha).map_err(value_err)?;
    lib_caputo_l1(&grid, &samples).map_err(runtime_err)
}

/// The composed operator D^alpha D^alpha applied to uniformly sampled
/// data on [0, 1], with the x^alpha layer split handled internally.
#[pyfunction]
fn composed_caputo(alpha: f64, samples: Vec<f64>) -> PyResult<Vec<f64>> {
    if samples.len() < 5 {
        return Err(value_err("need at least 5 samples (m >= 4)"));
    }
    let grid = CaputoGrid::new(samples.len() - 1, alpha).map_err(value_err)?;
    lib_composed_caputo(&grid, &samples).map_err(runtime_err)
}

fn boundary_from_python(data: &Bound<'_, PyAny>) -> PyResult<BoundaryFunction> {
    if let Ok(text) = data.extract::<String>() {
        return BoundaryFunction::from_expression(&text).map_err(value_err);
    }
    if let Ok(points) = data.extract::<Vec<(f64, f64)>>() {
        return BoundaryFunction::from_samples(&points).map_err(value_err);
    }
    Err(value_err(
        "boundary data must be an expression string or a list of (y, value) pairs",
    ))
}

/// One boundary value problem instance.
#[pyclass(name = "Problem")]
struct PyProblem {
    spec: ProblemSpec,
}

#[pymethods]
impl PyProblem {
    /// Problem(kind, alpha, phi, psi, modes, eps=0, c=0,
    ///         strict_compat=False, compat_tol=None)
    ///
    /// phi and psi are expression strings in y or lists of (y, value)
    /// sample pairs on [-pi, pi].
    #[new]
    #[pyo3(signature = (kind, alpha, phi, psi, modes, eps=0.0, c=0.0, strict_compat=false, compat_tol=None))]
    #[allow(clippy::too_many_arguments)]
    fn new(
        kind: &str,
        alpha: f64,
        phi: &Bound<'_, PyAny>,
        psi: &Bound<'_, PyAny>,
        modes: u32,
        eps: f64,
        c: f64,
        strict_compat: bool,
        compat_tol: Option<f64>,
    ) -> PyResult<Self> {
        let kind = parse_kind(kind)?;
        let phi = boundary_from_python(phi)?;
        let psi = boundary_from_python(psi)?;
        let mut spec = ProblemSpec::new(kind, alpha, eps, c, phi, psi, modes);
        if let Some(tol) = compat_tol {
            spec.compat_tol = tol;
        }
        if strict_compat {
            spec.compat_policy = CompatPolicy::Enforce;
        }
        spec.validate().map_err(value_err)?;
        Ok(PyProblem { spec })
    }

    /// Assembles the truncated series solution.
    fn solve(&self) -> PyResult<PySolution> {
        let sol = assemble(self.spec.clone()).map_err(runtime_err)?;
        Ok(PySolution { sol })
    }

    #[getter]
    fn fingerprint(&self) -> String {
        self.spec.fingerprint()
    }

    fn __repr__(&self) -> String {
        format!(
            "Problem(kind={:?}, alpha={}, eps={}, c={}, n={})",
            self.spec.kind.as_str(),
            self.spec.alpha,
            self.spec.eps,
            self.spec.c,
            self.spec.n
        )
    }
}

/// Assembled series solution.
#[pyclass(name = "Solution")]
struct PySolution {
    sol: Solution,
}

#[pymethods]
impl PySolution {
    /// u(x, y) at one point of [0, 1] x [-pi, pi].
    fn evaluate(&self, x: f64, y: f64) -> PyResult<f64> {
        self.sol.evaluate(x, y).map_err(value_err)
    }

    /// Uniform tensor grid: (xs, ys, values) with values[ix][iy].
    fn grid(&self, nx: usize, ny: usize) -> PyResult<(Vec<f64>, Vec<f64>, Vec<Vec<f64>>)> {
        let field = self.sol.evaluate_grid(nx, ny).map_err(value_err)?;
        let values = (0..nx)
            .map(|ix| (0..ny).map(|iy| field.value(ix, iy)).collect())
            .collect();
        Ok((field.xs.clone(), field.ys.clone(), values))
    }

    /// Per-mode table: family, k, wavenumber, mu, phi_coeff, psi_coeff.
    fn modes(&self, py: Python<'_>) -> PyResult<Vec<Py<PyDict>>> {
        let mut rows = Vec::new();
        for r in self.sol.records() {
            let d = PyDict::new(py);
            d.set_item("family", parity_name(r.mode.parity))?;
            d.set_item("k", r.mode.k)?;
            d.set_item("wavenumber", r.mode.wavenumber())?;
            d.set_item("mu", r.mu)?;
            d.set_item("phi_coeff", r.phi_coeff)?;
            d.set_item("psi_coeff", r.psi_coeff)?;
            rows.push(d.into());
        }
        Ok(rows)
    }

    #[getter]
    fn warnings(&self) -> Vec<String> {
        self.sol.warnings().to_vec()
    }

    #[getter]
    fn fingerprint(&self) -> String {
        self.sol.spec().fingerprint()
    }

    /// Discrete PDE residual report on an m-interval x grid and ny-node
    /// symmetric y grid.
    fn residual(&self, py: Python<'_>, m: usize, ny: usize) -> PyResult<Py<PyDict>> {
        let report = pde_residual(&self.sol, m, ny).map_err(runtime_err)?;
        let d = PyDict::new(py);
        d.set_item("m", report.m)?;
        d.set_item("ny", report.ny)?;
        d.set_item("excluded_left", report.excluded_left)?;
        d.set_item("max_abs_residual", report.max_abs_residual)?;
        d.set_item("l2_residual", report.l2_residual)?;
        d.set_item("boundary_x0_error", report.boundary.x0_error)?;
        d.set_item("boundary_x1_error", report.boundary.x1_error)?;
        d.set_item(
            "side_conditions",
            report.boundary.side_conditions.clone(),
        )?;
        Ok(d.into())
    }

    /// Residual refinement ladder over the given even x resolutions:
    /// dicts with m, h, max_residual, observed_order.
    fn refine(&self, py: Python<'_>, ladder: Vec<usize>) -> PyResult<Vec<Py<PyDict>>> {
        let study = refinement_study(&self.sol, &ladder).map_err(runtime_err)?;
        let mut rows = Vec::new();
        for l in &study.levels {
            let d = PyDict::new(py);
            d.set_item("m", l.m)?;
            d.set_item("h", l.h)?;
            d.set_item("max_residual", l.max_residual)?;
            d.set_item("l2_residual", l.l2_residual)?;
            d.set_item("observed_order", l.observed_order)?;
            rows.push(d.into());
        }
        Ok(rows)
    }

    fn __repr__(&self) -> String {
        format!(
            "Solution(kind={:?}, modes={}, warnings={})",
            self.sol.spec().kind.as_str(),
            self.sol.records().len(),
            self.sol.warnings().len()
        )
    }
}

#[pymodule]
fn frachelm_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyProblem>()?;
    m.add_class::<PySolution>()?;
    m.add_function(wrap_pyfunction!(ml, m)?)?;
    m.add_function(wrap_pyfunction!(kernel, m)?)?;
    m.add_function(wrap_pyfunction!(basis, m)?)?;
    m.add_function(wrap_pyfunction!(caputo_l1, m)?)?;
    m.add_function(wrap_pyfunction!(composed_caputo, m)?)?;
    Ok(())
}
