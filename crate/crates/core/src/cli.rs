//! Command-line workflows: problem configuration from a TOML file,
//! solve/verify/convergence runs with deterministic file outputs, and
//! tabulation commands exposing the special-function, basis, and kernel
//! layers.
//!
//! Exit codes: 0 success, 2 configuration or validation failure, 3
//! numerical failure, 4 verification threshold violation. All floats in
//! CSV output carry 17 significant digits so files round-trip bit-exact.
//! Reports echo the configuration as it appeared on disk, never
//! command-line overrides, so runs differing only in thread count
//! produce byte-identical outputs.

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use serde::Deserialize;
use serde_json::{json, Value};

use crate::boundary_data::{parse_samples_csv, BoundaryFunction};
use crate::frac_kernels::{Kernel, KernelError, KernelParams};
use crate::mittag_leffler::{ml_eval, MlError, MlParams, DEFAULT_REL_TOL};
use crate::solver::{assemble, CompatPolicy, ProblemSpec, Solution, SolverError};
use crate::spectral_basis::{eigenvalue, modes_through_order, Parity, ProblemKind};
use crate::verify::{pde_residual, refinement_study, ResidualReport, VerifyError};

pub const EXIT_OK: i32 = 0;
pub const EXIT_CONFIG: i32 = 2;
pub const EXIT_NUMERICAL: i32 = 3;
pub const EXIT_THRESHOLD: i32 = 4;

/// Failure carrying the process exit code it maps to.
#[derive(Debug)]
pub struct CliError {
    pub code: i32,
    pub message: String,
}

impl CliError {
    fn config(message: impl Into<String>) -> Self {
        CliError {
            code: EXIT_CONFIG,
            message: message.into(),
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.message)
    }
}

fn solver_exit_code(err: &SolverError) -> i32 {
    match err {
        SolverError::Kernel(_) => EXIT_NUMERICAL,
        _ => EXIT_CONFIG,
    }
}

impl From<SolverError> for CliError {
    fn from(err: SolverError) -> Self {
        CliError {
            code: solver_exit_code(&err),
            message: err.to_string(),
        }
    }
}

impl From<VerifyError> for CliError {
    fn from(err: VerifyError) -> Self {
        let code = match &err {
            VerifyError::Solver(e) => solver_exit_code(e),
            VerifyError::Kernel(_) => EXIT_NUMERICAL,
            _ => EXIT_CONFIG,
        };
        CliError {
            code,
            message: err.to_string(),
        }
    }
}

impl From<KernelError> for CliError {
    fn from(err: KernelError) -> Self {
        CliError {
            code: EXIT_NUMERICAL,
            message: err.to_string(),
        }
    }
}

impl From<MlError> for CliError {
    fn from(err: MlError) -> Self {
        CliError {
            code: EXIT_NUMERICAL,
            message: err.to_string(),
        }
    }
}

// ---------------------------------------------------------------------------
// Configuration file

/// One run configuration as read from the TOML file. Unknown keys are
/// rejected in every section.
#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RunConfig {
    pub problem: ProblemSection,
    #[serde(default)]
    pub grid: GridSection,
    #[serde(default)]
    pub verify: VerifySection,
    #[serde(default)]
    pub run: RunSection,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProblemSection {
    /// Problem kind: dirichlet | neumann | periodic | antiperiodic
    /// (long or short form, case-insensitive).
    pub kind: String,
    pub alpha: f64,
    #[serde(default)]
    pub eps: f64,
    #[serde(default)]
    pub c: f64,
    /// Truncation order n; both parity branches keep modes with k <= n.
    pub modes: u32,
    pub phi: BoundarySource,
    pub psi: BoundarySource,
    #[serde(default)]
    pub compat_tol: Option<f64>,
}

/// Boundary data: an expression in y, or a reference to a samples CSV
/// resolved relative to the config file.
#[derive(Clone, Debug, Deserialize)]
#[serde(untagged)]
pub enum BoundarySource {
    Expression(String),
    File {
        samples: String,
    },
}

#[derive(Clone, Debug, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct GridSection {
    pub nx: usize,
    pub ny: usize,
}

impl Default for GridSection {
    fn default() -> Self {
        GridSection { nx: 64, ny: 65 }
    }
}

#[derive(Clone, Debug, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct VerifySection {
    pub nx: usize,
    pub ny: usize,
    /// x resolutions of the refinement ladder, coarse to fine.
    pub ladder: Vec<usize>,
    pub max_residual: Option<f64>,
    pub max_boundary: Option<f64>,
}

impl Default for VerifySection {
    fn default() -> Self {
        VerifySection {
            nx: 64,
            ny: 65,
            ladder: vec![32, 64, 128, 256],
            max_residual: None,
            max_boundary: None,
        }
    }
}

#[derive(Clone, Debug, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct RunSection {
    /// Worker thread count; 0 keeps the library default.
    pub threads: usize,
    /// Sampling seed echoed into reports for reproducibility.
    pub seed: u64,
}

impl Default for RunSection {
    fn default() -> Self {
        RunSection {
            threads: 0,
            seed: 0,
        }
    }
}

pub fn parse_kind(text: &str) -> Result<ProblemKind, CliError> {
    match text.to_ascii_lowercase().as_str() {
        "dirichlet" | "d" => Ok(ProblemKind::Dirichlet),
        "neumann" | "n" => Ok(ProblemKind::Neumann),
        "periodic" | "p" => Ok(ProblemKind::Periodic),
        "antiperiodic" | "anti-periodic" | "ap" => Ok(ProblemKind::AntiPeriodic),
        other => Err(CliError::config(format!(
            "unknown problem kind {other:?}; expected dirichlet, neumann, periodic, or antiperiodic"
        ))),
    }
}

pub fn load_config(path: &Path) -> Result<RunConfig, CliError> {
    let text = fs::read_to_string(path)
        .map_err(|e| CliError::config(format!("cannot read config {}: {e}", path.display())))?;
    toml::from_str(&text)
        .map_err(|e| CliError::config(format!("invalid config {}: {e}", path.display())))
}

fn load_boundary(source: &BoundarySource, base: &Path) -> Result<BoundaryFunction, CliError> {
    match source {
        BoundarySource::Expression(text) => BoundaryFunction::from_expression(text)
            .map_err(|e| CliError::config(format!("boundary expression {text:?}: {e}"))),
        BoundarySource::File { samples } => {
            let path = base.join(samples);
            let text = fs::read_to_string(&path).map_err(|e| {
                CliError::config(format!("cannot read samples {}: {e}", path.display()))
            })?;
            let points = parse_samples_csv(&text)
                .map_err(|e| CliError::config(format!("samples {}: {e}", path.display())))?;
            BoundaryFunction::from_samples(&points)
                .map_err(|e| CliError::config(format!("samples {}: {e}", path.display())))
        }
    }
}

/// Builds the ProblemSpec from a parsed config. `base` anchors relative
/// samples paths; `strict` upgrades compatibility findings to errors.
pub fn build_spec(config: &RunConfig, base: &Path, strict: bool) -> Result<ProblemSpec, CliError> {
    let p = &config.problem;
    let kind = parse_kind(&p.kind)?;
    let phi = load_boundary(&p.phi, base)?;
    let psi = load_boundary(&p.psi, base)?;
    let mut spec = ProblemSpec::new(kind, p.alpha, p.eps, p.c, phi, psi, p.modes);
    if let Some(tol) = p.compat_tol {
        spec.compat_tol = tol;
    }
    if strict {
        spec.compat_policy = CompatPolicy::Enforce;
    }
    spec.validate()?;
    Ok(spec)
}

fn with_threads<T: Send>(threads: usize, f: impl FnOnce() -> T + Send) -> Result<T, CliError> {
    if threads == 0 {
        return Ok(f());
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .map_err(|e| CliError::config(format!("cannot build a {threads}-thread pool: {e}")))?;
    Ok(pool.install(f))
}

// ---------------------------------------------------------------------------
// Report assembly

fn boundary_echo(source: &BoundarySource) -> Value {
    match source {
        BoundarySource::Expression(text) => json!({ "expression": text }),
        BoundarySource::File { samples } => json!({ "samples": samples }),
    }
}

/// Configuration echo for reports: the values as configured on disk, so
/// re-running the echoed configuration reproduces the outputs.
fn config_echo(config: &RunConfig) -> Value {
    let p = &config.problem;
    json!({
        "problem": {
            "kind": p.kind,
            "alpha": p.alpha,
            "eps": p.eps,
            "c": p.c,
            "modes": p.modes,
            "phi": boundary_echo(&p.phi),
            "psi": boundary_echo(&p.psi),
            "compat_tol": p.compat_tol,
        },
        "grid": { "nx": config.grid.nx, "ny": config.grid.ny },
        "verify": {
            "nx": config.verify.nx,
            "ny": config.verify.ny,
            "ladder": config.verify.ladder,
            "max_residual": config.verify.max_residual,
            "max_boundary": config.verify.max_boundary,
        },
        "run": { "threads": config.run.threads, "seed": config.run.seed },
    })
}

fn parity_name(parity: Parity) -> &'static str {
    match parity {
        Parity::Odd => "sine",
        Parity::Even => "cosine",
    }
}

fn mode_table(sol: &Solution) -> Vec<Value> {
    sol.records()
        .iter()
        .map(|r| {
            json!({
                "family": parity_name(r.mode.parity),
                "k": r.mode.k,
                "wavenumber": r.mode.wavenumber(),
                "lambda": eigenvalue(r.mode, sol.spec().eps).unwrap_or(f64::NAN),
                "mu": r.mu,
                "phi_coeff": r.phi_coeff,
                "psi_coeff": r.psi_coeff,
                "degenerate": r.is_degenerate(),
            })
        })
        .collect()
}

fn residual_json(report: &ResidualReport) -> Value {
    json!({
        "m": report.m,
        "ny": report.ny,
        "excluded_left": report.excluded_left,
        "max_abs_residual": report.max_abs_residual,
        "l2_residual": report.l2_residual,
        "terms": {
            "fractional": report.terms.fractional,
            "u_yy": report.terms.u_yy,
            "involution": report.terms.involution,
            "helmholtz": report.terms.helmholtz,
        },
        "boundary": {
            "x0_error": report.boundary.x0_error,
            "x1_error": report.boundary.x1_error,
            "side_conditions": report.boundary.side_conditions.iter()
                .map(|(label, value)| json!({ "condition": label, "max_error": value }))
                .collect::<Vec<_>>(),
        },
    })
}

fn write_output(dir: &Path, name: &str, content: &str) -> Result<PathBuf, CliError> {
    fs::create_dir_all(dir).map_err(|e| {
        CliError::config(format!("cannot create output dir {}: {e}", dir.display()))
    })?;
    let path = dir.join(name);
    fs::write(&path, content)
        .map_err(|e| CliError::config(format!("cannot write {}: {e}", path.display())))?;
    Ok(path)
}

fn config_base(config_path: &Path) -> PathBuf {
    config_path
        .parent()
        .filter(|p| !p.as_os_str().is_empty())
        .map_or_else(|| PathBuf::from("."), Path::to_path_buf)
}

// ---------------------------------------------------------------------------
// Subcommands

pub struct WorkflowArgs<'a> {
    pub config: &'a Path,
    pub out: &'a Path,
    pub threads: Option<usize>,
    pub strict_compat: bool,
    /// Test hook: scales one modal profile after assembly so verification
    /// thresholds trip on an otherwise well-formed solution.
    pub corrupt: bool,
}

pub fn cmd_solve(args: &WorkflowArgs) -> Result<(), CliError> {
    let config = load_config(args.config)?;
    let base = config_base(args.config);
    let spec = build_spec(&config, &base, args.strict_compat)?;
    let threads = args.threads.unwrap_or(config.run.threads);
    let (sol, field) = with_threads(threads, || -> Result<_, CliError> {
        let sol = assemble(spec)?;
        let field = sol.evaluate_grid(config.grid.nx, config.grid.ny)?;
        Ok((sol, field))
    })??;
    let phi_l2 = sol
        .records()
        .iter()
        .map(|r| r.phi_coeff * r.phi_coeff)
        .sum::<f64>()
        .sqrt();
    let psi_l2 = sol
        .records()
        .iter()
        .map(|r| r.psi_coeff * r.psi_coeff)
        .sum::<f64>()
        .sqrt();
    let report = json!({
        "config": config_echo(&config),
        "fingerprint": sol.spec().fingerprint(),
        "kind": sol.spec().kind.as_str(),
        "modes": mode_table(&sol),
        "warnings": sol.warnings(),
        "field": {
            "nx": config.grid.nx,
            "ny": config.grid.ny,
            "max_abs": field.max_abs(),
        },
        "norms": {
            "phi_modal_l2": phi_l2,
            "psi_modal_l2": psi_l2,
        },
    });
    let field_path = write_output(args.out, "field.csv", &field.to_csv())?;
    let report_path = write_output(
        args.out,
        "report.json",
        &format!("{}\n", serde_json::to_string_pretty(&report).unwrap()),
    )?;
    println!(
        "solve: {} modes, field {}x{}, max |u| = {:.6e}",
        sol.records().len(),
        config.grid.nx,
        config.grid.ny,
        field.max_abs()
    );
    println!("wrote {} and {}", field_path.display(), report_path.display());
    Ok(())
}

struct ThresholdCheck {
    name: &'static str,
    limit: f64,
    value: f64,
}

pub fn cmd_verify(args: &WorkflowArgs) -> Result<(), CliError> {
    let config = load_config(args.config)?;
    let base = config_base(args.config);
    let spec = build_spec(&config, &base, args.strict_compat)?;
    let threads = args.threads.unwrap_or(config.run.threads);
    let corrupt = args.corrupt;
    let v = config.verify.clone();
    let (sol, report, study) = with_threads(threads, move || -> Result<_, CliError> {
        let mut sol = assemble(spec)?;
        if corrupt {
            // Scale the record carrying the most data so the corruption
            // is visible even when leading coefficients vanish.
            let target = sol
                .records()
                .iter()
                .enumerate()
                .max_by(|(_, a), (_, b)| {
                    let na = a.profile().a.abs() + a.profile().b.abs();
                    let nb = b.profile().a.abs() + b.profile().b.abs();
                    na.total_cmp(&nb)
                })
                .map_or(0, |(i, _)| i);
            sol = sol.with_scaled_mode(target, 1.5);
        }
        let report = pde_residual(&sol, v.nx, v.ny)?;
        let study = refinement_study(&sol, &v.ladder)?;
        Ok((sol, report, study))
    })??;

    let mut checks: Vec<ThresholdCheck> = Vec::new();
    if let Some(limit) = config.verify.max_residual {
        checks.push(ThresholdCheck {
            name: "max_residual",
            limit,
            value: report.max_abs_residual,
        });
    }
    if let Some(limit) = config.verify.max_boundary {
        checks.push(ThresholdCheck {
            name: "max_boundary",
            limit,
            value: report.boundary.worst(),
        });
    }
    let pass = checks.iter().all(|c| c.value <= c.limit);

    let ladder: Vec<Value> = study
        .levels
        .iter()
        .map(|l| {
            json!({
                "m": l.m,
                "h": l.h,
                "max_residual": l.max_residual,
                "l2_residual": l.l2_residual,
                "observed_order": l.observed_order,
            })
        })
        .collect();
    let verdicts: Vec<Value> = checks
        .iter()
        .map(|c| {
            json!({
                "threshold": c.name,
                "limit": c.limit,
                "value": c.value,
                "pass": c.value <= c.limit,
            })
        })
        .collect();
    let doc = json!({
        "config": config_echo(&config),
        "fingerprint": sol.spec().fingerprint(),
        "residual": residual_json(&report),
        "ladder": {
            "levels": ladder,
            "monotone_nonincreasing": study.monotone_nonincreasing(),
        },
        "thresholds": verdicts,
        "warnings": sol.warnings(),
        "pass": pass,
    });
    write_output(
        args.out,
        "verify.json",
        &format!("{}\n", serde_json::to_string_pretty(&doc).unwrap()),
    )?;
    write_output(args.out, "ladder.csv", &study.to_csv())?;
    println!(
        "verify: max residual {:.6e}, boundary worst {:.6e}, ladder monotone: {}",
        report.max_abs_residual,
        report.boundary.worst(),
        study.monotone_nonincreasing()
    );
    if !pass {
        let failing: Vec<&str> = checks
            .iter()
            .filter(|c| c.value > c.limit)
            .map(|c| c.name)
            .collect();
        return Err(CliError {
            code: EXIT_THRESHOLD,
            message: format!(
                "verification thresholds failed: {}",
                failing.join(", ")
            ),
        });
    }
    Ok(())
}

pub fn cmd_converge(args: &WorkflowArgs) -> Result<(), CliError> {
    let config = load_config(args.config)?;
    let base = config_base(args.config);
    let spec = build_spec(&config, &base, args.strict_compat)?;
    let threads = args.threads.unwrap_or(config.run.threads);
    let ladder = config.verify.ladder.clone();
    let study = with_threads(threads, move || -> Result<_, CliError> {
        let sol = assemble(spec)?;
        Ok(refinement_study(&sol, &ladder)?)
    })??;
    write_output(args.out, "ladder.csv", &study.to_csv())?;
    println!(
        "converge: {} levels, final max residual {:.6e}, monotone: {}",
        study.levels.len(),
        study.levels.last().map_or(0.0, |l| l.max_residual),
        study.monotone_nonincreasing()
    );
    Ok(())
}

// ---------------------------------------------------------------------------
// Tabulation commands

fn parse_list(text: &str, what: &str) -> Result<Vec<f64>, CliError> {
    text.split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| {
            s.parse::<f64>()
                .map_err(|_| CliError::config(format!("invalid {what} value {s:?}")))
        })
        .collect()
}

fn emit(out: Option<&Path>, name: &str, content: &str) -> Result<(), CliError> {
    match out {
        Some(dir) => {
            let path = write_output(dir, name, content)?;
            println!("wrote {}", path.display());
            Ok(())
        }
        None => {
            print!("{content}");
            Ok(())
        }
    }
}

/// Tabulates E_{alpha,beta} at the given arguments: CSV columns z, value.
pub fn cmd_mlf(alpha: f64, beta: f64, zs: &str, out: Option<&Path>) -> Result<(), CliError> {
    let params = MlParams::new(alpha, beta)?;
    let zs = parse_list(zs, "z")?;
    let mut csv = String::from("z,value\n");
    for z in zs {
        let r = ml_eval(params, z, DEFAULT_REL_TOL)?;
        let _ = writeln!(csv, "{z:.16e},{:.16e}", r.value);
    }
    emit(out, "mlf.csv", &csv)
}

/// Tabulates the eigenstructure of one problem kind: CSV columns index,
/// family, k, wavenumber, lambda.
pub fn cmd_basis(kind: &str, eps: f64, n: u32, out: Option<&Path>) -> Result<(), CliError> {
    let kind = parse_kind(kind)?;
    if n < 1 {
        return Err(CliError::config("truncation order n must be >= 1"));
    }
    let mut csv = String::from("index,family,k,wavenumber,lambda\n");
    for (i, mode) in modes_through_order(kind, n).iter().enumerate() {
        let lambda = eigenvalue(*mode, eps).map_err(|e| CliError::config(e.to_string()))?;
        let _ = writeln!(
            csv,
            "{i},{},{},{:.16e},{lambda:.16e}",
            parity_name(mode.parity),
            mode.k,
            mode.wavenumber()
        );
    }
    emit(out, "basis.csv", &csv)
}

/// Tabulates the two-point kernels: CSV columns t, c, s.
pub fn cmd_kernel(alpha: f64, mu: f64, ts: &str, out: Option<&Path>) -> Result<(), CliError> {
    let params = KernelParams::new(alpha, mu)?;
    let kernel = Kernel::new(params)?;
    let ts = parse_list(ts, "t")?;
    let mut csv = String::from("t,c,s\n");
    for t in ts {
        if !(0.0..=1.0).contains(&t) {
            return Err(CliError::config(format!("t must lie in [0, 1], got {t}")));
        }
        let _ = writeln!(csv, "{t:.16e},{:.16e},{:.16e}", kernel.c(t)?, kernel.s(t)?);
    }
    emit(out, "kernel.csv", &csv)
}
