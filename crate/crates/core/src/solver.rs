//! Series solution of the boundary value problems on the rectangle
//! (0,1) x (-pi, pi): expand the boundary data over the eigenfunction
//! family of the problem kind, solve the modal two-point problem for
//! each mode through the fractional kernels, and sum
//!
//!   u(x, y) = sum over modes of [phi_m C_m(x) + psi_m S_m(x)] Y_m(y),
//!
//! where C_m, S_m are the kernel pair at mu_m = sqrt(lambda_m + c^2).
//! A mode with mu = 0 (the constant mode when c = 0) degenerates to the
//! profile (1 - x^alpha) phi_0 + x^alpha psi_0, which is exactly the
//! kernels' own mu -> 0 limit, so every mode flows through the same
//! code path.
//!
//! Summation runs in fixed interleaved mode order with compensated
//! accumulation, so results are bitwise identical across thread counts.

use std::collections::hash_map::DefaultHasher;
use std::f64::consts::PI;
use std::hash::{Hash, Hasher};

use rayon::prelude::*;
use thiserror::Error;

use crate::boundary_data::{
    compatibility_check, fourier_coefficient, BoundaryError, BoundaryFunction, QuadratureSpec,
};
use crate::frac_kernels::{solve_two_point, KernelError, KernelParams, TwoPointSolution};
use crate::mittag_leffler::{REL_TOL_MAX, REL_TOL_MIN};
use crate::num_util::NeumaierSum;
use crate::spectral_basis::{
    eigenfunction, modes_through_order, mu_of_mode, BasisError, ModeIndex, ProblemKind,
};

/// Slack accepted on the rectangle boundary before DomainError fires;
/// x is clamped back into [0, 1] afterwards for the kernels.
const X_SLACK: f64 = 1e-12;
const Y_SLACK: f64 = 1e-9;

#[derive(Debug, Error)]
pub enum SolverError {
    #[error("invalid problem: {0}")]
    InvalidSpec(String),
    #[error("boundary data incompatible with the problem kind: {0}")]
    CompatibilityFailure(String),
    #[error("point ({x}, {y}) lies outside [0,1] x [-pi,pi]")]
    DomainError { x: f64, y: f64 },
    #[error("mode {0} is not part of this solution")]
    UnknownMode(String),
    #[error("malformed field data: {0}")]
    BadField(String),
    #[error(transparent)]
    Kernel(#[from] KernelError),
    #[error(transparent)]
    Boundary(#[from] BoundaryError),
    #[error(transparent)]
    Basis(#[from] BasisError),
}

/// What to do when the boundary data fails its endpoint compatibility
/// check: refuse to assemble, or record a warning and continue.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CompatPolicy {
    Enforce,
    Warn,
}

/// Complete description of one boundary value problem instance.
#[derive(Clone, Debug)]
pub struct ProblemSpec {
    pub kind: ProblemKind,
    /// Fractional order of the Caputo derivative pair in x, in (0, 1].
    pub alpha: f64,
    /// Involution coupling strength, |eps| < 1.
    pub eps: f64,
    /// Zeroth-order coefficient; enters the modal frequencies as c^2.
    pub c: f64,
    /// Data on the x = 0 edge.
    pub phi: BoundaryFunction,
    /// Data on the x = 1 edge.
    pub psi: BoundaryFunction,
    /// Truncation order: every mode with k <= n in both parity branches.
    pub n: u32,
    pub quad: QuadratureSpec,
    pub compat_tol: f64,
    pub compat_policy: CompatPolicy,
}

impl ProblemSpec {
    /// Spec with the quadrature sized for its own truncation order and
    /// warning-level compatibility checks at 1e-8.
    pub fn new(
        kind: ProblemKind,
        alpha: f64,
        eps: f64,
        c: f64,
        phi: BoundaryFunction,
        psi: BoundaryFunction,
        n: u32,
    ) -> Self {
        ProblemSpec {
            kind,
            alpha,
            eps,
            c,
            phi,
            psi,
            n,
            quad: QuadratureSpec::for_max_wavenumber(n as f64),
            compat_tol: 1e-8,
            compat_policy: CompatPolicy::Warn,
        }
    }

    pub fn validate(&self) -> Result<(), SolverError> {
        if !(self.alpha > 0.0 && self.alpha <= 1.0) {
            return Err(SolverError::InvalidSpec(format!(
                "alpha must lie in (0, 1], got {}",
                self.alpha
            )));
        }
        if !(self.eps.abs() < 1.0) {
            return Err(SolverError::InvalidSpec(format!(
                "eps must satisfy |eps| < 1, got {}",
                self.eps
            )));
        }
        if !self.c.is_finite() {
            return Err(SolverError::InvalidSpec(format!(
                "c must be finite, got {}",
                self.c
            )));
        }
        if self.n < 1 {
            return Err(SolverError::InvalidSpec(
                "truncation order n must be >= 1".into(),
            ));
        }
        if !(self.compat_tol > 0.0) {
            return Err(SolverError::InvalidSpec(format!(
                "compatibility tolerance must be positive, got {}",
                self.compat_tol
            )));
        }
        Ok(())
    }

    /// Stable hex digest of every solution-determining input, carried
    /// into Field metadata so artifacts can be traced to their problem.
    pub fn fingerprint(&self) -> String {
        let canon = format!(
            "{}|alpha={:.17e}|eps={:.17e}|c={:.17e}|n={}|quad={}x{}|phi={}|psi={}",
            self.kind,
            self.alpha,
            self.eps,
            self.c,
            self.n,
            self.quad.panels,
            self.quad.nodes_per_panel,
            self.phi.describe(),
            self.psi.describe(),
        );
        let mut h = DefaultHasher::new();
        canon.hash(&mut h);
        format!("{:016x}", h.finish())
    }
}

/// One term of the series: the mode, its frequency, the boundary
/// coefficients, and the solved modal two-point profile.
#[derive(Clone, Copy, Debug)]
pub struct ModeRecord {
    pub mode: ModeIndex,
    pub mu: f64,
    pub phi_coeff: f64,
    pub psi_coeff: f64,
    profile: TwoPointSolution,
}

impl ModeRecord {
    /// Modal profile phi_m C(x) + psi_m S(x), or its mu = 0 degenerate
    /// form (1 - x^alpha) phi_m + x^alpha psi_m.
    pub fn profile_at(&self, x: f64) -> Result<f64, SolverError> {
        Ok(self.profile.eval(x)?)
    }

    /// True on the constant mode with c = 0, where the two-point system
    /// loses its Mittag-Leffler structure.
    pub fn is_degenerate(&self) -> bool {
        self.mu == 0.0
    }

    pub fn profile(&self) -> &TwoPointSolution {
        &self.profile
    }
}

/// Assembled truncated series solution. Immutable; evaluation never
/// mutates shared state, so it is safe to share across threads.
#[derive(Clone, Debug)]
pub struct Solution {
    spec: ProblemSpec,
    records: Vec<ModeRecord>,
    warnings: Vec<String>,
}

pub fn assemble(spec: ProblemSpec) -> Result<Solution, SolverError> {
    spec.validate()?;
    let report = compatibility_check(&spec.phi, &spec.psi, spec.kind, spec.compat_tol)?;
    let mut warnings = Vec::new();
    if !report.pass() {
        let failing: Vec<String> = report
            .checks
            .iter()
            .filter(|c| !c.pass)
            .map(|c| format!("{} (mismatch {:.3e})", c.label, c.mismatch))
            .collect();
        let msg = failing.join("; ");
        match spec.compat_policy {
            CompatPolicy::Enforce => return Err(SolverError::CompatibilityFailure(msg)),
            CompatPolicy::Warn => warnings.push(format!("compatibility: {msg}")),
        }
    }

    let list = modes_through_order(spec.kind, spec.n);
    let built: Vec<Result<ModeRecord, SolverError>> = list
        .par_iter()
        .map(|&mode| {
            let phi_coeff = fourier_coefficient(&spec.phi, mode, spec.quad)?;
            let psi_coeff = fourier_coefficient(&spec.psi, mode, spec.quad)?;
            let mu = mu_of_mode(mode, spec.eps, spec.c)?;
            let params = KernelParams::new(spec.alpha, mu)?;
            let profile = solve_two_point(params, phi_coeff, psi_coeff)?;
            Ok(ModeRecord {
                mode,
                mu,
                phi_coeff,
                psi_coeff,
                profile,
            })
        })
        .collect();
    let records = built.into_iter().collect::<Result<Vec<_>, _>>()?;
    Ok(Solution {
        spec,
        records,
        warnings,
    })
}

impl Solution {
    pub fn spec(&self) -> &ProblemSpec {
        &self.spec
    }

    pub fn records(&self) -> &[ModeRecord] {
        &self.records
    }

    pub fn warnings(&self) -> &[String] {
        &self.warnings
    }

    /// The mu = 0 record, present only for the constant mode at c = 0.
    pub fn degenerate_mode(&self) -> Option<&ModeRecord> {
        self.records.iter().find(|r| r.is_degenerate())
    }

    /// Negative-control hook: returns the solution with one modal
    /// profile scaled, so the result no longer satisfies the equation or
    /// the x boundary data while every record stays well formed.
    #[doc(hidden)]
    pub fn with_scaled_mode(mut self, index: usize, factor: f64) -> Self {
        if let Some(r) = self.records.get_mut(index) {
            r.profile.a *= factor;
            r.profile.b *= factor;
        }
        self
    }

    fn check_point(&self, x: f64, y: f64) -> Result<(f64, f64), SolverError> {
        let ok_x = (-X_SLACK..=1.0 + X_SLACK).contains(&x);
        let ok_y = (-PI - Y_SLACK..=PI + Y_SLACK).contains(&y);
        if !ok_x || !ok_y {
            return Err(SolverError::DomainError { x, y });
        }
        Ok((x.clamp(0.0, 1.0), y))
    }

    /// Series value at one point, summed in fixed mode order with
    /// compensated accumulation.
    pub fn evaluate(&self, x: f64, y: f64) -> Result<f64, SolverError> {
        let (x, y) = self.check_point(x, y)?;
        let mut acc = NeumaierSum::new();
        for r in &self.records {
            acc.add(r.profile_at(x)? * eigenfunction(r.mode).eval(y));
        }
        Ok(acc.value())
    }

    /// Modal profile sampled on the given x nodes.
    pub fn modal_profile(&self, mode: ModeIndex, xs: &[f64]) -> Result<Vec<f64>, SolverError> {
        let rec = self
            .records
            .iter()
            .find(|r| r.mode == mode)
            .ok_or_else(|| SolverError::UnknownMode(format!("{mode:?}")))?;
        xs.iter().map(|&x| rec.profile_at(x)).collect()
    }

    /// Tensor-product evaluation on the uniform nx x ny grid over
    /// [0,1] x [-pi,pi], parallel over x rows. Each value is the same
    /// fixed-order compensated sum evaluate() produces, so the field is
    /// bitwise deterministic for any thread count.
    pub fn evaluate_grid(&self, nx: usize, ny: usize) -> Result<Field, SolverError> {
        if nx < 2 || ny < 2 {
            return Err(SolverError::InvalidSpec(format!(
                "grid needs at least 2 nodes per side, got {nx} x {ny}"
            )));
        }
        let xs = linspace(0.0, 1.0, nx);
        let ys = linspace(-PI, PI, ny);
        // Eigenfunction samples depend only on the column, profiles only
        // on the row; precompute the former, parallelize over the latter.
        let basis: Vec<Vec<f64>> = self
            .records
            .iter()
            .map(|r| {
                let f = eigenfunction(r.mode);
                ys.iter().map(|&y| f.eval(y)).collect()
            })
            .collect();
        let rows: Vec<Result<Vec<f64>, SolverError>> = xs
            .par_iter()
            .map(|&x| {
                let profs = self
                    .records
                    .iter()
                    .map(|r| r.profile_at(x))
                    .collect::<Result<Vec<f64>, _>>()?;
                Ok((0..ny)
                    .map(|iy| {
                        let mut acc = NeumaierSum::new();
                        for (p, b) in profs.iter().zip(&basis) {
                            acc.add(p * b[iy]);
                        }
                        acc.value()
                    })
                    .collect())
            })
            .collect();
        let mut values = Vec::with_capacity(nx * ny);
        for row in rows {
            values.extend(row?);
        }
        Ok(Field {
            xs,
            ys,
            values,
            spec_hash: self.spec.fingerprint(),
            n_modes: self.spec.n,
        })
    }
}

fn linspace(a: f64, b: f64, n: usize) -> Vec<f64> {
    (0..n)
        .map(|i| a + (b - a) * (i as f64 / (n - 1) as f64))
        .collect()
}

/// Solution values on a tensor grid, row-major with y fastest.
#[derive(Clone, Debug, PartialEq)]
pub struct Field {
    pub xs: Vec<f64>,
    pub ys: Vec<f64>,
    pub values: Vec<f64>,
    pub spec_hash: String,
    pub n_modes: u32,
}

impl Field {
    pub fn value(&self, ix: usize, iy: usize) -> f64 {
        self.values[ix * self.ys.len() + iy]
    }

    pub fn max_abs(&self) -> f64 {
        self.values.iter().fold(0.0, |m, v| m.max(v.abs()))
    }

    /// CSV serialization: '#' metadata preamble, header x,y,u, one row
    /// per grid point with y fastest. 17 significant digits, so values
    /// survive the round trip bit-exactly.
    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("# spec={}\n", self.spec_hash));
        out.push_str(&format!("# modes={}\n", self.n_modes));
        out.push_str("x,y,u\n");
        for (ix, x) in self.xs.iter().enumerate() {
            for (iy, y) in self.ys.iter().enumerate() {
                out.push_str(&format!("{x:.16e},{y:.16e},{:.16e}\n", self.value(ix, iy)));
            }
        }
        out
    }

    pub fn from_csv(text: &str) -> Result<Field, SolverError> {
        let mut spec_hash = None;
        let mut n_modes = None;
        let mut rows: Vec<(f64, f64, f64)> = Vec::new();
        let mut saw_header = false;
        for line in text.lines() {
            let line = line.trim();
            if line.is_empty() {
                continue;
            }
            if let Some(rest) = line.strip_prefix('#') {
                let rest = rest.trim();
                if let Some(v) = rest.strip_prefix("spec=") {
                    spec_hash = Some(v.to_string());
                } else if let Some(v) = rest.strip_prefix("modes=") {
                    n_modes = Some(v.parse::<u32>().map_err(|_| {
                        SolverError::BadField(format!("bad modes value {v:?}"))
                    })?);
                }
                continue;
            }
            if !saw_header {
                if line != "x,y,u" {
                    return Err(SolverError::BadField(format!(
                        "expected header x,y,u, got {line:?}"
                    )));
                }
                saw_header = true;
                continue;
            }
            let mut parts = line.split(',');
            let mut next = || -> Result<f64, SolverError> {
                parts
                    .next()
                    .ok_or_else(|| SolverError::BadField("short row".into()))?
                    .parse()
                    .map_err(|_| SolverError::BadField(format!("bad row {line:?}")))
            };
            rows.push((next()?, next()?, next()?));
        }
        if rows.is_empty() {
            return Err(SolverError::BadField("no data rows".into()));
        }
        let x0 = rows[0].0;
        let ny = rows.iter().take_while(|r| r.0 == x0).count();
        if ny < 2 || rows.len() % ny != 0 {
            return Err(SolverError::BadField(format!(
                "rows do not form a rectangular grid (ny = {ny}, total {})",
                rows.len()
            )));
        }
        let nx = rows.len() / ny;
        let ys: Vec<f64> = rows[..ny].iter().map(|r| r.1).collect();
        let mut xs = Vec::with_capacity(nx);
        for ix in 0..nx {
            let block = &rows[ix * ny..(ix + 1) * ny];
            xs.push(block[0].0);
            for (iy, r) in block.iter().enumerate() {
                if r.0 != block[0].0 || r.1 != ys[iy] {
                    return Err(SolverError::BadField(
                        "grid coordinates are not a consistent tensor product".into(),
                    ));
                }
            }
        }
        Ok(Field {
            xs,
            ys,
            values: rows.iter().map(|r| r.2).collect(),
            spec_hash: spec_hash
                .ok_or_else(|| SolverError::BadField("missing spec metadata".into()))?,
            n_modes: n_modes
                .ok_or_else(|| SolverError::BadField("missing modes metadata".into()))?,
        })
    }
}

/// Clamp helper for user-supplied tolerances fed to downstream checks.
pub fn clamp_rel_tol(tol: f64) -> f64 {
    tol.clamp(REL_TOL_MIN, REL_TOL_MAX)
}
