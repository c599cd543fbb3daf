//! Interpolation kernels of the fractional two-point problem on (0, 1).
//!
//! For the composed Caputo equation D^alpha(D^alpha y)(t) = mu^2 y(t) with
//! alpha in (0, 1] and mu >= 0, the fundamental pair is
//! E_{alpha,1}(mu t^alpha) and E_{alpha,1}(-mu t^alpha). This module
//! provides the combination interpolating prescribed endpoint values
//! y(0) = a, y(1) = b as y(t) = a C(t) + b S(t), with (writing E for
//! E_{alpha,1})
//!
//!   C(t) = [E(mu) E(-mu t^alpha) - E(-mu) E(mu t^alpha)] / (E(mu) - E(-mu))
//!   S(t) = [E(mu t^alpha) - E(-mu t^alpha)] / (E(mu) - E(-mu))
//!        = t^alpha E_{2a,a+1}(mu^2 t^{2 alpha}) / E_{2a,a+1}(mu^2)
//!
//! where E_{2a,a+1} abbreviates E_{2 alpha, alpha + 1}. At alpha = 1 the
//! pair reduces to sinh(mu(1-t))/sinh(mu) and sinh(mu t)/sinh(mu); for
//! every mu >= 0 both kernels take values in [0, 1], C falls from 1 to 0
//! and S rises from 0 to 1. At mu = 0 the problem degenerates and the
//! analytic limit pair 1 - t^alpha, t^alpha takes over.
//!
//! Direct evaluation of the quotients breaks long before the formulas do:
//! E(mu) overflows f64 once mu^(1/alpha) exceeds ~709, and the differences
//! cancel catastrophically. Everything here is therefore assembled from
//! exponentially scaled evaluations e^(-w) E(.) combined through exact
//! exponent differences, with the denominator taken from the odd-part
//! identity E(mu) - E(-mu) = 2 mu E_{2a,a+1}(mu^2), whose right side is a
//! single positive quantity for every mu > 0. No intermediate overflows
//! or cancels at any mu.

use thiserror::Error;

use crate::mittag_leffler::{
    growth_exponent, ml_eval, ml_scaled_pos, MlError, MlParams, DEFAULT_REL_TOL,
};

/// Largest estimated absolute error at which a best-effort Mittag-Leffler
/// value is still consumed after relative certification fails. Relative
/// certification is impossible where E_{alpha,1}(-z) decays below the
/// evaluator's absolute floor; kernel assembly divides such values by a
/// denominator near 1 and multiplies them by factors at most 1, so an
/// absolute bound at this floor keeps every kernel value an order of
/// magnitude inside its 1e-9 contract.
const BEST_EFFORT_ABS_FLOOR: f64 = 1e-10;

/// Below this mu the C numerator would cancel to roundoff (its scale is
/// 2 mu (1 - t^alpha) / Gamma(alpha + 1)), while the limit pair deviates
/// from the exact kernels by O(mu^2). The crossover keeps the absolute
/// error under ~5e-11 on both sides.
const MU_LIMIT_PAIR: f64 = 3e-6;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct KernelParams {
    /// Caputo order of each factor of the composed operator, in (0, 1].
    pub alpha: f64,
    /// Modal frequency, >= 0.
    pub mu: f64,
}

impl KernelParams {
    pub fn new(alpha: f64, mu: f64) -> Result<Self, KernelError> {
        let p = KernelParams { alpha, mu };
        p.validate()?;
        Ok(p)
    }

    fn validate(&self) -> Result<(), KernelError> {
        if !(self.alpha > 0.0 && self.alpha <= 1.0) {
            return Err(KernelError::InvalidParams(format!(
                "alpha must lie in (0, 1], got {}",
                self.alpha
            )));
        }
        if !(self.mu >= 0.0) || !self.mu.is_finite() {
            return Err(KernelError::InvalidParams(format!(
                "mu must be finite and >= 0, got {}",
                self.mu
            )));
        }
        Ok(())
    }
}

#[derive(Debug, Error)]
pub enum KernelError {
    #[error("invalid kernel parameters: {0}")]
    InvalidParams(String),
    #[error("kernel argument t = {0} outside [0, 1]")]
    DomainError(f64),
    #[error("coefficient system is singular: {0}")]
    DegenerateSystem(String),
    #[error("kernel evaluation failed: {0}")]
    Evaluation(#[from] MlError),
}

/// E_{alpha,1} on the closed negative axis at the default tolerance,
/// consuming a best-effort candidate within BEST_EFFORT_ABS_FLOOR when the
/// value is too small for relative certification.
fn eval_decaying(p: MlParams, z: f64) -> Result<f64, KernelError> {
    match ml_eval(p, z, DEFAULT_REL_TOL) {
        Ok(r) => Ok(r.value),
        Err(MlError::NonConvergent { best, .. })
            if best.est_abs_error <= BEST_EFFORT_ABS_FLOOR =>
        {
            Ok(best.value)
        }
        Err(e) => Err(KernelError::Evaluation(e)),
    }
}

/// Evaluator for C and S at fixed parameters.
///
/// Construction performs the three mu-level Mittag-Leffler evaluations the
/// formulas share; each kernel value afterwards costs at most two more, so
/// t-sweeps should reuse one instance.
#[derive(Clone, Copy, Debug)]
pub struct Kernel {
    params: KernelParams,
    /// Exponent of E(mu): mu^(1/alpha) as the scaled evaluator computes it.
    w1: f64,
    /// Exponent of E_{2a,a+1}(mu^2): (mu^2)^(1/(2 alpha)). Mathematically
    /// equal to w1, but kept as its own float so that every exponent handed
    /// to exp() is a difference in which the powf rounding cancels exactly.
    w2: f64,
    /// e^(-w1) E_{alpha,1}(mu).
    scaled1_mu: f64,
    /// e^(-w2) E_{2a,a+1}(mu^2).
    scaled2_mu2: f64,
    /// E_{alpha,1}(-mu).
    e_neg_mu: f64,
    /// 1 - E(-mu)/E(mu) via the odd-part identity, which vanishes linearly
    /// as mu -> 0 instead of cancelling. Exactly 0 at mu = 0, where the
    /// kernel formulas are replaced by their analytic limits.
    den: f64,
}

impl Kernel {
    pub fn new(params: KernelParams) -> Result<Self, KernelError> {
        params.validate()?;
        let KernelParams { alpha, mu } = params;
        let p1 = MlParams { alpha, beta: 1.0 };
        let p2 = MlParams {
            alpha: 2.0 * alpha,
            beta: alpha + 1.0,
        };
        let w1 = growth_exponent(p1, mu);
        let w2 = growth_exponent(p2, mu * mu);
        let scaled1_mu = ml_scaled_pos(p1, mu)?.value;
        let scaled2_mu2 = ml_scaled_pos(p2, mu * mu)?.value;
        let e_neg_mu = eval_decaying(p1, -mu)?;
        debug_assert!(scaled1_mu > 0.0 && scaled2_mu2 > 0.0);
        let den = 2.0 * mu * scaled2_mu2 * (w2 - w1).exp() / scaled1_mu;
        Ok(Kernel {
            params,
            w1,
            w2,
            scaled1_mu,
            scaled2_mu2,
            e_neg_mu,
            den,
        })
    }

    pub fn params(&self) -> KernelParams {
        self.params
    }

    /// C(t): the kernel carrying the t = 0 boundary value, equal to 1
    /// there and 0 at t = 1.
    pub fn c(&self, t: f64) -> Result<f64, KernelError> {
        check_t(t)?;
        let KernelParams { alpha, mu } = self.params;
        let ta = t.powf(alpha);
        if mu <= MU_LIMIT_PAIR {
            return Ok(1.0 - ta);
        }
        let p1 = MlParams { alpha, beta: 1.0 };
        let zt = mu * ta;
        let e_neg_t = eval_decaying(p1, -zt)?;
        let scaled1_t = ml_scaled_pos(p1, zt)?.value;
        // E(mu t^alpha)/E(mu) assembled in scaled form; the exponent is an
        // exact float difference, <= 0, so exp never overflows.
        let r = scaled1_t / self.scaled1_mu * (growth_exponent(p1, zt) - self.w1).exp();
        Ok((e_neg_t - self.e_neg_mu * r) / self.den)
    }

    /// S(t): the kernel carrying the t = 1 boundary value, equal to 0 at
    /// t = 0 and 1 at t = 1.
    pub fn s(&self, t: f64) -> Result<f64, KernelError> {
        check_t(t)?;
        let KernelParams { alpha, mu } = self.params;
        let ta = t.powf(alpha);
        let p2 = MlParams {
            alpha: 2.0 * alpha,
            beta: alpha + 1.0,
        };
        let zt = mu * ta;
        // At mu = 0 both the scaled ratio and the exponent collapse to 1,
        // leaving exactly the limit kernel t^alpha; no separate branch.
        let scaled2_t = ml_scaled_pos(p2, zt * zt)?.value;
        let ratio = scaled2_t / self.scaled2_mu2;
        Ok(ta * ratio * (growth_exponent(p2, zt * zt) - self.w2).exp())
    }
}

fn check_t(t: f64) -> Result<(), KernelError> {
    if !(t >= 0.0 && t <= 1.0) {
        return Err(KernelError::DomainError(t));
    }
    Ok(())
}

/// One-shot C(t). Sweeps over t should construct a Kernel once instead.
pub fn kernel_c(params: KernelParams, t: f64) -> Result<f64, KernelError> {
    Kernel::new(params)?.c(t)
}

/// One-shot S(t). Sweeps over t should construct a Kernel once instead.
pub fn kernel_s(params: KernelParams, t: f64) -> Result<f64, KernelError> {
    Kernel::new(params)?.s(t)
}

/// Coefficients (D1, D2) of the fundamental-pair representation
/// y(t) = D1 E_{alpha,1}(-mu t^alpha) + D2 E_{alpha,1}(mu t^alpha)
/// interpolating y(0) = a, y(1) = b.
///
/// Eliminating the endpoint conditions gives
/// D2 = (b - a E(-mu)) / (E(mu) - E(-mu)) and D1 = a - D2, with the
/// denominator difference evaluated through the odd-part identity
/// E(mu) - E(-mu) = 2 mu E_{2a,a+1}(mu^2), strictly positive for mu > 0.
/// At mu = 0 the pair collapses to a single function and the system is
/// degenerate.
pub fn general_coefficients(
    params: KernelParams,
    a: f64,
    b: f64,
) -> Result<(f64, f64), KernelError> {
    params.validate()?;
    check_data(a, b)?;
    if params.mu == 0.0 {
        return Err(KernelError::DegenerateSystem(
            "at mu = 0 both fundamental solutions are constant 1; only a = b data is representable"
                .into(),
        ));
    }
    let k = Kernel::new(params)?;
    // Dividing by E(mu) - E(-mu) = 2 mu scaled2 e^{w2} in scaled form: for
    // huge mu the e^{-w2} factor underflows and D2 goes to 0 cleanly where
    // E(mu) itself would overflow.
    let d2 = (b - a * k.e_neg_mu) * (-k.w2).exp() / (2.0 * params.mu * k.scaled2_mu2);
    Ok((a - d2, d2))
}

/// Solution of the two-point problem y(0) = a, y(1) = b.
#[derive(Clone, Copy, Debug)]
pub struct TwoPointSolution {
    kernel: Kernel,
    pub a: f64,
    pub b: f64,
}

impl TwoPointSolution {
    pub fn params(&self) -> KernelParams {
        self.kernel.params()
    }

    /// y(t) = a C(t) + b S(t).
    pub fn eval(&self, t: f64) -> Result<f64, KernelError> {
        Ok(self.a * self.kernel.c(t)? + self.b * self.kernel.s(t)?)
    }
}

pub fn solve_two_point(
    params: KernelParams,
    a: f64,
    b: f64,
) -> Result<TwoPointSolution, KernelError> {
    check_data(a, b)?;
    Ok(TwoPointSolution {
        kernel: Kernel::new(params)?,
        a,
        b,
    })
}

fn check_data(a: f64, b: f64) -> Result<(), KernelError> {
    if !a.is_finite() || !b.is_finite() {
        return Err(KernelError::InvalidParams(format!(
            "boundary data must be finite, got a = {a}, b = {b}"
        )));
    }
    Ok(())
}
