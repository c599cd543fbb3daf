//! Two-parameter Mittag-Leffler function E_{alpha,beta}(z) for real z.
//!
//! E_{alpha,beta}(z) = sum_{k >= 0} z^k / Gamma(alpha k + beta), an entire
//! function generalizing the exponential (alpha = beta = 1 gives e^z).
//!
//! Evaluation is regime-switched on w = |z|^(1/alpha), the natural growth
//! exponent (the largest series term is of order e^w):
//!
//! * z >= 0, w <= 40: direct compensated series. No cancellation occurs;
//!   accuracy is limited only by term rounding.
//! * z > 0, w > 40: exponential asymptotic form
//!   (1/alpha) z^((1-beta)/alpha) e^w minus an algebraic correction tail.
//! * z < 0, w <= 44: compensated f64 series first; if the alternating-sum
//!   cancellation makes its error estimate miss the requested tolerance,
//!   the same series is re-summed in double-double arithmetic.
//! * z < 0, beyond the series range and for 0 < alpha < 2: algebraic
//!   asymptotic tail -sum_k z^-k / Gamma(beta - alpha k). For alpha < 1
//!   this expansion is complete (no exponential contribution exists on the
//!   negative axis), yet its truncation floor behaves like a decaying
//!   exponential; from alpha = 0.83 up the error estimate charges that
//!   floor explicitly through the pair of exponential terms with real part
//!   w cos(pi/alpha) that the algebraic form drops. For alpha >= 2 the
//!   pair does not decay, so the negative axis is served by the series
//!   alone.
//!
//! Every result carries est_abs_error, an honest absolute error bound
//! combining truncation and a rounding model of the summation actually
//! performed. ml_eval accepts a candidate only when its estimate meets the
//! caller's relative tolerance, and otherwise reports the best candidate
//! inside a NonConvergent error rather than silently returning it: callers
//! that only need absolute accuracy (kernel assembly near its decayed end)
//! can still consume the carried value.

use std::cell::RefCell;
use std::collections::HashMap;
use std::f64::consts::PI;

use statrs::function::gamma::ln_gamma as ln_gamma_f64;
use thiserror::Error;

use crate::dd::{self, Dd};

/// Loosest relative tolerance ml_eval accepts; also the validity bar for
/// ml_asymptotic's regime check.
pub const REL_TOL_MAX: f64 = 1e-6;
/// Tightest relative tolerance ml_eval accepts.
pub const REL_TOL_MIN: f64 = 1e-14;
/// Default tolerance used by the CLI and the solver.
pub const DEFAULT_REL_TOL: f64 = 1e-12;

/// Growth exponents w = |z|^(1/alpha) up to which the series is summed.
/// The positive bound keeps the largest term around e^40 (no overflow
/// risk, rounding well under 1e-12 relative). The negative bound is where
/// double-double cancellation headroom (about 32 digits against severity
/// e^w near the axis) stops delivering 1e-11 relative accuracy.
const W_SERIES_POS: f64 = 40.0;
const W_SERIES_NEG: f64 = 44.0;
/// Asymptotic correction terms are capped here; beyond it the reflection
/// Gamma(1 - (beta - alpha k)) would overflow for the supported parameter
/// range, and for every argument this library meets the tail has either
/// converged or started growing long before.
const P_CAP: usize = 40;
const SERIES_CAP: usize = 2000;
const DD_SERIES_CAP: usize = 4000;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct MlParams {
    pub alpha: f64,
    pub beta: f64,
}

impl MlParams {
    pub fn new(alpha: f64, beta: f64) -> Result<Self, MlError> {
        let p = MlParams { alpha, beta };
        p.validate()?;
        Ok(p)
    }

    fn validate(&self) -> Result<(), MlError> {
        if !(self.alpha > 0.0) || !self.alpha.is_finite() {
            return Err(MlError::InvalidParams(format!(
                "alpha must be positive and finite, got {}",
                self.alpha
            )));
        }
        if self.alpha > 2.0 {
            return Err(MlError::InvalidParams(format!(
                "alpha = {} unsupported; this library covers alpha in (0, 2]",
                self.alpha
            )));
        }
        if !(self.beta > 0.0) || !self.beta.is_finite() {
            return Err(MlError::InvalidParams(format!(
                "beta must be positive and finite, got {}",
                self.beta
            )));
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Regime {
    Series,
    AsymptoticPositive,
    AsymptoticNegative,
}

#[derive(Clone, Copy, Debug)]
pub struct MlResult {
    pub value: f64,
    /// Absolute error bound: truncation plus a rounding model of the
    /// summation path that produced the value.
    pub est_abs_error: f64,
    pub regime: Regime,
    /// Cancellation severity max |partial sum| / |final sum| of the series
    /// path; 1.0 for asymptotic regimes.
    pub cancellation: f64,
}

#[derive(Debug, Error)]
pub enum MlError {
    #[error("invalid Mittag-Leffler parameters: {0}")]
    InvalidParams(String),
    #[error(
        "no expansion met the requested tolerance (best: value {}, est abs error {:.3e}, {} term cap)",
        best.value, best.est_abs_error, max_terms
    )]
    NonConvergent { best: MlResult, max_terms: usize },
    #[error("argument outside the expansion's validity region: {0}")]
    OutOfRegime(String),
}

/// 1/Gamma(x) for any real x, exactly 0 at the poles x = 0, -1, -2, ...
///
/// Negative arguments go through the reflection
/// 1/Gamma(x) = sin(pi x)/pi * Gamma(1 - x), with sin(pi x) reduced
/// argument-exactly so near-pole values stay fully accurate.
pub(crate) fn recip_gamma(x: f64) -> f64 {
    if x == 1.0 || x == 2.0 {
        return 1.0;
    }
    if x <= 0.0 && x == x.floor() {
        return 0.0;
    }
    if x > 0.0 {
        let lg = dd::ln_gamma(Dd::from_f64(x));
        if lg.hi > 745.0 {
            // Gamma overflows f64 here; the reciprocal underflows cleanly.
            return 0.0;
        }
        lg.neg().exp().to_f64()
    } else {
        // 1 - x is formed in double-double so the reflected ln Gamma sees
        // the exact argument; sin(pi x) stays f64 at ~1 ulp.
        let g = dd::ln_gamma(Dd::from_sum(1.0, -x)).exp();
        sin_pi(x) / PI * g.to_f64()
    }
}

/// sin(pi x) with the reduction x = n + r, |r| <= 1/2 done exactly in
/// floating point, so the result vanishes exactly at integers.
fn sin_pi(x: f64) -> f64 {
    let n = x.round();
    let r = x - n;
    let s = (PI * r).sin();
    if (n as i64) % 2 == 0 { s } else { -s }
}

fn trivial_at_zero(params: MlParams) -> MlResult {
    let value = recip_gamma(params.beta);
    MlResult {
        value,
        est_abs_error: 2.3e-16 * value.abs(),
        regime: Regime::Series,
        cancellation: 1.0,
    }
}

/// w = |z|^(1/alpha), the exponent the scaled routines divide out. Kernel
/// assembly recomputes it to cancel scalings exactly, so any change here
/// must keep the computation bitwise deterministic for equal inputs.
pub(crate) fn growth_exponent(params: MlParams, z: f64) -> f64 {
    z.abs().powf(1.0 / params.alpha)
}

/// Compensated f64 summation of the defining series. Terms are formed in
/// log space, term_k = exp(k ln|z| - ln Gamma(alpha k + beta)), so no
/// intermediate overflow occurs for the w ranges this is called with.
fn series_f64(params: MlParams, z: f64, rel_tol: f64, max_terms: usize) -> (MlResult, bool) {
    debug_assert!(z != 0.0);
    let ln_abs_z = z.abs().ln();
    let negative = z < 0.0;

    let mut sum = 0.0f64;
    let mut comp = 0.0f64;
    let mut sum_abs = 0.0f64;
    let mut max_partial = 0.0f64;
    let mut max_arg = 0.0f64;
    let mut last_mag = 0.0f64;
    let mut small_run = 0u32;
    let mut converged = false;

    for k in 0..max_terms {
        let kf = k as f64;
        let arg = kf * ln_abs_z - ln_gamma_f64(params.alpha * kf + params.beta);
        let mut term = arg.exp();
        if negative && k % 2 == 1 {
            term = -term;
        }
        let y = term - comp;
        let t = sum + y;
        comp = (t - sum) - y;
        sum = t;
        sum_abs += term.abs();
        max_partial = max_partial.max(sum.abs());
        max_arg = max_arg.max(arg.abs());
        last_mag = term.abs();

        if last_mag <= rel_tol * sum.abs().max(f64::MIN_POSITIVE) {
            small_run += 1;
            if small_run == 2 {
                converged = true;
                break;
            }
        } else {
            small_run = 0;
        }
        if last_mag < 1e-320 && k > 0 {
            converged = true;
            break;
        }
    }

    let est = last_mag + sum_abs * (max_arg + 30.0) * 1.1e-16;
    let cancellation = max_partial / sum.abs().max(f64::MIN_POSITIVE);
    (
        MlResult {
            value: sum,
            est_abs_error: est,
            regime: Regime::Series,
            cancellation,
        },
        converged,
    )
}

thread_local! {
    /// Per-(alpha, beta) table of ln Gamma(alpha k + beta) in double-double,
    /// grown on demand. The arguments repeat across every term of every
    /// evaluation with the same parameters, and the double-double ln Gamma
    /// dominates the cost of a term.
    static LN_GAMMA_DD_CACHE: RefCell<HashMap<(u64, u64), Vec<Dd>>> = RefCell::new(HashMap::new());
}

fn ln_gamma_dd_cached(params: MlParams, k: usize) -> Dd {
    LN_GAMMA_DD_CACHE.with(|cell| {
        let mut map = cell.borrow_mut();
        let table = map
            .entry((params.alpha.to_bits(), params.beta.to_bits()))
            .or_default();
        while table.len() <= k {
            let kf = table.len() as f64;
            let x = Dd::from_f64(params.alpha)
                .mul_f64(kf)
                .add_f64(params.beta);
            table.push(dd::ln_gamma(x));
        }
        table[k]
    })
}

/// Double-double re-summation of the series for cancelling negative
/// arguments. Runs to the double-double rounding floor regardless of the
/// caller's tolerance; the estimate reflects the ~1e-32 term error scale.
fn series_dd(params: MlParams, z: f64) -> MlResult {
    debug_assert!(z != 0.0);
    let ln_abs_z = Dd::from_f64(z.abs()).ln();
    let negative = z < 0.0;

    let mut sum = Dd::ZERO;
    let mut sum_abs = 0.0f64;
    let mut max_partial = 0.0f64;
    let mut max_arg = 0.0f64;
    let mut last_mag = 0.0f64;
    let mut small_run = 0u32;

    for k in 0..DD_SERIES_CAP {
        let arg = ln_abs_z.mul_f64(k as f64).sub(ln_gamma_dd_cached(params, k));
        let mut term = arg.exp();
        if negative && k % 2 == 1 {
            term = term.neg();
        }
        sum = sum.add(term);
        sum_abs += term.hi.abs();
        max_partial = max_partial.max(sum.hi.abs());
        max_arg = max_arg.max(arg.hi.abs());
        last_mag = term.hi.abs();

        if last_mag <= 1e-31 * sum.hi.abs().max(1e-300) {
            small_run += 1;
            if small_run == 2 {
                break;
            }
        } else {
            small_run = 0;
        }
    }

    let value = sum.to_f64();
    let est = last_mag + sum_abs * (max_arg * 1.1e-32 + 4.0e-31);
    MlResult {
        value,
        est_abs_error: est,
        regime: Regime::Series,
        cancellation: max_partial / value.abs().max(f64::MIN_POSITIVE),
    }
}

thread_local! {
    /// Per-(alpha, beta) table of 1/Gamma(beta - alpha k) for the algebraic
    /// tail, grown on demand. The arguments repeat across every evaluation
    /// with the same parameters, and the reflected double-double ln Gamma
    /// inside recip_gamma dominates the cost of a tail term.
    static RECIP_GAMMA_TAIL_CACHE: RefCell<HashMap<(u64, u64), Vec<f64>>> =
        RefCell::new(HashMap::new());
}

fn recip_gamma_tail_cached(params: MlParams, k: usize) -> f64 {
    RECIP_GAMMA_TAIL_CACHE.with(|cell| {
        let mut map = cell.borrow_mut();
        let table = map
            .entry((params.alpha.to_bits(), params.beta.to_bits()))
            .or_default();
        while table.len() <= k {
            let kf = table.len() as f64;
            table.push(recip_gamma(params.beta - params.alpha * kf));
        }
        table[k]
    })
}

/// k-th algebraic correction term -z^-k / Gamma(beta - alpha k), shared by
/// both asymptotic directions.
fn tail_term(params: MlParams, z: f64, k: usize) -> f64 {
    -z.powi(-(k as i32)) * recip_gamma_tail_cached(params, k)
}

/// Sums the algebraic correction tail. With p_fixed the sum runs exactly
/// that many terms; otherwise it stops at convergence or at divergence
/// onset, capped at P_CAP. Onset requires the term to rise above BOTH of
/// the two preceding magnitudes: the sine factor in 1/Gamma dips near zero
/// whenever alpha k crosses an integer, and a single-term dip followed by a
/// rebound to the still-decaying envelope is not divergence. Returns the
/// sum, the largest neglected term magnitude over the next eight indices
/// (a dip right after the stop must not understate the envelope), and the
/// index stopped at.
fn tail_sum(params: MlParams, z: f64, p_fixed: Option<usize>) -> (f64, f64, usize) {
    let cap = p_fixed.unwrap_or(P_CAP);
    let mut sum = 0.0f64;
    let mut prev_mag = f64::INFINITY;
    let mut prev2_mag = f64::INFINITY;
    let mut p_used = 0usize;

    for k in 1..=cap {
        let t = tail_term(params, z, k);
        let mag = t.abs();
        if p_fixed.is_none() && mag > 0.0 && mag > prev_mag && mag > prev2_mag {
            break;
        }
        sum += t;
        p_used = k;
        if mag > 0.0 {
            prev2_mag = prev_mag;
            prev_mag = mag;
            if p_fixed.is_none() && mag <= 1e-17 * sum.abs() {
                break;
            }
        }
    }

    let mut neglected = 0.0f64;
    for j in (p_used + 1)..=(p_used + 8) {
        neglected = neglected.max(tail_term(params, z, j).abs());
    }
    (sum, neglected, p_used)
}

/// Asymptotic form for z < 0 (algebraic tail only). Caller guarantees
/// alpha < 2. For alpha >= 0.83 the estimate charges the dropped
/// exponentially small pair with real exponent w cos(pi/alpha) < 0; for
/// smaller alpha that contribution lies below the other estimate terms at
/// every width this expansion is selected for.
fn asymptotic_negative(params: MlParams, z: f64, p_fixed: Option<usize>) -> MlResult {
    debug_assert!(z < 0.0 && params.alpha < 2.0);
    let (sum, neglected, _) = tail_sum(params, z, p_fixed);
    let mut est = neglected + sum.abs() * 1e-15;
    if params.alpha >= 0.83 {
        let w = growth_exponent(params, z);
        let decay = (w * (PI / params.alpha).cos()).exp();
        est += 2.0 * (-z).powf((1.0 - params.beta) / params.alpha) * decay;
    }
    MlResult {
        value: sum,
        est_abs_error: est,
        regime: Regime::AsymptoticNegative,
        cancellation: 1.0,
    }
}

/// Asymptotic form for z > 0: (1/alpha) z^((1-beta)/alpha) e^w plus the
/// algebraic tail. Saturates to +infinity when e^w overflows.
fn asymptotic_positive(params: MlParams, z: f64, p_fixed: Option<usize>) -> MlResult {
    debug_assert!(z > 0.0);
    let w = growth_exponent(params, z);
    let ln_pref = -params.alpha.ln() + (1.0 - params.beta) / params.alpha * z.ln() + w;
    if ln_pref > 709.7 {
        return MlResult {
            value: f64::INFINITY,
            est_abs_error: f64::INFINITY,
            regime: Regime::AsymptoticPositive,
            cancellation: 1.0,
        };
    }
    let prefactor = ln_pref.exp();
    let (tail, neglected, _) = tail_sum(params, z, p_fixed);
    let value = prefactor + tail;
    let est = neglected + value.abs() * (w + 10.0) * 2.2e-16;
    MlResult {
        value,
        est_abs_error: est,
        regime: Regime::AsymptoticPositive,
        cancellation: 1.0,
    }
}

fn meets(result: &MlResult, rel_tol: f64) -> bool {
    result.value.is_finite() && result.est_abs_error <= rel_tol * result.value.abs()
}

fn check_rel_tol(rel_tol: f64) -> Result<(), MlError> {
    if !(REL_TOL_MIN..=REL_TOL_MAX).contains(&rel_tol) {
        return Err(MlError::InvalidParams(format!(
            "rel_tol must lie in [{REL_TOL_MIN:e}, {REL_TOL_MAX:e}], got {rel_tol:e}"
        )));
    }
    Ok(())
}

fn check_argument(z: f64) -> Result<(), MlError> {
    if !z.is_finite() {
        return Err(MlError::InvalidParams(format!(
            "argument must be finite, got {z}"
        )));
    }
    Ok(())
}

/// Evaluate E_{alpha,beta}(z) to the requested relative tolerance,
/// choosing the expansion automatically.
///
/// On success the regime field records which expansion produced the value.
/// If no expansion can certify the tolerance (deep negative arguments with
/// alpha close to or above 1, where the function is exponentially small),
/// the NonConvergent error carries the best candidate, whose est_abs_error
/// is still an honest absolute bound.
pub fn ml_eval(params: MlParams, z: f64, rel_tol: f64) -> Result<MlResult, MlError> {
    params.validate()?;
    check_rel_tol(rel_tol)?;
    check_argument(z)?;
    if z == 0.0 {
        return Ok(trivial_at_zero(params));
    }

    let w = growth_exponent(params, z);
    // The series runs tighter than the acceptance bar so its truncation
    // part cannot eat the whole budget.
    let series_tol = (rel_tol * 0.1).max(REL_TOL_MIN * 0.1);

    if z > 0.0 {
        if w <= W_SERIES_POS {
            let (result, converged) = series_f64(params, z, series_tol, SERIES_CAP);
            if converged && meets(&result, rel_tol) {
                return Ok(result);
            }
            let asym = asymptotic_positive(params, z, None);
            if meets(&asym, rel_tol) {
                return Ok(asym);
            }
            let best = if result.est_abs_error <= asym.est_abs_error {
                result
            } else {
                asym
            };
            return Err(MlError::NonConvergent {
                best,
                max_terms: SERIES_CAP,
            });
        }
        let asym = asymptotic_positive(params, z, None);
        if asym.value.is_infinite() || meets(&asym, rel_tol) {
            return Ok(asym);
        }
        return Err(MlError::NonConvergent {
            best: asym,
            max_terms: SERIES_CAP,
        });
    }

    // z < 0: the cheapest adequate expansion wins. Every candidate is
    // gated on its own honest error estimate, so the preference order
    // trades time, never accuracy: algebraic asymptotics cost a few
    // dozen terms and are consulted first wherever their tail could
    // certify, the f64 series next, and the double-double series is the
    // expensive last resort for the cancellation band.
    let mut best: Option<MlResult> = None;
    let consider = |candidate: MlResult, best: &mut Option<MlResult>| -> bool {
        let better = match best {
            Some(b) => candidate.est_abs_error < b.est_abs_error,
            None => true,
        };
        if better {
            *best = Some(candidate);
        }
        meets(&candidate, rel_tol)
    };

    if params.alpha < 2.0 && w >= 10.0 {
        let result = asymptotic_negative(params, z, None);
        if consider(result, &mut best) {
            return Ok(result);
        }
    }
    if w <= W_SERIES_NEG {
        let (result, converged) = series_f64(params, z, series_tol, SERIES_CAP);
        if converged && consider(result, &mut best) {
            return Ok(result);
        }
        let result = series_dd(params, z);
        if consider(result, &mut best) {
            return Ok(result);
        }
    }
    Err(MlError::NonConvergent {
        best: best.expect("at least one expansion attempted"),
        max_terms: DD_SERIES_CAP,
    })
}

/// Direct compensated summation of the defining series, stopping once two
/// consecutive terms fall below rel_tol times the running partial sum.
///
/// The result's cancellation field reports max |partial| / |final|; for
/// strongly cancelling arguments the value is returned as summed, with the
/// damage reflected honestly in est_abs_error.
pub fn ml_series(
    params: MlParams,
    z: f64,
    rel_tol: f64,
    max_terms: usize,
) -> Result<MlResult, MlError> {
    params.validate()?;
    check_rel_tol(rel_tol)?;
    check_argument(z)?;
    if max_terms == 0 {
        return Err(MlError::InvalidParams("max_terms must be >= 1".into()));
    }
    if z == 0.0 {
        return Ok(trivial_at_zero(params));
    }
    let (result, converged) = series_f64(params, z, rel_tol, max_terms);
    if converged {
        Ok(result)
    } else {
        Err(MlError::NonConvergent {
            best: result,
            max_terms,
        })
    }
}

/// Asymptotic expansion with exactly p correction terms.
///
/// For z > 0 this is the exponential form; for z < 0 the algebraic tail,
/// valid only for alpha < 2 (at alpha >= 2 the dropped exponential pair no
/// longer decays along the negative axis and the call reports OutOfRegime).
/// Also reports OutOfRegime when the first neglected term cannot certify
/// the loosest supported tolerance, so callers cannot mistake a divergent
/// truncation for a value.
pub fn ml_asymptotic(params: MlParams, z: f64, p: usize) -> Result<MlResult, MlError> {
    params.validate()?;
    check_argument(z)?;
    if p == 0 {
        return Err(MlError::InvalidParams("p must be >= 1".into()));
    }
    if p > 60 {
        return Err(MlError::InvalidParams(
            "p > 60 would overflow the reflection Gamma(1 - beta + alpha k)".into(),
        ));
    }
    if z == 0.0 {
        return Err(MlError::OutOfRegime(
            "asymptotic expansion undefined at z = 0".into(),
        ));
    }
    let result = if z > 0.0 {
        asymptotic_positive(params, z, Some(p))
    } else {
        if params.alpha >= 2.0 {
            return Err(MlError::OutOfRegime(format!(
                "for alpha = {} >= 2 the negative axis carries a non-decaying \
                 oscillatory exponential; the algebraic expansion does not apply",
                params.alpha
            )));
        }
        asymptotic_negative(params, z, Some(p))
    };
    if result.value.is_infinite() {
        return Ok(result);
    }
    if !meets(&result, REL_TOL_MAX) {
        return Err(MlError::OutOfRegime(format!(
            "truncation estimate {:.3e} exceeds {:e} of |value| {:.3e} at z = {z}",
            result.est_abs_error,
            REL_TOL_MAX,
            result.value.abs()
        )));
    }
    Ok(result)
}

/// Scaled evaluation e^(-z^(1/alpha)) E_{alpha,beta}(z) for z >= 0.
///
/// The scaled function stays of moderate size for every z >= 0 (it tends
/// to 1/alpha times z^((1-beta)/alpha) as z grows), which is what kernel
/// ratios need where E itself overflows. The series route scales each term
/// inside the exponential, so no intermediate is large either.
pub fn ml_scaled_pos(params: MlParams, z: f64) -> Result<MlResult, MlError> {
    params.validate()?;
    check_argument(z)?;
    if z < 0.0 {
        return Err(MlError::InvalidParams(format!(
            "ml_scaled_pos requires z >= 0, got {z}"
        )));
    }
    if z == 0.0 {
        return Ok(trivial_at_zero(params));
    }

    let w = growth_exponent(params, z);
    if w <= W_SERIES_POS {
        let ln_z = z.ln();
        let mut sum = 0.0f64;
        let mut comp = 0.0f64;
        let mut sum_abs = 0.0f64;
        let mut max_arg = 0.0f64;
        let mut last_mag = 0.0f64;
        let mut small_run = 0u32;
        for k in 0..SERIES_CAP {
            let kf = k as f64;
            let arg = kf * ln_z - ln_gamma_f64(params.alpha * kf + params.beta) - w;
            let term = arg.exp();
            let y = term - comp;
            let t = sum + y;
            comp = (t - sum) - y;
            sum = t;
            sum_abs += term;
            max_arg = max_arg.max(arg.abs());
            last_mag = term;
            if term <= 1e-17 * sum.max(f64::MIN_POSITIVE) {
                small_run += 1;
                if small_run == 2 {
                    break;
                }
            } else {
                small_run = 0;
            }
        }
        let est = last_mag + sum_abs * (max_arg + w + 30.0) * 1.1e-16;
        return Ok(MlResult {
            value: sum,
            est_abs_error: est,
            regime: Regime::Series,
            cancellation: 1.0,
        });
    }

    let ln_pref = -params.alpha.ln() + (1.0 - params.beta) / params.alpha * z.ln();
    let prefactor = ln_pref.exp();
    let (tail, neglected, _) = tail_sum(params, z, None);
    let damp = (-w).exp();
    let value = prefactor + damp * tail;
    let est = damp * neglected + value.abs() * (ln_pref.abs() + 5.0) * 2.2e-16;
    Ok(MlResult {
        value,
        est_abs_error: est,
        regime: Regime::AsymptoticPositive,
        cancellation: 1.0,
    })
}
