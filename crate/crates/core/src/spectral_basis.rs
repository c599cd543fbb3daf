//! Eigenstructure of the involution-perturbed spectral problem on
//! (-pi, pi): Y''(y) - eps Y''(-y) + lambda Y(y) = 0 under one of four
//! boundary-condition families.
//!
//! Reflection splits the problem by parity: sine modes are odd, so the
//! involution term adds eps times their own second derivative and the
//! eigenvalue picks up the factor (1 + eps); cosine modes are even and
//! pick up (1 - eps). The trigonometric wavenumbers are the classical
//! ones of each family:
//!
//!   family        sine modes        cosine modes
//!   Dirichlet     k,     k >= 1     k - 1/2, k >= 1
//!   Neumann       k + 1/2, k >= 0   k,       k >= 0
//!   Periodic      k,     k >= 1     k,       k >= 0
//!   AntiPeriodic  k + 1/2, k >= 0   k + 1/2, k >= 0
//!
//! with eigenvalue = factor * wavenumber^2, nonnegative for |eps| < 1.
//! Functions are L2(-pi, pi)-normalized: every nonconstant mode has
//! integral of its square equal to pi, the constant mode 2 pi, so
//! norm_const is 1/sqrt(pi), or 1/sqrt(2 pi) for the constant. Each
//! family is complete and orthonormal; the Gram checks live with the
//! quadrature utilities.

use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ProblemKind {
    /// Y(-pi) = Y(pi) = 0.
    Dirichlet,
    /// Y'(-pi) = Y'(pi) = 0.
    Neumann,
    /// Y(-pi) = Y(pi), Y'(-pi) = Y'(pi).
    Periodic,
    /// Y(-pi) = -Y(pi), Y'(-pi) = -Y'(pi).
    AntiPeriodic,
}

impl ProblemKind {
    pub const ALL: [ProblemKind; 4] = [
        ProblemKind::Dirichlet,
        ProblemKind::Neumann,
        ProblemKind::Periodic,
        ProblemKind::AntiPeriodic,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            ProblemKind::Dirichlet => "D",
            ProblemKind::Neumann => "N",
            ProblemKind::Periodic => "P",
            ProblemKind::AntiPeriodic => "AP",
        }
    }
}

impl fmt::Display for ProblemKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for ProblemKind {
    type Err = BasisError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_uppercase().as_str() {
            "D" | "DIRICHLET" => Ok(ProblemKind::Dirichlet),
            "N" | "NEUMANN" => Ok(ProblemKind::Neumann),
            "P" | "PERIODIC" => Ok(ProblemKind::Periodic),
            "AP" | "ANTIPERIODIC" | "ANTI-PERIODIC" => Ok(ProblemKind::AntiPeriodic),
            _ => Err(BasisError::InvalidMode(format!(
                "unknown problem kind {s:?}; expected D, N, P, or AP"
            ))),
        }
    }
}

/// Sine modes are odd about y = 0, cosine modes even; the parity decides
/// which perturbation factor, (1 + eps) or (1 - eps), the mode carries.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Parity {
    Odd,
    Even,
}

#[derive(Debug, Error)]
pub enum BasisError {
    #[error("invalid mode: {0}")]
    InvalidMode(String),
    #[error("|eps| must be < 1, got {0}")]
    EpsOutOfRange(f64),
    #[error("invalid parameter: {0}")]
    InvalidParams(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct ModeIndex {
    pub kind: ProblemKind,
    pub parity: Parity,
    pub k: u32,
}

/// Smallest valid k for the family branch; below it the candidate either
/// duplicates another mode or is the zero function.
pub fn k_min(kind: ProblemKind, parity: Parity) -> u32 {
    match (kind, parity) {
        (ProblemKind::Dirichlet, _) => 1,
        (ProblemKind::Neumann, _) => 0,
        (ProblemKind::Periodic, Parity::Odd) => 1,
        (ProblemKind::Periodic, Parity::Even) => 0,
        (ProblemKind::AntiPeriodic, _) => 0,
    }
}

impl ModeIndex {
    pub fn new(kind: ProblemKind, parity: Parity, k: u32) -> Result<Self, BasisError> {
        let m = ModeIndex { kind, parity, k };
        m.validate()?;
        Ok(m)
    }

    fn validate(&self) -> Result<(), BasisError> {
        let min = k_min(self.kind, self.parity);
        if self.k < min {
            return Err(BasisError::InvalidMode(format!(
                "{} {:?} modes start at k = {min}, got k = {}",
                self.kind, self.parity, self.k
            )));
        }
        Ok(())
    }

    /// Trigonometric wavenumber omega of the mode.
    pub fn wavenumber(&self) -> f64 {
        let k = self.k as f64;
        match (self.kind, self.parity) {
            (ProblemKind::Dirichlet, Parity::Odd) => k,
            (ProblemKind::Dirichlet, Parity::Even) => k - 0.5,
            (ProblemKind::Neumann, Parity::Odd) => k + 0.5,
            (ProblemKind::Neumann, Parity::Even) => k,
            (ProblemKind::Periodic, _) => k,
            (ProblemKind::AntiPeriodic, _) => k + 0.5,
        }
    }

    /// True for the single constant mode a family may have (cosine branch
    /// with wavenumber 0: Neumann and Periodic k = 0).
    pub fn is_constant(&self) -> bool {
        self.parity == Parity::Even && self.wavenumber() == 0.0
    }

    /// Position in the family's interleaved single-index enumeration,
    /// which pairs each sine entry with its cosine sibling: Dirichlet
    /// counts sin k at 2k - 1 and cos(k - 1/2) at 2k; Neumann and
    /// AntiPeriodic count cos at 2k and sin at 2k + 1; Periodic counts
    /// sin k at 2k - 1 and cos k at 2k.
    pub fn interleaved(&self) -> u32 {
        match (self.kind, self.parity) {
            (ProblemKind::Dirichlet, Parity::Odd) => 2 * self.k - 1,
            (ProblemKind::Dirichlet, Parity::Even) => 2 * self.k,
            (ProblemKind::Neumann, Parity::Odd) => 2 * self.k + 1,
            (ProblemKind::Neumann, Parity::Even) => 2 * self.k,
            (ProblemKind::Periodic, Parity::Odd) => 2 * self.k - 1,
            (ProblemKind::Periodic, Parity::Even) => 2 * self.k,
            (ProblemKind::AntiPeriodic, Parity::Odd) => 2 * self.k + 1,
            (ProblemKind::AntiPeriodic, Parity::Even) => 2 * self.k,
        }
    }

    /// Inverse of interleaved(): the mode a family places at position m.
    /// Dirichlet enumerates from m = 1, the other families from m = 0.
    pub fn from_interleaved(kind: ProblemKind, m: u32) -> Result<Self, BasisError> {
        let odd = m % 2 == 1;
        let (parity, k) = match kind {
            ProblemKind::Dirichlet if odd => (Parity::Odd, (m + 1) / 2),
            ProblemKind::Dirichlet => (Parity::Even, m / 2),
            ProblemKind::Neumann if odd => (Parity::Odd, (m - 1) / 2),
            ProblemKind::Neumann => (Parity::Even, m / 2),
            ProblemKind::Periodic if odd => (Parity::Odd, (m + 1) / 2),
            ProblemKind::Periodic => (Parity::Even, m / 2),
            ProblemKind::AntiPeriodic if odd => (Parity::Odd, (m - 1) / 2),
            ProblemKind::AntiPeriodic => (Parity::Even, m / 2),
        };
        ModeIndex::new(kind, parity, k)
    }
}

/// The first n modes of a family in interleaved-index order (the order
/// the series representations sum them in). Dirichlet starts at index 1,
/// every other family at 0.
pub fn modes(kind: ProblemKind, n: usize) -> Vec<ModeIndex> {
    let m0 = match kind {
        ProblemKind::Dirichlet => 1,
        _ => 0,
    };
    (m0..m0 + n as u32)
        .map(|m| {
            ModeIndex::from_interleaved(kind, m).expect("interleaved enumeration stays valid")
        })
        .collect()
}

/// Every mode with branch index k <= n in both parity branches, in
/// interleaved order. This is the truncation rule the expansions use:
/// the two branches are cut at the same k, not at the same position.
pub fn modes_through_order(kind: ProblemKind, n: u32) -> Vec<ModeIndex> {
    let count = match kind {
        ProblemKind::Dirichlet => 2 * n,
        ProblemKind::Neumann | ProblemKind::AntiPeriodic => 2 * n + 2,
        ProblemKind::Periodic => 2 * n + 1,
    } as usize;
    modes(kind, count)
}

fn check_eps(eps: f64) -> Result<(), BasisError> {
    if !(eps.abs() < 1.0) {
        return Err(BasisError::EpsOutOfRange(eps));
    }
    Ok(())
}

/// Eigenvalue of the mode: (1 + eps) omega^2 for sine modes,
/// (1 - eps) omega^2 for cosine modes. Nonnegative for every |eps| < 1,
/// zero exactly on the constant mode.
pub fn eigenvalue(mode: ModeIndex, eps: f64) -> Result<f64, BasisError> {
    mode.validate()?;
    check_eps(eps)?;
    let factor = match mode.parity {
        Parity::Odd => 1.0 + eps,
        Parity::Even => 1.0 - eps,
    };
    let omega = mode.wavenumber();
    Ok(factor * (omega * omega))
}

/// Modal frequency mu = sqrt(eigenvalue + c^2); exactly 0 only for the
/// constant mode with c = 0.
pub fn mu_of_mode(mode: ModeIndex, eps: f64, c: f64) -> Result<f64, BasisError> {
    if !c.is_finite() {
        return Err(BasisError::InvalidParams(format!(
            "c must be finite, got {c}"
        )));
    }
    Ok((eigenvalue(mode, eps)? + c * c).sqrt())
}

/// A mode with its eigenvalue and normalization, bundled for tabulation.
#[derive(Clone, Copy, Debug)]
pub struct EigenPair {
    pub mode: ModeIndex,
    pub lambda: f64,
    pub frequency: f64,
    pub norm_const: f64,
}

pub fn eigen_pair(mode: ModeIndex, eps: f64) -> Result<EigenPair, BasisError> {
    let lambda = eigenvalue(mode, eps)?;
    let f = eigenfunction(mode);
    Ok(EigenPair {
        mode,
        lambda,
        frequency: mode.wavenumber(),
        norm_const: f.norm_const(),
    })
}

/// L2-normalized eigenfunction, evaluable together with its first two
/// derivatives (all closed-form trigonometry).
#[derive(Clone, Copy, Debug)]
pub struct Eigenfunction {
    mode: ModeIndex,
    omega: f64,
    norm: f64,
}

pub fn eigenfunction(mode: ModeIndex) -> Eigenfunction {
    debug_assert!(mode.validate().is_ok());
    let norm = if mode.is_constant() {
        1.0 / (2.0 * PI).sqrt()
    } else {
        1.0 / PI.sqrt()
    };
    Eigenfunction {
        mode,
        omega: mode.wavenumber(),
        norm,
    }
}

impl Eigenfunction {
    pub fn mode(&self) -> ModeIndex {
        self.mode
    }

    pub fn norm_const(&self) -> f64 {
        self.norm
    }

    pub fn eval(&self, y: f64) -> f64 {
        match self.mode.parity {
            Parity::Odd => self.norm * (self.omega * y).sin(),
            Parity::Even => self.norm * (self.omega * y).cos(),
        }
    }

    pub fn deriv(&self, y: f64) -> f64 {
        match self.mode.parity {
            Parity::Odd => self.norm * self.omega * (self.omega * y).cos(),
            Parity::Even => -self.norm * self.omega * (self.omega * y).sin(),
        }
    }

    /// Second derivative -omega^2 Y(y), formed through eval so the
    /// eigen-identity cancels to rounding.
    pub fn second_deriv(&self, y: f64) -> f64 {
        -(self.omega * self.omega) * self.eval(y)
    }
}

/// The spectral operator applied to a mode:
/// Y''(y) - eps Y''(-y) + lambda Y(y), identically zero in exact
/// arithmetic; evaluation reports the floating-point residual.
#[derive(Clone, Copy, Debug)]
pub struct OperatorResidual {
    f: Eigenfunction,
    eps: f64,
    lambda: f64,
}

pub fn operator_apply(mode: ModeIndex, eps: f64) -> Result<OperatorResidual, BasisError> {
    let lambda = eigenvalue(mode, eps)?;
    Ok(OperatorResidual {
        f: eigenfunction(mode),
        eps,
        lambda,
    })
}

impl OperatorResidual {
    pub fn eval(&self, y: f64) -> f64 {
        self.f.second_deriv(y) - self.eps * self.f.second_deriv(-y) + self.lambda * self.f.eval(y)
    }
}
