//! Error taxonomy shared by every module of the crate.

use thiserror::Error;

/// Errors raised by evaluation, quadrature, and domain checks.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum LerchError {
    /// The input lies outside the function's domain (zero base of a power,
    /// `w` a non-positive integer, gamma evaluated at a pole, ...).
    #[error("argument excluded: {0}")]
    ArgumentExcluded(String),

    /// The simple pole of the continued function at `s = 1` (only for `z = 1`).
    #[error("simple pole at s=1")]
    PoleAtOne,

    /// Direct summation requested outside `|z| < 1` or `|z| = 1, Re(s) > 1`.
    #[error("outside the series convergence region: {0}")]
    OutsideSeriesRegion(String),

    /// An integrand pole sits on (or numerically on) the integration path.
    #[error("integrand pole within {dist:e} of the integration path")]
    PoleOnPath { dist: f64 },

    /// The evaluation cannot reach useful accuracy, e.g. `z` pinching the
    /// contour endpoint near `z = 1`.
    #[error("ill-conditioned evaluation: {0}")]
    IllConditioned(String),

    /// An adaptive rule exhausted its budget before meeting its tolerance.
    #[error("convergence failure: {0}")]
    ConvergenceFailure(String),

    /// The branch configuration violates its invariants.
    #[error("invalid branch configuration: {0}")]
    BranchConfigInvalid(String),

    /// Evaluation parameters incompatible with the requested point.
    #[error("invalid evaluation parameters: {0}")]
    InvalidParams(String),
}

pub type Result<T> = std::result::Result<T, LerchError>;
