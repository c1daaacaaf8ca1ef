//! Error type shared by the solver and diagnostics layers.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("field has {got} entries, grid expects {expected}")]
    ShapeMismatch { expected: usize, got: usize },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    /// No sign change found when scanning for the homogeneous equilibrium;
    /// the parameters admit no positive root in the searched interval.
    #[error("no bracket for the homogeneous equilibrium on (0, a]")]
    NoBracket,

    /// A time step produced a non-finite entry (blow-up, usually from a
    /// too-large dt in the explicit reaction part).
    #[error("non-finite value produced at step {step}")]
    NonFinite { step: usize },

    #[error("bad sampling range: lo = {lo} must be strictly below hi = {hi}")]
    BadRange { lo: f64, hi: f64 },

    #[error("argument outside the admissible domain: {0}")]
    Domain(String),

    #[error("trajectory has too few snapshots to analyze")]
    EmptyTrajectory,

    #[error("no snapshots at or after burn-in time {burn_in}")]
    InsufficientData { burn_in: f64 },
}

pub type Result<T> = std::result::Result<T, Error>;
