use thiserror::Error;

use crate::spin_core::SpinNumber;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("invalid spin quantum number {0:?}: expected a non-negative integer or half-integer such as \"3/2\" or \"1.5\"")]
    InvalidSpin(String),

    #[error("spin ordering violated: S2 = {s2} must be at least S1 = {s1}")]
    SpinOrder { s1: SpinNumber, s2: SpinNumber },

    #[error("operation requires S1 = 1/2, got S1 = {0}")]
    RequiresSpinHalf(SpinNumber),

    #[error(
        "angle out of range: theta = {theta} (expected [0, pi]), phi = {phi} (expected [0, 2pi))"
    )]
    InvalidAngle { theta: f64, phi: f64 },

    #[error("beta = {beta} outside the admissible range [0, {limit}] for this spin pair")]
    BetaOutOfRange { beta: f64, limit: f64 },

    #[error("matrix has eigenvalue {0:e} below -1e-10; not a density matrix")]
    NegativeEigenvalue(f64),

    #[error("angle distribution takes value {0:e} at a quadrature node; beta too large")]
    NegativeDensity(f64),

    #[error("unknown measure {0:?}")]
    InvalidMeasure(String),

    #[error("dimension mismatch: {0}")]
    Dimension(String),
}
