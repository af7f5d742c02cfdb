use thiserror::Error;

/// Errors raised by the distribution, numerical and verification routines.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// An argument lies outside the domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// The operation is only defined for a restricted parameter set (e.g. `sigma = 1`).
    #[error("unsupported parameter: {0}")]
    Unsupported(String),

    /// Evaluation at a point where the density diverges or vanishes identically.
    #[error("singular point: {0}")]
    Singular(String),

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    /// The matrix is not a valid positive-definite correlation matrix.
    #[error("invalid correlation matrix: {0}")]
    InvalidCorrelation(String),

    /// `find_root` was given an interval without a sign change.
    #[error("no sign change on [{lo}, {hi}]: f(lo) = {f_lo}, f(hi) = {f_hi}")]
    Bracket { lo: f64, hi: f64, f_lo: f64, f_hi: f64 },

    /// Quadrature ran out of subdivisions; carries the best estimate so far.
    #[error("quadrature did not converge: best estimate {estimate} with error {error}")]
    Convergence { estimate: f64, error: f64 },

    /// An integrand or intermediate quantity evaluated to NaN or infinity.
    #[error("non-finite value at x = {0}")]
    NonFinite(f64),

    /// The request would exceed a fixed resource bound.
    #[error("resource limit: {0}")]
    Resource(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain(msg: impl Into<String>) -> Error {
    Error::Domain(msg.into())
}
