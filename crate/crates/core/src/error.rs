use thiserror::Error;

/// Errors raised by the evaluation routines.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// A parameter lies outside the domain of the requested operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// The evaluation point is a pole of the function.
    #[error("pole: {0}")]
    Pole(String),

    /// A configuration struct violates its invariants.
    #[error("invalid configuration: {0}")]
    Config(String),

    /// Quadrature did not meet its tolerance within the allowed levels.
    #[error("quadrature did not converge: estimate {estimate:e}, error estimate {err_est:e}")]
    NoConvergence { estimate: f64, err_est: f64 },

    /// A worked example tag that is not recognized.
    #[error("unknown worked example `{0}`")]
    UnknownExample(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain(msg: impl Into<String>) -> Error {
    Error::Domain(msg.into())
}
