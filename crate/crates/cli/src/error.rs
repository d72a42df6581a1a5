use thiserror::Error;

/// Failures surfaced by the command line, each mapped to an exit status.
#[derive(Debug, Error)]
pub enum CliError {
    #[error("usage error: {0}")]
    Usage(String),

    #[error(transparent)]
    Core(#[from] zalpha_core::Error),

    #[error("route `{route}` does not apply: {reason}")]
    Inapplicable { route: String, reason: String },

    #[error("i/o error: {0}")]
    Io(String),

    /// The computation ran but a tolerance check failed.
    #[error("check failed: {0}")]
    Failed(String),
}

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_IO: i32 = 3;

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) | CliError::Inapplicable { .. } => EXIT_USAGE,
            CliError::Core(zalpha_core::Error::NoConvergence { .. }) => EXIT_FAIL,
            CliError::Core(_) => EXIT_USAGE,
            CliError::Io(_) => EXIT_IO,
            CliError::Failed(_) => EXIT_FAIL,
        }
    }
}
