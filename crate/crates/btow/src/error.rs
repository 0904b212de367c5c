use thiserror::Error;

/// Error type shared by every module in the crate.
///
/// The variants map onto process exit codes: validation problems exit 1,
/// solver non-convergence exits 2, failed property checks exit 3.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    Validation(String),

    #[error("solver did not converge after {sweeps} sweeps (last residual {residual:.3e}, tolerance {tol:.3e})")]
    NonConvergence {
        sweeps: usize,
        residual: f64,
        tol: f64,
    },

    #[error("property check failed: {0}")]
    PropertyCheck(String),

    #[error("internal consistency violated: {0}")]
    Internal(String),

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),

    #[error("malformed json: {0}")]
    Json(#[from] serde_json::Error),
}

impl Error {
    pub fn validation(msg: impl Into<String>) -> Self {
        Error::Validation(msg.into())
    }

    pub fn property(msg: impl Into<String>) -> Self {
        Error::PropertyCheck(msg.into())
    }

    pub fn internal(msg: impl Into<String>) -> Self {
        Error::Internal(msg.into())
    }

    /// Exit code for the CLI: 1 validation, 2 non-convergence, 3 property failure.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Validation(_) | Error::Io(_) | Error::Json(_) => 1,
            Error::NonConvergence { .. } | Error::Internal(_) => 2,
            Error::PropertyCheck(_) => 3,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
