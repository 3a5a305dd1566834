use thiserror::Error;

use crate::spectral::SpectrumResult;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("graph6 parse error at byte {offset}: {reason}")]
    Graph6 { offset: usize, reason: String },

    #[error("malformed pattern `{token}`: {reason}")]
    Pattern { token: String, reason: String },

    /// Power iteration hit its cap; `best` is the last iterate.
    #[error(
        "power iteration did not converge after {iterations} iterations (residual {residual:e})"
    )]
    NotConverged {
        iterations: usize,
        residual: f64,
        best: Box<SpectrumResult>,
    },

    #[error("enumeration aborted by sink")]
    Aborted,
}

impl Error {
    pub(crate) fn param(msg: impl Into<String>) -> Self {
        Error::InvalidParameter(msg.into())
    }
}
