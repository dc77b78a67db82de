use std::path::PathBuf;

/// Crate-wide error type.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// A documented precondition was violated by the caller.
    #[error("contract violation: {0}")]
    Contract(String),

    /// An integrand produced a non-finite value.
    #[error("non-finite value encountered at x = {abscissa}")]
    NonFinite { abscissa: f64 },

    /// A truncated series has too much mass beyond its cutoff.
    #[error("coefficient cutoff too small: {0}")]
    Cutoff(String),

    /// An internal consistency check failed; this indicates a bug.
    #[error("internal consistency failure: {0}")]
    Internal(String),

    #[error("i/o failure on {path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },

    #[error("malformed file {path}: {message}")]
    Format { path: PathBuf, message: String },
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn contract(msg: impl Into<String>) -> Self {
        Error::Contract(msg.into())
    }

    pub fn internal(msg: impl Into<String>) -> Self {
        Error::Internal(msg.into())
    }
}
