use std::path::PathBuf;

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    /// Invalid argument to a library operation (k = 0, mismatched shingle
    /// lengths, out-of-range column index, ...).
    #[error("invalid parameter: {0}")]
    Parameter(String),

    /// Corpus-level misuse (fewer than two documents, unknown method, ...).
    #[error("usage error: {0}")]
    Usage(String),

    /// Failure reading a corpus document; carries the offending path.
    #[error("failed to read {path}: {source}")]
    Ingest {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    pub fn parameter(msg: impl Into<String>) -> Self {
        Error::Parameter(msg.into())
    }

    pub fn usage(msg: impl Into<String>) -> Self {
        Error::Usage(msg.into())
    }
}
