use std::path::PathBuf;

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid bounds: {0}")]
    InvalidBounds(String),

    #[error("dimension mismatch: expected {expected}, got {actual}")]
    DimensionMismatch { expected: usize, actual: usize },

    #[error("invalid population: {0}")]
    InvalidPopulation(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("objective failed at iteration {iteration}, particle {particle}: {message}")]
    Objective {
        iteration: usize,
        particle: usize,
        message: String,
    },

    #[error("unknown {kind} `{name}` (valid: {valid})")]
    UnknownId {
        kind: &'static str,
        name: String,
        valid: String,
    },

    #[error("invalid scenario: {0}")]
    InvalidScenario(String),

    #[error("invalid config: {0}")]
    InvalidConfig(String),

    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),
}

impl Error {
    pub(crate) fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }
}
