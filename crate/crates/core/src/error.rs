//! Error type shared across the toolkit.

use std::path::PathBuf;

use thiserror::Error;

/// Errors produced by corpus I/O, training, calibration, and scoring.
#[derive(Debug, Error)]
pub enum Error {
    #[error("i/o error on {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    /// A file could not be decoded. `line` is 1-based; 0 means the error is
    /// not tied to a specific line (e.g. a truncated document body).
    #[error("parse error in {path} at line {line}: {detail}")]
    Parse {
        path: String,
        line: usize,
        detail: String,
    },

    /// Input violated a documented precondition or invariant.
    #[error("{0}")]
    Validation(String),

    /// A persisted model carries a format tag this build does not read.
    #[error("model format mismatch: file declares {found:?}, this build reads {expected:?}")]
    VersionMismatch { expected: String, found: String },

    /// A feature vector was produced under a different schema than the model
    /// was trained on.
    #[error(
        "feature schema mismatch: model fingerprint {model:#018x}, vector fingerprint {vector:#018x}"
    )]
    SchemaMismatch { model: u64, vector: u64 },

    /// Training or fitting requires both classes to be present.
    #[error("single class in input: {0}")]
    SingleClass(String),

    /// The Platt fit ran out of iterations before the parameter change
    /// dropped below tolerance.
    #[error("platt fit did not converge after {iterations} iterations (gradient norm {grad_norm:.3e})")]
    NonConvergence { iterations: usize, grad_norm: f64 },
}

impl Error {
    pub(crate) fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }

    pub(crate) fn parse(path: impl Into<String>, line: usize, detail: impl Into<String>) -> Self {
        Error::Parse {
            path: path.into(),
            line,
            detail: detail.into(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
