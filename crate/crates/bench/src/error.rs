use std::io;
use std::path::PathBuf;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum BenchError {
    #[error("invalid configuration: {0}")]
    Config(String),

    #[error("unknown function id(s): {}", .0.join(", "))]
    UnknownFunctions(Vec<String>),

    #[error("result files cover different functions; only in {left}: [{}]; only in {right}: [{}]", .only_left.join(", "), .only_right.join(", "))]
    MismatchedFunctions {
        left: String,
        right: String,
        only_left: Vec<String>,
        only_right: Vec<String>,
    },

    #[error(transparent)]
    Core(#[from] tsa_core::Error),

    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: io::Error,
    },

    #[error("{path}: {message}")]
    Format { path: PathBuf, message: String },

    #[error("trace for {function} run {run} is not monotone; refusing to write it")]
    NonMonotoneTrace { function: String, run: u32 },
}

impl BenchError {
    /// Process exit code: 2 for configuration problems, 3 for I/O.
    pub fn exit_code(&self) -> u8 {
        match self {
            BenchError::Io { .. } | BenchError::Format { .. } => 3,
            BenchError::NonMonotoneTrace { .. } => 1,
            _ => 2,
        }
    }

    pub(crate) fn io(path: impl Into<PathBuf>, source: io::Error) -> Self {
        BenchError::Io {
            path: path.into(),
            source,
        }
    }
}

pub type Result<T, E = BenchError> = std::result::Result<T, E>;
