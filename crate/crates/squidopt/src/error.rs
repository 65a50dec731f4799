use std::path::PathBuf;

use thiserror::Error;

/// Errors produced by optimizers, the benchmark registry and the harness.
#[derive(Debug, Error)]
pub enum Error {
    /// A parameter violates its documented range or structural requirement.
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    /// Name not present in the benchmark registry.
    #[error("unknown benchmark function `{0}`")]
    UnknownFunction(String),

    /// A dimension was requested for a function whose dimension is fixed.
    #[error("function `{name}` has fixed dimension {expected}, requested {requested}")]
    FixedDimension {
        name: String,
        expected: usize,
        requested: usize,
    },

    /// The objective returned NaN or an infinity; the run is aborted.
    #[error("objective returned non-finite value {value} at {position:?}")]
    NonFiniteObjective { position: Vec<f64>, value: f64 },

    /// Trace export was requested but the run was not traced.
    #[error("trace not recorded; rerun with tracing enabled")]
    TraceMissing,

    /// Malformed experiment configuration (file or flags).
    #[error("config error: {0}")]
    Config(String),

    /// File I/O failure, carrying the path that failed.
    #[error("i/o error on {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }
}
