use std::path::PathBuf;

use thiserror::Error;

use crate::point::ValidationReport;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("alpha must lie in [0, 1], got {0}")]
    AlphaOutOfRange(f64),

    #[error("parameter {t} lies outside the knot range [{start}, {end}]")]
    ParameterOutOfRange { t: f64, start: f64, end: f64 },

    #[error("validation failed:\n{0}")]
    Validation(ValidationReport),

    #[error("points {index} and {next} coincide; chord-based parametrization needs distinct consecutive points", next = .index + 1)]
    DegenerateChord { index: usize },

    #[error("{what}: need at least {required}, got {actual}")]
    Arity {
        what: &'static str,
        required: usize,
        actual: usize,
    },

    #[error("invalid knot vector: {0}")]
    InvalidKnots(String),

    #[error("degree must be between 1 and {max}, got {degree}")]
    DegreeOutOfRange { degree: usize, max: usize },

    #[error("collocation system is singular or ill-conditioned: pivot {pivot:e} at row {row}")]
    Singular { row: usize, pivot: f64 },

    #[error("stage error: expected a {expected} bundle, got {actual}")]
    Stage {
        expected: &'static str,
        actual: &'static str,
    },

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("point {index}: missing key `{key}`")]
    MissingKey { index: usize, key: &'static str },

    #[error("point {index}, key `{key}`: {message}")]
    BadValue {
        index: usize,
        key: &'static str,
        message: String,
    },

    #[error("{}: {source}", path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
}

impl Error {
    pub(crate) fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }
}
