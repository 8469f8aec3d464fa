//! Crate-wide error type.

use std::fmt;

/// Result alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;

/// Errors emitted by the motion stack.
#[derive(Debug)]
pub enum Error {
    /// Two containers that must have matching dimensions do not.
    DimensionMismatch {
        context: &'static str,
        expected: usize,
        got: usize,
    },
    /// A numeric entry that must be finite is NaN or infinite.
    NonFinite { label: String, index: usize },
    /// A value violates a documented bound.
    OutOfRange { label: String, value: f64 },
    /// An operation received an empty input it cannot handle.
    EmptyInput(&'static str),
    /// A named robot DoF left its configured limits in checked mode.
    DofLimit {
        name: String,
        value: f64,
        min: f64,
        max: f64,
    },
    /// A model / sample / config file could not be parsed.
    Parse {
        path: String,
        line: usize,
        message: String,
    },
    /// A binary payload ended early or carried a bad frame.
    Truncated { path: String, offset: usize },
    /// A file declared a schema or magic this build does not accept.
    Schema {
        path: String,
        expected: String,
        got: String,
    },
    /// Two model files that must belong together do not.
    Incompatible { context: String },
    /// Training diverged (non-finite loss).
    Diverged { step: usize, detail: String },
    Io(std::io::Error),
    Json(serde_json::Error),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::DimensionMismatch {
                context,
                expected,
                got,
            } => write!(f, "{context}: expected dimension {expected}, got {got}"),
            Error::NonFinite { label, index } => {
                write!(f, "non-finite value in {label} at index {index}")
            }
            Error::OutOfRange { label, value } => write!(f, "{label} out of range: {value}"),
            Error::EmptyInput(what) => write!(f, "empty input: {what}"),
            Error::DofLimit {
                name,
                value,
                min,
                max,
            } => write!(f, "DoF `{name}` = {value} outside limits [{min}, {max}]"),
            Error::Parse {
                path,
                line,
                message,
            } => write!(f, "{path}:{line}: {message}"),
            Error::Truncated { path, offset } => {
                write!(f, "{path}: truncated at byte offset {offset}")
            }
            Error::Schema {
                path,
                expected,
                got,
            } => write!(f, "{path}: expected schema `{expected}`, found `{got}`"),
            Error::Incompatible { context } => write!(f, "incompatible models: {context}"),
            Error::Diverged { step, detail } => {
                write!(f, "training diverged at step {step}: {detail}")
            }
            Error::Io(e) => write!(f, "io error: {e}"),
            Error::Json(e) => write!(f, "json error: {e}"),
        }
    }
}

impl std::error::Error for Error {
    fn source(&self) -> Option<&(dyn std::error::Error + 'static)> {
        match self {
            Error::Io(e) => Some(e),
            Error::Json(e) => Some(e),
            _ => None,
        }
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e)
    }
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Json(e)
    }
}
