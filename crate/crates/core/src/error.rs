use thiserror::Error;

/// Errors shared by every crate in the workspace.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("invalid arc at index {index}: {message}")]
    InvalidArc { index: usize, message: String },

    #[error("instance exceeds the exhaustive-search limit: {0}")]
    TooLarge(String),
}

pub type Result<T> = std::result::Result<T, Error>;
