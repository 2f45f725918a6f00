use thiserror::Error;

/// Errors raised by the numerical routines and the report/config layer.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("index out of range: {0}")]
    OutOfRange(String),

    #[error("argument outside domain: {0}")]
    Domain(String),

    #[error("degenerate row {row}: every entry is zero")]
    DegenerateRow { row: usize },

    #[error("degenerate bound: {0}")]
    Degenerate(String),

    #[error("invalid configuration: {0}")]
    Config(String),

    #[error("parse error at row {row}: {message}")]
    Parse { row: usize, message: String },

    #[error("i/o failure: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;
