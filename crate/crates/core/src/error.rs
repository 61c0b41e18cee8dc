//! Error type shared across the crate.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// A value fails a precondition (non-finite input, empty vector, bad distribution).
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// A tensor/vector dimension does not match what the operation expects.
    #[error("shape mismatch: {0}")]
    Shape(String),

    /// A config file or agent/environment wiring violates a documented invariant.
    #[error("configuration error: {0}")]
    Config(String),

    /// Training produced a non-finite loss or gradient.
    #[error("training diverged: {0}")]
    Divergence(String),

    #[error("I/O error: {0}")]
    Io(#[from] std::io::Error),

    #[error("JSON error: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
