//! Error type shared across the library.

use thiserror::Error;

/// Errors produced by the library.
///
/// The variants map onto the CLI exit-code classes: invalid arguments,
/// data/cache integrity problems, and capacity/budget overruns.
#[derive(Debug, Error)]
pub enum Error {
    /// A precondition on an argument was violated.
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// A requested computation exceeds a table limit or a compute budget.
    #[error("capacity exceeded: {0}")]
    Capacity(String),

    /// Input data failed a structural check (ordering, emptiness, coverage).
    #[error("data integrity: {0}")]
    DataIntegrity(String),

    /// A text input could not be parsed.
    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    /// A cache file failed its checksum.
    #[error("corrupt cache: {0}")]
    CorruptCache(String),

    /// An evaluation was requested outside the domain of the formula.
    #[error("domain error: {0}")]
    Domain(String),

    /// Input data violated a mathematical invariant it was assumed to satisfy.
    #[error("invariant violation: {0}")]
    InvariantViolation(String),

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
