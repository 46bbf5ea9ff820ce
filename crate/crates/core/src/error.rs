use std::fmt;

use num_bigint::BigUint;

/// Errors produced by graph, cover and search operations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// A precondition on the inputs was violated (unknown edge id, graph not
    /// connected, ordering not a permutation, ...).
    Input(String),
    /// A text format could not be parsed. `line` is 1-based.
    Parse { line: usize, msg: String },
    /// The requested computation exceeds a configured resource limit.
    /// Reported before any work is done.
    Resource {
        what: String,
        needed: BigUint,
        limit: u64,
    },
    /// An internal consistency check failed; indicates a bug.
    Internal(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Input(msg) => write!(f, "invalid input: {msg}"),
            Error::Parse { line, msg } => write!(f, "parse error at line {line}: {msg}"),
            Error::Resource {
                what,
                needed,
                limit,
            } => write!(
                f,
                "resource limit exceeded: {what} needs {needed}, limit is {limit}"
            ),
            Error::Internal(msg) => write!(f, "internal error: {msg}"),
        }
    }
}

impl std::error::Error for Error {}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn input_err<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Input(msg.into()))
}
