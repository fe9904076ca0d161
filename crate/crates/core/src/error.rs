use std::io;

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error(transparent)]
    Io(#[from] io::Error),

    /// A single dump record could not be decoded. Callers may skip it.
    #[error("line {line}: malformed record: {message}")]
    Record { line: u64, message: String },

    /// The dump ended before its closing bracket.
    #[error("dump truncated after line {line}")]
    Truncated { line: u64 },

    #[error("line {line}: {message}")]
    Format { line: u64, message: String },

    #[error("invalid entity id {0:?}")]
    InvalidId(String),

    #[error("unknown attribute {0:?}")]
    UnknownAttribute(String),

    #[error("context has no objects")]
    EmptyContext,

    #[error("confidence undefined: premise has zero support")]
    UndefinedConfidence,

    #[error("{attributes} attributes exceed the enumeration cap of {cap}")]
    CapExceeded { attributes: usize, cap: usize },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}

impl Error {
    pub(crate) fn format(line: u64, message: impl Into<String>) -> Self {
        Error::Format {
            line,
            message: message.into(),
        }
    }

    /// Per-record failures that a lenient reader may skip.
    pub fn is_recoverable(&self) -> bool {
        matches!(self, Error::Record { .. })
    }
}
