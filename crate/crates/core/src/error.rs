use thiserror::Error;

/// Errors raised by the library.
///
/// The variants line up with the CLI exit codes: `MalformedInput` maps to 2,
/// `Resource` to 3 and everything else to 1.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("malformed input: {0}")]
    MalformedInput(String),
    #[error("structural error: {0}")]
    Structural(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("invalid group table: {0}")]
    InvalidGroup(String),
    #[error("resource cap exceeded: {what} is {actual}, cap is {cap}")]
    Resource {
        what: &'static str,
        actual: u64,
        cap: u64,
    },
    #[error("internal consistency failure: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn malformed(msg: impl Into<String>) -> Self {
        Error::MalformedInput(msg.into())
    }

    pub(crate) fn structural(msg: impl Into<String>) -> Self {
        Error::Structural(msg.into())
    }

    pub(crate) fn precondition(msg: impl Into<String>) -> Self {
        Error::Precondition(msg.into())
    }

    pub(crate) fn internal(msg: impl Into<String>) -> Self {
        Error::Internal(msg.into())
    }
}
