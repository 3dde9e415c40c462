//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// A caller-supplied value violates a precondition.
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// Configuration file or checkpoint metadata is malformed or inconsistent.
    #[error("config error: {0}")]
    Config(String),

    /// A file payload could not be parsed.
    #[error("parse error: {0}")]
    Parse(String),

    /// Non-finite values or other numeric failure during computation.
    #[error("numeric error: {0}")]
    Numeric(String),

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidArgument(msg.into())
    }

    /// Exit code for the CLI: validation problems are 1, runtime failures 2.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::InvalidArgument(_) | Error::Config(_) | Error::Parse(_) => 1,
            Error::Numeric(_) | Error::Io(_) => 2,
        }
    }
}
