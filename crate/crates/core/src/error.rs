use thiserror::Error;

/// Errors surfaced by the library. The CLI maps these onto process exit
/// codes: validation/precondition failures are "invalid input" (2), cap
/// overruns are "resource cap" (3).
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    Validation(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("resource cap exceeded: {0}")]
    ResourceCap(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn invalid(msg: impl Into<String>) -> Error {
    Error::Validation(msg.into())
}

pub(crate) fn precondition(msg: impl Into<String>) -> Error {
    Error::Precondition(msg.into())
}

pub(crate) fn cap(msg: impl Into<String>) -> Error {
    Error::ResourceCap(msg.into())
}
