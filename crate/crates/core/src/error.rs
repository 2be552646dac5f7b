use alloc::string::String;

/// Errors shared by every module of the crate.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    /// A construction spec (split sizes, flip list) is malformed.
    #[error("invalid spec: {0}")]
    InvalidSpec(String),
    /// An argument is outside the mathematical domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),
    /// The input is valid but exceeds a hard size guard of the algorithm.
    #[error("capability error: {0}")]
    Capability(String),
    /// A self-check failed; always a bug.
    #[error("internal error: {0}")]
    Internal(String),
}

pub type Result<T> = core::result::Result<T, Error>;
