//! Error type shared across the crate.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// A mathematical precondition of an operation was violated by the caller.
    #[error("precondition violated: {0}")]
    Precondition(String),

    /// An argument is outside the domain of the operation (e.g. gcd(0, 0)).
    #[error("domain error: {0}")]
    Domain(String),

    /// A hypergeometric term is genuinely undefined: a zero lower-parameter
    /// factor that is not cancelled by an earlier upper zero factor.
    #[error("undefined term at index {index}: {reason}")]
    UndefinedTerm { index: String, reason: String },

    /// Registry lookup failed.
    #[error("unknown identity id `{0}`")]
    UnknownId(String),

    /// Parameters do not satisfy the schema of a registry entry.
    #[error("invalid parameters for `{id}`: {reason}")]
    Schema { id: String, reason: String },

    /// An internal structural assertion failed; this signals a bug, not bad input.
    #[error("internal consistency error: {0}")]
    Internal(String),

    /// A covering failed certification; the message carries the failing check.
    #[error("certification failed: {0}")]
    Certification(String),

    /// Malformed serialized data.
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
