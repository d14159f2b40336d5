use crate::rational::ParseRationalError;

/// Errors raised by every fallible operation in the crate.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("operands belong to different quaternion algebras")]
    AlgebraMismatch,
    #[error("invalid parameter: {0}")]
    Parameter(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("no isotropic construction is known for H({a}, {b})")]
    UnsupportedAlgebra { a: String, b: String },
    /// An identity that must hold by construction did not. Always a bug.
    #[error("internal consistency failure: {0}")]
    Consistency(String),
    #[error("parse error at {location}: {message}")]
    Parse { location: String, message: String },
    #[error(transparent)]
    Rational(#[from] ParseRationalError),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn param(msg: impl Into<String>) -> Error {
    Error::Parameter(msg.into())
}
