use thiserror::Error;

/// Everything that can go wrong inside the library.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),

    #[error("invalid parameter `{name}`: {reason}")]
    InvalidParameter { name: &'static str, reason: String },

    #[error("overflow while evaluating {0}")]
    Overflow(String),

    #[error("{0} diverges at the origin")]
    Divergent(String),

    #[error("iteration did not converge: {0}")]
    NoConvergence(String),

    #[error("integration failed at r = {r}: {reason}")]
    Integration { r: f64, reason: String },

    #[error("function is identically zero: {0}")]
    IdenticallyZero(String),

    #[error("phase curve refinement exhausted on [{lo}, {hi}]")]
    RefinementExhausted { lo: f64, hi: f64 },

    #[error("zero at k = {k} lies within one grid step of the interval boundary [{lo}, {hi}]")]
    BoundaryZero { k: f64, lo: f64, hi: f64 },

    #[error("internal error: {0}")]
    Internal(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn invalid(name: &'static str, reason: impl Into<String>) -> Error {
    Error::InvalidParameter {
        name,
        reason: reason.into(),
    }
}
