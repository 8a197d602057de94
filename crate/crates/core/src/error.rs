use thiserror::Error;

/// Errors returned by the fallible operations of this crate.
///
/// Contract violations that indicate a caller bug (mixing polynomial
/// variables, multiplying matrices of incompatible shape, dividing a
/// rational function by zero) panic instead; see the individual modules.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Inversion or division of an exact zero.
    #[error("division by zero")]
    DivisionByZero,

    /// Pivot-free elimination hit a vanishing pivot: the leading principal
    /// minor of the given order (1-based) is zero, so the factorization
    /// does not exist without row exchanges.
    #[error("zero pivot: leading principal minor of order {minor} vanishes")]
    ZeroPivot { minor: usize },

    /// Malformed textual or JSON input.
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
