use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("variable mismatch: {0} vs {1}")]
    VariableMismatch(String, String),

    #[error("shape error: {0}")]
    Shape(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("usage error: {0}")]
    Usage(String),

    #[error("inexact division: {0}")]
    InexactDivision(String),

    #[error("not a polynomial in eta: {0}")]
    NotCheckPolynomial(String),

    #[error("degenerate parameters: {0}")]
    DegenerateParameter(String),

    #[error("duplicate seed {0} in index set")]
    DuplicateSeed(String),

    #[error("convention error: {0}")]
    Convention(String),

    #[error("calibration failed: {0}")]
    Calibration(String),

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("internal consistency failure: {0}")]
    Internal(String),
}
