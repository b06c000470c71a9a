use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("operation is undefined for the zero polynomial")]
    ZeroPolynomial,
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("value expected to be an integer was {0}")]
    IntegralityViolation(String),
    #[error("evaluation point must be nonzero")]
    ZeroPoint,
    #[error("hypergeometric series does not terminate within {0} terms")]
    NonTerminating(usize),
    #[error("sample point z = 1/4 is a pole of the Jacobi argument map")]
    SampleAtPole,
    #[error("gamma_{index} is negative")]
    NegativeGamma { index: usize },
    #[error("cannot parse rational {0:?}")]
    ParseRational(String),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidParameter(msg.into())
}
