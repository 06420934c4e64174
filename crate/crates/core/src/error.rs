use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{what} requires a non-negative argument, got {value}")]
    Negative { what: &'static str, value: i64 },

    #[error("Gaussian binomial [{n} choose {m}] requires n >= m >= 0")]
    BinomialRange { n: i64, m: i64 },

    #[error("division by zero")]
    DivisionByZero,

    #[error("quotient is not a Laurent polynomial with integral coefficients")]
    InexactDivision,

    #[error("invalid partition {0:?}: parts must be positive and weakly decreasing")]
    InvalidPartition(Vec<i64>),

    #[error("parse error at token {position}: {message}")]
    Parse { position: usize, message: String },

    #[error("malformed JSON value: {0}")]
    Json(String),

    #[error("sector must be 0 or 1, got {0}")]
    Sector(i64),

    #[error("divided-power exponent must be at least 1, got {0}")]
    DividedPower(i64),

    #[error("operator index {0} is out of range for this operation")]
    Index(i64),
}
