use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid sequence: {0}")]
    InvalidSequence(String),

    #[error("generators have gcd {0}, expected 1 (use normalization to divide it out)")]
    Gcd(u64),

    #[error("{0} is not an element of the semigroup")]
    NotMember(i64),

    #[error("point ({0}, {1}) is not of integral degree for d = {2}")]
    NotGradedPoint(u64, u64, u64),

    #[error("search bound exhausted: {0}")]
    BoundExhausted(String),

    #[error("hypothesis not satisfied: {0}")]
    Hypothesis(String),

    #[error("degenerate result: {0}")]
    Degenerate(String),

    #[error("semigroup is not symmetric")]
    NotSymmetric,

    #[error("2 belongs to the semigroup")]
    TwoInSemigroup,

    #[error("parse error: {0}")]
    Parse(String),

    #[error("internal inconsistency: {0}")]
    Inconsistent(String),
}

pub type Result<T> = std::result::Result<T, Error>;
