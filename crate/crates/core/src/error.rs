use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("index out of range: {0}")]
    Index(String),
    #[error("inconsistent linear system{0}")]
    Inconsistent(String),
    #[error("invalid argument: {0}")]
    Invalid(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("law violated: {0}")]
    Law(String),
}

pub type Result<T> = std::result::Result<T, Error>;
