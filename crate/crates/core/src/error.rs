use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("gcd(q, n) != 1: characteristic {p} divides length {n}")]
    NotCoprime { p: u32, n: usize },
    #[error("element is not a unit of the chain ring")]
    NotAUnit,
    #[error("ambient mismatch: {0}")]
    AmbientMismatch(String),
    #[error("invalid code index: {0}")]
    InvalidIndex(String),
    #[error("self-dual classification unsupported: {0}")]
    SelfDualUnsupported(String),
    #[error("internal error: {0}")]
    InternalError(String),
}

pub type Result<T> = std::result::Result<T, Error>;
