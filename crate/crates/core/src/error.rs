use thiserror::Error;

/// Errors reported by the library.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("domain error: {0}")]
    Domain(String),
    #[error("modulus mismatch: {0} vs {1}")]
    ModulusMismatch(usize, usize),
    #[error("enumeration budget of {0} candidates exceeded")]
    BudgetExceeded(u64),
    #[error("unknown identity id: {0}")]
    UnknownIdentity(String),
}

pub type Result<T> = std::result::Result<T, Error>;
