use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("galois exponent {k} is not coprime to conductor {m}")]
    NotCoprime { k: i64, m: u64 },

    #[error("{what}: size {size} exceeds budget {budget}")]
    BudgetExceeded { what: &'static str, size: u64, budget: u64 },

    #[error("outside the domain of the closed form: {0}")]
    OutOfDomain(String),

    /// A computed object contradicts a structural fact that must hold for
    /// these groups. Seeing this means a bug, never bad input.
    #[error("consistency check failed: {0}")]
    Falsified(String),

    #[error("malformed input: {0}")]
    Parse(String),
}
