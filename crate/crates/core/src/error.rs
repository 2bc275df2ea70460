use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("n must be a positive integer, got 0")]
    Zero,

    #[error("{0} is out of range: n must satisfy 1 <= n <= 2^63 - 1")]
    OutOfRange(String),

    #[error("invalid integer literal {0:?}")]
    Parse(String),

    #[error("search-infeasible: graph has {vertices} vertices, exceeding the cap of {cap}")]
    SearchInfeasible { vertices: usize, cap: usize },

    #[error("construction requires >= 5 distinct primes, n has {k}")]
    TooFewPrimes { k: usize },

    #[error("invalid search length {0}: must be odd and >= 5")]
    InvalidLength(usize),

    #[error("emitted witness failed re-validation: {0}")]
    WitnessRejected(String),
}

pub type Result<T> = std::result::Result<T, Error>;
