use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("evaluation budget of {max_fe} function evaluations is exhausted")]
    BudgetExhausted { max_fe: u64 },
    #[error("expected a vector of length {expected}, got {actual}")]
    DimensionMismatch { expected: usize, actual: usize },
    #[error("invalid bounds [{lb}, {ub}]: lower bound must be strictly below upper bound")]
    InvalidBounds { lb: f64, ub: f64 },
    #[error("invalid configuration: {0}")]
    InvalidConfig(String),
    #[error("degenerate input: {0}")]
    DegenerateInput(String),
    #[error("unknown test function `{0}`")]
    UnknownFunction(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
