use thiserror::Error;

/// Errors surfaced by validation and the finite-field oracle.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("invalid tableau: {0}")]
    InvalidTableau(String),

    #[error("invalid arc diagram: {0}")]
    InvalidArcDiagram(String),

    #[error("incomparable inputs: {0}")]
    Incomparable(String),

    #[error("oracle budget exceeded: {0}")]
    BudgetExceeded(String),

    #[error("malformed input: {0}")]
    Malformed(String),
}

pub type Result<T> = std::result::Result<T, Error>;
