use thiserror::Error;

/// Errors shared across the crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid utility vector: {0}")]
    InvalidUtilityVector(String),
    #[error("invalid allocation: {0}")]
    InvalidAllocation(String),
    #[error("dimension mismatch: agent 1 has {0} items, agent 2 has {1}")]
    DimensionMismatch(usize, usize),
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("piecewise function error: {0}")]
    Piecewise(String),
    #[error("LP error: {0}")]
    Lp(String),
    #[error("solver reported {0}")]
    SolverStatus(String),
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
