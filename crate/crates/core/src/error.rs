use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("partition size {size} exceeds the limit of {limit}")]
    PartitionTooLarge { size: usize, limit: usize },

    #[error("degree {degree} exceeds the limit of {limit}")]
    DegreeTooLarge { degree: usize, limit: usize },

    #[error("space with {dim} basis vectors exceeds the limit of {limit}")]
    SpaceTooLarge { dim: usize, limit: usize },

    #[error("shape mismatch: {0}")]
    Shape(String),

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("no vanishing rectangle among partitions of size at most {cap} (cap too small)")]
    CapTooSmall { cap: usize },

    #[error("vanishing oracle is not upward closed: {0}")]
    ContractViolation(String),

    #[error("internal inconsistency: {0}")]
    Internal(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
