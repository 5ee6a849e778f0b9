use thiserror::Error;

use crate::partitions::Partition;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("not a partition: {0}")]
    InvalidPartition(String),
    #[error("malformed input: {0}")]
    Malformed(String),
    #[error("letter index {index} exceeds the variable count {n}")]
    LetterOutOfRange { index: u32, n: usize },
    #[error("shape {0} does not satisfy lambda_k >= k")]
    InvalidShiftedShape(Partition),
    #[error("shape {0} is not pavable")]
    NotPavable(Partition),
    #[error("shape {0} is not shifted pavable")]
    NotShiftedPavable(Partition),
    #[error("variable counts differ ({0} vs {1})")]
    VariableMismatch(usize, usize),
    #[error("reading word does not describe a tableau: {0}")]
    Reconstruction(String),
    #[error("domino placement failed: {0}")]
    Placement(String),
    #[error("operation requires a shifted family, got {0}")]
    NotShifted(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
