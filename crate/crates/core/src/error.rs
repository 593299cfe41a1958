use thiserror::Error;

use crate::partitions::{Partition, Rectangle};

#[derive(Debug, Error)]
pub enum Error {
    #[error("partition {partition} does not fit in the {rect} box")]
    NotInBox { partition: Partition, rect: Rectangle },

    #[error("invalid partition {0:?}: parts must be weakly decreasing")]
    InvalidPartition(Vec<u32>),

    #[error("the empty partition has no decomposition")]
    EmptyPartition,

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("ring elements from different boxes: {left} vs {right}")]
    ContextMismatch { left: Rectangle, right: Rectangle },

    #[error("dimension mismatch: expected {expected}, got {actual}")]
    DimensionMismatch { expected: usize, actual: usize },

    #[error("brute-force bound exceeded: weight {weight} > {bound}")]
    BoundExceeded { weight: u32, bound: u32 },

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn precondition(msg: impl Into<String>) -> Error {
    Error::Precondition(msg.into())
}
