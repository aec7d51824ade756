use thiserror::Error;

/// Errors produced anywhere in the analysis pipeline.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("allocation must have at least one category")]
    EmptyAllocation,

    #[error("entry {index} is negative ({value})")]
    NegativeEntry { index: usize, value: i64 },

    #[error("cannot parse allocation {input:?}: {reason}")]
    Parse { input: String, reason: String },

    #[error("arithmetic overflow: {0}")]
    Overflow(&'static str),

    #[error("strategy space of size {size} exceeds the limit of {limit}")]
    SpaceTooLarge { size: u128, limit: u64 },

    #[error("dimension mismatch: {left} categories vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("matchup has no decisive cells")]
    AllTies,

    #[error("invalid simulation config: {0}")]
    InvalidConfig(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
