use thiserror::Error;

/// Errors raised by the semigroup operations and the checkers built on them.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CuError {
    #[error("mixed instance: {0}")]
    MixedInstance(String),
    #[error("element not valid in {instance}: {reason}")]
    InvalidElement { instance: String, reason: String },
    #[error("invalid chain: {0}")]
    InvalidChain(String),
    #[error("{instance} lacks capability `{capability}`")]
    CapabilityMissing {
        instance: String,
        capability: &'static str,
    },
    #[error("grid too large: {count} elements exceeds the bound {bound}")]
    GridTooLarge { count: u128, bound: u64 },
    #[error("invalid sample specification: {0}")]
    InvalidSample(String),
    #[error("inconclusive: {0}")]
    Inconclusive(String),
    #[error("{0} has no strongly soft element of equal rank")]
    NotRealizable(String),
    #[error("{0} is not full")]
    NotFull(String),
    #[error("inclusion is not an embedding: {0}")]
    NotAnEmbedding(String),
    #[error("unknown property `{0}`")]
    UnknownProperty(String),
    #[error("invalid instance: {0}")]
    Spec(String),
    #[error("internal verification failed: {0}")]
    Internal(String),
}

pub type Result<T, E = CuError> = std::result::Result<T, E>;
