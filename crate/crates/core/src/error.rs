use thiserror::Error;

/// Errors raised anywhere in the construction and verification pipeline.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("index {index} out of range for a simplex of dimension {dim}")]
    IndexOutOfRange { index: usize, dim: usize },

    #[error("product {left} * {right} is outside the rewrite rules")]
    NonNormalizable { left: String, right: String },

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("shuffle rank {rank} out of range for ({p},{q})-shuffles")]
    RankOutOfRange { rank: usize, p: usize, q: usize },

    #[error("pillar relation fails at index {index}")]
    IncompatiblePillars { index: usize },

    #[error("top and bottom term lists do not match at position {position}")]
    TermMismatch { position: usize },

    #[error("simplex of dimension {dim} needs level at least {dim}, got {level}")]
    DimensionExceeded { dim: usize, level: usize },

    #[error("domain error: {0}")]
    Domain(String),

    #[error("unknown bound kind `{0}`")]
    InvalidKind(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("term cap of {cap} exceeded")]
    TermCapExceeded { cap: u64 },
}

pub type Result<T> = std::result::Result<T, Error>;
