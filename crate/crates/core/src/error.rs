use thiserror::Error;

use crate::rootsys::SimpleType;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid Cartan type {family}{rank}")]
    InvalidType { family: char, rank: usize },

    #[error("dimension mismatch: expected {expected}, got {actual}")]
    DimensionMismatch { expected: usize, actual: usize },

    #[error("rank mismatch: {0}")]
    RankMismatch(String),

    #[error("weight {0:?} is not dominant")]
    NotDominant(Vec<i64>),

    #[error("resource limit exceeded: {0}")]
    ResourceLimit(String),

    #[error("character is degenerate: factor {factor} acts trivially")]
    Degenerate { factor: usize },

    #[error("factor {0} is not of type A")]
    NotTypeA(SimpleType),

    #[error("involution does not stabilize the weight multiset")]
    NotStable,

    #[error("invalid involution: {0}")]
    InvalidInvolution(String),

    #[error("parameter out of range: {0}")]
    OutOfRange(String),

    #[error("ambient group mismatch")]
    AmbientMismatch,

    #[error("profile mismatch: {0}")]
    ProfileMismatch(String),

    #[error("malformed Goursat data: {0}")]
    MalformedPartition(String),

    #[error("unknown verification case `{0}`")]
    UnknownCase(String),

    #[error("parse error: {0}")]
    Parse(String),
}
