//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("ambient dimension mismatch: {0} vs {1}")]
    AmbientMismatch(usize, usize),
    #[error("invalid group parameters: {0}")]
    InvalidParams(String),
    #[error("subspace is not isotropic")]
    NotIsotropic,
    #[error("operation not defined for case {0}")]
    CaseMismatch(&'static str),
    #[error("invalid orbit tuple: {0}")]
    InvalidTuple(String),
    #[error("isotropic dimension r={r} out of range (max {max})")]
    RankOutOfRange { r: usize, max: usize },
    #[error("subspaces lie in different orbits: {0} vs {1}")]
    DifferentOrbits(String, String),
    #[error("partial map is not an isometry on its domain")]
    NotIsometry,
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("linearly dependent basis rows")]
    DependentBasis,
    #[error("index out of range: {0}")]
    IndexOutOfRange(usize),
    #[error("internal consistency check failed: {0}")]
    Inconsistency(String),
    #[error("no rational matching between restricted forms was found")]
    MatchingFailed,
    #[error("sampler exhausted its retry budget")]
    SamplerExhausted,
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
