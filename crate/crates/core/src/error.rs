use alloc::string::String;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("inadmissible Cartan type: {0}")]
    InadmissibleType(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("word is not a reduced expression of w0: {0}")]
    NotReduced(String),
    #[error("weight is not dominant")]
    NotDominant,
    #[error("degree function is outside the classical degree cone")]
    OutsideClassicalCone,
    #[error("system is unbounded or infeasible: {0}")]
    Unbounded(String),
    #[error("search bound {0} reached")]
    BoundReached(u64),
    #[error("specialized results disagree between q0 = {0} and q0 = {1}")]
    SpecializationMismatch(String, String),
    #[error("internal error: {0}")]
    Internal(String),
}

pub type Result<T> = core::result::Result<T, Error>;
