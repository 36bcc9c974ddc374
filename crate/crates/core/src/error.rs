//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid rational literal `{0}`")]
    ParseRational(String),

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("empty index list")]
    EmptyIndexList,

    #[error("index {index} out of range for {n_vars} variables")]
    IndexOutOfRange { index: usize, n_vars: usize },

    #[error("block multiplicities inconsistent: {0}")]
    InvalidMultiplicities(String),

    #[error("axis mismatch: {0} vs {1}")]
    AxisMismatch(usize, usize),

    #[error("variable-count mismatch: {0} vs {1}")]
    VarCountMismatch(String, String),

    #[error("series truncated below required degree: need {needed}, cap is {cap}")]
    Truncation { needed: usize, cap: usize },

    #[error("series is not in limit mode")]
    NotLimitMode,

    #[error("polynomial is not symmetric in its variables")]
    NotSymmetric,

    #[error("polynomial has nonzero constant term")]
    NonzeroConstant,

    #[error("polynomial is not an axial series in variable {0}")]
    NotAxial(usize),

    #[error("interpolation residual nonzero at N = {0}")]
    InterpolationResidual(usize),

    #[error("not enough sample points: need {needed}, got {got}")]
    NotEnoughPoints { needed: usize, got: usize },

    #[error("estimated cost {cost} exceeds budget {budget}")]
    BudgetExceeded { cost: u128, budget: u128 },

    #[error("eigensolver failed to converge")]
    EigenFailure,

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("cumulant spec: {0}")]
    SpecFormat(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
