use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RileyError {
    #[error("TAG_MISMATCH: cannot combine {0} with {1}")]
    TagMismatch(&'static str, &'static str),
    #[error("NOT_SYMMETRIC: sequence differs from its reverse at position {0}")]
    NotSymmetric(usize),
    #[error("ODD_LENGTH: sequence length {0} is not even")]
    OddLength(usize),
    #[error("NON_UNIT_ENTRY: entry {0} is not +1 or -1")]
    NonUnitEntry(usize),
    #[error("INVALID_FRACTION: {0}")]
    InvalidFraction(String),
    #[error("PARSE: {0}")]
    Parse(String),
    #[error("BAD_M0: {0}")]
    BadM0(String),
    #[error("DEGENERATE: resultant vanishes identically (common factor {0})")]
    Degenerate(String),
    #[error("STRATEGY_MISMATCH: PRS and evaluation-interpolation disagree")]
    StrategyMismatch,
    #[error("IDENTITY_FAILED: {0}")]
    IdentityFailed(String),
    #[error("NONINTEGRAL: {0}")]
    NonIntegral(String),
    #[error("RELATION_FAILED: {0}")]
    RelationFailed(String),
    #[error("LONGITUDE_MISMATCH: {0}")]
    LongitudeMismatch(String),
    #[error("EMPTY_INPUT: resultant of a zero polynomial")]
    EmptyInput,
    #[error("USAGE: {0}")]
    Usage(String),
}

impl RileyError {
    pub fn code(&self) -> &'static str {
        match self {
            RileyError::TagMismatch(..) => "TAG_MISMATCH",
            RileyError::NotSymmetric(_) => "NOT_SYMMETRIC",
            RileyError::OddLength(_) => "ODD_LENGTH",
            RileyError::NonUnitEntry(_) => "NON_UNIT_ENTRY",
            RileyError::InvalidFraction(_) => "INVALID_FRACTION",
            RileyError::Parse(_) => "PARSE",
            RileyError::BadM0(_) => "BAD_M0",
            RileyError::Degenerate(_) => "DEGENERATE",
            RileyError::StrategyMismatch => "STRATEGY_MISMATCH",
            RileyError::IdentityFailed(_) => "IDENTITY_FAILED",
            RileyError::NonIntegral(_) => "NONINTEGRAL",
            RileyError::RelationFailed(_) => "RELATION_FAILED",
            RileyError::LongitudeMismatch(_) => "LONGITUDE_MISMATCH",
            RileyError::EmptyInput => "EMPTY_INPUT",
            RileyError::Usage(_) => "USAGE",
        }
    }
}
