use thiserror::Error;

#[derive(Debug, Error)]
pub enum AlgebraError {
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("series expansion undefined: denominator vanishes at q = 0")]
    PoleAtZero,
    #[error("singular matrix")]
    Singular,
    #[error("inexact division in fraction-free elimination")]
    InexactDivision,
    #[error("cannot parse rational number {0:?}")]
    Parse(String),
}

#[derive(Debug, Error)]
pub enum ArrangementError {
    #[error("rows have inconsistent lengths")]
    Ragged,
    #[error("hyperplane {0} has a zero normal")]
    ZeroNormal(usize),
    #[error("duplicate hyperplane: rows {0} and {1} are proportional")]
    DuplicateHyperplane(usize, usize),
    #[error("too many hyperplanes ({0}); at most 64 are supported")]
    TooManyHyperplanes(usize),
    #[error("not a flat of this arrangement")]
    NotAFlat,
    #[error("unknown catalog name {0:?}")]
    UnknownCatalog(String),
    #[error("malformed arrangement input: {0}")]
    Input(String),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

/// A theorem-level identity that failed on concrete data.
#[derive(Debug, Error)]
#[error("{check} failed: {detail}")]
pub struct CheckFailure {
    pub check: String,
    pub detail: String,
}

impl CheckFailure {
    pub fn new(check: impl Into<String>, detail: impl Into<String>) -> Self {
        CheckFailure {
            check: check.into(),
            detail: detail.into(),
        }
    }
}

#[derive(Debug, Error)]
pub enum Error {
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Arrangement(#[from] ArrangementError),
    #[error(transparent)]
    Check(#[from] CheckFailure),
    #[error("chain budget exceeded at length {length}: {count} generators (cap {cap}); lower the length cap")]
    Budget { length: usize, count: u64, cap: u64 },
    #[error("{stage}: {message}")]
    Stage { stage: String, message: String },
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
