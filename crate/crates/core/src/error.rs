use thiserror::Error;

/// Errors shared by all modules of the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("entries {0:?} are not weakly decreasing")]
    NotDominant(Vec<i64>),
    #[error("parts {0:?} do not form a partition (positive, weakly decreasing)")]
    NotPartition(Vec<i64>),
    #[error("weight has length {found}, expected {expected}")]
    LengthMismatch { expected: usize, found: usize },
    #[error("empty interval [{lo}, {hi})")]
    EmptyInterval { lo: i64, hi: i64 },
    #[error("window parameter {delta} is non-generic: {delta} \u{b1} {width}/2 meets the weight lattice")]
    NonGenericDelta { delta: String, width: usize },
    #[error("polynomial in {k} variables is not symmetric")]
    NotSymmetric { k: usize },
    #[error("rank order violated: {0}")]
    RankOrder(String),
    #[error("exterior power degree {degree} exceeds {max}")]
    DegreeOutOfRange { degree: usize, max: usize },
    #[error("inconsistent slot ranks: {0}")]
    InconsistentRanks(String),
    #[error("cancellation matching failed: {0}")]
    MatchingFailure(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
}

pub type Result<T> = std::result::Result<T, Error>;
