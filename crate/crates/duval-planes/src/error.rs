use thiserror::Error;

/// Errors shared by every module of the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("invalid blow-up center: {0}")]
    InvalidCenter(String),

    #[error("classes live on different lattices")]
    LatticeMismatch,

    /// All quantities in scope are small; an overflow signals a usage bug,
    /// not a capacity need.
    #[error("integer overflow in lattice arithmetic")]
    Overflow,

    #[error("branch class is not 2-divisible (odd coefficient on {0})")]
    OddBranchClass(String),

    #[error("inconsistent branch data: {0}")]
    InconsistentBranch(String),

    #[error("pencil member meets the branch in an odd number of points")]
    OddBranchIntersection,

    #[error("class is not a pencil fibre (self-intersection must vanish)")]
    NotAPencil,

    #[error("inadmissible configuration: {0}")]
    Inadmissible(String),

    #[error("bad conic evidence: {0}")]
    BadEvidence(String),

    #[error("bad point: homogeneous coordinates must not all vanish")]
    BadPoint,

    #[error("not convertible: {0}")]
    NotConvertible(String),

    #[error("invalid transformation: {0}")]
    InvalidTransform(String),
}

pub type Result<T> = std::result::Result<T, Error>;
