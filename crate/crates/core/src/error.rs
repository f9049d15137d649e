use thiserror::Error;

/// Errors shared across the toolkit. Everything here is a hard failure of a
/// stated precondition or an internal cross-check; ordinary negative results
/// (infeasible system, non-member class verdict, ray termination) are encoded
/// in return types instead.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("singular pivot block: det A[{0}][{0}] = 0")]
    SingularPivot(String),

    #[error("strict inequalities are only supported in homogeneous systems (all right-hand sides zero)")]
    UnsupportedStrictSystem,

    #[error("column adequacy modes disagree: theorem mode says {theorem}, direct mode says {direct}")]
    ModeDisagreement { theorem: bool, direct: bool },

    #[error("degenerate q: {0}")]
    DegenerateQ(String),

    #[error("enumeration cap exceeded: n = {n} > cap = {cap} (the operation walks all 2^n supports)")]
    CapExceeded { n: usize, cap: usize },

    #[error("not a valid solution: {0}")]
    InvalidSolution(String),

    #[error("internal consistency check failed: {0}")]
    Inconsistent(String),
}

pub type Result<T> = std::result::Result<T, Error>;
