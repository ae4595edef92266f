use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid weight: {0}")]
    InvalidWeight(String),
    #[error("rank must be at least {min}, got {got}")]
    RankTooSmall { min: usize, got: usize },
    #[error("point has {got} coordinates, ambient dimension is {expected}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("segment family is not intersection-closed")]
    NotIntersectionClosed,
    #[error("segment family is not symmetric")]
    NotSymmetric,
    #[error("triangle is not symmetric under the diagonal reflection")]
    AsymmetricPoint,
    #[error("weight is singular (some coordinate is zero); a regular weight is required")]
    SingularWeight,
    #[error("point violates the halfspace system")]
    Infeasible,
    #[error("point is not a vertex (tight rows have rank {rank} < dimension {dim})")]
    NotAVertex { rank: usize, dim: usize },
    #[error("enumeration budget of {budget} exceeded")]
    BudgetExceeded { budget: u64 },
    #[error("unsupported halfspace system: {0}")]
    UnsupportedRows(String),
}
