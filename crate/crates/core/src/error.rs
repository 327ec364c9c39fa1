use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("order bound exceeded: closure passed {bound} elements")]
    OrderBoundExceeded { bound: usize },

    #[error("degree mismatch: expected {expected}, got {got}")]
    DegreeMismatch { expected: usize, got: usize },

    #[error("not a subgroup of the ambient group")]
    NotASubgroup,

    #[error("group of order {order} is not a {p}-group")]
    NotAPGroup { p: u64, order: usize },

    #[error("search bound exceeded: {0}")]
    SearchBoundExceeded(String),

    #[error("subgroup is not normal")]
    NotNormal,

    #[error("subgroup is not strongly closed")]
    NotStronglyClosed,

    #[error("unknown catalog name: {0}")]
    UnknownName(String),

    #[error("no decomposition found for morphism")]
    NoDecomposition,

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("internal invariant violated: {0}")]
    InternalInvariant(String),
}

pub type Result<T> = std::result::Result<T, Error>;
