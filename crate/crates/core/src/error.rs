use num_bigint::BigInt;
use thiserror::Error;

/// Everything that can go wrong in this crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("not a sublattice: basis row {row} lies outside the ambient lattice")]
    NotSublattice { row: usize },

    #[error("relations not preserved: sigma maps relation row {relation} to {witness:?}, outside the relation lattice")]
    RelationsNotPreserved {
        relation: usize,
        witness: Vec<BigInt>,
    },

    #[error("order violation: sigma^n fixes generator {generator} only up to {witness:?}, not a relation")]
    OrderViolation {
        generator: usize,
        witness: Vec<BigInt>,
    },

    #[error("wrong group order: expected n = {expected}, got n = {found}")]
    WrongGroupOrder { expected: u64, found: u64 },

    #[error("group order mismatch: {left} vs {right}")]
    GroupOrderMismatch { left: u64, right: u64 },

    #[error("module is infinite; brute force needs a finite module")]
    ModuleInfinite,

    #[error("module has {order} elements, above the enumeration bound {bound}")]
    BoundExceeded { order: BigInt, bound: u64 },

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("permutation order does not divide n = {n}")]
    OrderMismatch { n: u64 },

    #[error("{0} is not squarefree")]
    NotSquarefree(BigInt),

    #[error("D = {0} is too small; need D > 1")]
    DTooSmall(BigInt),

    #[error("Pell variant {variant} unavailable for D = {d}")]
    VariantUnavailable { variant: &'static str, d: BigInt },

    #[error("{0} is not prime")]
    NotPrime(BigInt),

    #[error("place set must contain the infinite place")]
    MissingInfinitePlace,
}

impl Error {
    /// Stable upper-case identifier, e.g. `NOT_SQUAREFREE`.
    pub fn code(&self) -> &'static str {
        match self {
            Error::DimensionMismatch(_) => "DIMENSION_MISMATCH",
            Error::NotSublattice { .. } => "NOT_SUBLATTICE",
            Error::RelationsNotPreserved { .. } => "RELATIONS_NOT_PRESERVED",
            Error::OrderViolation { .. } => "ORDER_VIOLATION",
            Error::WrongGroupOrder { .. } => "WRONG_GROUP_ORDER",
            Error::GroupOrderMismatch { .. } => "GROUP_ORDER_MISMATCH",
            Error::ModuleInfinite => "MODULE_INFINITE",
            Error::BoundExceeded { .. } => "BOUND_EXCEEDED",
            Error::InvalidPermutation(_) => "INVALID_PERMUTATION",
            Error::OrderMismatch { .. } => "ORDER_MISMATCH",
            Error::NotSquarefree(_) => "NOT_SQUAREFREE",
            Error::DTooSmall(_) => "D_TOO_SMALL",
            Error::VariantUnavailable { .. } => "VARIANT_UNAVAILABLE",
            Error::NotPrime(_) => "NOT_PRIME",
            Error::MissingInfinitePlace => "MISSING_INFINITE_PLACE",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
