use thiserror::Error;

/// Errors surfaced by the engine.
#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("group order cap of {cap} exceeded during closure")]
    OrderCapExceeded { cap: usize },

    #[error("search space cap of {cap} exceeded")]
    SearchCapExceeded { cap: usize },

    #[error("not a subgroup: {0}")]
    NotASubgroup(String),

    #[error("invalid permutation: {0}")]
    InvalidPerm(String),

    #[error("invalid ramification data: {0}")]
    InvalidRamification(String),

    #[error("genus {genus} exceeds the enumeration bound {bound}")]
    GenusBound { genus: usize, bound: usize },

    #[error("parity is not constant on an orbit; the maps do not preserve the quadratic form")]
    ParityNotConstant,

    #[error("matrix is not invertible over GF(2)")]
    NotInvertible,

    #[error("A^n is not the identity over GF(2)")]
    NotPeriodic,

    #[error("generator maps do not compose to the identity")]
    ProductNotIdentity,

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
