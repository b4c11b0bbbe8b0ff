use alloc::string::String;

use crate::charlib::QPolynomial;
use crate::rootsys::{Family, Weight};

/// Errors raised by the computational core.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("rank {rank} is not admissible for type {family:?}")]
    InvalidRank { family: Family, rank: usize },

    #[error("dimension mismatch: expected {expected} coordinates, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("pairing with a zero vector is undefined")]
    ZeroVector,

    #[error("pairing is not integral")]
    NonIntegralPairing,

    #[error("simple index {index} out of range (rank {rank})")]
    IndexOutOfRange { index: usize, rank: usize },

    #[error("Weyl group of order {order} exceeds the enumeration cap {cap}")]
    GroupTooLarge { order: u64, cap: u64 },

    #[error("module of dimension {dim} exceeds the cap {cap}")]
    TooLarge { dim: i64, cap: i64 },

    #[error("weight {0} is not dominant")]
    NotDominant(Weight),

    #[error("weight {0} is not dominant for the Levi subsystem")]
    NotJDominant(Weight),

    #[error("character is not W-invariant at weight {0}")]
    NotWInvariant(Weight),

    #[error("element is not a minimal coset representative")]
    NotInJW,

    #[error("negative multiplicity {poly} at {sigma}: vanishing hypotheses fail for this configuration")]
    AssumptionViolated { sigma: Weight, poly: QPolynomial },

    #[error("precondition failed: {0}")]
    PreconditionFailed(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("partition sizes differ: {left} vs {right}")]
    SizeMismatch { left: usize, right: usize },
}

pub type Result<T> = core::result::Result<T, Error>;
