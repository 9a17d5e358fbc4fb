//! Shared error type for the library.

use thiserror::Error;

/// Errors surfaced by the exact-arithmetic operations.
///
/// Guard violations (`*TooLarge`, `*Bound*`) are resource limits on
/// exhaustive scans, distinct from malformed input and from internal
/// verification failures (which indicate a bug, never user error).
#[derive(Debug, Error, PartialEq, Eq)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("the zero vector does not define a binomial")]
    ZeroVector,

    #[error("empty generator list")]
    EmptyGenerators,

    #[error("monomial exponents must be nonnegative")]
    NegativeExponent,

    #[error("grading vector entries must be strictly positive")]
    NonPositiveWeight,

    #[error("zero polynomial rejected")]
    ZeroPolynomial,

    #[error("lattice rank is {rank}, operation requires rank {required}")]
    RankMismatch { rank: usize, required: usize },

    #[error("lattice is not homogeneous with respect to the given grading")]
    NotHomogeneous,

    #[error("binomial is not homogeneous")]
    NonHomogeneousBinomial,

    #[error("matrix is not unimodular")]
    NotUnimodular,

    #[error("vector is not in the lattice spanned by the generators")]
    MembershipHypothesis,

    #[error("internal certificate verification failed: {0}")]
    InternalVerification(String),

    #[error("ambient dimension {dim} exceeds the subset-scan bound {bound}")]
    SubsetScanBound { dim: usize, bound: usize },

    #[error("search space of {size} candidates exceeds the bound {bound}")]
    SearchSpaceTooLarge { size: u128, bound: u128 },

    #[error("semigroup membership scan up to {target} exceeds the bound {bound}")]
    SemigroupScanBound { target: u128, bound: u128 },

    #[error("curve weights must be strictly positive")]
    NonPositiveCurveWeight,

    #[error("curve weight does not fit the supported range")]
    CurveWeightTooLarge,

    #[error("{0} is not a prime power")]
    NotPrimePower(u64),

    #[error("field size {q} exceeds the supported bound {bound}")]
    FieldTooLarge { q: u64, bound: u64 },

    #[error("point enumeration of {size} tuples exceeds the bound {bound}")]
    EnumerationTooLarge { size: u128, bound: u128 },

    #[error("{count} monomials of degree {degree} exceed the bound {bound}")]
    MonomialCountTooLarge { count: u128, degree: u64, bound: u128 },

    #[error("codeword scan of {size} words exceeds the bound {bound}")]
    CodewordScanTooLarge { size: u128, bound: u128 },

    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    /// True for resource-guard violations, as opposed to malformed input.
    pub fn is_guard(&self) -> bool {
        matches!(
            self,
            Error::SubsetScanBound { .. }
                | Error::SearchSpaceTooLarge { .. }
                | Error::SemigroupScanBound { .. }
                | Error::CurveWeightTooLarge
                | Error::FieldTooLarge { .. }
                | Error::EnumerationTooLarge { .. }
                | Error::MonomialCountTooLarge { .. }
                | Error::CodewordScanTooLarge { .. }
        )
    }

    /// True for failures that can only be caused by a library bug.
    pub fn is_internal(&self) -> bool {
        matches!(self, Error::InternalVerification(_))
    }
}
