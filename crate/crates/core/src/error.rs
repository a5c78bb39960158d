use thiserror::Error;

use crate::lattice::LatticePoint;
use crate::semigroup::AxiomReport;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("malformed input: {0}")]
    MalformedInput(String),

    #[error("semigroup axioms violated:\n{0}")]
    AxiomViolation(AxiomReport),

    #[error("dimension mismatch: expected {expected} coordinates, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("index set must be nonempty")]
    EmptyIndexSet,

    #[error("branch index {index} out of range for {branches} branches")]
    IndexOutOfRange { index: usize, branches: usize },

    #[error("index k = {0} must not belong to the index set J")]
    InvalidK(usize),

    #[error("invalid index combination: {0}")]
    InvalidCombo(String),

    #[error("{0} is not a maximal point")]
    NotMaximal(LatticePoint),

    #[error("{0} is not a point of the semigroup")]
    NotMember(LatticePoint),

    #[error("{0} has a mixed kind")]
    MixedKind(LatticePoint),

    #[error("expected {expected} branches, found {found}")]
    WrongArity { expected: usize, found: usize },

    #[error("lemma violated: {0}")]
    LemmaViolated(String),

    #[error("codimension function is path dependent at {0}; not a value semigroup")]
    PathDependence(LatticePoint),

    #[error("inexact division by (q - 1) at {point}: remainder {remainder}")]
    InexactDivision { point: LatticePoint, remainder: i64 },

    #[error("{0} is not a prime")]
    NotPrime(u32),

    #[error("algebra closure did not stabilize within {0} rounds")]
    NotClosed(usize),

    #[error("generators do not span the identity element")]
    NonUnital,

    #[error("algebra is not local: constant terms span dimension {0}")]
    NonLocal(usize),

    #[error("conductor could not be certified: {0}")]
    ConductorNotCertified(String),

    #[error("truncation too small to answer faithfully at {0}")]
    TruncationUnsafe(LatticePoint),

    #[error("enumeration of {size} elements exceeds the work limit {limit}")]
    WorkLimitExceeded { size: u128, limit: u128 },

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    /// Mathematical violations exit with 1, input and I/O problems with 2.
    pub fn exit_code(&self) -> u8 {
        match self {
            Error::AxiomViolation(_)
            | Error::LemmaViolated(_)
            | Error::PathDependence(_)
            | Error::InexactDivision { .. } => 1,
            _ => 2,
        }
    }
}
