use thiserror::Error;

/// Every failure the library reports. Domain aborts carry a diagnostic string.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid quiver: {0}")]
    InvalidQuiver(String),
    #[error("quiver is disconnected")]
    Disconnected,
    #[error("no null root: {0}")]
    NoNullRoot(String),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("invalid algebra: {0}")]
    InvalidAlgebra(String),
    #[error("invalid module: {0}")]
    InvalidModule(String),
    #[error("modules are over different algebras")]
    AlgebraMismatch,
    #[error("not split over the base field: {0}")]
    NotSplit(String),
    #[error("element is not an idempotent")]
    NotIdempotent,
    #[error("module has a summand outside add(A2) at the top: {0}")]
    NotInModP(String),
    #[error("census too large: {0}")]
    CensusTooLarge(String),
    #[error("generic type unstable, increase trials")]
    GenericUnstable,
    #[error("certification failed: {0}")]
    Certification(String),
    #[error("repeated tube parameter")]
    RepeatedParameter,
    #[error("no source idempotent: {0}")]
    NoSourceIdempotent(String),
    #[error("outside the Dynkinian/Euclidean class: {0}")]
    OutsideClass(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("malformed witness: {0}")]
    MalformedWitness(String),
    #[error("internal consistency check failed: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
