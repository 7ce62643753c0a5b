use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("generator list is empty")]
    EmptyInput,
    #[error("generator {0} is not a positive integer")]
    InvalidGenerator(i128),
    #[error("generators have gcd {0} > 1; use normalize for non-primitive input")]
    NonPrimitive(i128),
    #[error("{0} is not a nonzero element of the semigroup")]
    NotAnElement(i128),
    #[error("operation undefined for the trivial semigroup <1>")]
    TrivialSemigroup,
    #[error("relative ideals have different base semigroups")]
    BaseMismatch,
    #[error("semigroup is not 3-generated (embedding dimension {0})")]
    NotThreeGenerated(usize),
    #[error("semigroup is symmetric; no structure matrix exists")]
    SymmetricInput,
    #[error("structure matrix slot pattern failed in every labeling")]
    LabelMismatch,
    #[error("bad parameters: {0}")]
    BadParams(String),
    #[error("gcd precondition failed: {0}")]
    GcdFail(String),
    #[error("degenerate parameters: {0}")]
    Degenerate(String),
    #[error("shift {j} does not exceed the threshold {k}")]
    ThresholdViolation { j: i128, k: i128 },
    #[error("bad scan range: {0}")]
    BadRange(String),
    #[error("integer overflow in {0}")]
    Overflow(&'static str),
    #[error("value {0} exceeds the configured integer-width guard")]
    MagnitudeGuard(i128),
    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),
    #[error("predicted invariant failed: {0}")]
    PredictionFailed(String),
}

pub type Result<T> = std::result::Result<T, Error>;
