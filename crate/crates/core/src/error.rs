use thiserror::Error;

/// Errors surfaced by the engine. Variants in the `*Violation` family flag
/// failures of exact identities that are theorems for valid inputs; hitting
/// one means a construction bug, not bad user data.
#[derive(Debug, Error)]
pub enum EngineError {
    #[error("division by zero in Q(i)")]
    DivisionByZero,
    #[error("ambient dimension mismatch: {0}")]
    DimensionError(String),
    #[error("not a chain map: {0}")]
    NotAChainMap(String),
    #[error("structure equations are not integrable: {0}")]
    NotIntegrable(String),
    #[error("d^2 != 0, not a Lie algebra: {0}")]
    NotALieAlgebra(String),
    #[error("parse error: {0}")]
    ParseError(String),
    #[error("complex dimension {0} outside 1..=5; pass allow_large to override")]
    SizeGuard(usize),
    #[error("twist form is not Bott-Chern closed: {0}")]
    NotBottChernClosed(String),
    #[error("metric gram matrix is not Hermitian positive-definite: {0}")]
    BadMetric(String),
    #[error("Gram-based and star-based adjoints disagree for {0}")]
    AdjointMismatch(String),
    #[error("harmonic space dimension disagrees with cohomology: {0}")]
    HodgeIsoViolation(String),
    #[error("star-duality identity failed: {0}")]
    DualityViolation(String),
    #[error("Kahler identity failed: {0}")]
    KahlerIdentityViolation(String),
    #[error("metric is not Kahler; the requested identities only apply to Kahler metrics")]
    NotKahler,
    #[error("lemma equivalence suite is internally inconsistent: {0}")]
    EquivalenceViolation(String),
    #[error("Frolicher-type inequality violated: {0}")]
    InequalityViolation(String),
    #[error("the lemma holds for this twist; no witness exists")]
    NoWitness,
    #[error("unknown catalog model `{0}`")]
    UnknownModel(String),
}

pub type Result<T> = std::result::Result<T, EngineError>;
