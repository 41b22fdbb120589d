use thiserror::Error;

/// Every failure the library can report.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("odd power of v cannot be evaluated at q = {q}, which is not a perfect square")]
    OddExponentAtNonSquare { q: u64 },

    #[error("rank mismatch: expected {expected}, found {found}")]
    RankMismatch { expected: usize, found: usize },

    #[error("Weyl group closure exceeded {bound} elements; the datum is not of finite type")]
    NotFiniteType { bound: usize },

    #[error("coweight {0} is not antidominant")]
    NotAntidominant(String),

    #[error("Bernstein decomposition failed: {0}")]
    SolveFailure(String),

    #[error("h * e_K is not constant on the coset of {0}")]
    NotRightKInvariant(String),

    #[error("element is not bi-K-invariant: {0}")]
    NotSpherical(String),

    #[error("element is not invariant under the dot action: {0}")]
    NotInvariant(String),

    #[error("spherical decomposition left a remainder: {0}")]
    NotIntegral(String),

    #[error("verification layer `{layer}` failed: {detail}")]
    CheckFailure { layer: String, detail: String },

    #[error("evaluation at {0} leaves the truncated tree")]
    BoundaryClipped(String),

    #[error("conductor {0} is below 2")]
    ConductorTooSmall(u32),

    #[error("configuration error: {0}")]
    ConfigError(String),

    #[error("parse error: {0}")]
    ParseError(String),

    #[error("invalid root datum: {0}")]
    InvalidDatum(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
