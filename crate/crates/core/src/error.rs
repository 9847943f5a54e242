use thiserror::Error;

/// Errors raised by ring arithmetic, the Drazin engine and the theorem suite.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("ring mismatch: {left} vs {right}")]
    RingMismatch { left: String, right: String },

    #[error("matrix dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("invalid ring descriptor: {0}")]
    InvalidRing(String),

    #[error("invalid element: {0}")]
    InvalidElement(String),

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("resource limit: {what} is {size}, cap is {cap}")]
    ResourceLimit { what: &'static str, size: String, cap: u64 },

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("element is not Drazin invertible ({method})")]
    NotInvertible { method: &'static str },

    #[error("Drazin membership is undecidable for this ring")]
    Undecidable,

    #[error("Drazin axiom violated: {0}")]
    AxiomViolation(String),

    /// An invariant that must hold in any correctly implemented ring failed.
    #[error("defect: {0}")]
    Defect(String),
}

pub type Result<T> = std::result::Result<T, Error>;
