use thiserror::Error;

/// Errors raised by the builders, oracles and numeric engines of this crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),

    #[error("unknown presentation variant `{0}`")]
    UnknownVariant(String),

    #[error("moduli presentations need even d (got d = {0}); pass the odd-d override to build anyway")]
    OddDegreeModuli(u32),

    #[error("unknown fixture `{0}`")]
    UnknownFixture(String),

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("capacity of {0} elements exceeded")]
    CapExceeded(usize),

    #[error("zero polynomial where a nonzero one is required")]
    ZeroPolynomial,

    #[error("polynomial division is not exact")]
    InexactDivision,

    #[error("no sign change in bracket [{lo}, {hi}]: parameters out of regime")]
    NoSignChange { lo: f64, hi: f64 },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("continuation failed for point {point}: {reason}")]
    Continuation { point: usize, reason: String },

    #[error("arithmetic overflow in {0}")]
    Overflow(&'static str),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
