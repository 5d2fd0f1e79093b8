use thiserror::Error;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    #[error("invalid primitivity: exponent {k} is not coprime to {n}")]
    InvalidPrimitivity { n: u64, k: i64 },
    #[error("domain error: {0}")]
    Domain(String),
    #[error("conductor mismatch: {0} vs {1}")]
    ConductorMismatch(u32, u32),
    #[error("shape error: expected {expected}, found {found}")]
    Shape { expected: String, found: String },
    #[error("map is not invertible (rank {rank} of {size})")]
    NonInvertible { rank: usize, size: usize },
    #[error("configuration error: {0}")]
    Configuration(String),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("map is not convolution invertible")]
    NotConvolutionInvertible,
    #[error("not a bialgebra admissible tuple: axiom `{axiom}` fails{detail}")]
    NotABat { axiom: String, detail: String },
    #[error("projection system does not split the bialgebra: {0}")]
    NotASplitting(String),
    #[error("invalid idempotent system: {0}")]
    InvalidSystem(String),
    #[error("parameter error: {0}")]
    Parameter(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("internal consistency error: {0}")]
    InternalConsistency(String),
    #[error("parse error at {pointer}: {message}")]
    Parse { pointer: String, message: String },
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn shape(expected: impl std::fmt::Display, found: impl std::fmt::Display) -> Self {
        Error::Shape {
            expected: expected.to_string(),
            found: found.to_string(),
        }
    }
}
