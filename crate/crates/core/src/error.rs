use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("input is empty")]
    EmptyInput,
    #[error("length mismatch: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },
    #[error("convolution result may exceed the exact integer range")]
    PrecisionBound,
    #[error("operation requires solid strings (no wildcards)")]
    SolidOnly,
    #[error("epsilon must lie in (0, 0.5], got {0}")]
    BadEpsilon(f64),
    #[error("internal invariant violated: {0}")]
    InternalInvariant(String),
}

pub type Result<T> = std::result::Result<T, Error>;
