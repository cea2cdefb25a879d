use thiserror::Error;

/// Errors shared by every module in the crate.
#[derive(Debug, Error)]
pub enum Error {
    /// Operand shapes do not conform (matmul, attention, adapter, shuffle).
    #[error("shape mismatch: {0}")]
    Shape(String),

    /// Input violates a domain invariant (non-finite value, bad id, bad
    /// distribution).
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// A configuration is internally inconsistent (e.g. head count does not
    /// divide the model dimension).
    #[error("invalid config: {0}")]
    Config(String),

    /// Byte-level parse failure; `offset` is the byte position within the
    /// input at which decoding stopped.
    #[error("parse error at byte {offset}: {message}")]
    Parse { offset: usize, message: String },
}

pub type Result<T> = std::result::Result<T, Error>;
