use thiserror::Error;

/// Errors raised by the engine. Validators report failures through
/// [`Error::Validation`] with a human readable location.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("rig axiom `{axiom}` fails at {instance}")]
    RigAxiom { axiom: String, instance: String },
    #[error("object {value} is outside the universe bound {bound}")]
    OutOfRange { value: u64, bound: u64 },
    #[error("size mismatch: {0}")]
    SizeMismatch(String),
    #[error("morphisms not composable: {0}")]
    NotComposable(String),
    #[error("not invertible: {0}")]
    NotInvertible(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("truncation too low: need {needed}, have {have}")]
    Truncation { needed: String, have: String },
    #[error("invalid presentation: {0}")]
    Presentation(String),
    #[error("validation failed: {0}")]
    Validation(String),
    #[error("invalid input: {0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;
