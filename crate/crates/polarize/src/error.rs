use thiserror::Error;

/// Errors raised by contract violations and invalid inputs.
///
/// Failed numeric checks are never errors; they are reported as findings
/// in the owning report type.
#[derive(Debug, Clone, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("invalid vector: {0}")]
    InvalidVector(String),
    #[error("invalid norm descriptor: {0}")]
    InvalidDescriptor(String),
    #[error("vectors are linearly dependent (residual {residual:.3e})")]
    DependentVectors { residual: f64 },
    #[error("vector is not unit under the given norm (‖x‖ = {norm})")]
    NotUnit { norm: f64 },
    #[error("argument out of domain: {0}")]
    Domain(String),
    #[error("random generation failed after {retries} retries: {reason}")]
    GenerationFailed { retries: u32, reason: String },
}
