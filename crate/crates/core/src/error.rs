use thiserror::Error;

/// Errors produced by the exact-algebra layers.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("matrix dimension mismatch: {0} vs {1}")]
    DimMismatch(usize, usize),
    #[error("variable count mismatch: {0} vs {1}")]
    VarMismatch(usize, usize),
    #[error("direction index {index} out of range for dimension {dim}")]
    IndexOutOfRange { index: usize, dim: usize },
    #[error("operation requires commutative (1x1) coefficients, got dimension {0}")]
    NoncommutativeInput(usize),
    #[error("deformation tensor is not invertible")]
    NonInvertibleEta,
    #[error("deformation tensor is not symmetric")]
    NonSymmetricEta,
    #[error("parse error: {0}")]
    Parse(String),
    #[error("internal invariant breach: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, AlgebraError>;
