use thiserror::Error;

/// Errors produced while constructing spin-system objects.
#[derive(Debug, Error)]
pub enum SpinError {
    #[error("invalid spin system: {0}")]
    InvalidSystem(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("operator is not Hermitian (max deviation {0:.3e})")]
    NotHermitian(f64),
    #[error("operator is not unitary (max deviation {0:.3e})")]
    NotUnitary(f64),
    #[error("state is not a valid density matrix: {0}")]
    InvalidState(String),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("dense representation limited to {max} qubits, got {got}")]
    TooLarge { max: usize, got: usize },
}
