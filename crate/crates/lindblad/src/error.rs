use spin_core::SpinError;
use thiserror::Error;

/// Errors from master-equation propagation.
#[derive(Debug, Error)]
pub enum LindbladError {
    #[error("integrator step underflow at t = {t_reached:.6e} of {t_final:.6e}")]
    StepUnderflow { t_reached: f64, t_final: f64 },
    #[error("duration must be finite and >= 0, got {0}")]
    InvalidDuration(f64),
    #[error("Hamiltonian must carry the Hermitian flag")]
    HamiltonianNotHermitian,
    #[error("operator is not unitary (max deviation {0:.3e})")]
    NotUnitary(f64),
    #[error("trace drift {0:.3e} exceeds tolerance")]
    TraceDrift(f64),
    #[error(transparent)]
    Spin(#[from] SpinError),
}
