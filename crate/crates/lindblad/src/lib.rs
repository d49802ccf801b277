//! Lindblad master-equation propagation for the entangling stages, exact
//! unitary application, driven one-axis-twisting evolution, and a first-order
//! trotterization check.
//!
//! The dissipator is fixed to axis-dependent local dephasing with jump
//! operators `L_j^nu = sigma_j^nu / 2` at rates `gamma_nu`. With that
//! prefactor the single-qubit coherence `<sigma^z>` decays as
//! `exp(-(gamma_x/2 + gamma_y/2) t)`; rates are never silently rescaled.

mod dense;
mod error;
mod noise;
pub mod ode;
mod propagate;

pub use dense::LindbladOp;
pub use error::LindbladError;
pub use noise::{IntegratorConfig, NoiseSpec, OdeMethod};
pub use propagate::{apply_unitary, evolve, evolve_driven, trotter_check};
