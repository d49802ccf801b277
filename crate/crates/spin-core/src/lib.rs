//! Core spin-system primitives: problem geometry, power-law couplings,
//! entangling Hamiltonians, collective operators, global rotations, and
//! reference states on the full `2^N` computational basis.
//!
//! Everything here is dense and immutable after construction. Dense storage is
//! deliberately capped at `N = 8` (256 x 256); larger systems go through the
//! permutation-invariant solver crate instead.

pub mod collective;
pub mod couplings;
mod error;
pub mod hamiltonian;
pub mod pauli;
pub mod rotation;
pub mod states;
pub mod system;
pub mod types;

pub use collective::{collective_operators, CollectiveOps};
pub use couplings::{build_couplings, kac_normalization, CouplingMatrix};
pub use error::SpinError;
pub use hamiltonian::{build_hamiltonian, ModelKind};
pub use rotation::{rotation, single_qubit_rotation, RotationKind};
pub use states::{reference_state, ReferenceState};
pub use system::SpinSystem;
pub use types::{DensityMatrix, Operator, PureState, C64};

/// Largest qubit count for which dense `2^N x 2^N` storage is supported.
pub const MAX_DENSE_QUBITS: usize = 8;
