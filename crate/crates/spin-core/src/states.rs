//! Reference states used as circuit inputs and fidelity targets.

use nalgebra::DVector;

use crate::rotation::{rotation, RotationKind};
use crate::types::{C64, PureState};
use crate::SpinError;

/// Named pure states on `N` qubits.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ReferenceState {
    /// `|down>^{ox N}`
    DownAll,
    /// `(|up..up> + e^{i phase} |down..down>) / sqrt(2)`
    Ghz { phase: f64 },
    /// Balanced superposition of all half-up bit strings (even `N` only).
    TwinFock,
    /// Coherent spin state: the initial rotation applied to `|down>^{ox N}`.
    Coherent { theta: f64, phi: f64 },
}

/// Builds a normalized reference state.
pub fn reference_state(kind: ReferenceState, n: usize) -> Result<PureState, SpinError> {
    if n == 0 {
        return Err(SpinError::InvalidArgument("need at least one qubit".into()));
    }
    let dim = 1usize << n;
    match kind {
        ReferenceState::DownAll => {
            let mut v = DVector::<C64>::zeros(dim);
            v[dim - 1] = C64::new(1.0, 0.0);
            PureState::new(v)
        }
        ReferenceState::Ghz { phase } => {
            let mut v = DVector::<C64>::zeros(dim);
            let w = 1.0 / 2.0f64.sqrt();
            v[0] = C64::new(w, 0.0);
            v[dim - 1] = C64::new(w * phase.cos(), w * phase.sin());
            PureState::new(v)
        }
        ReferenceState::TwinFock => {
            if n % 2 != 0 {
                return Err(SpinError::InvalidArgument(format!(
                    "twin-Fock state needs even qubit count, got {n}"
                )));
            }
            let mut v = DVector::<C64>::zeros(dim);
            let mut count = 0usize;
            for a in 0..dim {
                if (a as u64).count_ones() as usize == n / 2 {
                    v[a] = C64::new(1.0, 0.0);
                    count += 1;
                }
            }
            let w = 1.0 / (count as f64).sqrt();
            for a in 0..dim {
                v[a] *= w;
            }
            PureState::new(v)
        }
        ReferenceState::Coherent { theta, phi } => {
            let u = rotation(RotationKind::Initial { theta, phi }, n)?;
            let mut v = DVector::<C64>::zeros(dim);
            v[dim - 1] = C64::new(1.0, 0.0);
            PureState::new(&u.matrix * v)
        }
    }
}
