//! Static problem geometry: qubit count, chain positions, interaction range.

use crate::SpinError;

/// An open 1-D chain of `N` qubits on the unit lattice with power-law
/// interaction exponent `alpha`.
#[derive(Debug, Clone, PartialEq)]
pub struct SpinSystem {
    n: usize,
    positions: Vec<f64>,
    alpha: f64,
}

impl SpinSystem {
    /// Open chain on the integer lattice `0..N-1`.
    pub fn chain(n: usize, alpha: f64) -> Result<Self, SpinError> {
        let positions = (0..n).map(|i| i as f64).collect();
        Self::with_positions(n, positions, alpha)
    }

    /// Explicit positions; they must be strictly increasing with unit spacing.
    pub fn with_positions(n: usize, positions: Vec<f64>, alpha: f64) -> Result<Self, SpinError> {
        if n == 0 {
            return Err(SpinError::InvalidSystem("need at least one qubit".into()));
        }
        if positions.len() != n {
            return Err(SpinError::InvalidSystem(format!(
                "{} positions for {} qubits",
                positions.len(),
                n
            )));
        }
        for w in positions.windows(2) {
            if (w[1] - w[0] - 1.0).abs() > 1e-12 {
                return Err(SpinError::InvalidSystem(
                    "positions must increase with unit spacing".into(),
                ));
            }
        }
        if !alpha.is_finite() || alpha < 0.0 {
            return Err(SpinError::InvalidSystem(format!("alpha {alpha} must be >= 0")));
        }
        Ok(Self { n, positions, alpha })
    }

    pub fn num_qubits(&self) -> usize {
        self.n
    }

    pub fn positions(&self) -> &[f64] {
        &self.positions
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    /// Distance `|r_i - r_j|`.
    pub fn distance(&self, i: usize, j: usize) -> f64 {
        (self.positions[i] - self.positions[j]).abs()
    }

    /// Full Hilbert-space dimension `2^N`.
    pub fn dim(&self) -> usize {
        1usize << self.n
    }
}
