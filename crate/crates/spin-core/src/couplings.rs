//! Kac-normalized power-law couplings `chi_ij`.

use nalgebra::DMatrix;

use crate::{SpinError, SpinSystem};

/// Symmetric coupling matrix `chi_ij = chi / (N_alpha |r_i - r_j|^alpha)`
/// with zero diagonal, together with the normalization `N_alpha` used.
#[derive(Debug, Clone)]
pub struct CouplingMatrix {
    pub chi: f64,
    pub entries: DMatrix<f64>,
    pub kac: f64,
}

impl CouplingMatrix {
    pub fn n(&self) -> usize {
        self.entries.nrows()
    }

    /// Sum of all off-diagonal entries (the extensivity sum).
    pub fn pair_sum(&self) -> f64 {
        let n = self.n();
        let mut acc = 0.0;
        for i in 0..n {
            for j in 0..n {
                if i != j {
                    acc += self.entries[(i, j)];
                }
            }
        }
        acc
    }
}

/// Kac normalization `N_alpha = (N-1)^{-1} sum_{i != j} |r_i - r_j|^{-alpha}`.
pub fn kac_normalization(system: &SpinSystem) -> f64 {
    let n = system.num_qubits();
    let alpha = system.alpha();
    let mut acc = 0.0;
    for i in 0..n {
        for j in 0..n {
            if i != j {
                acc += system.distance(i, j).powf(-alpha);
            }
        }
    }
    acc / (n as f64 - 1.0)
}

/// Builds the coupling matrix for a chain; requires `N >= 2`.
pub fn build_couplings(system: &SpinSystem, chi: f64) -> Result<CouplingMatrix, SpinError> {
    let n = system.num_qubits();
    if n < 2 {
        return Err(SpinError::InvalidSystem("couplings need at least two qubits".into()));
    }
    if !chi.is_finite() {
        return Err(SpinError::InvalidArgument(format!("chi {chi} must be finite")));
    }
    let kac = kac_normalization(system);
    let mut entries = DMatrix::<f64>::zeros(n, n);
    for i in 0..n {
        for j in 0..n {
            if i != j {
                entries[(i, j)] = chi / (kac * system.distance(i, j).powf(system.alpha()));
            }
        }
    }
    Ok(CouplingMatrix { chi, entries, kac })
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn alpha_zero_is_uniform() {
        let sys = SpinSystem::chain(4, 0.0).unwrap();
        let c = build_couplings(&sys, 1.0).unwrap();
        for i in 0..4 {
            for j in 0..4 {
                if i != j {
                    assert_relative_eq!(c.entries[(i, j)], 0.25, epsilon = 1e-14);
                }
            }
        }
    }

    #[test]
    fn two_qubits_single_pair() {
        for alpha in [0.0, 1.0, 3.0, 6.0] {
            let sys = SpinSystem::chain(2, alpha).unwrap();
            let c = build_couplings(&sys, 1.0).unwrap();
            assert_relative_eq!(c.entries[(0, 1)], 0.5, epsilon = 1e-14);
            assert_relative_eq!(c.entries[(1, 0)], 0.5, epsilon = 1e-14);
        }
    }

    #[test]
    fn three_qubit_alpha_one_hand_sum() {
        // Independent oracle: direct summation of the normalization.
        let sys = SpinSystem::chain(3, 1.0).unwrap();
        let mut kac_oracle = 0.0;
        for i in 0..3usize {
            for j in 0..3usize {
                if i != j {
                    kac_oracle += 1.0 / (i as f64 - j as f64).abs();
                }
            }
        }
        kac_oracle /= 2.0;
        let c = build_couplings(&sys, 1.0).unwrap();
        assert_relative_eq!(c.kac, kac_oracle, epsilon = 1e-14);
        assert_relative_eq!(c.entries[(0, 1)], 0.4, epsilon = 1e-14);
        assert_relative_eq!(c.entries[(0, 2)], 0.2, epsilon = 1e-14);
    }

    #[test]
    fn kac_sum_rule() {
        for n in 2..=8usize {
            for alpha in [0.0, 0.5, 1.0, 2.0, 3.0, 6.0] {
                let sys = SpinSystem::chain(n, alpha).unwrap();
                let c = build_couplings(&sys, 1.0).unwrap();
                assert_relative_eq!(c.pair_sum(), (n as f64 - 1.0), epsilon = 1e-10);
            }
        }
    }

    #[test]
    fn single_qubit_rejected() {
        let sys = SpinSystem::chain(1, 0.0).unwrap();
        assert!(build_couplings(&sys, 1.0).is_err());
    }
}
