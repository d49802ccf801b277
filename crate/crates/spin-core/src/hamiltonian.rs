//! Entangling Hamiltonians over the coupling matrix.

use nalgebra::DMatrix;

use crate::couplings::CouplingMatrix;
use crate::types::{C64, Operator};

/// Interaction model selecting which two-body Hamiltonian drives the
/// entangling stages.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ModelKind {
    /// `sum_{i != j} chi_ij sigma_i^z sigma_j^z`
    Ising,
    /// `sum_{i != j} chi_ij (sigma_i^x sigma_j^y + sigma_i^y sigma_j^x) / 2`
    Ftat,
}

impl ModelKind {
    pub fn label(&self) -> &'static str {
        match self {
            ModelKind::Ising => "ising",
            ModelKind::Ftat => "ftat",
        }
    }
}

/// Builds the dense entangling Hamiltonian. Both sums run over ordered pairs
/// `(i, j)` and `(j, i)`, so each unordered pair contributes `2 chi_ij`.
pub fn build_hamiltonian(kind: ModelKind, couplings: &CouplingMatrix) -> Operator {
    let n = couplings.n();
    let dim = 1usize << n;
    match kind {
        ModelKind::Ising => {
            let diag = ising_diagonal(couplings);
            let mut m = DMatrix::<C64>::zeros(dim, dim);
            for (a, &h) in diag.iter().enumerate() {
                m[(a, a)] = C64::new(h, 0.0);
            }
            Operator { matrix: m, hermitian: true }
        }
        ModelKind::Ftat => {
            let mut m = DMatrix::<C64>::zeros(dim, dim);
            for a in 0..dim {
                for i in 0..n {
                    for j in (i + 1)..n {
                        let ai = (a >> i) & 1;
                        let aj = (a >> j) & 1;
                        if ai != aj {
                            continue;
                        }
                        let flip = a ^ (1 << i) ^ (1 << j);
                        let sign = if ai == 0 { 1.0 } else { -1.0 };
                        // (i,j) + (j,i) ordered terms with the /2 folded in.
                        let amp = C64::new(0.0, 2.0 * sign * couplings.entries[(i, j)]);
                        m[(flip, a)] += amp;
                    }
                }
            }
            Operator { matrix: m, hermitian: true }
        }
    }
}

/// Diagonal of the Ising Hamiltonian in the computational basis:
/// `h_a = sum_{i != j} chi_ij z_i z_j` with `z = +1` (up) / `-1` (down).
pub fn ising_diagonal(couplings: &CouplingMatrix) -> Vec<f64> {
    let n = couplings.n();
    let dim = 1usize << n;
    let mut diag = vec![0.0f64; dim];
    for a in 0..dim {
        let mut h = 0.0;
        for i in 0..n {
            let zi = if (a >> i) & 1 == 0 { 1.0 } else { -1.0 };
            for j in (i + 1)..n {
                let zj = if (a >> j) & 1 == 0 { 1.0 } else { -1.0 };
                h += 2.0 * couplings.entries[(i, j)] * zi * zj;
            }
        }
        diag[a] = h;
    }
    diag
}
