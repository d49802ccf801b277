//! Structure-aware right-hand side of the master equation on the dense
//! computational basis.
//!
//! The generator splits into three parts, each applied without forming the
//! `4^N x 4^N` Liouvillian:
//!
//! * a purely elementwise piece: the commutator with a diagonal Hamiltonian
//!   plus all decay terms (`sigma^z` dephasing and the anticommutator halves
//!   of the `sigma^x`/`sigma^y` channels),
//! * per-site double-bit-flip couplings `rho[a, b] <- rho[a^e_j, b^e_j]` from
//!   the `sigma^x`/`sigma^y` sandwich terms,
//! * a sparse commutator for non-diagonal Hamiltonians (CSR).

use nalgebra::DMatrix;
use spin_core::types::Operator;
use spin_core::C64;

use crate::noise::{IntegratorConfig, NoiseSpec};
use crate::ode::{integrate, OdeStats, StepUnderflow};
use crate::LindbladError;

/// Compressed sparse rows with a column-major application helper.
struct Csr {
    row_ptr: Vec<usize>,
    cols: Vec<u32>,
    vals: Vec<C64>,
}

impl Csr {
    fn from_dense(m: &DMatrix<C64>, threshold: f64) -> Self {
        let d = m.nrows();
        let mut row_ptr = Vec::with_capacity(d + 1);
        let mut cols = Vec::new();
        let mut vals = Vec::new();
        row_ptr.push(0);
        for r in 0..d {
            for c in 0..d {
                let v = m[(r, c)];
                if v.norm() > threshold {
                    cols.push(c as u32);
                    vals.push(v);
                }
            }
            row_ptr.push(cols.len());
        }
        Self { row_ptr, cols, vals }
    }
}

/// Precompiled Lindblad generator for one `(H, noise)` pair.
///
/// `adjoint` selects the Hilbert-Schmidt adjoint of the generator, which for
/// Hermitian jump operators only flips the sign of the Hamiltonian commutator.
pub struct LindbladOp {
    n: usize,
    dim: usize,
    /// Per-entry elementwise coefficient, column-major.
    coeff: Vec<C64>,
    /// Flip-coupling strengths: rows with `a_j == b_j` and `a_j != b_j`.
    flip_eq: f64,
    flip_neq: f64,
    sparse: Option<Csr>,
    commutator_scale: C64,
}

impl LindbladOp {
    pub fn new(h: &Operator, noise: &NoiseSpec, adjoint: bool) -> Result<Self, LindbladError> {
        if !h.hermitian {
            return Err(LindbladError::HamiltonianNotHermitian);
        }
        noise.validate()?;
        let dim = h.dim();
        let n = dim.trailing_zeros() as usize;
        assert_eq!(1usize << n, dim, "operator dimension must be a power of two");

        let sign = if adjoint { 1.0 } else { -1.0 };
        let diag = diagonal_part(&h.matrix);
        let is_diag = is_diagonal(&h.matrix);

        let gxy = noise.gamma_x + noise.gamma_y;
        let gz = noise.gamma_z;
        let base_decay = -gxy * n as f64 / 4.0;
        let mut coeff = vec![C64::new(0.0, 0.0); dim * dim];
        for b in 0..dim {
            for a in 0..dim {
                let hd = (a ^ b).count_ones() as f64;
                let re = base_decay - 0.5 * gz * hd;
                let im = if is_diag { sign * (diag[a] - diag[b]) } else { 0.0 };
                coeff[b * dim + a] = C64::new(re, im);
            }
        }
        let sparse = if is_diag { None } else { Some(Csr::from_dense(&h.matrix, 1e-14)) };
        Ok(Self {
            n,
            dim,
            coeff,
            flip_eq: 0.25 * (noise.gamma_x + noise.gamma_y),
            flip_neq: 0.25 * (noise.gamma_x - noise.gamma_y),
            sparse,
            commutator_scale: C64::new(0.0, sign),
        })
    }

    pub fn num_qubits(&self) -> usize {
        self.n
    }

    /// Writes the full generator action `L(rho)` into `out`.
    pub fn apply(&self, rho: &DMatrix<C64>, out: &mut DMatrix<C64>) {
        let dim = self.dim;
        let src = rho.as_slice();
        let dst = out.as_mut_slice();

        // Elementwise piece.
        for i in 0..dim * dim {
            dst[i] = self.coeff[i] * src[i];
        }

        // Double-flip couplings, one site at a time.
        if self.flip_eq != 0.0 || self.flip_neq != 0.0 {
            for j in 0..self.n {
                let bit = 1usize << j;
                for b in 0..dim {
                    let sc = (b ^ bit) * dim;
                    let dc = b * dim;
                    let bj = (b >> j) & 1;
                    let (c0, c1) =
                        if bj == 0 { (self.flip_eq, self.flip_neq) } else { (self.flip_neq, self.flip_eq) };
                    let mut base = 0usize;
                    while base < dim {
                        // rows [base, base+bit): a_j = 0; their flip partners sit one block up
                        if c0 != 0.0 {
                            for r in base..base + bit {
                                let s = src[sc + r + bit];
                                dst[dc + r].re += c0 * s.re;
                                dst[dc + r].im += c0 * s.im;
                            }
                        }
                        if c1 != 0.0 {
                            for r in base..base + bit {
                                let s = src[sc + r];
                                dst[dc + r + bit].re += c1 * s.re;
                                dst[dc + r + bit].im += c1 * s.im;
                            }
                        }
                        base += 2 * bit;
                    }
                }
            }
        }

        // Sparse commutator for non-diagonal Hamiltonians.
        if let Some(csr) = &self.sparse {
            let c = self.commutator_scale;
            // c * H rho
            for b in 0..dim {
                let col = b * dim;
                for a in 0..dim {
                    let lo = csr.row_ptr[a];
                    let hi = csr.row_ptr[a + 1];
                    if lo == hi {
                        continue;
                    }
                    let mut acc = C64::new(0.0, 0.0);
                    for t in lo..hi {
                        acc += csr.vals[t] * src[col + csr.cols[t] as usize];
                    }
                    dst[col + a] += c * acc;
                }
            }
            // -c * rho H  == -c * sum_k rho[:, k] H[k, b]
            for k in 0..dim {
                let lo = csr.row_ptr[k];
                let hi = csr.row_ptr[k + 1];
                let kcol = k * dim;
                for t in lo..hi {
                    let b = csr.cols[t] as usize;
                    let w = -(c * csr.vals[t]);
                    let bcol = b * dim;
                    for r in 0..dim {
                        let s = src[kcol + r];
                        dst[bcol + r].re += w.re * s.re - w.im * s.im;
                        dst[bcol + r].im += w.re * s.im + w.im * s.re;
                    }
                }
            }
        }
    }

    /// Integrates the master equation in place for `duration`.
    pub fn evolve_in_place(
        &self,
        rho: &mut DMatrix<C64>,
        duration: f64,
        cfg: &IntegratorConfig,
    ) -> Result<OdeStats, StepUnderflow> {
        integrate(|s, out| self.apply(s, out), rho, duration, cfg)
    }
}

fn diagonal_part(m: &DMatrix<C64>) -> Vec<f64> {
    (0..m.nrows()).map(|i| m[(i, i)].re).collect()
}

fn is_diagonal(m: &DMatrix<C64>) -> bool {
    for c in 0..m.ncols() {
        for r in 0..m.nrows() {
            if r != c && m[(r, c)].norm() > 1e-14 {
                return false;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use spin_core::pauli::{pauli_2x2, single_site_operator, Pauli};
    use spin_core::{build_couplings, build_hamiltonian, ModelKind, SpinSystem};

    /// Naive dense oracle for the full generator.
    fn oracle(
        h: &DMatrix<C64>,
        noise: &NoiseSpec,
        n: usize,
        adjoint: bool,
        rho: &DMatrix<C64>,
    ) -> DMatrix<C64> {
        let dim = 1usize << n;
        let sign = if adjoint { 1.0 } else { -1.0 };
        let mut out = (h * rho - rho * h) * C64::new(0.0, sign);
        for (pauli, g) in
            [(Pauli::X, noise.gamma_x), (Pauli::Y, noise.gamma_y), (Pauli::Z, noise.gamma_z)]
        {
            for j in 0..n {
                let s = single_site_operator(n, j, pauli_2x2(pauli));
                // L = sigma/2 => rate g/4 sandwich terms
                out += (&s * rho * &s - rho) * C64::new(0.25 * g, 0.0);
            }
        }
        let _ = dim;
        out
    }

    fn random_matrix(dim: usize, seed: u64) -> DMatrix<C64> {
        let mut state = seed;
        let mut next = || {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            ((state >> 11) as f64 / (1u64 << 53) as f64) - 0.5
        };
        DMatrix::from_fn(dim, dim, |_, _| C64::new(next(), next()))
    }

    #[test]
    fn matches_oracle_diagonal_hamiltonian() {
        for n in [1usize, 2, 3] {
            let sys = SpinSystem::chain(n.max(2), 1.5).unwrap();
            let c = build_couplings(&sys, 1.0).unwrap();
            let mut h = build_hamiltonian(ModelKind::Ising, &c);
            if n == 1 {
                h = Operator::hermitian(DMatrix::from_diagonal_element(2, 2, C64::new(0.0, 0.0)))
                    .unwrap();
            }
            let noise = NoiseSpec { gamma_x: 0.3, gamma_y: 0.7, gamma_z: 0.2 };
            let rho = random_matrix(1 << n, 42 + n as u64);
            for adjoint in [false, true] {
                let op = LindbladOp::new(&h, &noise, adjoint).unwrap();
                let mut got = rho.clone();
                op.apply(&rho, &mut got);
                let want = oracle(&h.matrix, &noise, n, adjoint, &rho);
                let dev = (&got - &want).iter().map(|e| e.norm()).fold(0.0f64, f64::max);
                assert!(dev < 1e-12, "n={n} adjoint={adjoint}: dev {dev}");
            }
        }
    }

    #[test]
    fn matches_oracle_sparse_hamiltonian() {
        let n = 3;
        let sys = SpinSystem::chain(n, 2.0).unwrap();
        let c = build_couplings(&sys, 1.0).unwrap();
        let h = build_hamiltonian(ModelKind::Ftat, &c);
        let noise = NoiseSpec::uniform(0.4);
        let rho = random_matrix(1 << n, 7);
        for adjoint in [false, true] {
            let op = LindbladOp::new(&h, &noise, adjoint).unwrap();
            let mut got = rho.clone();
            op.apply(&rho, &mut got);
            let want = oracle(&h.matrix, &noise, n, adjoint, &rho);
            let dev = (&got - &want).iter().map(|e| e.norm()).fold(0.0f64, f64::max);
            assert!(dev < 1e-12, "adjoint={adjoint}: dev {dev}");
        }
    }

    #[test]
    fn generator_is_traceless() {
        let n = 3;
        let sys = SpinSystem::chain(n, 0.0).unwrap();
        let c = build_couplings(&sys, 1.0).unwrap();
        let h = build_hamiltonian(ModelKind::Ftat, &c);
        let noise = NoiseSpec { gamma_x: 0.5, gamma_y: 0.1, gamma_z: 0.9 };
        let op = LindbladOp::new(&h, &noise, false).unwrap();
        let rho = random_matrix(1 << n, 3);
        let mut out = rho.clone();
        op.apply(&rho, &mut out);
        assert!(out.trace().norm() < 1e-12);
    }
}
