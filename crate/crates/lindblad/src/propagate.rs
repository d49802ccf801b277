//! Public propagation operations: noisy evolution, exact unitaries, the
//! driven one-axis-twisting model, and the trotterization check.

use nalgebra::{DMatrix, DVector};
use spin_core::collective::{collective_axis, sz_diagonal};
use spin_core::pauli::Pauli;
use spin_core::rotation::{rotation, RotationKind};
use spin_core::types::{DensityMatrix, Operator, PureState};
use spin_core::C64;

use crate::dense::LindbladOp;
use crate::error::LindbladError;
use crate::noise::{IntegratorConfig, NoiseSpec};

/// Propagates `rho` under the master equation for `duration` (in units where
/// the Hamiltonian carries the energy scale). The output is re-hermitized.
pub fn evolve(
    rho: &DensityMatrix,
    h: &Operator,
    noise: &NoiseSpec,
    duration: f64,
    cfg: &IntegratorConfig,
) -> Result<DensityMatrix, LindbladError> {
    if !duration.is_finite() || duration < 0.0 {
        return Err(LindbladError::InvalidDuration(duration));
    }
    cfg.validate()?;
    let op = LindbladOp::new(h, noise, false)?;
    let trace_in = rho.trace().re;
    let mut m = rho.matrix.clone();
    op.evolve_in_place(&mut m, duration, cfg).map_err(|u| LindbladError::StepUnderflow {
        t_reached: u.t_reached,
        t_final: duration,
    })?;
    let mut out = DensityMatrix::from_matrix_unchecked(m);
    out.rehermitize();
    let drift = (out.trace().re - trace_in).abs();
    if drift >= 1e-8 {
        return Err(LindbladError::TraceDrift(drift));
    }
    Ok(out)
}

/// `U rho U^dag` for a unitary `U` (checked to `1e-8`).
pub fn apply_unitary(rho: &DensityMatrix, u: &Operator) -> Result<DensityMatrix, LindbladError> {
    let dev = u.unitary_deviation();
    if dev > 1e-8 {
        return Err(LindbladError::NotUnitary(dev));
    }
    let m = &u.matrix * &rho.matrix * u.matrix.adjoint();
    Ok(DensityMatrix::from_matrix_unchecked(m))
}

/// Exact unitary evolution of a pure state under the driven one-axis-twisting
/// Hamiltonian `chi S_z^2 + omega S_x`, via eigendecomposition.
pub fn evolve_driven(
    psi: &PureState,
    chi: f64,
    omega: f64,
    duration: f64,
) -> Result<PureState, LindbladError> {
    if !duration.is_finite() {
        return Err(LindbladError::InvalidDuration(duration));
    }
    let dim = psi.dim();
    let n = dim.trailing_zeros() as usize;
    let h = driven_oat_hamiltonian(n, chi, omega);
    let eig = h.symmetric_eigen();
    let rotated = eig.eigenvectors.adjoint() * &psi.amplitudes;
    let mut phased = DVector::<C64>::zeros(dim);
    for k in 0..dim {
        let phase = -eig.eigenvalues[k] * duration;
        phased[k] = rotated[k] * C64::new(phase.cos(), phase.sin());
    }
    let out = &eig.eigenvectors * phased;
    Ok(PureState { amplitudes: out })
}

/// `chi S_z^2 + omega S_x` on `n` qubits.
pub fn driven_oat_hamiltonian(n: usize, chi: f64, omega: f64) -> DMatrix<C64> {
    let dim = 1usize << n;
    let sx = collective_axis(n, Pauli::X);
    let mut h = sx.matrix * C64::new(omega, 0.0);
    let mz = sz_diagonal(n);
    for a in 0..dim {
        h[(a, a)] += C64::new(chi * mz[a] * mz[a], 0.0);
    }
    h
}

/// Operator-norm error of the first-order product formula against the exact
/// driven evolution:
/// `|| (e^{-i chi t S_z^2 / n} e^{-i omega t S_x / n})^n - e^{-i t (chi S_z^2 + omega S_x)} ||_2`.
pub fn trotter_check(
    n_qubits: usize,
    chi: f64,
    omega: f64,
    duration: f64,
    layers: usize,
) -> Result<f64, LindbladError> {
    if layers == 0 {
        return Err(LindbladError::Spin(spin_core::SpinError::InvalidArgument(
            "need at least one layer".into(),
        )));
    }
    let dim = 1usize << n_qubits;
    let nf = layers as f64;
    // e^{-i (chi t / n) S_z^2}: diagonal phases.
    let mz = sz_diagonal(n_qubits);
    let mut uzz = DMatrix::<C64>::zeros(dim, dim);
    for a in 0..dim {
        let phase = -chi * duration / nf * mz[a] * mz[a];
        uzz[(a, a)] = C64::new(phase.cos(), phase.sin());
    }
    let ux = rotation(RotationKind::X { theta: omega * duration / nf }, n_qubits)?;
    let step = &uzz * &ux.matrix;
    let mut product = DMatrix::<C64>::identity(dim, dim);
    for _ in 0..layers {
        product = &step * product;
    }

    let h = driven_oat_hamiltonian(n_qubits, chi, omega);
    let eig = h.symmetric_eigen();
    let mut phases = DMatrix::<C64>::zeros(dim, dim);
    for k in 0..dim {
        let p = -eig.eigenvalues[k] * duration;
        phases[(k, k)] = C64::new(p.cos(), p.sin());
    }
    let exact = &eig.eigenvectors * phases * eig.eigenvectors.adjoint();

    Ok(operator_norm(&(product - exact)))
}

/// Spectral norm via the largest eigenvalue of `M^dag M`.
fn operator_norm(m: &DMatrix<C64>) -> f64 {
    let gram = m.adjoint() * m;
    let eig = gram.symmetric_eigen();
    eig.eigenvalues.iter().fold(0.0f64, |a, &b| a.max(b)).max(0.0).sqrt()
}
