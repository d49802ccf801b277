//! Shared numeric types: operators, pure states, and density matrices.

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;

use crate::SpinError;

/// Complex double-precision scalar used throughout.
pub type C64 = Complex64;

/// Hermiticity tolerance used when flagging operators.
pub const HERMITIAN_TOL: f64 = 1e-12;
/// Trace tolerance for density matrices.
pub const TRACE_TOL: f64 = 1e-8;
/// Allowed negative-eigenvalue slack for density matrices.
pub const POSITIVITY_TOL: f64 = 1e-8;

/// A dense operator on the full `2^N` space.
#[derive(Debug, Clone)]
pub struct Operator {
    pub matrix: DMatrix<C64>,
    pub hermitian: bool,
}

impl Operator {
    /// Wraps a matrix, verifying the Hermitian flag against `HERMITIAN_TOL`.
    pub fn hermitian(matrix: DMatrix<C64>) -> Result<Self, SpinError> {
        let dev = hermitian_deviation(&matrix);
        if dev >= HERMITIAN_TOL {
            return Err(SpinError::NotHermitian(dev));
        }
        Ok(Self { matrix, hermitian: true })
    }

    /// Wraps a general (not necessarily Hermitian) matrix.
    pub fn general(matrix: DMatrix<C64>) -> Self {
        Self { matrix, hermitian: false }
    }

    pub fn dim(&self) -> usize {
        self.matrix.nrows()
    }

    /// Max-norm deviation from unitarity, `||U^dag U - 1||_max`.
    pub fn unitary_deviation(&self) -> f64 {
        let d = self.dim();
        let prod = self.matrix.adjoint() * &self.matrix;
        let mut dev: f64 = 0.0;
        for i in 0..d {
            for j in 0..d {
                let target = if i == j { C64::new(1.0, 0.0) } else { C64::new(0.0, 0.0) };
                dev = dev.max((prod[(i, j)] - target).norm());
            }
        }
        dev
    }
}

/// Max-norm deviation of a matrix from its own adjoint.
pub fn hermitian_deviation(m: &DMatrix<C64>) -> f64 {
    let mut dev: f64 = 0.0;
    for i in 0..m.nrows() {
        for j in 0..=i {
            dev = dev.max((m[(i, j)] - m[(j, i)].conj()).norm());
        }
    }
    dev
}

/// A normalized pure state on `2^N` amplitudes.
#[derive(Debug, Clone)]
pub struct PureState {
    pub amplitudes: DVector<C64>,
}

impl PureState {
    /// Wraps an amplitude vector, checking normalization to `1e-12`.
    pub fn new(amplitudes: DVector<C64>) -> Result<Self, SpinError> {
        let norm = amplitudes.norm();
        if (norm - 1.0).abs() >= 1e-12 {
            return Err(SpinError::InvalidState(format!("norm {norm} != 1")));
        }
        Ok(Self { amplitudes })
    }

    /// Builds and normalizes.
    pub fn normalized(mut amplitudes: DVector<C64>) -> Result<Self, SpinError> {
        let norm = amplitudes.norm();
        if norm <= 0.0 {
            return Err(SpinError::InvalidState("zero vector".into()));
        }
        amplitudes /= C64::new(norm, 0.0);
        Ok(Self { amplitudes })
    }

    pub fn dim(&self) -> usize {
        self.amplitudes.len()
    }

    /// `<psi| A |psi>`.
    pub fn expectation(&self, op: &DMatrix<C64>) -> C64 {
        let v = op * &self.amplitudes;
        self.amplitudes.dotc(&v)
    }
}

/// A density matrix on the full `2^N` space.
#[derive(Debug, Clone)]
pub struct DensityMatrix {
    pub matrix: DMatrix<C64>,
}

impl DensityMatrix {
    /// Wraps without validation; used on hot paths that re-hermitize themselves.
    pub fn from_matrix_unchecked(matrix: DMatrix<C64>) -> Self {
        Self { matrix }
    }

    pub fn from_pure(psi: &PureState) -> Self {
        let v = &psi.amplitudes;
        let d = v.len();
        let mut m = DMatrix::<C64>::zeros(d, d);
        for j in 0..d {
            let cj = v[j].conj();
            for i in 0..d {
                m[(i, j)] = v[i] * cj;
            }
        }
        Self { matrix: m }
    }

    /// Maximally mixed state `I / 2^N`.
    pub fn maximally_mixed(dim: usize) -> Self {
        let w = 1.0 / dim as f64;
        Self { matrix: DMatrix::from_diagonal_element(dim, dim, C64::new(w, 0.0)) }
    }

    pub fn dim(&self) -> usize {
        self.matrix.nrows()
    }

    pub fn trace(&self) -> C64 {
        self.matrix.trace()
    }

    /// `Tr rho^2`.
    pub fn purity(&self) -> f64 {
        let mut acc = 0.0;
        for j in 0..self.dim() {
            for i in 0..self.dim() {
                acc += self.matrix[(i, j)].norm_sqr();
            }
        }
        acc
    }

    /// `Tr[rho A]`, real part (callers pass Hermitian observables).
    pub fn expectation(&self, op: &DMatrix<C64>) -> f64 {
        let mut acc = C64::new(0.0, 0.0);
        for j in 0..self.dim() {
            for i in 0..self.dim() {
                acc += self.matrix[(j, i)] * op[(i, j)];
            }
        }
        acc.re
    }

    /// Checks Hermiticity (1e-10), unit trace (1e-8), and positivity (-1e-8).
    pub fn validate(&self) -> Result<(), SpinError> {
        let dev = hermitian_deviation(&self.matrix);
        if dev >= 1e-10 {
            return Err(SpinError::InvalidState(format!("hermiticity deviation {dev:.3e}")));
        }
        let tr = self.trace();
        if (tr.re - 1.0).abs() >= TRACE_TOL || tr.im.abs() >= TRACE_TOL {
            return Err(SpinError::InvalidState(format!("trace {tr} != 1")));
        }
        let min = self.min_eigenvalue();
        if min < -POSITIVITY_TOL {
            return Err(SpinError::InvalidState(format!("negative eigenvalue {min:.3e}")));
        }
        Ok(())
    }

    /// Smallest eigenvalue of the Hermitian part.
    pub fn min_eigenvalue(&self) -> f64 {
        let herm = (&self.matrix + self.matrix.adjoint()) * C64::new(0.5, 0.0);
        let eig = herm.symmetric_eigen();
        eig.eigenvalues.iter().fold(f64::INFINITY, |a, &b| a.min(b))
    }

    /// Replaces the matrix by its Hermitian part `(rho + rho^dag)/2`.
    pub fn rehermitize(&mut self) {
        let d = self.dim();
        for j in 0..d {
            for i in 0..j {
                let avg = (self.matrix[(i, j)] + self.matrix[(j, i)].conj()) * 0.5;
                self.matrix[(i, j)] = avg;
                self.matrix[(j, i)] = avg.conj();
            }
            let re = self.matrix[(j, j)].re;
            self.matrix[(j, j)] = C64::new(re, 0.0);
        }
    }
}

/// Real part of the Hilbert-Schmidt inner product `Tr[A B]` of two Hermitian
/// matrices, computed as `sum conj(A_ij) B_ij`.
pub fn hs_inner_re(a: &DMatrix<C64>, b: &DMatrix<C64>) -> f64 {
    debug_assert_eq!(a.shape(), b.shape());
    let (xs, ys) = (a.as_slice(), b.as_slice());
    let mut acc = 0.0;
    for (x, y) in xs.iter().zip(ys) {
        acc += x.re * y.re + x.im * y.im;
    }
    acc
}
