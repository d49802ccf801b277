//! Global rotations as products of identical single-qubit unitaries.

use nalgebra::DMatrix;

use crate::pauli::single_site_operator;
use crate::types::{C64, Operator};
use crate::SpinError;

/// Rotation stages of the circuit.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum RotationKind {
    /// `prod_j exp(-i theta sigma_j^phi / 2)` about the equatorial axis
    /// `sigma^phi = sigma^x cos(phi) + sigma^y sin(phi)`.
    Initial { theta: f64, phi: f64 },
    /// `exp(-i theta S_x)`
    X { theta: f64 },
    /// `exp(-i theta S_y)`
    Y { theta: f64 },
    /// `exp(-i theta S_z)`
    Z { theta: f64 },
}

impl RotationKind {
    /// The common single-qubit factor; every global rotation here is a tensor
    /// power of one 2x2 unitary because the generator is a sum of identical
    /// commuting single-site terms.
    pub fn single_qubit(&self) -> [[C64; 2]; 2] {
        match *self {
            RotationKind::Initial { theta, phi } => equatorial_rotation_2x2(theta, phi),
            RotationKind::X { theta } => equatorial_rotation_2x2(theta, 0.0),
            RotationKind::Y { theta } => equatorial_rotation_2x2(theta, std::f64::consts::FRAC_PI_2),
            RotationKind::Z { theta } => {
                let hp = theta / 2.0;
                let z = C64::new(0.0, 0.0);
                [[C64::new(hp.cos(), -hp.sin()), z], [z, C64::new(hp.cos(), hp.sin())]]
            }
        }
    }
}

/// `exp(-i theta (cos(phi) sigma^x + sin(phi) sigma^y) / 2)`.
pub fn equatorial_rotation_2x2(theta: f64, phi: f64) -> [[C64; 2]; 2] {
    let (c, s) = ((theta / 2.0).cos(), (theta / 2.0).sin());
    let diag = C64::new(c, 0.0);
    // -i sin(t/2) (cos(phi) sx + sin(phi) sy)
    let off01 = C64::new(0.0, -s) * C64::new(phi.cos(), -phi.sin());
    let off10 = C64::new(0.0, -s) * C64::new(phi.cos(), phi.sin());
    [[diag, off01], [off10, diag]]
}

/// Single-qubit rotation `exp(-i theta n.sigma / 2)` for a unit axis `n`.
pub fn single_qubit_rotation(theta: f64, axis: [f64; 3]) -> [[C64; 2]; 2] {
    let (c, s) = ((theta / 2.0).cos(), (theta / 2.0).sin());
    let (nx, ny, nz) = (axis[0], axis[1], axis[2]);
    [
        [C64::new(c, -s * nz), C64::new(-s * ny, -s * nx)],
        [C64::new(s * ny, -s * nx), C64::new(c, s * nz)],
    ]
}

/// Dense global rotation operator; unitary by construction.
pub fn rotation(kind: RotationKind, n: usize) -> Result<Operator, SpinError> {
    let finite = match kind {
        RotationKind::Initial { theta, phi } => theta.is_finite() && phi.is_finite(),
        RotationKind::X { theta } | RotationKind::Y { theta } | RotationKind::Z { theta } => {
            theta.is_finite()
        }
    };
    if !finite {
        return Err(SpinError::InvalidArgument("rotation angle must be finite".into()));
    }
    let u = kind.single_qubit();
    let dim = 1usize << n;
    let mut big = DMatrix::<C64>::identity(dim, dim);
    for j in 0..n {
        big = single_site_operator(n, j, u) * big;
    }
    Ok(Operator::general(big))
}
