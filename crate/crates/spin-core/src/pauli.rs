//! Single-site Pauli machinery on the `2^N` computational basis.
//!
//! Basis convention: bit `j` of a basis index addresses qubit `j`, with bit
//! value 0 meaning spin up and 1 meaning spin down. The all-down product state
//! is therefore the last basis index `2^N - 1`. Matrices are column-major; a
//! flat slice entry `(row, col)` lives at `col * dim + row`.

use nalgebra::DMatrix;

use crate::types::C64;

/// Pauli axis label.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Pauli {
    X,
    Y,
    Z,
}

/// 2x2 Pauli matrix in the (up, down) basis.
pub fn pauli_2x2(p: Pauli) -> [[C64; 2]; 2] {
    let z = C64::new(0.0, 0.0);
    let one = C64::new(1.0, 0.0);
    let i = C64::new(0.0, 1.0);
    match p {
        Pauli::X => [[z, one], [one, z]],
        Pauli::Y => [[z, -i], [i, z]],
        Pauli::Z => [[one, z], [z, -one]],
    }
}

/// Dense operator for a 2x2 matrix acting on site `j` of an `n`-qubit register.
pub fn single_site_operator(n: usize, j: usize, m: [[C64; 2]; 2]) -> DMatrix<C64> {
    let dim = 1usize << n;
    let bit = 1usize << j;
    let mut out = DMatrix::<C64>::zeros(dim, dim);
    for col in 0..dim {
        let cb = (col >> j) & 1;
        for rb in 0..2usize {
            let row = (col & !bit) | (rb << j);
            let amp = m[rb][cb];
            if amp != C64::new(0.0, 0.0) {
                out[(row, col)] += amp;
            }
        }
    }
    out
}

/// Applies a 2x2 matrix on site `j` to a state vector in place.
pub fn apply_single_site_vec(n: usize, j: usize, m: [[C64; 2]; 2], v: &mut [C64]) {
    let dim = 1usize << n;
    let bit = 1usize << j;
    for a in 0..dim {
        if a & bit == 0 {
            let b = a | bit;
            let (va, vb) = (v[a], v[b]);
            v[a] = m[0][0] * va + m[0][1] * vb;
            v[b] = m[1][0] * va + m[1][1] * vb;
        }
    }
}

/// Left-multiplies every column of a flat column-major matrix by a 2x2 matrix
/// acting on row-index bit `j`.
fn left_mul_site(dim: usize, bit: usize, m: [[C64; 2]; 2], data: &mut [C64]) {
    for col in 0..dim {
        let base = col * dim;
        for a in 0..dim {
            if a & bit == 0 {
                let b = a | bit;
                let (va, vb) = (data[base + a], data[base + b]);
                data[base + a] = m[0][0] * va + m[0][1] * vb;
                data[base + b] = m[1][0] * va + m[1][1] * vb;
            }
        }
    }
}

/// Right-multiplies a flat column-major matrix by the adjoint of a 2x2 matrix
/// acting on column-index bit `j`.
fn right_mul_site_adjoint(dim: usize, bit: usize, m: [[C64; 2]; 2], data: &mut [C64]) {
    let (u00, u01, u10, u11) = (m[0][0].conj(), m[0][1].conj(), m[1][0].conj(), m[1][1].conj());
    for ca in 0..dim {
        if ca & bit == 0 {
            let cb = ca | bit;
            let (lo, hi) = data.split_at_mut(cb * dim);
            let col_a = &mut lo[ca * dim..ca * dim + dim];
            let col_b = &mut hi[..dim];
            for r in 0..dim {
                let (xa, xb) = (col_a[r], col_b[r]);
                col_a[r] = xa * u00 + xb * u01;
                col_b[r] = xa * u10 + xb * u11;
            }
        }
    }
}

/// Conjugates a density matrix in place by a 2x2 unitary on one site:
/// `rho <- u_j rho u_j^dag`.
pub fn conjugate_single_site(n: usize, j: usize, u: [[C64; 2]; 2], rho: &mut DMatrix<C64>) {
    let dim = 1usize << n;
    let bit = 1usize << j;
    let data = rho.as_mut_slice();
    left_mul_site(dim, bit, u, data);
    right_mul_site_adjoint(dim, bit, u, data);
}

/// Conjugates a density matrix in place by the same 2x2 unitary on every site:
/// `rho <- (u^{ox N}) rho (u^{ox N})^dag`.
pub fn conjugate_uniform_single_qubit(n: usize, u: [[C64; 2]; 2], rho: &mut DMatrix<C64>) {
    for j in 0..n {
        conjugate_single_site(n, j, u, rho);
    }
}

/// Accumulates `-i [S_axis, rho]` into `out`, with the collective generator
/// `S_axis = sum_j sigma_j^axis / 2`.
pub fn accumulate_collective_commutator(
    n: usize,
    axis: Pauli,
    rho: &DMatrix<C64>,
    out: &mut DMatrix<C64>,
) {
    let m = pauli_2x2(axis);
    let dim = 1usize << n;
    let mih = C64::new(0.0, -0.5);
    let src = rho.as_slice();
    let dst = out.as_mut_slice();
    for j in 0..n {
        let bit = 1usize << j;
        // -i/2 sigma_j rho
        for col in 0..dim {
            let base = col * dim;
            for a in 0..dim {
                if a & bit == 0 {
                    let b = a | bit;
                    dst[base + a] += mih * (m[0][0] * src[base + a] + m[0][1] * src[base + b]);
                    dst[base + b] += mih * (m[1][0] * src[base + a] + m[1][1] * src[base + b]);
                }
            }
        }
        // +i/2 rho sigma_j  (sigma Hermitian, column mixing)
        for ca in 0..dim {
            if ca & bit == 0 {
                let cb = ca | bit;
                let (ba, bb) = (ca * dim, cb * dim);
                for r in 0..dim {
                    let (sa, sb) = (src[ba + r], src[bb + r]);
                    dst[ba + r] -= mih * (sa * m[0][0] + sb * m[1][0]);
                    dst[bb + r] -= mih * (sa * m[0][1] + sb * m[1][1]);
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::collective::collective_operators;

    fn approx_eq(a: &DMatrix<C64>, b: &DMatrix<C64>, tol: f64) -> bool {
        (a - b).iter().all(|e| e.norm() < tol)
    }

    #[test]
    fn single_site_matches_kron() {
        // site 0 of 2 qubits mixes adjacent index pairs
        let sx = pauli_2x2(Pauli::X);
        let op = single_site_operator(2, 0, sx);
        let mut expect = DMatrix::<C64>::zeros(4, 4);
        expect[(0, 1)] = C64::new(1.0, 0.0);
        expect[(1, 0)] = C64::new(1.0, 0.0);
        expect[(2, 3)] = C64::new(1.0, 0.0);
        expect[(3, 2)] = C64::new(1.0, 0.0);
        assert!(approx_eq(&op, &expect, 1e-15));
    }

    #[test]
    fn conjugation_matches_dense() {
        let n = 3;
        let dim = 1 << n;
        let theta: f64 = 0.7;
        let c = C64::new((theta / 2.0).cos(), 0.0);
        let s = C64::new(0.0, -(theta / 2.0).sin());
        let u = [[c, s], [s, c]];
        let mut big = DMatrix::<C64>::identity(dim, dim);
        for j in 0..n {
            big = single_site_operator(n, j, u) * big;
        }
        let mut rho = DMatrix::<C64>::zeros(dim, dim);
        for i in 0..dim {
            for j in 0..dim {
                rho[(i, j)] = C64::new((i + 2 * j) as f64, (i as f64) - (j as f64));
            }
        }
        let expect = &big * &rho * big.adjoint();
        let mut got = rho.clone();
        conjugate_uniform_single_qubit(n, u, &mut got);
        assert!(approx_eq(&got, &expect, 1e-10));
    }

    #[test]
    fn collective_commutator_matches_dense() {
        let n = 3;
        let dim = 1 << n;
        let ops = collective_operators(n);
        let mut rho = DMatrix::<C64>::zeros(dim, dim);
        for i in 0..dim {
            for j in 0..dim {
                rho[(i, j)] = C64::new((i * j) as f64, (i as f64) - 0.5 * (j as f64));
            }
        }
        for (axis, s) in [(Pauli::X, &ops.sx), (Pauli::Y, &ops.sy), (Pauli::Z, &ops.sz)] {
            let expect = (&s.matrix * &rho - &rho * &s.matrix) * C64::new(0.0, -1.0);
            let mut got = DMatrix::<C64>::zeros(dim, dim);
            accumulate_collective_commutator(n, axis, &rho, &mut got);
            assert!(approx_eq(&got, &expect, 1e-9));
        }
    }
}
