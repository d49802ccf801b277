//! Collective spin operators `S_beta = sum_j sigma_j^beta / 2` and friends.

use nalgebra::DMatrix;

use crate::pauli::{pauli_2x2, single_site_operator, Pauli};
use crate::types::{C64, Operator};

/// The collective operator set on the full `2^N` space.
#[derive(Debug, Clone)]
pub struct CollectiveOps {
    pub sx: Operator,
    pub sy: Operator,
    pub sz: Operator,
    pub s2: Operator,
    pub s_plus: Operator,
    pub s_minus: Operator,
}

/// Builds `S_x, S_y, S_z, S^2, S_+, S_-` for `n` qubits.
pub fn collective_operators(n: usize) -> CollectiveOps {
    assert!(n >= 1, "need at least one qubit");
    let dim = 1usize << n;
    let half = C64::new(0.5, 0.0);
    let mut sx = DMatrix::<C64>::zeros(dim, dim);
    let mut sy = DMatrix::<C64>::zeros(dim, dim);
    let mut sz = DMatrix::<C64>::zeros(dim, dim);
    for j in 0..n {
        sx += single_site_operator(n, j, pauli_2x2(Pauli::X)) * half;
        sy += single_site_operator(n, j, pauli_2x2(Pauli::Y)) * half;
        sz += single_site_operator(n, j, pauli_2x2(Pauli::Z)) * half;
    }
    let s2 = &sx * &sx + &sy * &sy + &sz * &sz;
    let i = C64::new(0.0, 1.0);
    let s_plus = &sx + &sy * i;
    let s_minus = &sx - &sy * i;
    CollectiveOps {
        sx: Operator { matrix: sx, hermitian: true },
        sy: Operator { matrix: sy, hermitian: true },
        sz: Operator { matrix: sz, hermitian: true },
        s2: Operator { matrix: s2, hermitian: true },
        s_plus: Operator::general(s_plus),
        s_minus: Operator::general(s_minus),
    }
}

/// Collective generator for one axis only (cheaper than the full set).
pub fn collective_axis(n: usize, axis: Pauli) -> Operator {
    let dim = 1usize << n;
    let half = C64::new(0.5, 0.0);
    let mut s = DMatrix::<C64>::zeros(dim, dim);
    for j in 0..n {
        s += single_site_operator(n, j, pauli_2x2(axis)) * half;
    }
    Operator { matrix: s, hermitian: true }
}

/// Diagonal of `S_z` indexed by basis state: `m_z(a) = N/2 - popcount(a)`.
pub fn sz_diagonal(n: usize) -> Vec<f64> {
    let dim = 1usize << n;
    (0..dim).map(|a| n as f64 / 2.0 - (a as u64).count_ones() as f64).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::types::hermitian_deviation;
    use approx::assert_relative_eq;
    use nalgebra::DVector;

    #[test]
    fn down_state_sz_expectation() {
        for n in 1..=5usize {
            let ops = collective_operators(n);
            let dim = 1usize << n;
            let mut v = DVector::<C64>::zeros(dim);
            v[dim - 1] = C64::new(1.0, 0.0);
            let exp = (v.adjoint() * &ops.sz.matrix * &v)[(0, 0)];
            assert_relative_eq!(exp.re, -(n as f64) / 2.0, epsilon = 1e-12);
        }
    }

    #[test]
    fn su2_algebra() {
        for n in 1..=4usize {
            let ops = collective_operators(n);
            let comm = &ops.sx.matrix * &ops.sy.matrix - &ops.sy.matrix * &ops.sx.matrix;
            let expect = &ops.sz.matrix * C64::new(0.0, 1.0);
            let max = (comm - expect).iter().map(|e| e.norm()).fold(0.0f64, f64::max);
            assert!(max < 1e-12, "algebra deviation {max}");
        }
    }

    #[test]
    fn down_state_is_maximal_spin() {
        for n in 2..=5usize {
            let ops = collective_operators(n);
            let dim = 1usize << n;
            let mut v = DVector::<C64>::zeros(dim);
            v[dim - 1] = C64::new(1.0, 0.0);
            let s2v = &ops.s2.matrix * &v;
            let j = n as f64 / 2.0;
            let expect = v * C64::new(j * (j + 1.0), 0.0);
            let max = (s2v - expect).iter().map(|e| e.norm()).fold(0.0f64, f64::max);
            assert!(max < 1e-12);
        }
    }

    #[test]
    fn hermitian_flags_hold() {
        let ops = collective_operators(4);
        for op in [&ops.sx, &ops.sy, &ops.sz, &ops.s2] {
            assert!(hermitian_deviation(&op.matrix) < 1e-12);
        }
    }

    #[test]
    fn sz_diagonal_matches_operator() {
        let n = 4;
        let ops = collective_operators(n);
        let diag = sz_diagonal(n);
        for (a, &m) in diag.iter().enumerate() {
            assert_relative_eq!(ops.sz.matrix[(a, a)].re, m, epsilon = 1e-13);
        }
    }
}
