use std::f64::consts::PI;

use num_complex::Complex64;

use super::gate::{apply_register_matrix, check_targets};
use super::state::QubitState;
use crate::error::Result;

/// Unitary DFT matrix of size `2^k`, `ω = e^{±2πi/2^k}`, row-major.
fn dft_matrix(k: usize, inverse: bool) -> Vec<Complex64> {
    let dim = 1usize << k;
    let scale = 1.0 / (dim as f64).sqrt();
    let sign = if inverse { -1.0 } else { 1.0 };
    let mut m = Vec::with_capacity(dim * dim);
    for row in 0..dim {
        for col in 0..dim {
            // reduce j·k mod N before forming the angle
            let phase = ((row * col) % dim) as f64 / dim as f64;
            m.push(Complex64::from_polar(scale, sign * 2.0 * PI * phase));
        }
    }
    m
}

/// Quantum Fourier transform on the register `targets` (first target is the
/// most significant bit of the register).
pub fn qft_on(state: &QubitState, targets: &[usize]) -> Result<QubitState> {
    check_targets(state.n(), targets)?;
    Ok(apply_register_matrix(state, targets, &dft_matrix(targets.len(), false)))
}

pub fn inverse_qft_on(state: &QubitState, targets: &[usize]) -> Result<QubitState> {
    check_targets(state.n(), targets)?;
    Ok(apply_register_matrix(state, targets, &dft_matrix(targets.len(), true)))
}

/// QFT on all qubits: amplitudes are multiplied by the `2^n`-point unitary
/// DFT matrix with `ω = e^{2πi/2^n}`.
pub fn qft(state: &QubitState) -> QubitState {
    let all: Vec<usize> = (1..=state.n()).collect();
    apply_register_matrix(state, &all, &dft_matrix(state.n(), false))
}

pub fn inverse_qft(state: &QubitState) -> QubitState {
    let all: Vec<usize> = (1..=state.n()).collect();
    apply_register_matrix(state, &all, &dft_matrix(state.n(), true))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qubit::Gate;

    #[test]
    fn qft_of_zero_is_uniform() {
        let s = qft(&QubitState::basis(3, &[0, 0, 0]).unwrap());
        let a = 2f64.powf(-1.5);
        for amp in s.amplitudes() {
            assert!((amp - Complex64::new(a, 0.0)).norm() < 1e-15);
        }
    }

    #[test]
    fn qft_of_one_matches_dft_column() {
        // independent: explicit ω^k with ω = e^{iπ/4}
        let s = qft(&QubitState::basis(3, &[0, 0, 1]).unwrap());
        let a = 2f64.powf(-1.5);
        for (k, amp) in s.amplitudes().iter().enumerate() {
            let expected = Complex64::new(a, 0.0) * Complex64::new(0.0, PI / 4.0 * k as f64).exp();
            assert!((amp - expected).norm() < 1e-15, "k={k}");
        }
    }

    #[test]
    fn gate_level_circuit_matches_dft() {
        // textbook decomposition: H, controlled phases, final swap
        let input = QubitState::new(
            3,
            (0..8)
                .map(|k| Complex64::new(k as f64 * 0.1 - 0.3, 0.05 * (k * k) as f64))
                .collect(),
        )
        .unwrap();
        let steps: Vec<(Gate, Vec<usize>)> = vec![
            (Gate::h(), vec![1]),
            (Gate::cphase(PI / 2.0), vec![2, 1]),
            (Gate::cphase(PI / 4.0), vec![3, 1]),
            (Gate::h(), vec![2]),
            (Gate::cphase(PI / 2.0), vec![3, 2]),
            (Gate::h(), vec![3]),
            (Gate::swap(), vec![1, 3]),
        ];
        let mut s = input.clone();
        for (g, t) in &steps {
            s = g.apply(&s, t).unwrap();
        }
        let direct = qft(&input);
        for (x, y) in s.amplitudes().iter().zip(direct.amplitudes()) {
            assert!((x - y).norm() < 1e-14);
        }
    }

    #[test]
    fn partial_register_qft() {
        // QFT on qubit 2 only equals a Hadamard there
        let s = QubitState::basis(2, &[1, 1]).unwrap();
        let q = qft_on(&s, &[2]).unwrap();
        let h = Gate::h().apply(&s, &[2]).unwrap();
        for (x, y) in q.amplitudes().iter().zip(h.amplitudes()) {
            assert!((x - y).norm() < 1e-15);
        }
        let back = inverse_qft_on(&q, &[2]).unwrap();
        assert!((back.amplitude(3) - Complex64::new(1.0, 0.0)).norm() < 1e-15);
    }
}
