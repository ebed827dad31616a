use std::f64::consts::{FRAC_1_SQRT_2, PI};

use num_complex::Complex64;

use super::state::QubitState;
use crate::error::{Error, Result};

const UNITARY_TOL: f64 = 1e-12;

/// A one- or two-qubit unitary with a display label.
///
/// The matrix is row-major. For two-qubit gates the first target is the more
/// significant bit of the gate's local basis.
#[derive(Clone, Debug, PartialEq)]
pub struct Gate {
    label: String,
    arity: usize,
    matrix: Vec<Complex64>,
}

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

impl Gate {
    pub fn new(label: impl Into<String>, arity: usize, matrix: Vec<Complex64>) -> Result<Self> {
        let label = label.into();
        if !(1..=2).contains(&arity) {
            return Err(Error::invalid(format!("gate arity must be 1 or 2, got {arity}")));
        }
        let dim = 1 << arity;
        if matrix.len() != dim * dim {
            return Err(Error::LengthMismatch {
                expected: dim * dim,
                found: matrix.len(),
            });
        }
        // U†U = I entrywise
        for i in 0..dim {
            for j in 0..dim {
                let entry: Complex64 = (0..dim).map(|k| matrix[k * dim + i].conj() * matrix[k * dim + j]).sum();
                let expected = if i == j { 1.0 } else { 0.0 };
                if (entry - expected).norm() > UNITARY_TOL {
                    return Err(Error::NotUnitary(label));
                }
            }
        }
        Ok(Self { label, arity, matrix })
    }

    fn fixed(label: &str, arity: usize, matrix: Vec<Complex64>) -> Self {
        Self::new(label, arity, matrix).expect("built-in gate is unitary")
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn matrix(&self) -> &[Complex64] {
        &self.matrix
    }

    pub fn h() -> Self {
        let h = c(FRAC_1_SQRT_2, 0.0);
        Self::fixed("H", 1, vec![h, h, h, -h])
    }

    pub fn x() -> Self {
        Self::fixed("X", 1, vec![c(0.0, 0.0), c(1.0, 0.0), c(1.0, 0.0), c(0.0, 0.0)])
    }

    pub fn y() -> Self {
        Self::fixed("Y", 1, vec![c(0.0, 0.0), c(0.0, -1.0), c(0.0, 1.0), c(0.0, 0.0)])
    }

    pub fn z() -> Self {
        Self::fixed("Z", 1, vec![c(1.0, 0.0), c(0.0, 0.0), c(0.0, 0.0), c(-1.0, 0.0)])
    }

    /// Square root of X.
    pub fn sx() -> Self {
        let p = c(0.5, 0.5);
        let m = c(0.5, -0.5);
        Self::fixed("SX", 1, vec![p, m, m, p])
    }

    pub fn s() -> Self {
        Self::fixed("S", 1, vec![c(1.0, 0.0), c(0.0, 0.0), c(0.0, 0.0), c(0.0, 1.0)])
    }

    pub fn t() -> Self {
        Self::phase(PI / 4.0).relabel("T")
    }

    pub fn phase(theta: f64) -> Self {
        Self::fixed(
            "P",
            1,
            vec![c(1.0, 0.0), c(0.0, 0.0), c(0.0, 0.0), Complex64::from_polar(1.0, theta)],
        )
    }

    pub fn cnot() -> Self {
        let mut m = vec![c(0.0, 0.0); 16];
        for (r, col) in [(0, 0), (1, 1), (2, 3), (3, 2)] {
            m[r * 4 + col] = c(1.0, 0.0);
        }
        Self::fixed("CNOT", 2, m)
    }

    pub fn cz() -> Self {
        Self::cphase(PI).relabel("CZ")
    }

    /// Controlled phase `diag(1, 1, 1, e^{iθ})`.
    pub fn cphase(theta: f64) -> Self {
        let mut m = vec![c(0.0, 0.0); 16];
        for k in 0..3 {
            m[k * 5] = c(1.0, 0.0);
        }
        m[15] = Complex64::from_polar(1.0, theta);
        Self::fixed("CPHASE", 2, m)
    }

    pub fn swap() -> Self {
        let mut m = vec![c(0.0, 0.0); 16];
        for (r, col) in [(0, 0), (1, 2), (2, 1), (3, 3)] {
            m[r * 4 + col] = c(1.0, 0.0);
        }
        Self::fixed("SWAP", 2, m)
    }

    fn relabel(mut self, label: &str) -> Self {
        self.label = label.to_string();
        self
    }

    /// Looks up a gate by its circuit-file name. `theta` is required for the
    /// parametric gates `P` and `CPHASE`.
    pub fn by_name(name: &str, theta: Option<f64>) -> Result<Self> {
        let need_theta = || theta.ok_or_else(|| Error::invalid(format!("gate `{name}` requires a `theta` parameter")));
        Ok(match name.to_ascii_uppercase().as_str() {
            "H" => Self::h(),
            "X" => Self::x(),
            "Y" => Self::y(),
            "Z" => Self::z(),
            "SX" | "SQRTX" => Self::sx(),
            "S" => Self::s(),
            "T" => Self::t(),
            "P" | "PHASE" => Self::phase(need_theta()?),
            "CNOT" | "CX" => Self::cnot(),
            "CZ" => Self::cz(),
            "CP" | "CPHASE" => Self::cphase(need_theta()?),
            "SWAP" => Self::swap(),
            _ => return Err(Error::invalid(format!("unknown gate `{name}`"))),
        })
    }

    /// Conjugate transpose.
    pub fn dagger(&self) -> Self {
        let dim = 1 << self.arity;
        let mut m = vec![c(0.0, 0.0); dim * dim];
        for i in 0..dim {
            for j in 0..dim {
                m[j * dim + i] = self.matrix[i * dim + j].conj();
            }
        }
        Self {
            label: format!("{}†", self.label),
            arity: self.arity,
            matrix: m,
        }
    }

    /// Applies the gate to the given 1-based qubit indices.
    pub fn apply(&self, state: &QubitState, targets: &[usize]) -> Result<QubitState> {
        apply_gate(state, self, targets)
    }
}

pub(crate) fn check_targets(n: usize, targets: &[usize]) -> Result<()> {
    for (k, &t) in targets.iter().enumerate() {
        if t == 0 || t > n {
            return Err(Error::QubitOutOfRange { index: t, n });
        }
        if targets[..k].contains(&t) {
            return Err(Error::invalid(format!("target qubit {t} repeated")));
        }
    }
    Ok(())
}

/// Applies `unitary` (row-major, `2^k × 2^k`) to the register formed by
/// `targets`, the first target being the most significant local bit.
pub(crate) fn apply_register_matrix(state: &QubitState, targets: &[usize], unitary: &[Complex64]) -> QubitState {
    let n = state.n();
    let k = targets.len();
    let dim = 1 << k;
    let masks: Vec<usize> = targets.iter().map(|&t| 1 << (n - t)).collect();
    let target_mask: usize = masks.iter().sum();
    let src = state.amplitudes();
    let mut out = vec![Complex64::new(0.0, 0.0); src.len()];
    let mut local = vec![Complex64::new(0.0, 0.0); dim];
    let offsets: Vec<usize> = (0..dim)
        .map(|l| (0..k).filter(|&b| (l >> (k - 1 - b)) & 1 == 1).map(|b| masks[b]).sum())
        .collect();
    for base in (0..src.len()).filter(|i| i & target_mask == 0) {
        for (l, off) in offsets.iter().enumerate() {
            local[l] = src[base + off];
        }
        for (r, off) in offsets.iter().enumerate() {
            out[base + off] = unitary[r * dim..(r + 1) * dim]
                .iter()
                .zip(&local)
                .map(|(u, a)| u * a)
                .sum();
        }
    }
    QubitState::from_parts(n, out)
}

pub fn apply_gate(state: &QubitState, gate: &Gate, targets: &[usize]) -> Result<QubitState> {
    if targets.len() != gate.arity {
        return Err(Error::ArityMismatch {
            label: gate.label.clone(),
            arity: gate.arity,
            given: targets.len(),
        });
    }
    check_targets(state.n(), targets)?;
    Ok(apply_register_matrix(state, targets, &gate.matrix))
}
