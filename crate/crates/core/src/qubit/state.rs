use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Dense state vector over the 2^n computational basis states.
///
/// Qubit 1 is the most significant bit of the basis index, so `|σ1σ2⟩` sits
/// at index `2σ1 + σ2`. Amplitudes are kept unnormalized.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "StateWire", into = "StateWire")]
pub struct QubitState {
    n: usize,
    amplitudes: Vec<Complex64>,
}

#[derive(Serialize, Deserialize)]
struct StateWire {
    n: usize,
    amplitudes: Vec<Complex64>,
}

impl TryFrom<StateWire> for QubitState {
    type Error = Error;
    fn try_from(w: StateWire) -> Result<Self> {
        QubitState::new(w.n, w.amplitudes)
    }
}

impl From<QubitState> for StateWire {
    fn from(s: QubitState) -> Self {
        StateWire {
            n: s.n,
            amplitudes: s.amplitudes,
        }
    }
}

/// Largest register the dense representation accepts.
pub const MAX_QUBITS: usize = 24;

pub(crate) fn check_qubit_count(n: usize) -> Result<()> {
    if n == 0 || n > MAX_QUBITS {
        return Err(Error::invalid(format!(
            "qubit count must be in 1..={MAX_QUBITS}, got {n}"
        )));
    }
    Ok(())
}

/// Basis index of a bitstring, first bit most significant.
pub fn index_of(bits: &[u8]) -> usize {
    bits.iter().fold(0, |acc, &b| (acc << 1) | b as usize)
}

/// Bitstring of a basis index on `n` qubits.
pub fn bits_of(index: usize, n: usize) -> Vec<u8> {
    (0..n).map(|j| ((index >> (n - 1 - j)) & 1) as u8).collect()
}

/// Parses a string of `0`/`1` characters.
pub fn parse_bits(s: &str) -> Result<Vec<u8>> {
    s.chars()
        .map(|c| match c {
            '0' => Ok(0),
            '1' => Ok(1),
            other => Err(Error::invalid(format!("`{other}` is not a bit in `{s}`"))),
        })
        .collect()
}

/// Parses a string of `0`/`1`/`2` characters.
pub fn parse_ternary(s: &str) -> Result<Vec<u8>> {
    s.chars()
        .map(|c| match c.to_digit(3) {
            Some(v) => Ok(v as u8),
            None => Err(Error::invalid(format!("`{c}` is not a ternary digit in `{s}`"))),
        })
        .collect()
}

impl QubitState {
    pub fn new(n: usize, amplitudes: Vec<Complex64>) -> Result<Self> {
        check_qubit_count(n)?;
        if amplitudes.len() != 1 << n {
            return Err(Error::LengthMismatch {
                expected: 1 << n,
                found: amplitudes.len(),
            });
        }
        Ok(Self { n, amplitudes })
    }

    pub fn zero(n: usize) -> Result<Self> {
        check_qubit_count(n)?;
        Ok(Self {
            n,
            amplitudes: vec![Complex64::new(0.0, 0.0); 1 << n],
        })
    }

    /// The computational basis state `|bits⟩`.
    pub fn basis(n: usize, bits: &[u8]) -> Result<Self> {
        if bits.len() != n {
            return Err(Error::LengthMismatch {
                expected: n,
                found: bits.len(),
            });
        }
        if let Some(b) = bits.iter().find(|&&b| b > 1) {
            return Err(Error::invalid(format!("bit value {b} is not 0 or 1")));
        }
        let mut s = Self::zero(n)?;
        s.amplitudes[index_of(bits)] = Complex64::new(1.0, 0.0);
        Ok(s)
    }

    /// Single-qubit state `α|0⟩ + β|1⟩`.
    pub fn qubit(alpha: Complex64, beta: Complex64) -> Self {
        Self {
            n: 1,
            amplitudes: vec![alpha, beta],
        }
    }

    /// Product of single-qubit factors `(α_j, β_j)`, qubit 1 first.
    pub fn product(factors: &[(Complex64, Complex64)]) -> Result<Self> {
        let (first, rest) = factors
            .split_first()
            .ok_or_else(|| Error::invalid("product of zero qubits"))?;
        let mut s = Self::qubit(first.0, first.1);
        for &(a, b) in rest {
            s = s.tensor(&Self::qubit(a, b));
        }
        Ok(s)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.amplitudes.len()
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amplitudes
    }

    pub fn amplitude(&self, index: usize) -> Complex64 {
        self.amplitudes[index]
    }

    pub fn into_amplitudes(self) -> Vec<Complex64> {
        self.amplitudes
    }

    pub fn norm_sqr(&self) -> f64 {
        self.amplitudes.iter().map(|a| a.norm_sqr()).sum()
    }

    pub fn norm(&self) -> f64 {
        self.norm_sqr().sqrt()
    }

    pub fn is_zero(&self) -> bool {
        self.amplitudes.iter().all(|a| a.norm_sqr() == 0.0)
    }

    pub fn normalized(&self) -> Result<Self> {
        let norm = self.norm();
        if norm == 0.0 || !norm.is_finite() {
            return Err(Error::invalid("cannot normalize a zero or non-finite state"));
        }
        Ok(self.scaled(Complex64::new(1.0 / norm, 0.0)))
    }

    pub fn scaled(&self, c: Complex64) -> Self {
        Self {
            n: self.n,
            amplitudes: self.amplitudes.iter().map(|a| a * c).collect(),
        }
    }

    /// `a·self + b·other`.
    pub fn combine(&self, a: Complex64, other: &Self, b: Complex64) -> Result<Self> {
        if self.n != other.n {
            return Err(Error::LengthMismatch {
                expected: self.n,
                found: other.n,
            });
        }
        Ok(Self {
            n: self.n,
            amplitudes: self
                .amplitudes
                .iter()
                .zip(&other.amplitudes)
                .map(|(x, y)| a * x + b * y)
                .collect(),
        })
    }

    /// `⟨self|other⟩`, conjugate-linear in `self`.
    pub fn inner(&self, other: &Self) -> Complex64 {
        self.amplitudes
            .iter()
            .zip(&other.amplitudes)
            .map(|(x, y)| x.conj() * y)
            .sum()
    }

    /// Kronecker product, qubits of `self` first.
    pub fn tensor(&self, other: &Self) -> Self {
        let mut amplitudes = Vec::with_capacity(self.dim() * other.dim());
        for a in &self.amplitudes {
            amplitudes.extend(other.amplitudes.iter().map(|b| a * b));
        }
        Self {
            n: self.n + other.n,
            amplitudes,
        }
    }

    /// Measurement probabilities of the normalized state.
    pub fn probabilities(&self) -> Vec<f64> {
        let total = self.norm_sqr();
        self.amplitudes.iter().map(|a| a.norm_sqr() / total).collect()
    }

    pub(crate) fn from_parts(n: usize, amplitudes: Vec<Complex64>) -> Self {
        debug_assert_eq!(amplitudes.len(), 1 << n);
        Self { n, amplitudes }
    }
}

impl fmt::Display for QubitState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, a) in self.amplitudes.iter().enumerate() {
            if a.norm_sqr() == 0.0 {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let bits: String = bits_of(i, self.n).iter().map(|b| b.to_string()).collect();
            write!(f, "({a})|{bits}⟩")?;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// Common entangled test states.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NamedState {
    Ghz,
    W,
    /// `|00⟩ + |11⟩`
    Bell00Plus,
    /// `|00⟩ - |11⟩`
    Bell00Minus,
    /// `|01⟩ + |10⟩`
    Bell01Plus,
    /// `|01⟩ - |10⟩`
    Bell01Minus,
}

impl FromStr for NamedState {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let norm = s.trim().replace('−', "-").to_ascii_lowercase();
        Ok(match norm.as_str() {
            "ghz" => NamedState::Ghz,
            "w" => NamedState::W,
            "bell00+" | "bell00plus" => NamedState::Bell00Plus,
            "bell00-" | "bell00minus" => NamedState::Bell00Minus,
            "bell01+" | "bell01plus" => NamedState::Bell01Plus,
            "bell01-" | "bell01minus" => NamedState::Bell01Minus,
            _ => return Err(Error::UnknownState(s.to_string())),
        })
    }
}

impl NamedState {
    pub const BELL: [NamedState; 4] = [
        NamedState::Bell00Plus,
        NamedState::Bell00Minus,
        NamedState::Bell01Plus,
        NamedState::Bell01Minus,
    ];

    /// Unnormalized integer-amplitude state on `n` qubits.
    pub fn build(self, n: usize) -> Result<QubitState> {
        let one = Complex64::new(1.0, 0.0);
        let mut s = QubitState::zero(n)?;
        match self {
            NamedState::Ghz | NamedState::W if n < 2 => {
                return Err(Error::invalid(format!("{self:?} needs at least 2 qubits")))
            }
            NamedState::Ghz => {
                s.amplitudes[0] = one;
                s.amplitudes[(1 << n) - 1] = one;
            }
            NamedState::W => {
                for j in 0..n {
                    s.amplitudes[1 << j] = one;
                }
            }
            bell => {
                if n != 2 {
                    return Err(Error::invalid(format!("{bell:?} is a 2-qubit state")));
                }
                let (i, k, sign) = match bell {
                    NamedState::Bell00Plus => (0b00, 0b11, 1.0),
                    NamedState::Bell00Minus => (0b00, 0b11, -1.0),
                    NamedState::Bell01Plus => (0b01, 0b10, 1.0),
                    _ => (0b01, 0b10, -1.0),
                };
                s.amplitudes[i] = one;
                s.amplitudes[k] = Complex64::new(sign, 0.0);
            }
        }
        Ok(s)
    }
}

pub fn make_named_state(name: &str, n: usize) -> Result<QubitState> {
    name.parse::<NamedState>()?.build(n)
}
