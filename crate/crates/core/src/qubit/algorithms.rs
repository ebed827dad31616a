//! Deutsch-Jozsa and Shor period finding on explicit truth tables.

use std::f64::consts::FRAC_1_SQRT_2;

use num_complex::Complex64;

use super::gate::{check_targets, Gate};
use super::qft::qft_on;
use super::state::QubitState;
use crate::error::{Error, Result};

/// Truth table of a classical function `{0,1}^k → {0, …, 2^m − 1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OracleTable {
    input_bits: usize,
    output_bits: usize,
    values: Vec<u64>,
}

impl OracleTable {
    pub fn new(input_bits: usize, output_bits: usize, values: Vec<u64>) -> Result<Self> {
        if input_bits == 0 || input_bits > 20 {
            return Err(Error::invalid(format!("oracle input width {input_bits} out of range")));
        }
        if output_bits == 0 || output_bits > 20 {
            return Err(Error::invalid(format!(
                "oracle output width {output_bits} out of range"
            )));
        }
        if values.len() != 1 << input_bits {
            return Err(Error::LengthMismatch {
                expected: 1 << input_bits,
                found: values.len(),
            });
        }
        let limit = 1u64 << output_bits;
        if let Some((input, &value)) = values.iter().enumerate().find(|(_, &v)| v >= limit) {
            return Err(Error::OracleRange { input, value, limit });
        }
        Ok(Self {
            input_bits,
            output_bits,
            values,
        })
    }

    /// A one-bit oracle; values must be 0 or 1.
    pub fn boolean(input_bits: usize, values: Vec<u64>) -> Result<Self> {
        Self::new(input_bits, 1, values)
    }

    pub fn input_bits(&self) -> usize {
        self.input_bits
    }

    pub fn output_bits(&self) -> usize {
        self.output_bits
    }

    pub fn values(&self) -> &[u64] {
        &self.values
    }

    pub fn eval(&self, x: usize) -> u64 {
        self.values[x]
    }

    pub fn is_boolean(&self) -> bool {
        self.values.iter().all(|&v| v <= 1)
    }

    /// Smallest cyclic period `r` with `f(x + r mod N) = f(x)` for all `x`.
    pub fn period(&self) -> usize {
        let len = self.values.len();
        (1..=len)
            .find(|&r| (0..len).all(|x| self.values[x] == self.values[(x + r) % len]))
            .unwrap_or(len)
    }
}

/// Applies `|x⟩|y⟩ → |x⟩|y ⊕ f(x)⟩`, inputs and outputs given as 1-based
/// qubit registers with their first qubit most significant.
pub fn apply_oracle(state: &QubitState, f: &OracleTable, inputs: &[usize], outputs: &[usize]) -> Result<QubitState> {
    if inputs.len() != f.input_bits {
        return Err(Error::LengthMismatch {
            expected: f.input_bits,
            found: inputs.len(),
        });
    }
    let limit = 1u64 << outputs.len();
    if let Some((input, &value)) = f.values.iter().enumerate().find(|(_, &v)| v >= limit) {
        return Err(Error::OracleRange { input, value, limit });
    }
    let all: Vec<usize> = inputs.iter().chain(outputs).copied().collect();
    check_targets(state.n(), &all)?;
    let n = state.n();
    let read = |index: usize, reg: &[usize]| reg.iter().fold(0usize, |acc, &q| (acc << 1) | ((index >> (n - q)) & 1));
    let src = state.amplitudes();
    let mut out = vec![Complex64::new(0.0, 0.0); src.len()];
    for (index, amp) in src.iter().enumerate() {
        let fx = f.eval(read(index, inputs)) as usize;
        let mut target = index;
        for (b, &q) in outputs.iter().enumerate() {
            if (fx >> (outputs.len() - 1 - b)) & 1 == 1 {
                target ^= 1 << (n - q);
            }
        }
        out[target] += amp;
    }
    Ok(QubitState::from_parts(n, out))
}

/// A labelled intermediate state of an algorithm run.
#[derive(Clone, Debug)]
pub struct Stage {
    pub label: &'static str,
    pub state: QubitState,
}

#[derive(Clone, Debug)]
pub struct DeutschJozsaRun {
    /// init, Hadamards, oracle, final Hadamards on the inputs.
    pub stages: Vec<Stage>,
    input_bits: usize,
}

impl DeutschJozsaRun {
    pub fn post_oracle(&self) -> &QubitState {
        &self.stages[2].state
    }

    pub fn final_state(&self) -> &QubitState {
        &self.stages[3].state
    }

    /// Input register of stage `k`, with the ancilla projected onto
    /// `(|0⟩ − |1⟩)/√2`. Exact whenever the ancilla factorizes in that state,
    /// which holds from the Hadamard stage on.
    pub fn input_register(&self, k: usize) -> QubitState {
        let amps = self.stages[k].state.amplitudes();
        let v = (0..1 << self.input_bits)
            .map(|x| (amps[2 * x] - amps[2 * x + 1]) * FRAC_1_SQRT_2)
            .collect();
        QubitState::from_parts(self.input_bits, v)
    }

    /// Probability of measuring all inputs as zero at the end.
    pub fn zero_probability(&self) -> f64 {
        self.final_state().probabilities()[0] + self.final_state().probabilities()[1]
    }
}

/// Deutsch-Jozsa on `k` input qubits plus one ancilla (the last qubit),
/// starting from `|0…0⟩|1⟩`.
pub fn deutsch_jozsa(f: &OracleTable) -> Result<DeutschJozsaRun> {
    if !f.is_boolean() {
        return Err(Error::invalid("Deutsch-Jozsa oracle is not Boolean"));
    }
    let k = f.input_bits;
    let n = k + 1;
    let mut bits = vec![0u8; n];
    bits[k] = 1;
    let init = QubitState::basis(n, &bits)?;
    let mut s = init.clone();
    for q in 1..=n {
        s = Gate::h().apply(&s, &[q])?;
    }
    let hadamards = s.clone();
    let inputs: Vec<usize> = (1..=k).collect();
    let oracle = apply_oracle(&hadamards, f, &inputs, &[n])?;
    let mut fin = oracle.clone();
    for q in 1..=k {
        fin = Gate::h().apply(&fin, &[q])?;
    }
    Ok(DeutschJozsaRun {
        stages: vec![
            Stage {
                label: "init",
                state: init,
            },
            Stage {
                label: "hadamard",
                state: hadamards,
            },
            Stage {
                label: "oracle",
                state: oracle,
            },
            Stage {
                label: "final",
                state: fin,
            },
        ],
        input_bits: k,
    })
}

#[derive(Clone, Debug)]
pub struct ShorRun {
    /// init, Hadamards on the inputs, oracle, QFT on the inputs.
    pub stages: Vec<Stage>,
    /// Exact measurement distribution of the input register.
    pub distribution: Vec<f64>,
}

impl ShorRun {
    /// Input values measured with probability above `tol`.
    pub fn support(&self, tol: f64) -> Vec<usize> {
        self.distribution
            .iter()
            .enumerate()
            .filter(|(_, &p)| p > tol)
            .map(|(k, _)| k)
            .collect()
    }
}

/// Period finding with `n_in` input and `n_anc` ancilla qubits (inputs first).
/// The oracle writes `f(x)` in binary onto the ancillas, most significant bit
/// first.
pub fn shor_period_find(f: &OracleTable, n_in: usize, n_anc: usize) -> Result<ShorRun> {
    if f.input_bits != n_in {
        return Err(Error::LengthMismatch {
            expected: n_in,
            found: f.input_bits,
        });
    }
    let n = n_in + n_anc;
    let init = QubitState::basis(n, &vec![0; n])?;
    let mut s = init.clone();
    for q in 1..=n_in {
        s = Gate::h().apply(&s, &[q])?;
    }
    let hadamards = s.clone();
    let inputs: Vec<usize> = (1..=n_in).collect();
    let ancillas: Vec<usize> = (n_in + 1..=n).collect();
    let oracle = apply_oracle(&hadamards, f, &inputs, &ancillas)?;
    let fourier = qft_on(&oracle, &inputs)?;
    let probs = fourier.probabilities();
    let per_input = 1 << n_anc;
    let distribution = (0..1 << n_in)
        .map(|x| probs[x * per_input..(x + 1) * per_input].iter().sum())
        .collect();
    Ok(ShorRun {
        stages: vec![
            Stage {
                label: "init",
                state: init,
            },
            Stage {
                label: "hadamard",
                state: hadamards,
            },
            Stage {
                label: "oracle",
                state: oracle,
            },
            Stage {
                label: "qft",
                state: fourier,
            },
        ],
        distribution,
    })
}
