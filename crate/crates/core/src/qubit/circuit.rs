use serde::{Deserialize, Serialize};

use super::gate::Gate;
use super::qft::{inverse_qft_on, qft_on};
use super::state::{check_qubit_count, QubitState};
use crate::error::{Error, Result};

/// One circuit step as stored in circuit JSON.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CircuitOp {
    pub gate: String,
    pub targets: Vec<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub theta: Option<f64>,
}

/// `{"n": 3, "ops": [{"gate": "H", "targets": [1]}, ...]}`.
///
/// Besides the named gates, `QFT` and `IQFT` act on the register listed in
/// `targets`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Circuit {
    pub n: usize,
    pub ops: Vec<CircuitOp>,
}

impl Circuit {
    pub fn from_json(text: &str) -> Result<Self> {
        let c: Circuit = serde_json::from_str(text)?;
        c.validate()?;
        Ok(c)
    }

    pub fn validate(&self) -> Result<()> {
        check_qubit_count(self.n)?;
        let probe = QubitState::zero(self.n)?;
        for (k, op) in self.ops.iter().enumerate() {
            op.apply(&probe)
                .map_err(|e| Error::invalid(format!("ops[{k}] ({}): {e}", op.gate)))?;
        }
        Ok(())
    }

    /// Runs the circuit and returns the initial state followed by the state
    /// after every op.
    pub fn run(&self, initial: &QubitState) -> Result<Vec<QubitState>> {
        if initial.n() != self.n {
            return Err(Error::LengthMismatch {
                expected: self.n,
                found: initial.n(),
            });
        }
        let mut states = vec![initial.clone()];
        for op in &self.ops {
            let next = op.apply(states.last().expect("non-empty"))?;
            states.push(next);
        }
        Ok(states)
    }
}

impl CircuitOp {
    pub fn apply(&self, state: &QubitState) -> Result<QubitState> {
        match self.gate.to_ascii_uppercase().as_str() {
            "QFT" => qft_on(state, &self.targets),
            "IQFT" => inverse_qft_on(state, &self.targets),
            _ => Gate::by_name(&self.gate, self.theta)?.apply(state, &self.targets),
        }
    }
}
