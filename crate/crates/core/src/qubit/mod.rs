//! State-vector qubits, gates and the small algorithms shown as flow fields.

mod algorithms;
mod circuit;
mod gate;
mod qft;
mod state;

pub use algorithms::{apply_oracle, deutsch_jozsa, shor_period_find, DeutschJozsaRun, OracleTable, ShorRun, Stage};
pub use circuit::{Circuit, CircuitOp};
pub use gate::{apply_gate, Gate};
pub use qft::{inverse_qft, inverse_qft_on, qft, qft_on};
pub use state::{bits_of, index_of, make_named_state, parse_bits, parse_ternary, NamedState, QubitState, MAX_QUBITS};
