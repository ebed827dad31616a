//! Maps qubit states to complex fields, plus independence checks and charge bounds.

mod bounds;
mod config;
mod independence;
mod map;
mod types;

pub use bounds::{necessary_charge_bound, sufficient_charge_bound, MAX_BOUND_QUBITS, MAX_SUFFICIENT_QUBITS};
pub use config::{RepresentationConfig, RepresentationKind};
pub use independence::{
    check_laurent_independence, check_linear_independence, evaluation_matrix, four_qubit_points, nonsingularity_gap,
    two_qubit_points, IndependenceReport, NonsingularityGap, RANK_TOL,
};
pub use map::{
    basis_fields, basis_numerator, charge_map, exponent, map_state, position_map, ternary_exponent, ternary_strings,
    variable_particle_fields,
};
pub use types::{eval_field, Field, FieldValue, LaurentField, RationalField};
