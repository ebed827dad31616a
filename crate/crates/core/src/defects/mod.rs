//! Zeros, poles, halos and separability.

mod extract;
mod halo;
mod separability;

pub use extract::{extract_defects, DefectSet};
pub use halo::{detect_halos, regular_polygon, Halo, HaloReport, HaloStatus, ANGLE_TOL, RADIUS_REL_TOL};
pub use separability::{
    factorizable_qubits, is_separable_geometric, is_separable_tensor, proportionality_error, witness_points,
    GeometricVerdict, RANK_ONE_TOL, WITNESS_TOL,
};
