//! Qubit states as planar complex fields with topological defects.
//!
//! States are mapped either to Laurent polynomials (charge representation)
//! or to rational functions with one basis defect per qubit (position
//! representation). The crate simulates small circuits, extracts defects and
//! halos, builds inner products on the field space and renders flows.

pub mod defects;
pub mod error;
pub mod field;
pub mod inner;
pub mod linalg;
pub mod poly;
pub mod qubit;
pub mod render;

pub use error::{Error, Result};
