//! Polynomial arithmetic, root finding and exact field derivatives.

mod derivative;
mod polynomial;
mod roots;

pub use derivative::{derivative_eval, taylor_coefficients, taylor_matrix, wronskian_matrix};
pub use polynomial::Polynomial;
pub use roots::{roots, Root, RootSet};
