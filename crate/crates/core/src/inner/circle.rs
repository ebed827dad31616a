use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::field::LaurentField;

/// Smallest node count for which the trapezoid rule is exact on `conj(f₁) f₂`.
pub fn required_nodes(f1: &LaurentField, f2: &LaurentField) -> usize {
    2 * f1.max_abs_exponent().max(f2.max_abs_exponent()) as usize + 1
}

/// `2 · max|c| + 8`.
pub fn default_nodes(f1: &LaurentField, f2: &LaurentField) -> usize {
    2 * f1.max_abs_exponent().max(f2.max_abs_exponent()) as usize + 8
}

/// `(1/2π) ∫ conj(f₁) f₂ dθ` over the unit circle by the uniform trapezoid
/// rule. `nodes = None` uses [`default_nodes`].
pub fn circle_inner_product(f1: &LaurentField, f2: &LaurentField, nodes: Option<usize>) -> Result<Complex64> {
    let required = required_nodes(f1, f2);
    let nodes = nodes.unwrap_or_else(|| default_nodes(f1, f2));
    if nodes < required {
        return Err(Error::InsufficientNodes { required, given: nodes });
    }
    let mut sum = Complex64::new(0.0, 0.0);
    for k in 0..nodes {
        let z = Complex64::from_polar(1.0, 2.0 * PI * k as f64 / nodes as f64);
        sum += f1.eval(z)?.conj() * f2.eval(z)?;
    }
    Ok(sum / nodes as f64)
}
