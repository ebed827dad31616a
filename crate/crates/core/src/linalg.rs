//! Small dense complex linear-algebra helpers on top of nalgebra.

use nalgebra::DMatrix;
use num_complex::Complex64;

pub type CMatrix = DMatrix<Complex64>;

/// Singular values in descending order.
pub fn singular_values(m: &CMatrix) -> Vec<f64> {
    if m.nrows() == 0 || m.ncols() == 0 {
        return Vec::new();
    }
    let mut s: Vec<f64> = m.clone().svd(false, false).singular_values.iter().copied().collect();
    s.sort_by(|a, b| b.total_cmp(a));
    s
}

/// Scales every nonzero column to unit 2-norm. Rank is unchanged.
pub fn normalize_columns(m: &CMatrix) -> CMatrix {
    let mut out = m.clone();
    for mut col in out.column_iter_mut() {
        let norm = col.norm();
        if norm > 0.0 {
            col.unscale_mut(norm);
        }
    }
    out
}

/// Alternating row/column 2-norm scaling until the scale factors settle.
/// Singularity is invariant under the diagonal scalings applied.
pub fn equilibrate(m: &CMatrix) -> CMatrix {
    let mut out = m.clone();
    for _ in 0..500 {
        let mut worst: f64 = 0.0;
        for mut row in out.row_iter_mut() {
            let norm = row.norm();
            if norm > 0.0 {
                row.unscale_mut(norm);
                worst = worst.max((norm - 1.0).abs());
            }
        }
        for mut col in out.column_iter_mut() {
            let norm = col.norm();
            if norm > 0.0 {
                col.unscale_mut(norm);
                worst = worst.max((norm - 1.0).abs());
            }
        }
        if worst < 1e-12 {
            break;
        }
    }
    out
}

/// `σ_max / σ_min`, infinite for singular or empty matrices.
pub fn condition_number(m: &CMatrix) -> f64 {
    let s = singular_values(m);
    match (s.first(), s.last()) {
        (Some(&hi), Some(&lo)) if lo > 0.0 && s.len() == m.nrows().min(m.ncols()) => hi / lo,
        _ => f64::INFINITY,
    }
}

/// Number of singular values above `rel_tol · σ_max`.
pub fn rank_from_singular_values(s: &[f64], rel_tol: f64) -> usize {
    let max = s.iter().copied().fold(0.0, f64::max);
    if max == 0.0 {
        return 0;
    }
    s.iter().filter(|&&v| v > rel_tol * max).count()
}
