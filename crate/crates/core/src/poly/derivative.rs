//! Exact derivatives of mapped fields via truncated Taylor series.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg::CMatrix;

fn zero() -> Complex64 {
    Complex64::new(0.0, 0.0)
}

/// Series of `(t + c)^e` in `t` up to `t^{len−1}`, for integer `e` and `c ≠ 0`.
fn shifted_power_series(c: Complex64, e: i64, len: usize) -> Vec<Complex64> {
    let mut out = Vec::with_capacity(len);
    let mut term = c.powi(e as i32);
    for k in 0..len {
        out.push(term);
        // generalized binomial step: C(e, k+1) / C(e, k) = (e − k) / (k + 1)
        term = term * ((e - k as i64) as f64 / (k + 1) as f64) / c;
    }
    out
}

fn truncated_product(a: &[Complex64], b: &[Complex64], len: usize) -> Vec<Complex64> {
    (0..len).map(|k| (0..=k).map(|i| a[i] * b[k - i]).sum()).collect()
}

/// Taylor coefficients `D^k f(α) / k!` for `k = 0..len`.
pub fn taylor_coefficients(field: &Field, alpha: Complex64, len: usize) -> Result<Vec<Complex64>> {
    if field.pole_candidates().contains(&alpha) {
        return Err(Error::PoleEvaluation { location: alpha });
    }
    match field {
        Field::Laurent(l) => {
            let mut out = vec![zero(); len];
            if alpha == zero() {
                for (&e, &c) in l.terms() {
                    if e >= 0 && (e as usize) < len {
                        out[e as usize] += c;
                    }
                }
                return Ok(out);
            }
            for (&e, &c) in l.terms() {
                for (slot, s) in out.iter_mut().zip(shifted_power_series(alpha, e, len)) {
                    *slot += c * s;
                }
            }
            Ok(out)
        }
        Field::Rational(r) => {
            let mut series = r.numerator.taylor_shift(alpha);
            series.resize(len.max(series.len()), zero());
            series.truncate(len);
            for &a in &r.defects {
                let factor = shifted_power_series(alpha - a, -(r.d as i64), len);
                series = truncated_product(&series, &factor, len);
            }
            Ok(series)
        }
    }
}

/// `D^k f(α)` for `k = 0..=max_order`.
pub fn derivative_eval(field: &Field, alpha: Complex64, max_order: usize) -> Result<Vec<Complex64>> {
    let mut factorial = 1.0;
    let coeffs = taylor_coefficients(field, alpha, max_order + 1)?;
    Ok(coeffs
        .into_iter()
        .enumerate()
        .map(|(k, c)| {
            if k > 0 {
                factorial *= k as f64;
            }
            c * factorial
        })
        .collect())
}

/// `B[k][j] = D^k f_j(α)` for `k < fields.len()`.
pub fn wronskian_matrix(fields: &[Field], alpha: Complex64) -> Result<CMatrix> {
    let m = fields.len();
    let mut b = CMatrix::zeros(m, m);
    for (j, f) in fields.iter().enumerate() {
        for (k, v) in derivative_eval(f, alpha, m.saturating_sub(1))?.into_iter().enumerate() {
            b[(k, j)] = v;
        }
    }
    Ok(b)
}

/// The Wronskian matrix with row `k` divided by `k!`. Same column space
/// relations, much better scaled for high orders.
pub fn taylor_matrix(fields: &[Field], alpha: Complex64) -> Result<CMatrix> {
    let m = fields.len();
    let mut b = CMatrix::zeros(m, m);
    for (j, f) in fields.iter().enumerate() {
        for (k, v) in taylor_coefficients(f, alpha, m)?.into_iter().enumerate() {
            b[(k, j)] = v;
        }
    }
    Ok(b)
}
