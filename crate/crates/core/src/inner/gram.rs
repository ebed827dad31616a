use std::f64::consts::PI;

use num_complex::Complex64;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::field::{basis_fields, Field, RepresentationConfig};
use crate::linalg::{condition_number, CMatrix};
use crate::poly::{taylor_coefficients, taylor_matrix, wronskian_matrix};

pub const CANDIDATE_RADII: [f64; 4] = [0.3, 0.7, 1.7, 2.9];
pub const CANDIDATE_ANGLES: usize = 16;
pub const CONDITION_LIMIT: f64 = 1e8;
const DEFECT_CLEARANCE: f64 = 1e-3;

/// Inner product on the span of the mapped basis fields, built from
/// derivatives at one evaluation point `α`.
///
/// `B` holds `D^k f_σ(α)` and `P = (B⁻¹)† B⁻¹`. `condition_estimate` is the
/// condition number of `B` with row `k` divided by `k!`; the inner product
/// does not depend on that row scaling and the scaled matrix is what gets
/// factored.
#[derive(Clone, Debug, Serialize)]
pub struct GramContext {
    pub alpha: Complex64,
    #[serde(serialize_with = "nested")]
    pub b: CMatrix,
    #[serde(serialize_with = "nested")]
    pub p: CMatrix,
    pub condition_estimate: f64,
    /// `(S B)⁻¹` with `S = diag(1/k!)`: maps Taylor coefficients to amplitudes.
    #[serde(skip)]
    coordinates: CMatrix,
    #[serde(skip)]
    dim: usize,
}

fn nested<S: Serializer>(m: &CMatrix, s: S) -> std::result::Result<S::Ok, S::Error> {
    let rows: Vec<Vec<Complex64>> = (0..m.nrows()).map(|i| m.row(i).iter().copied().collect()).collect();
    rows.serialize(s)
}

/// The 64 candidate points `r e^{2πik/16}`.
pub fn alpha_candidates() -> Vec<Complex64> {
    CANDIDATE_RADII
        .iter()
        .flat_map(|&r| {
            (0..CANDIDATE_ANGLES).map(move |k| Complex64::from_polar(r, 2.0 * PI * k as f64 / CANDIDATE_ANGLES as f64))
        })
        .collect()
}

/// Scans the candidate points and builds the context at the best one.
pub fn build_gram(cfg: &RepresentationConfig) -> Result<GramContext> {
    let fields = basis_fields(cfg)?;
    let poles: Vec<Complex64> = fields.iter().flat_map(Field::pole_candidates).collect();
    let mut best: Option<(Complex64, f64)> = None;
    for alpha in alpha_candidates() {
        if poles.iter().any(|a| (alpha - a).norm() < DEFECT_CLEARANCE) {
            continue;
        }
        let cond = condition_number(&taylor_matrix(&fields, alpha)?);
        let cond = if cond.is_finite() { cond } else { f64::INFINITY };
        if best.is_none_or(|(_, c)| cond < c) {
            best = Some((alpha, cond));
        }
    }
    let Some((alpha, condition)) = best else {
        return Err(Error::Conditioning {
            best_alpha: Complex64::new(f64::NAN, f64::NAN),
            condition: f64::INFINITY,
        });
    };
    if condition > CONDITION_LIMIT {
        return Err(Error::Conditioning {
            best_alpha: alpha,
            condition,
        });
    }
    gram_at(&fields, alpha)
}

/// Builds the context at a given `α` without any conditioning guard beyond
/// invertibility.
pub fn gram_at(fields: &[Field], alpha: Complex64) -> Result<GramContext> {
    let dim = fields.len();
    let scaled = taylor_matrix(fields, alpha)?;
    let condition_estimate = condition_number(&scaled);
    let coordinates = scaled.clone().try_inverse().ok_or(Error::Conditioning {
        best_alpha: alpha,
        condition: condition_estimate,
    })?;
    let b = wronskian_matrix(fields, alpha)?;
    // B⁻¹ = (S B)⁻¹ S
    let mut inverse = coordinates.clone();
    let mut factorial = 1.0;
    for k in 0..dim {
        if k > 0 {
            factorial *= k as f64;
        }
        inverse.column_mut(k).unscale_mut(factorial);
    }
    let p = inverse.adjoint() * &inverse;
    Ok(GramContext {
        alpha,
        b,
        p,
        condition_estimate,
        coordinates,
        dim,
    })
}

impl GramContext {
    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Coordinates of `f` in the mapped basis.
    pub fn coordinates(&self, f: &Field) -> Result<Vec<Complex64>> {
        let c = taylor_coefficients(f, self.alpha, self.dim)?;
        let x = &self.coordinates * nalgebra::DVector::from_vec(c);
        Ok(x.iter().copied().collect())
    }

    /// `π(f)` as the column `D^k f(α)`, `k < dim`.
    pub fn project(&self, f: &Field) -> Result<Vec<Complex64>> {
        crate::poly::derivative_eval(f, self.alpha, self.dim.saturating_sub(1))
    }
}

/// `⟨f₁, f₂⟩ = π(f₁)† P π(f₂)`, conjugate-linear in `f₁`.
pub fn inner(f1: &Field, f2: &Field, ctx: &GramContext) -> Result<Complex64> {
    let x1 = ctx.coordinates(f1)?;
    let x2 = ctx.coordinates(f2)?;
    Ok(x1.iter().zip(&x2).map(|(a, b)| a.conj() * b).sum())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::map_state;
    use crate::qubit::QubitState;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn one_qubit_matrix_by_hand() {
        let cfg = RepresentationConfig::default_position(1).unwrap();
        let fields = basis_fields(&cfg).unwrap();
        let ctx = gram_at(&fields, c(1.0, 0.0)).unwrap();
        // [[1/α, α], [−1/α², 1]] at α = 1
        let want = [[1.0, 1.0], [-1.0, 1.0]];
        for (i, row) in want.iter().enumerate() {
            for (j, &w) in row.iter().enumerate() {
                assert!((ctx.b[(i, j)] - c(w, 0.0)).norm() < 1e-15);
            }
        }
    }

    #[test]
    fn basis_is_orthonormal() {
        let cfg = RepresentationConfig::default_position(2).unwrap();
        let ctx = build_gram(&cfg).unwrap();
        let gram = ctx.b.adjoint() * &ctx.p * &ctx.b;
        let id = CMatrix::identity(4, 4);
        assert!((gram - id).norm() < 1e-8);
        let f00 = map_state(&QubitState::basis(2, &[0, 0]).unwrap(), &cfg).unwrap();
        let f11 = map_state(&QubitState::basis(2, &[1, 1]).unwrap(), &cfg).unwrap();
        assert!((inner(&f00, &f00, &ctx).unwrap() - 1.0).norm() < 1e-10);
        assert!(inner(&f00, &f11, &ctx).unwrap().norm() < 1e-10);
    }

    #[test]
    fn dependent_family_fails() {
        let cfg = RepresentationConfig::position(RepresentationConfig::default_defects(3).unwrap(), 1).unwrap();
        assert!(matches!(build_gram(&cfg), Err(Error::Conditioning { .. })));
    }

    #[test]
    fn json_has_nested_matrices() {
        let cfg = RepresentationConfig::default_position(1).unwrap();
        let v = serde_json::to_value(build_gram(&cfg).unwrap()).unwrap();
        assert_eq!(v["b"].as_array().unwrap().len(), 2);
        assert_eq!(v["p"][0][0].as_array().unwrap().len(), 2);
    }
}
