//! Lifting planar flows to the unit sphere by stereographic projection from
//! the north pole.

use std::f64::consts::PI;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::{eval_field, Field};

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct SphereSample {
    /// Colatitude from the north pole.
    pub theta: f64,
    /// Longitude.
    pub phi: f64,
    pub point: [f64; 3],
    pub u: [f64; 3],
}

/// Plane image `g(p) = (x + iy) / (1 − z)` of a sphere point.
pub fn to_plane(p: [f64; 3]) -> Complex64 {
    Complex64::new(p[0], p[1]) / (1.0 - p[2])
}

pub fn sphere_point(theta: f64, phi: f64) -> [f64; 3] {
    [theta.sin() * phi.cos(), theta.sin() * phi.sin(), theta.cos()]
}

/// Pulls a plane vector `V` at `g(p)` back to the tangent plane at `p`.
pub fn lift_vector(p: [f64; 3], v: (f64, f64)) -> [f64; 3] {
    let [x, y, z] = p;
    [
        (-x * x + 1.0 - z) * v.0 - x * y * v.1,
        -x * y * v.0 + (-y * y + 1.0 - z) * v.1,
        x * (1.0 - z) * v.0 + y * (1.0 - z) * v.1,
    ]
}

/// Samples on the midpoint lattice `θ_i = π(i + ½)/n_θ`, `φ_k = 2πk/n_φ`,
/// which avoids both poles of the sphere. Points mapping onto a pole of the
/// field are skipped.
pub fn stereographic_project(field: &Field, n_theta: usize, n_phi: usize) -> Result<Vec<SphereSample>> {
    if n_theta == 0 || n_phi == 0 {
        return Err(Error::invalid("sphere resolution must be positive"));
    }
    let mut out = Vec::with_capacity(n_theta * n_phi);
    for i in 0..n_theta {
        let theta = PI * (i as f64 + 0.5) / n_theta as f64;
        for k in 0..n_phi {
            let phi = 2.0 * PI * k as f64 / n_phi as f64;
            let point = sphere_point(theta, phi);
            match eval_field(field, to_plane(point)) {
                Ok(fv) => out.push(SphereSample {
                    theta,
                    phi,
                    point,
                    u: lift_vector(point, (fv.u, fv.v)),
                }),
                Err(Error::PoleEvaluation { .. }) => continue,
                Err(e) => return Err(e),
            }
        }
    }
    Ok(out)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum NorthPoleBehavior {
    Vanishes,
    BoundedDiscontinuous,
    Diverges,
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct NorthPoleReport {
    /// `deg(numerator) − deg(denominator)`.
    pub degree: i64,
    pub behavior: NorthPoleBehavior,
    /// Slope of `log ‖U‖` against `log θ` for `θ ∈ [1e−3, 1e−1]`.
    pub fitted_exponent: f64,
}

const FIT_THETAS: usize = 25;
const FIT_PHIS: usize = 32;

/// Classifies the lifted flow at the north pole from the asymptotic degree
/// `D` of the field and fits the power law `‖U‖ ∝ θ^{2−D}`.
pub fn north_pole_classify(field: &Field) -> Result<NorthPoleReport> {
    let degree = field.asymptotic_degree().ok_or(Error::ZeroField)?;
    let behavior = match degree {
        d if d < 2 => NorthPoleBehavior::Vanishes,
        2 => NorthPoleBehavior::BoundedDiscontinuous,
        _ => NorthPoleBehavior::Diverges,
    };
    let (lo, hi) = (1e-3f64.ln(), 1e-1f64.ln());
    let mut xs = Vec::with_capacity(FIT_THETAS);
    let mut ys = Vec::with_capacity(FIT_THETAS);
    for i in 0..FIT_THETAS {
        let log_theta = lo + (hi - lo) * i as f64 / (FIT_THETAS - 1) as f64;
        let theta = log_theta.exp();
        // averaging log|U| over a circle cancels the zeros and poles inside it
        let mut acc = 0.0;
        let mut count = 0;
        for k in 0..FIT_PHIS {
            let phi = 2.0 * PI * (k as f64 + 0.5) / FIT_PHIS as f64;
            let p = sphere_point(theta, phi);
            let Ok(fv) = eval_field(field, to_plane(p)) else {
                continue;
            };
            let u = lift_vector(p, (fv.u, fv.v));
            let norm = (u[0] * u[0] + u[1] * u[1] + u[2] * u[2]).sqrt();
            if norm > 0.0 && norm.is_finite() {
                acc += norm.ln();
                count += 1;
            }
        }
        if count > 0 {
            xs.push(log_theta);
            ys.push(acc / count as f64);
        }
    }
    if xs.len() < 2 {
        return Err(Error::invalid("field could not be sampled near the north pole"));
    }
    let n = xs.len() as f64;
    let mx = xs.iter().sum::<f64>() / n;
    let my = ys.iter().sum::<f64>() / n;
    let sxy: f64 = xs.iter().zip(&ys).map(|(x, y)| (x - mx) * (y - my)).sum();
    let sxx: f64 = xs.iter().map(|x| (x - mx).powi(2)).sum();
    Ok(NorthPoleReport {
        degree,
        behavior,
        fitted_exponent: sxy / sxx,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::LaurentField;

    #[test]
    fn south_pole_constant_field() {
        let u = lift_vector([0.0, 0.0, -1.0], (1.0, 0.0));
        assert_eq!(u, [2.0, 0.0, 0.0]);
    }

    #[test]
    fn tangency() {
        let f = Field::Laurent(LaurentField::from_terms([
            (-2, Complex64::new(1.0, 0.5)),
            (3, Complex64::new(-0.2, 1.0)),
        ]));
        let samples = stereographic_project(&f, 12, 16).unwrap();
        assert_eq!(samples.len(), 12 * 16);
        for s in samples {
            let dot: f64 = (0..3).map(|i| s.u[i] * s.point[i]).sum();
            let scale = 1.0 + (0..3).map(|i| s.u[i].abs()).sum::<f64>();
            assert!(dot.abs() <= 1e-9 * scale, "{s:?}");
        }
    }

    #[test]
    fn power_law_exponents() {
        for d in [-3i64, 0, 2, 4] {
            let f = Field::Laurent(LaurentField::monomial(d, Complex64::new(1.0, 0.0)));
            let r = north_pole_classify(&f).unwrap();
            assert!((r.fitted_exponent - (2 - d) as f64).abs() < 0.1, "D = {d}: {r:?}");
        }
    }
}
