//! Regular 2d-gons of zeros around the basis defects.

use std::f64::consts::PI;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::extract::DefectSet;
use crate::error::{Error, Result};
use crate::field::{RepresentationConfig, RepresentationKind};

pub const RADIUS_REL_TOL: f64 = 1e-6;
pub const ANGLE_TOL: f64 = 1e-6;
/// Zeros closer than `LOCATION_TOL · (1 + |a|)` to a basis defect sit on it.
const LOCATION_TOL: f64 = 1e-6;
/// Relative tolerance when grouping zeros by `(γ − a)^{2d}`.
const POWER_REL_TOL: f64 = 1e-6;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum HaloStatus {
    /// 2d zeros on a regular polygon centered on the defect.
    Regular,
    /// The halo has moved to infinity; the state of this qubit is `|0⟩`.
    AtInfinity,
    /// The halo has shrunk onto the defect; the state of this qubit is `|1⟩`.
    Collapsed,
    Absent,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Halo {
    pub center: Complex64,
    pub status: HaloStatus,
    pub zeros: Vec<Complex64>,
    #[serde(default)]
    pub radius: Option<f64>,
    /// Argument of the first polygon vertex, in `(−π/2d, π/2d]`.
    #[serde(default)]
    pub phase: Option<f64>,
    pub alpha: Option<Complex64>,
    pub beta: Option<Complex64>,
}

impl Halo {
    fn bare(center: Complex64, status: HaloStatus) -> Self {
        Self {
            center,
            status,
            zeros: Vec::new(),
            radius: None,
            phase: None,
            alpha: None,
            beta: None,
        }
    }

    pub fn is_complete(&self) -> bool {
        self.status != HaloStatus::Absent
    }
}

#[derive(Clone, Debug, PartialEq, Default, Serialize, Deserialize)]
pub struct HaloReport {
    pub halos: Vec<Halo>,
    pub leftover: Vec<Complex64>,
}

impl HaloReport {
    pub fn all_complete(&self) -> bool {
        self.halos.iter().all(Halo::is_complete) && self.leftover.is_empty()
    }

    pub fn count(&self, status: HaloStatus) -> usize {
        self.halos.iter().filter(|h| h.status == status).count()
    }

    /// Per-qubit `(α′, β′)` when every halo is complete.
    pub fn witness(&self) -> Option<Vec<(Complex64, Complex64)>> {
        if !self.all_complete() {
            return None;
        }
        self.halos.iter().map(|h| Some((h.alpha?, h.beta?))).collect()
    }
}

/// Checks that `zeros` form a regular polygon of `2d` vertices around `center`.
/// Returns the common radius and the phase of the vertex set.
pub fn regular_polygon(center: Complex64, zeros: &[Complex64], d: u32) -> Option<(f64, f64)> {
    let sides = 2 * d as usize;
    if zeros.len() != sides {
        return None;
    }
    let polar: Vec<(f64, f64)> = zeros.iter().map(|z| (z - center).to_polar()).collect();
    let radius = polar.iter().map(|p| p.0).sum::<f64>() / sides as f64;
    if radius <= 0.0 || polar.iter().any(|p| (p.0 - radius).abs() > RADIUS_REL_TOL * radius) {
        return None;
    }
    let mut angles: Vec<f64> = polar.iter().map(|p| p.1).collect();
    angles.sort_by(f64::total_cmp);
    let step = PI / d as f64;
    for k in 0..sides {
        let next = if k + 1 < sides {
            angles[k + 1]
        } else {
            angles[0] + 2.0 * PI
        };
        if (next - angles[k] - step).abs() > ANGLE_TOL {
            return None;
        }
    }
    // representative vertex angle folded into (−step/2, step/2]
    let mut phase = angles[0].rem_euclid(step);
    if phase > step / 2.0 {
        phase -= step;
    }
    Some((radius, phase))
}

fn near(a: Complex64, b: Complex64) -> bool {
    (a - b).norm() <= LOCATION_TOL * (1.0 + b.norm())
}

/// Finds the halo of every basis defect in `cfg`.
///
/// For each defect in index order, unclaimed zeros are grouped by the value of
/// `(γ − a)^{2d}`, which is shared by all vertices of a regular 2d-gon
/// centered on `a`. A group with a valid polygon becomes that defect's halo.
/// Defects with a zero of order ≥ d on them are collapsed; defects with a
/// full-order pole and no halo are at infinity if the degree deficit of the
/// numerator accounts for them. Unclaimed zeros are reported as leftover.
pub fn detect_halos(defects: &DefectSet, cfg: &RepresentationConfig) -> Result<HaloReport> {
    if cfg.kind != RepresentationKind::Position {
        return Err(Error::invalid("halo detection needs a position configuration"));
    }
    let d = cfg.d as usize;
    let sides = 2 * d;
    let mut pool: Vec<Option<Complex64>> = defects
        .zeros
        .iter()
        .flat_map(|r| std::iter::repeat_n(r.location, r.multiplicity))
        .map(Some)
        .collect();

    let mut halos: Vec<Halo> = cfg.defects.iter().map(|&a| Halo::bare(a, HaloStatus::Absent)).collect();

    // collapsed halos claim d zeros sitting on the defect
    for halo in halos.iter_mut() {
        let on_center: Vec<usize> = (0..pool.len())
            .filter(|&i| pool[i].is_some_and(|z| near(z, halo.center)))
            .collect();
        if on_center.len() >= d {
            for &i in &on_center[..d] {
                pool[i] = None;
            }
            halo.status = HaloStatus::Collapsed;
            halo.alpha = Some(Complex64::new(0.0, 0.0));
            halo.beta = Some(Complex64::new(1.0, 0.0));
        }
    }

    for halo in halos.iter_mut() {
        if halo.status != HaloStatus::Absent {
            continue;
        }
        let a = halo.center;
        let candidates: Vec<(usize, Complex64)> = pool
            .iter()
            .enumerate()
            .filter_map(|(i, z)| z.filter(|z| !near(*z, a)).map(|z| (i, z)))
            .collect();
        let powers: Vec<Complex64> = candidates.iter().map(|(_, z)| (z - a).powu(sides as u32)).collect();

        // groups of equal (γ − a)^{2d}, smallest radius first
        let mut order: Vec<usize> = (0..candidates.len()).collect();
        order.sort_by(|&i, &j| powers[i].norm().total_cmp(&powers[j].norm()).then(i.cmp(&j)));
        let mut grouped = vec![false; candidates.len()];
        let mut best: Option<(Vec<usize>, f64, f64)> = None;
        for &i in &order {
            if grouped[i] {
                continue;
            }
            let members: Vec<usize> = order
                .iter()
                .copied()
                .filter(|&j| {
                    !grouped[j]
                        && (powers[j] - powers[i]).norm() <= POWER_REL_TOL * powers[i].norm().max(powers[j].norm())
                })
                .collect();
            for &j in &members {
                grouped[j] = true;
            }
            if members.len() < sides {
                continue;
            }
            // a zero shared with another defect's halo appears twice in the
            // pool; a polygon uses each location once
            let mut chosen: Vec<usize> = Vec::with_capacity(sides);
            for &k in &members {
                if chosen.len() == sides {
                    break;
                }
                if !chosen.iter().any(|&c| near(candidates[k].1, candidates[c].1)) {
                    chosen.push(k);
                }
            }
            if chosen.len() < sides {
                continue;
            }
            let pts: Vec<Complex64> = chosen.iter().map(|&k| candidates[k].1).collect();
            if let Some((radius, phase)) = regular_polygon(a, &pts, cfg.d) {
                best = Some((chosen, radius, phase));
                break;
            }
        }
        if let Some((chosen, radius, phase)) = best {
            let mut zeros: Vec<Complex64> = chosen.iter().map(|&k| candidates[k].1).collect();
            zeros.sort_by(|p, q| (p - a).arg().total_cmp(&(q - a).arg()));
            let w = chosen.iter().map(|&k| powers[k]).sum::<Complex64>() / sides as f64;
            for &k in &chosen {
                pool[candidates[k].0] = None;
            }
            halo.status = HaloStatus::Regular;
            halo.zeros = zeros;
            halo.radius = Some(radius);
            halo.phase = Some(phase);
            halo.alpha = Some(-w);
            halo.beta = Some(Complex64::new(1.0, 0.0));
        }
    }

    // halos at infinity: full-order pole, no halo, and the numerator degree
    // deficit must account for exactly these defects
    let n = cfg.n as i64;
    let deficit = n * cfg.d as i64 - defects.infinity_charge;
    let expected = if deficit >= 0 && deficit % (2 * cfg.d as i64) == 0 {
        Some((deficit / (2 * cfg.d as i64)) as usize)
    } else {
        None
    };
    let at_infinity: Vec<usize> = halos
        .iter()
        .enumerate()
        .filter(|(_, h)| h.status == HaloStatus::Absent && defects.pole_order_at(h.center) == d)
        .map(|(j, _)| j)
        .collect();
    if expected == Some(at_infinity.len()) {
        for j in at_infinity {
            let h = &mut halos[j];
            h.status = HaloStatus::AtInfinity;
            h.alpha = Some(Complex64::new(1.0, 0.0));
            h.beta = Some(Complex64::new(0.0, 0.0));
        }
    }

    Ok(HaloReport {
        halos,
        leftover: pool.into_iter().flatten().collect(),
    })
}
