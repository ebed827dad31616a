//! All-roots solver: Aberth–Ehrlich iteration followed by multiplicity
//! clustering.

use std::f64::consts::PI;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::polynomial::Polynomial;
use crate::error::{Error, Result};

const TOL: f64 = 1e-12;
const MAX_ITER: usize = 500;
const CLUSTER_RADIUS: f64 = 1e-6;
// fixed angular offset keeps the initial circle off symmetric root patterns
const START_ANGLE: f64 = 0.4;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Root {
    pub location: Complex64,
    pub multiplicity: usize,
}

/// Roots with multiplicities and the largest `|p(root)|` observed.
#[derive(Clone, Debug, PartialEq, Default)]
pub struct RootSet {
    pub roots: Vec<Root>,
    pub residual: f64,
}

#[derive(Serialize, Deserialize)]
struct RootSetWire {
    roots: Vec<(f64, f64, usize)>,
}

impl Serialize for RootSet {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        RootSetWire {
            roots: self
                .roots
                .iter()
                .map(|r| (r.location.re, r.location.im, r.multiplicity))
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for RootSet {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let wire = RootSetWire::deserialize(d)?;
        Ok(RootSet {
            roots: wire
                .roots
                .into_iter()
                .map(|(re, im, multiplicity)| Root {
                    location: Complex64::new(re, im),
                    multiplicity,
                })
                .collect(),
            residual: 0.0,
        })
    }
}

impl RootSet {
    pub fn total_multiplicity(&self) -> usize {
        self.roots.iter().map(|r| r.multiplicity).sum()
    }

    /// Every root repeated by its multiplicity.
    pub fn expanded(&self) -> Vec<Complex64> {
        self.roots
            .iter()
            .flat_map(|r| std::iter::repeat_n(r.location, r.multiplicity))
            .collect()
    }
}

/// Finds all complex roots of `p`.
///
/// A nonzero constant yields an empty set; the zero polynomial is an error.
pub fn roots(p: &Polynomial) -> Result<RootSet> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let coeffs = p.coeffs();
    // exact zeros at the origin
    let shift = coeffs.iter().take_while(|c| c.norm() == 0.0).count();
    let reduced = Polynomial::new(coeffs[shift..].to_vec());

    let mut found = Vec::new();
    if shift > 0 {
        found.push(Root {
            location: Complex64::new(0.0, 0.0),
            multiplicity: shift,
        });
    }
    match reduced.degree() {
        0 => {}
        1 => {
            let c = reduced.coeffs();
            found.push(Root {
                location: -c[0] / c[1],
                multiplicity: 1,
            });
        }
        _ => {
            let approx = aberth(&reduced);
            found.extend(cluster(&reduced, &approx));
        }
    }
    let residual = found.iter().map(|r| p.eval(r.location).norm()).fold(0.0, f64::max);
    Ok(RootSet { roots: found, residual })
}

fn aberth(p: &Polynomial) -> Vec<Complex64> {
    let n = p.degree();
    let lead = p.leading();
    let radius = 1.0 + p.coeffs()[..n].iter().map(|c| (c / lead).norm()).fold(0.0, f64::max);
    let mut z: Vec<Complex64> = (0..n)
        .map(|k| Complex64::from_polar(radius, 2.0 * PI * k as f64 / n as f64 + START_ANGLE))
        .collect();
    let mut done = vec![false; n];

    for _ in 0..MAX_ITER {
        for i in 0..n {
            if done[i] {
                continue;
            }
            let (value, slope) = p.eval_with_derivative(z[i]);
            // stop once the residual is at the rounding level of Horner's rule
            if value.norm() <= 8.0 * f64::EPSILON * p.eval_abs(z[i]) {
                done[i] = true;
                continue;
            }
            let ratio = value / slope;
            let repulsion: Complex64 = (0..n).filter(|&j| j != i).map(|j| (z[i] - z[j]).inv()).sum();
            let step = ratio / (Complex64::new(1.0, 0.0) - ratio * repulsion);
            if !step.is_finite() {
                done[i] = true;
                continue;
            }
            z[i] -= step;
            if step.norm() <= TOL * (1.0 + z[i].norm()) {
                done[i] = true;
            }
        }
        if done.iter().all(|&d| d) {
            break;
        }
    }
    z
}

/// Greedy union of approximations closer than `1e-6 · (1 + |z|)`; each
/// cluster becomes one root whose multiplicity is the cluster size.
fn cluster(p: &Polynomial, approx: &[Complex64]) -> Vec<Root> {
    let n = approx.len();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut [usize], mut i: usize) -> usize {
        while parent[i] != i {
            parent[i] = parent[parent[i]];
            i = parent[i];
        }
        i
    }
    for i in 0..n {
        for j in i + 1..n {
            let scale = 1.0 + approx[i].norm().max(approx[j].norm());
            if (approx[i] - approx[j]).norm() <= CLUSTER_RADIUS * scale {
                let (a, b) = (find(&mut parent, i), find(&mut parent, j));
                if a != b {
                    parent[b.max(a)] = a.min(b);
                }
            }
        }
    }
    let mut groups: Vec<Vec<usize>> = Vec::new();
    let mut slot = vec![usize::MAX; n];
    for i in 0..n {
        let r = find(&mut parent, i);
        if slot[r] == usize::MAX {
            slot[r] = groups.len();
            groups.push(Vec::new());
        }
        groups[slot[r]].push(i);
    }
    groups
        .into_iter()
        .map(|g| {
            let m = g.len();
            let centroid = g.iter().map(|&i| approx[i]).sum::<Complex64>() / m as f64;
            let location = if m > 1 {
                refine_multiple(p, centroid, m)
            } else {
                centroid
            };
            Root {
                location,
                multiplicity: m,
            }
        })
        .collect()
}

/// An m-fold root is a simple root of `p^{(m-1)}`; polish the centroid with
/// a few Newton steps there, keeping the centroid if Newton wanders.
fn refine_multiple(p: &Polynomial, centroid: Complex64, m: usize) -> Complex64 {
    let dp = p.nth_derivative(m - 1);
    let mut z = centroid;
    for _ in 0..5 {
        let (value, slope) = dp.eval_with_derivative(z);
        if slope.norm() == 0.0 {
            break;
        }
        let step = value / slope;
        if !step.is_finite() {
            break;
        }
        z -= step;
        if step.norm() <= f64::EPSILON * (1.0 + z.norm()) {
            break;
        }
    }
    if (z - centroid).norm() <= CLUSTER_RADIUS * (1.0 + centroid.norm()) {
        z
    } else {
        centroid
    }
}
