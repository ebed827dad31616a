use std::collections::BTreeSet;

use nalgebra::DMatrix;
use num_complex::Complex64;
use serde::Serialize;

use super::extract::{extract_defects, DefectSet};
use super::halo::{detect_halos, HaloReport};
use crate::error::{Error, Result};
use crate::field::{map_state, Field, RepresentationConfig, RepresentationKind};
use crate::linalg::singular_values;
use crate::qubit::QubitState;

/// `σ₂ ≤ RANK_ONE_TOL · σ₁` counts as rank one.
pub const RANK_ONE_TOL: f64 = 1e-9;
/// Maximum relative L2 mismatch accepted when validating a witness.
pub const WITNESS_TOL: f64 = 1e-8;
const WITNESS_POINTS: usize = 20;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct GeometricVerdict {
    pub separable: bool,
    /// Per-qubit `(α′_j, β′_j)`, present when the halos were complete.
    pub witness: Option<Vec<(Complex64, Complex64)>>,
    /// Relative mismatch between the witness field and the input field.
    pub witness_error: Option<f64>,
    pub defects: DefectSet,
    pub halos: HaloReport,
}

/// Deterministic sample points on a golden-angle spiral, kept away from the
/// basis defects.
pub fn witness_points(defects: &[Complex64], count: usize) -> Vec<Complex64> {
    let golden = std::f64::consts::PI * (3.0 - 5f64.sqrt());
    let scale = 1.0 + defects.iter().map(|a| a.norm()).fold(0.0, f64::max);
    (0..)
        .map(|k: usize| {
            let r = scale * (0.35 + 1.6 * ((k % 97) as f64 + 0.5) / 97.0);
            Complex64::from_polar(r, golden * k as f64)
        })
        .filter(|z| defects.iter().all(|a| (z - a).norm() > 1e-2))
        .take(count)
        .collect()
}

/// Relative residual `‖g − λf‖ / ‖g‖` of the best scalar fit `g ≈ λ f` at `points`.
pub fn proportionality_error(f: &Field, g: &Field, points: &[Complex64]) -> Result<f64> {
    let fv: Vec<Complex64> = points.iter().map(|&z| f.eval(z)).collect::<Result<_>>()?;
    let gv: Vec<Complex64> = points.iter().map(|&z| g.eval(z)).collect::<Result<_>>()?;
    let ff: f64 = fv.iter().map(|v| v.norm_sqr()).sum();
    let gg: f64 = gv.iter().map(|v| v.norm_sqr()).sum();
    if gg == 0.0 {
        return Ok(if ff == 0.0 { 0.0 } else { f64::INFINITY });
    }
    if ff == 0.0 {
        return Ok(1.0);
    }
    let lambda = fv.iter().zip(&gv).map(|(a, b)| a.conj() * b).sum::<Complex64>() / ff;
    let resid: f64 = fv.iter().zip(&gv).map(|(a, b)| (b - lambda * a).norm_sqr()).sum();
    Ok((resid / gg).sqrt())
}

/// Halo criterion: separable iff every basis defect has a complete halo and
/// no zero is left over, confirmed by rebuilding the product state from the
/// witness and comparing fields up to a global scale.
pub fn is_separable_geometric(state: &QubitState, cfg: &RepresentationConfig) -> Result<GeometricVerdict> {
    if cfg.kind != RepresentationKind::Position {
        return Err(Error::invalid("geometric separability needs a position configuration"));
    }
    if state.is_zero() {
        return Err(Error::invalid("separability of the zero state is undefined"));
    }
    let field = map_state(state, cfg)?;
    let defects = extract_defects(&field)?;
    let halos = detect_halos(&defects, cfg)?;
    let witness = halos.witness();
    let mut witness_error = None;
    if let Some(w) = &witness {
        let rebuilt = map_state(&QubitState::product(w)?, cfg)?;
        let points = witness_points(&cfg.defects, WITNESS_POINTS);
        witness_error = Some(proportionality_error(&rebuilt, &field, &points)?);
    }
    let separable = witness_error.is_some_and(|e| e <= WITNESS_TOL);
    Ok(GeometricVerdict {
        separable,
        witness,
        witness_error,
        defects,
        halos,
    })
}

fn is_rank_one(m: &DMatrix<Complex64>) -> bool {
    let s = singular_values(m);
    match s.as_slice() {
        [] => true,
        [first, rest @ ..] => rest.iter().all(|&x| x <= RANK_ONE_TOL * first),
    }
}

/// `2 × 2^{n−1}` matrix with the bit of qubit `j` (1-based) as row index.
fn reshape_along(amplitudes: &[Complex64], n: usize, j: usize) -> DMatrix<Complex64> {
    let shift = n - j;
    let half = amplitudes.len() / 2;
    DMatrix::from_fn(2, half, |row, col| {
        // reinsert bit `row` at position `shift` of the column index
        let low = col & ((1 << shift) - 1);
        let high = (col >> shift) << (shift + 1);
        amplitudes[high | (row << shift) | low]
    })
}

fn check_nonzero(state: &QubitState) -> Result<()> {
    if state.is_zero() {
        Err(Error::invalid("separability of the zero state is undefined"))
    } else {
        Ok(())
    }
}

/// Amplitude-tensor test: peels qubits left to right, each by a rank-one
/// check of the `2 × 2^{remaining}` reshape.
pub fn is_separable_tensor(state: &QubitState) -> Result<bool> {
    check_nonzero(state)?;
    let mut amps: Vec<Complex64> = state.amplitudes().to_vec();
    let mut n = state.n();
    while n > 1 {
        let m = reshape_along(&amps, n, 1);
        if !is_rank_one(&m) {
            return Ok(false);
        }
        let pick = if m.row(0).norm() >= m.row(1).norm() { 0 } else { 1 };
        amps = m.row(pick).iter().copied().collect();
        n -= 1;
    }
    Ok(true)
}

/// 1-based indices of qubits that split off as a single-qubit factor.
pub fn factorizable_qubits(state: &QubitState) -> Result<BTreeSet<usize>> {
    check_nonzero(state)?;
    let n = state.n();
    Ok((1..=n)
        .filter(|&j| is_rank_one(&reshape_along(state.amplitudes(), n, j)))
        .collect())
}
