use num_complex::Complex64;

use super::config::{RepresentationConfig, RepresentationKind};
use super::types::{Field, LaurentField, RationalField};
use crate::error::{Error, Result};
use crate::poly::Polynomial;
use crate::qubit::{bits_of, QubitState};

/// `Σ_j (digit_j − offset) d^{j−1}` with overflow checks.
fn weighted_digit_sum(digits: &[u8], d: u32, offset: i64, scale: i64) -> Result<i64> {
    let mut total: i64 = 0;
    let mut weight: i64 = 1;
    for (j, &digit) in digits.iter().enumerate() {
        let term = (scale * digit as i64 - offset)
            .checked_mul(weight)
            .ok_or(Error::Overflow("defect charge exponent"))?;
        total = total
            .checked_add(term)
            .ok_or(Error::Overflow("defect charge exponent"))?;
        if j + 1 < digits.len() {
            weight = weight
                .checked_mul(d as i64)
                .ok_or(Error::Overflow("defect charge exponent"))?;
        }
    }
    Ok(total)
}

/// Charge-representation exponent `c(σ) = Σ_j (2σ_j − 1) d^{j−1}`.
pub fn exponent(bits: &[u8], d: u32) -> Result<i64> {
    if d == 0 {
        return Err(Error::invalid("charge d must be at least 1"));
    }
    if bits.iter().any(|&b| b > 1) {
        return Err(Error::invalid("bitstring digits must be 0 or 1"));
    }
    weighted_digit_sum(bits, d, 1, 2)
}

/// Exponent of a variable-particle-number basis function,
/// `c(τ) = Σ_j (τ_j − 1) d^{j−1}`, where `τ_j = 1` marks an absent qubit and
/// `τ_j ∈ {0, 2}` stands for `|τ_j / 2⟩`.
pub fn ternary_exponent(tau: &[u8], d: u32) -> Result<i64> {
    if d == 0 {
        return Err(Error::invalid("charge d must be at least 1"));
    }
    if tau.iter().any(|&t| t > 2) {
        return Err(Error::invalid("ternary digits must be 0, 1 or 2"));
    }
    if tau.iter().all(|&t| t == 1) {
        return Err(Error::invalid("the all-ones ternary string selects no qubit"));
    }
    weighted_digit_sum(tau, d, 1, 1)
}

/// Maps a state to `Σ_σ λ_σ z^{c(σ)}`.
pub fn charge_map(state: &QubitState, d: u32) -> Result<LaurentField> {
    let n = state.n();
    let mut field = LaurentField::new();
    for (index, &amp) in state.amplitudes().iter().enumerate() {
        if amp.norm_sqr() == 0.0 {
            continue;
        }
        field.add_term(exponent(&bits_of(index, n), d)?, amp);
    }
    Ok(field)
}

/// Numerator `∏_j (z − a_j)^{2 σ_j d}` of a position-representation basis state.
pub fn basis_numerator(bits: &[u8], defects: &[Complex64], d: u32) -> Polynomial {
    bits.iter().zip(defects).fold(Polynomial::one(), |p, (&b, &a)| {
        if b == 1 {
            &p * &Polynomial::linear_power(a, 2 * d as usize)
        } else {
            p
        }
    })
}

/// Maps a state to `Σ_σ λ_σ ∏_j (z − a_j)^{2σ_j d}` over `∏_j (z − a_j)^d`.
pub fn position_map(state: &QubitState, cfg: &RepresentationConfig) -> Result<RationalField> {
    if cfg.kind != RepresentationKind::Position {
        return Err(Error::invalid("position_map needs a position configuration"));
    }
    if cfg.defects.len() != state.n() {
        return Err(Error::LengthMismatch {
            expected: state.n(),
            found: cfg.defects.len(),
        });
    }
    let n = state.n();
    let zero = Complex64::new(0.0, 0.0);
    let mut numerator = vec![zero; 2 * n * cfg.d as usize + 1];
    for (index, &amp) in state.amplitudes().iter().enumerate() {
        if amp.norm_sqr() == 0.0 {
            continue;
        }
        let p = basis_numerator(&bits_of(index, n), &cfg.defects, cfg.d);
        for (k, c) in p.coeffs().iter().enumerate() {
            numerator[k] += amp * c;
        }
    }
    Ok(RationalField::new(
        Polynomial::new(numerator),
        cfg.defects.clone(),
        cfg.d,
    ))
}

/// Maps a state with either representation.
pub fn map_state(state: &QubitState, cfg: &RepresentationConfig) -> Result<Field> {
    if cfg.n != state.n() {
        return Err(Error::LengthMismatch {
            expected: cfg.n,
            found: state.n(),
        });
    }
    Ok(match cfg.kind {
        RepresentationKind::Charge => Field::Laurent(charge_map(state, cfg.d)?),
        RepresentationKind::Position => Field::Rational(position_map(state, cfg)?),
    })
}

/// Images of the `2^n` computational basis states, in index order.
pub fn basis_fields(cfg: &RepresentationConfig) -> Result<Vec<Field>> {
    (0..1usize << cfg.n)
        .map(|index| map_state(&QubitState::basis(cfg.n, &bits_of(index, cfg.n))?, cfg))
        .collect()
}

/// All ternary strings of length `n` except `1…1`, in lexicographic order.
pub fn ternary_strings(n: usize) -> Vec<Vec<u8>> {
    let total = 3usize.pow(n as u32);
    (0..total)
        .map(|mut k| {
            let mut digits = vec![0u8; n];
            for slot in digits.iter_mut().rev() {
                *slot = (k % 3) as u8;
                k /= 3;
            }
            digits
        })
        .filter(|t| !t.iter().all(|&x| x == 1))
        .collect()
}

/// The `3^n − 1` monomials `z^{c(τ)}` of every sub-register basis state.
pub fn variable_particle_fields(n: usize, d: u32) -> Result<Vec<LaurentField>> {
    ternary_strings(n)
        .iter()
        .map(|t| {
            Ok(LaurentField::monomial(
                ternary_exponent(t, d)?,
                Complex64::new(1.0, 0.0),
            ))
        })
        .collect()
}
