use num_bigint::BigUint;

use crate::error::{Error, Result};

/// Largest `n` for which the necessary bound fits in 128-bit arithmetic.
pub const MAX_BOUND_QUBITS: usize = 120;

/// Largest `n` accepted by the sufficient bound (the result has about
/// `3.8 · 2^n` bits).
pub const MAX_SUFFICIENT_QUBITS: usize = 20;

/// `14^(2^n) · n + 1`, the smallest charge covered by the sufficient
/// condition `d > 14^(2^n) n`.
pub fn sufficient_charge_bound(n: usize) -> Result<BigUint> {
    if n == 0 {
        return Err(Error::invalid("qubit count must be positive"));
    }
    if n > MAX_SUFFICIENT_QUBITS {
        return Err(Error::Overflow("sufficient charge bound"));
    }
    Ok(BigUint::from(14u32).pow(1u32 << n) * BigUint::from(n) + 1u32)
}

/// Smallest `d ≥ 1` with `2kd + 1 ≥ Σ_{j≤k} C(n, j)` for every `1 ≤ k ≤ n`.
pub fn necessary_charge_bound(n: usize) -> Result<u128> {
    if n == 0 {
        return Err(Error::invalid("qubit count must be positive"));
    }
    if n > MAX_BOUND_QUBITS {
        return Err(Error::Overflow("necessary charge bound"));
    }
    let mut best: u128 = 1;
    let mut binom: u128 = 1;
    let mut partial: u128 = 1;
    for k in 1..=n as u128 {
        binom = binom * (n as u128 + 1 - k) / k;
        partial += binom;
        // ceil((partial − 1) / 2k)
        best = best.max((partial - 1).div_ceil(2 * k));
    }
    Ok(best)
}
