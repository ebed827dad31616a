use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::Field;
use crate::poly::{roots, Root};

/// Relative remainder below which a denominator factor is taken to divide the numerator.
const CANCEL_TOL: f64 = 1e-9;

/// Zeros and poles of a field, with the order at infinity.
///
/// `infinity_charge = deg(numerator) − deg(denominator)`; a positive value
/// is a pole of that order at infinity. Counting multiplicities,
/// `Σ zeros − Σ poles = infinity_charge`.
#[derive(Clone, Debug, PartialEq, Default)]
pub struct DefectSet {
    pub zeros: Vec<Root>,
    pub poles: Vec<Root>,
    pub infinity_charge: i64,
}

#[derive(Serialize, Deserialize)]
struct DefectSetWire {
    zeros: Vec<(f64, f64, usize)>,
    poles: Vec<(f64, f64, usize)>,
    infinity_charge: i64,
}

fn to_wire(roots: &[Root]) -> Vec<(f64, f64, usize)> {
    roots
        .iter()
        .map(|r| (r.location.re, r.location.im, r.multiplicity))
        .collect()
}

fn from_wire(wire: Vec<(f64, f64, usize)>) -> Vec<Root> {
    wire.into_iter()
        .map(|(re, im, multiplicity)| Root {
            location: Complex64::new(re, im),
            multiplicity,
        })
        .collect()
}

impl Serialize for DefectSet {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        DefectSetWire {
            zeros: to_wire(&self.zeros),
            poles: to_wire(&self.poles),
            infinity_charge: self.infinity_charge,
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for DefectSet {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let w = DefectSetWire::deserialize(d)?;
        Ok(DefectSet {
            zeros: from_wire(w.zeros),
            poles: from_wire(w.poles),
            infinity_charge: w.infinity_charge,
        })
    }
}

impl DefectSet {
    pub fn zero_count(&self) -> usize {
        self.zeros.iter().map(|r| r.multiplicity).sum()
    }

    pub fn pole_count(&self) -> usize {
        self.poles.iter().map(|r| r.multiplicity).sum()
    }

    /// Whether `Σ zeros − Σ poles = infinity_charge`.
    pub fn is_balanced(&self) -> bool {
        self.zero_count() as i64 - self.pole_count() as i64 == self.infinity_charge
    }

    /// Pole order at `a` (0 if none).
    pub fn pole_order_at(&self, a: Complex64) -> usize {
        self.poles
            .iter()
            .filter(|r| r.location == a)
            .map(|r| r.multiplicity)
            .sum()
    }
}

/// Zeros, poles and charge at infinity of a nonzero field. Denominator
/// factors are first divided out of the numerator where they cancel.
pub fn extract_defects(field: &Field) -> Result<DefectSet> {
    if field.is_zero() {
        return Err(Error::ZeroField);
    }
    let (numerator, denominator) = field.as_fraction();
    let den_degree: usize = denominator.iter().map(|&(_, m)| m as usize).sum();
    let infinity_charge = numerator.degree() as i64 - den_degree as i64;

    let mut rest = numerator;
    let mut zeros = Vec::new();
    let mut poles = Vec::new();
    for &(a, m) in &denominator {
        let max = rest.degree();
        let (q, k) = rest.divide_out_root(a, CANCEL_TOL, max);
        rest = q;
        let m = m as usize;
        if m > k {
            poles.push(Root {
                location: a,
                multiplicity: m - k,
            });
        } else if k > m {
            zeros.push(Root {
                location: a,
                multiplicity: k - m,
            });
        }
    }
    zeros.extend(roots(&rest)?.roots);
    Ok(DefectSet {
        zeros,
        poles,
        infinity_charge,
    })
}
