use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum RepresentationKind {
    /// Basis states become single powers `z^{c(σ)}`.
    Charge,
    /// Basis states become `∏ (z − a_j)^{(2σ_j − 1) d}`.
    Position,
}

/// Which mapping to use, its charge `d`, and for the position mapping the
/// basis defect locations `a_j` (one per qubit).
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RepresentationConfig {
    pub kind: RepresentationKind,
    pub n: usize,
    pub d: u32,
    #[serde(default)]
    pub defects: Vec<Complex64>,
}

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

impl RepresentationConfig {
    pub fn charge(n: usize, d: u32) -> Result<Self> {
        let cfg = Self {
            kind: RepresentationKind::Charge,
            n,
            d,
            defects: Vec::new(),
        };
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn position(defects: Vec<Complex64>, d: u32) -> Result<Self> {
        let cfg = Self {
            kind: RepresentationKind::Position,
            n: defects.len(),
            d,
            defects,
        };
        cfg.validate()?;
        Ok(cfg)
    }

    /// Default defect layout for `n ≤ 4`: a single defect at the origin for
    /// one qubit, then `−1, +1`, `−1, +i, +1` and `−1, +i, +1, −i`.
    pub fn default_defects(n: usize) -> Option<Vec<Complex64>> {
        Some(match n {
            1 => vec![c(0.0, 0.0)],
            2 => vec![c(-1.0, 0.0), c(1.0, 0.0)],
            3 => vec![c(-1.0, 0.0), c(0.0, 1.0), c(1.0, 0.0)],
            4 => vec![c(-1.0, 0.0), c(0.0, 1.0), c(1.0, 0.0), c(0.0, -1.0)],
            _ => return None,
        })
    }

    /// Default charge: 1 for one or two qubits, 3 for three or four.
    pub fn default_charge(n: usize) -> Option<u32> {
        match n {
            1 | 2 => Some(1),
            3 | 4 => Some(3),
            _ => None,
        }
    }

    /// The validated default position configuration for `1 ≤ n ≤ 4`. Larger
    /// registers need an explicit charge and layout.
    pub fn default_position(n: usize) -> Result<Self> {
        match (Self::default_defects(n), Self::default_charge(n)) {
            (Some(defects), Some(d)) => Self::position(defects, d),
            _ => Err(Error::invalid(format!(
                "no default position layout for {n} qubits; give d and defects explicitly"
            ))),
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.d == 0 {
            return Err(Error::invalid("charge d must be at least 1"));
        }
        if self.n == 0 {
            return Err(Error::invalid("qubit count must be positive"));
        }
        match self.kind {
            RepresentationKind::Charge => {
                if !self.defects.is_empty() {
                    return Err(Error::invalid("charge representation takes no defect positions"));
                }
            }
            RepresentationKind::Position => {
                if self.defects.len() != self.n {
                    return Err(Error::LengthMismatch {
                        expected: self.n,
                        found: self.defects.len(),
                    });
                }
                for (j, a) in self.defects.iter().enumerate() {
                    if !a.is_finite() {
                        return Err(Error::invalid(format!("defect {} is not finite", j + 1)));
                    }
                    if self.defects[..j].contains(a) {
                        return Err(Error::invalid(format!("defect {} repeats {a}", j + 1)));
                    }
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn validation() {
        assert!(RepresentationConfig::position(vec![c(1.0, 0.0), c(1.0, 0.0)], 1).is_err());
        assert!(RepresentationConfig::position(vec![c(1.0, 0.0)], 0).is_err());
        assert!(RepresentationConfig::charge(3, 0).is_err());
        let cfg = RepresentationConfig::default_position(3).unwrap();
        assert_eq!(cfg.d, 3);
        assert_eq!(cfg.defects[1], c(0.0, 1.0));
        assert!(RepresentationConfig::default_position(5).is_err());
    }
}
