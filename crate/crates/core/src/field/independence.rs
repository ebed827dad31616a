use std::collections::BTreeMap;

use num_complex::Complex64;
use serde::Serialize;

use super::types::{Field, LaurentField};
use crate::error::{Error, Result};
use crate::linalg::{equilibrate, normalize_columns, rank_from_singular_values, singular_values, CMatrix};
use crate::poly::Polynomial;

/// Relative singular-value cutoff used for every rank decision.
pub const RANK_TOL: f64 = 1e-9;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct IndependenceReport {
    pub independent: bool,
    pub rank: usize,
    pub count: usize,
    /// Singular values of the column-normalized coefficient matrix, descending.
    pub singular_values: Vec<f64>,
}

/// Rank test on the coefficient matrices of `fields`.
///
/// Laurent families are split into blocks of fields that share exponents,
/// so large monomial families stay cheap. Any other mix is brought to a
/// common denominator first.
pub fn check_linear_independence(fields: &[Field]) -> Result<IndependenceReport> {
    if fields.is_empty() {
        return Err(Error::invalid("independence check needs at least one field"));
    }
    let laurent: Option<Vec<&LaurentField>> = fields
        .iter()
        .map(|f| match f {
            Field::Laurent(l) => Some(l),
            Field::Rational(_) => None,
        })
        .collect();
    let singular = match laurent {
        Some(ls) => laurent_block_singular_values(&ls),
        None => singular_values(&normalize_columns(&common_denominator_matrix(fields))),
    };
    Ok(report(singular, fields.len()))
}

/// Convenience wrapper for bare Laurent fields.
pub fn check_laurent_independence(fields: &[LaurentField]) -> Result<IndependenceReport> {
    let wrapped: Vec<Field> = fields.iter().cloned().map(Field::Laurent).collect();
    check_linear_independence(&wrapped)
}

fn report(mut singular: Vec<f64>, count: usize) -> IndependenceReport {
    singular.sort_by(|a, b| b.total_cmp(a));
    let rank = rank_from_singular_values(&singular, RANK_TOL);
    IndependenceReport {
        independent: rank == count,
        rank,
        count,
        singular_values: singular,
    }
}

fn laurent_block_singular_values(fields: &[&LaurentField]) -> Vec<f64> {
    let n = fields.len();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut [usize], mut i: usize) -> usize {
        while parent[i] != i {
            parent[i] = parent[parent[i]];
            i = parent[i];
        }
        i
    }
    let mut owner: BTreeMap<i64, usize> = BTreeMap::new();
    for (j, f) in fields.iter().enumerate() {
        for &k in f.terms().keys() {
            match owner.get(&k) {
                Some(&other) => {
                    let (a, b) = (find(&mut parent, j), find(&mut parent, other));
                    if a != b {
                        parent[a.max(b)] = a.min(b);
                    }
                }
                None => {
                    owner.insert(k, j);
                }
            }
        }
    }
    let mut blocks: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for j in 0..n {
        let root = find(&mut parent, j);
        blocks.entry(root).or_default().push(j);
    }

    let mut singular = Vec::with_capacity(n);
    for cols in blocks.values() {
        let exponents: Vec<i64> = {
            let mut e: Vec<i64> = cols.iter().flat_map(|&j| fields[j].terms().keys().copied()).collect();
            e.sort_unstable();
            e.dedup();
            e
        };
        if exponents.is_empty() {
            // zero fields contribute zero singular values
            singular.extend(std::iter::repeat_n(0.0, cols.len()));
            continue;
        }
        let m = CMatrix::from_fn(exponents.len(), cols.len(), |i, j| fields[cols[j]].coeff(exponents[i]));
        let s = singular_values(&normalize_columns(&m));
        let missing = cols.len() - s.len();
        singular.extend(s);
        singular.extend(std::iter::repeat_n(0.0, missing));
    }
    singular
}

/// Dense numerator coefficient matrix over the least common denominator.
fn common_denominator_matrix(fields: &[Field]) -> CMatrix {
    let fractions: Vec<(Polynomial, Vec<(Complex64, u32)>)> = fields.iter().map(Field::as_fraction).collect();
    let mut lcm: Vec<(Complex64, u32)> = Vec::new();
    for (_, den) in &fractions {
        for &(a, m) in den {
            match lcm.iter_mut().find(|(b, _)| *b == a) {
                Some(entry) => entry.1 = entry.1.max(m),
                None => lcm.push((a, m)),
            }
        }
    }
    let numerators: Vec<Polynomial> = fractions
        .iter()
        .map(|(num, den)| {
            lcm.iter().fold(num.clone(), |p, &(a, m)| {
                let own = den.iter().find(|(b, _)| *b == a).map_or(0, |e| e.1);
                &p * &Polynomial::linear_power(a, (m - own) as usize)
            })
        })
        .collect();
    let rows = numerators.iter().map(|p| p.coeffs().len()).max().unwrap_or(1).max(1);
    CMatrix::from_fn(rows, numerators.len(), |i, j| {
        numerators[j].coeffs().get(i).copied().unwrap_or_default()
    })
}

/// `M[i][j] = f_j(b_i)`.
pub fn evaluation_matrix(fields: &[Field], points: &[Complex64]) -> Result<CMatrix> {
    let mut m = CMatrix::zeros(points.len(), fields.len());
    for (i, &b) in points.iter().enumerate() {
        for (j, f) in fields.iter().enumerate() {
            m[(i, j)] = f.eval(b)?;
        }
    }
    Ok(m)
}

/// Singular-value gap `σ_min / σ_max` of a square matrix.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct NonsingularityGap {
    /// Gap of the matrix as given.
    pub raw: f64,
    /// Gap after row/column equilibration, which cannot change singularity.
    pub equilibrated: f64,
}

pub fn nonsingularity_gap(m: &CMatrix) -> NonsingularityGap {
    let gap = |s: Vec<f64>| match (s.first(), s.last()) {
        (Some(&hi), Some(&lo)) if hi > 0.0 && s.len() == m.nrows().min(m.ncols()) => lo / hi,
        _ => 0.0,
    };
    NonsingularityGap {
        raw: gap(singular_values(m)),
        equilibrated: gap(singular_values(&equilibrate(m))),
    }
}

/// The points `0, i, 2i, 3i` used for the two-qubit evaluation matrix.
pub fn two_qubit_points() -> Vec<Complex64> {
    (0..4).map(|k| Complex64::new(0.0, k as f64)).collect()
}

/// The grid `(x + ½) + i(y − ½)` for `x, y ∈ {0, 1, 2, 3}`.
pub fn four_qubit_points() -> Vec<Complex64> {
    (0..4)
        .flat_map(|x| (0..4).map(move |y| Complex64::new(x as f64 + 0.5, y as f64 - 0.5)))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{basis_fields, variable_particle_fields, RepresentationConfig};

    #[test]
    fn charge_basis_is_independent() {
        let cfg = RepresentationConfig::charge(4, 3).unwrap();
        let r = check_linear_independence(&basis_fields(&cfg).unwrap()).unwrap();
        assert!(r.independent);
        assert_eq!(r.rank, 16);
    }

    #[test]
    fn variable_particle_collision() {
        let r = check_laurent_independence(&variable_particle_fields(2, 2).unwrap()).unwrap();
        assert!(!r.independent);
        // exponents ±1 each appear twice
        assert_eq!(r.rank, 6);
        let r = check_laurent_independence(&variable_particle_fields(2, 3).unwrap()).unwrap();
        assert!(r.independent);
    }

    #[test]
    fn position_instances() {
        let two = RepresentationConfig::default_position(2).unwrap();
        assert!(
            check_linear_independence(&basis_fields(&two).unwrap())
                .unwrap()
                .independent
        );
        let dependent = RepresentationConfig::position(two_layout3(), 1).unwrap();
        let r = check_linear_independence(&basis_fields(&dependent).unwrap()).unwrap();
        assert!(!r.independent);
        assert!(r.rank < 8);
    }

    fn two_layout3() -> Vec<Complex64> {
        RepresentationConfig::default_defects(3).unwrap()
    }

    #[test]
    fn two_qubit_evaluation_matrix() {
        let cfg = RepresentationConfig::default_position(2).unwrap();
        let m = evaluation_matrix(&basis_fields(&cfg).unwrap(), &two_qubit_points()).unwrap();
        // h_00(0) = 1/((1)(−1))
        assert!((m[(0, 0)] - Complex64::new(-1.0, 0.0)).norm() < 1e-15);
        assert!(nonsingularity_gap(&m).equilibrated >= 1e-6);
    }

    #[test]
    fn mixed_families_use_common_denominator() {
        let f = Field::Laurent(LaurentField::monomial(-1, Complex64::new(1.0, 0.0)));
        let g = Field::Laurent(LaurentField::monomial(1, Complex64::new(2.0, 0.0)));
        let h = Field::Laurent(LaurentField::from_terms([
            (-1, Complex64::new(1.0, 0.0)),
            (1, Complex64::new(1.0, 0.0)),
        ]));
        let r = check_linear_independence(&[f.clone(), g.clone(), h]).unwrap();
        assert_eq!(r.rank, 2);
        let m = common_denominator_matrix(&[f, g]);
        assert_eq!(m.nrows(), 3);
    }
}
