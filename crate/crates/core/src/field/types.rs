use std::collections::BTreeMap;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poly::Polynomial;

/// Finite sum `Σ c_k z^k` over integer (possibly negative) exponents.
#[derive(Clone, Debug, PartialEq, Default)]
pub struct LaurentField {
    terms: BTreeMap<i64, Complex64>,
}

impl LaurentField {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn monomial(exponent: i64, coeff: Complex64) -> Self {
        let mut f = Self::new();
        f.add_term(exponent, coeff);
        f
    }

    /// Adds `coeff · z^exponent`, dropping the entry if it cancels to zero.
    pub fn add_term(&mut self, exponent: i64, coeff: Complex64) {
        let entry = self.terms.entry(exponent).or_insert(Complex64::new(0.0, 0.0));
        *entry += coeff;
        if entry.norm_sqr() == 0.0 {
            self.terms.remove(&exponent);
        }
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (i64, Complex64)>) -> Self {
        let mut f = Self::new();
        for (k, c) in terms {
            f.add_term(k, c);
        }
        f
    }

    pub fn terms(&self) -> &BTreeMap<i64, Complex64> {
        &self.terms
    }

    pub fn coeff(&self, exponent: i64) -> Complex64 {
        self.terms.get(&exponent).copied().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn min_exponent(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exponent(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// Largest `|k|` among stored exponents.
    pub fn max_abs_exponent(&self) -> u64 {
        self.terms.keys().map(|k| k.unsigned_abs()).max().unwrap_or(0)
    }

    pub fn scale(&self, c: Complex64) -> Self {
        Self::from_terms(self.terms.iter().map(|(&k, &v)| (k, v * c)))
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (&k, &v) in &other.terms {
            out.add_term(k, v);
        }
        out
    }

    /// Term-wise product.
    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::new();
        for (&k1, &v1) in &self.terms {
            for (&k2, &v2) in &other.terms {
                out.add_term(k1 + k2, v1 * v2);
            }
        }
        out
    }

    pub fn eval(&self, z: Complex64) -> Result<Complex64> {
        if z.norm_sqr() == 0.0 {
            if self.min_exponent().is_some_and(|k| k < 0) {
                return Err(Error::PoleEvaluation { location: z });
            }
            return Ok(self.coeff(0));
        }
        Ok(self.terms.iter().map(|(&k, &c)| c * z.powi(k as i32)).sum())
    }

    /// `z^{min}` times a polynomial with nonzero constant term.
    pub fn split_power(&self) -> (i64, Polynomial) {
        let Some(lo) = self.min_exponent() else {
            return (0, Polynomial::zero());
        };
        let hi = self.max_exponent().unwrap_or(lo);
        let mut coeffs = vec![Complex64::new(0.0, 0.0); (hi - lo) as usize + 1];
        for (&k, &c) in &self.terms {
            coeffs[(k - lo) as usize] = c;
        }
        (lo, Polynomial::new(coeffs))
    }
}

/// `numerator(z) / ∏ (z − a_j)^d` with the denominator kept in factored form.
#[derive(Clone, Debug, PartialEq)]
pub struct RationalField {
    pub numerator: Polynomial,
    pub defects: Vec<Complex64>,
    pub d: u32,
}

impl RationalField {
    pub fn new(numerator: Polynomial, defects: Vec<Complex64>, d: u32) -> Self {
        Self { numerator, defects, d }
    }

    pub fn denominator_degree(&self) -> usize {
        self.defects.len() * self.d as usize
    }

    pub fn denominator(&self, z: Complex64) -> Complex64 {
        self.defects.iter().map(|a| (z - a).powu(self.d)).product()
    }

    pub fn denominator_polynomial(&self) -> Polynomial {
        self.defects.iter().fold(Polynomial::one(), |p, &a| {
            &p * &Polynomial::linear_power(a, self.d as usize)
        })
    }

    pub fn is_zero(&self) -> bool {
        self.numerator.is_zero()
    }

    pub fn scale(&self, c: Complex64) -> Self {
        Self::new(self.numerator.scale(c), self.defects.clone(), self.d)
    }

    /// Sum of two fields over the same denominator.
    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.defects != other.defects || self.d != other.d {
            return Err(Error::invalid("rational fields have different denominators"));
        }
        Ok(Self::new(
            &self.numerator + &other.numerator,
            self.defects.clone(),
            self.d,
        ))
    }

    pub fn eval(&self, z: Complex64) -> Result<Complex64> {
        match self.defects.iter().position(|&a| a == z) {
            None => Ok(self.numerator.eval(z) / self.denominator(z)),
            Some(hit) => {
                // removable only if the numerator vanishes to order ≥ d here
                let d = self.d as usize;
                let (quotient, m) = self.numerator.divide_out_root(z, 1e-9, d);
                if m < d && !self.numerator.is_zero() {
                    return Err(Error::PoleEvaluation { location: z });
                }
                let rest: Complex64 = self
                    .defects
                    .iter()
                    .enumerate()
                    .filter(|&(j, _)| j != hit)
                    .map(|(_, a)| (z - a).powu(self.d))
                    .product();
                Ok(quotient.eval(z) / rest)
            }
        }
    }
}

/// A mapped state: either representation's field.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "FieldWire", into = "FieldWire")]
pub enum Field {
    Laurent(LaurentField),
    Rational(RationalField),
}

#[derive(Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "lowercase")]
enum FieldWire {
    Laurent {
        terms: Vec<(i64, Complex64)>,
    },
    Rational {
        numerator: Vec<Complex64>,
        defects: Vec<Complex64>,
        d: u32,
    },
}

impl TryFrom<FieldWire> for Field {
    type Error = Error;
    fn try_from(w: FieldWire) -> Result<Self> {
        Ok(match w {
            FieldWire::Laurent { terms } => Field::Laurent(LaurentField::from_terms(terms)),
            FieldWire::Rational { numerator, defects, d } => {
                if d == 0 {
                    return Err(Error::invalid("rational field needs d ≥ 1"));
                }
                for (j, a) in defects.iter().enumerate() {
                    if defects[..j].contains(a) {
                        return Err(Error::invalid(format!("defect {a} listed twice")));
                    }
                }
                Field::Rational(RationalField::new(Polynomial::new(numerator), defects, d))
            }
        })
    }
}

impl From<Field> for FieldWire {
    fn from(f: Field) -> Self {
        match f {
            Field::Laurent(l) => FieldWire::Laurent {
                terms: l.terms.into_iter().collect(),
            },
            Field::Rational(r) => FieldWire::Rational {
                numerator: r.numerator.coeffs().to_vec(),
                defects: r.defects,
                d: r.d,
            },
        }
    }
}

/// Value of a field at a point together with its planar velocity
/// `(u, v) = (Re f, −Im f)`, i.e. the components of `f*`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct FieldValue {
    pub f: Complex64,
    pub u: f64,
    pub v: f64,
}

impl Field {
    pub fn eval(&self, z: Complex64) -> Result<Complex64> {
        match self {
            Field::Laurent(l) => l.eval(z),
            Field::Rational(r) => r.eval(z),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Field::Laurent(l) => l.is_zero(),
            Field::Rational(r) => r.is_zero(),
        }
    }

    pub fn scale(&self, c: Complex64) -> Self {
        match self {
            Field::Laurent(l) => Field::Laurent(l.scale(c)),
            Field::Rational(r) => Field::Rational(r.scale(c)),
        }
    }

    /// Numerator and factored denominator `[(location, multiplicity)]`.
    pub fn as_fraction(&self) -> (Polynomial, Vec<(Complex64, u32)>) {
        match self {
            Field::Laurent(l) => {
                let (lo, p) = l.split_power();
                if lo < 0 {
                    (p, vec![(Complex64::new(0.0, 0.0), (-lo) as u32)])
                } else {
                    let shifted = &p * &Polynomial::monomial(Complex64::new(1.0, 0.0), lo as usize);
                    (shifted, Vec::new())
                }
            }
            Field::Rational(r) => (r.numerator.clone(), r.defects.iter().map(|&a| (a, r.d)).collect()),
        }
    }

    /// Locations where the denominator vanishes.
    pub fn pole_candidates(&self) -> Vec<Complex64> {
        match self {
            Field::Laurent(l) => {
                if l.min_exponent().is_some_and(|k| k < 0) {
                    vec![Complex64::new(0.0, 0.0)]
                } else {
                    Vec::new()
                }
            }
            Field::Rational(r) => r.defects.clone(),
        }
    }

    /// `deg(numerator) − deg(denominator)`: the field behaves like `z^D` at
    /// infinity. `None` for the zero field.
    pub fn asymptotic_degree(&self) -> Option<i64> {
        match self {
            Field::Laurent(l) => l.max_exponent(),
            Field::Rational(r) => {
                if r.is_zero() {
                    None
                } else {
                    Some(r.numerator.degree() as i64 - r.denominator_degree() as i64)
                }
            }
        }
    }
}

impl From<LaurentField> for Field {
    fn from(l: LaurentField) -> Self {
        Field::Laurent(l)
    }
}

impl From<RationalField> for Field {
    fn from(r: RationalField) -> Self {
        Field::Rational(r)
    }
}

/// Evaluates `field` at `z`, returning `f` and the velocity `(Re f*, Im f*)`.
pub fn eval_field(field: &Field, z: Complex64) -> Result<FieldValue> {
    let f = field.eval(z)?;
    Ok(FieldValue { f, u: f.re, v: -f.im })
}
