use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;

const TRIM_TOL: f64 = 1e-14;

/// Dense complex polynomial, coefficients in ascending degree.
///
/// Leading coefficients below `1e-14 · max|c|` are trimmed, so the stored
/// vector is empty only for the zero polynomial.
#[derive(Clone, Debug, PartialEq, Default)]
pub struct Polynomial {
    coeffs: Vec<Complex64>,
}

fn zero() -> Complex64 {
    Complex64::new(0.0, 0.0)
}

impl Polynomial {
    pub fn new(mut coeffs: Vec<Complex64>) -> Self {
        let max = coeffs.iter().map(|c| c.norm()).fold(0.0, f64::max);
        while let Some(last) = coeffs.last() {
            if last.norm() <= TRIM_TOL * max {
                coeffs.pop();
            } else {
                break;
            }
        }
        Self { coeffs }
    }

    /// Builds from real coefficients, ascending.
    pub fn from_real(coeffs: &[f64]) -> Self {
        Self::new(coeffs.iter().map(|&c| Complex64::new(c, 0.0)).collect())
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn constant(c: Complex64) -> Self {
        Self::new(vec![c])
    }

    pub fn one() -> Self {
        Self::constant(Complex64::new(1.0, 0.0))
    }

    /// `c · z^k`.
    pub fn monomial(c: Complex64, k: usize) -> Self {
        let mut coeffs = vec![zero(); k + 1];
        coeffs[k] = c;
        Self::new(coeffs)
    }

    /// `(z − a)^k`, by repeated convolution with the linear factor.
    pub fn linear_power(a: Complex64, k: usize) -> Self {
        let mut p = Self::one();
        for _ in 0..k {
            p = p.mul_linear(a);
        }
        p
    }

    /// `∏ (z − r)` over the given roots.
    pub fn from_roots(roots: &[Complex64]) -> Self {
        roots.iter().fold(Self::one(), |p, &r| p.mul_linear(r))
    }

    /// Multiplies by `(z − a)`.
    pub fn mul_linear(&self, a: Complex64) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut out = vec![zero(); self.coeffs.len() + 1];
        for (k, c) in self.coeffs.iter().enumerate() {
            out[k + 1] += c;
            out[k] -= a * c;
        }
        Self::new(out)
    }

    pub fn coeffs(&self) -> &[Complex64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; the zero polynomial reports 0.
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn leading(&self) -> Complex64 {
        self.coeffs.last().copied().unwrap_or_else(zero)
    }

    pub fn max_abs_coeff(&self) -> f64 {
        self.coeffs.iter().map(|c| c.norm()).fold(0.0, f64::max)
    }

    /// Horner evaluation.
    pub fn eval(&self, z: Complex64) -> Complex64 {
        self.coeffs.iter().rev().fold(zero(), |acc, c| acc * z + c)
    }

    /// `Σ |c_k| |z|^k`, the scale against which rounding in `eval` is judged.
    pub fn eval_abs(&self, z: Complex64) -> f64 {
        let r = z.norm();
        self.coeffs.iter().rev().fold(0.0, |acc, c| acc * r + c.norm())
    }

    /// Value and first derivative in one Horner pass.
    pub fn eval_with_derivative(&self, z: Complex64) -> (Complex64, Complex64) {
        let mut p = zero();
        let mut dp = zero();
        for c in self.coeffs.iter().rev() {
            dp = dp * z + p;
            p = p * z + c;
        }
        (p, dp)
    }

    pub fn scale(&self, c: Complex64) -> Self {
        Self::new(self.coeffs.iter().map(|x| x * c).collect())
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * k as f64)
                .collect(),
        )
    }

    pub fn nth_derivative(&self, order: usize) -> Self {
        (0..order).fold(self.clone(), |p, _| p.derivative())
    }

    /// Synthetic division by `(z − a)`: returns quotient and remainder `p(a)`.
    pub fn deflate(&self, a: Complex64) -> (Self, Complex64) {
        if self.coeffs.len() < 2 {
            return (Self::zero(), self.coeffs.first().copied().unwrap_or_else(zero));
        }
        let n = self.coeffs.len() - 1;
        let mut q = vec![zero(); n];
        let mut carry = self.coeffs[n];
        for k in (0..n).rev() {
            q[k] = carry;
            carry = self.coeffs[k] + carry * a;
        }
        (Self { coeffs: q }, carry)
    }

    /// Divides out `(z − a)` as long as the remainder is negligible against
    /// `rel_tol · Σ|c_k||a|^k`, at most `max` times. Returns the deflated
    /// polynomial and the multiplicity found.
    pub fn divide_out_root(&self, a: Complex64, rel_tol: f64, max: usize) -> (Self, usize) {
        let mut p = self.clone();
        let mut m = 0;
        while m < max && p.degree() >= 1 {
            let scale = p.eval_abs(a);
            let (q, r) = p.deflate(a);
            if r.norm() > rel_tol * scale {
                break;
            }
            p = q;
            m += 1;
        }
        (p, m)
    }

    /// Coefficients of `p(α + t)` in `t`, i.e. `p^{(k)}(α) / k!`.
    pub fn taylor_shift(&self, alpha: Complex64) -> Vec<Complex64> {
        let mut c = self.coeffs.clone();
        let n = c.len();
        for i in 0..n {
            for k in (i..n - 1).rev() {
                let next = c[k + 1];
                c[k] += alpha * next;
            }
        }
        c
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        let get = |v: &[Complex64], k: usize| v.get(k).copied().unwrap_or_else(zero);
        Polynomial::new((0..len).map(|k| get(&self.coeffs, k) + get(&rhs.coeffs, k)).collect())
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self + &(-rhs)
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut out = vec![zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Polynomial::new(out)
    }
}
