use harmonic_qubits::field::{check_linear_independence, Field, LaurentField, RationalField};
use harmonic_qubits::poly::{derivative_eval, roots, wronskian_matrix, Polynomial};
use num_complex::Complex64;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};

fn gaussian(rng: &mut ChaCha8Rng) -> Complex64 {
    Complex64::new(StandardNormal.sample(rng), StandardNormal.sample(rng))
}

fn random_poly(rng: &mut ChaCha8Rng, degree: usize) -> Polynomial {
    Polynomial::new((0..=degree).map(|_| gaussian(rng)).collect())
}

fn random_rational(rng: &mut ChaCha8Rng) -> Field {
    let k = rng.random_range(1..=3);
    let defects: Vec<Complex64> = (0..k)
        .map(|j| Complex64::from_polar(1.0 + 0.3 * j as f64, 2.0 * j as f64))
        .collect();
    let d = rng.random_range(1..=3);
    let degree = rng.random_range(0..=2 * k * d as usize);
    let num = random_poly(rng, degree);
    Field::Rational(RationalField::new(num, defects, d))
}

fn det(m: &harmonic_qubits::linalg::CMatrix) -> Complex64 {
    m.clone().lu().determinant()
}

#[test]
fn arithmetic_examples() {
    let p = Polynomial::from_real(&[2.0, 2.0, 1.0]);
    assert_eq!(p.derivative(), Polynomial::from_real(&[2.0, 2.0]));
    let prod = &Polynomial::from_real(&[1.0, 1.0]) * &Polynomial::from_real(&[-1.0, 1.0]);
    assert_eq!(prod, Polynomial::from_real(&[-1.0, 0.0, 1.0]));
    assert!(p.scale(Complex64::new(0.0, 0.0)).is_zero());
}

#[test]
fn root_residuals_are_small() {
    let mut rng = ChaCha8Rng::seed_from_u64(21);
    for degree in 1..=24 {
        let p = random_poly(&mut rng, degree);
        let set = roots(&p).unwrap();
        assert_eq!(set.total_multiplicity(), degree);
        for r in &set.roots {
            let bound = 1e-8 * p.max_abs_coeff() * (1.0 + r.location.norm()).powi(degree as i32);
            assert!(
                p.eval(r.location).norm() <= bound,
                "degree {degree}, root {}",
                r.location
            );
        }
    }
}

#[test]
fn roots_of_products_are_unions() {
    let mut rng = ChaCha8Rng::seed_from_u64(22);
    for _ in 0..20 {
        let (dp, dq) = (rng.random_range(1..=6), rng.random_range(1..=6));
        let p = random_poly(&mut rng, dp);
        let q = random_poly(&mut rng, dq);
        let mut expected: Vec<Complex64> = roots(&p).unwrap().expanded();
        expected.extend(roots(&q).unwrap().expanded());
        let got = roots(&(&p * &q)).unwrap().expanded();
        assert_eq!(got.len(), expected.len());
        for e in &expected {
            let hit = got.iter().any(|g| (g - e).norm() <= 1e-6 * (1.0 + e.norm()));
            assert!(hit, "missing root {e}");
        }
    }
}

#[test]
fn first_derivative_matches_central_difference() {
    let mut rng = ChaCha8Rng::seed_from_u64(23);
    let h = 1e-5;
    let mut checked = 0;
    while checked < 50 {
        let f = random_rational(&mut rng);
        let z = Complex64::new(rng.random_range(-2.0..2.0), rng.random_range(-2.0..2.0));
        if f.pole_candidates().iter().any(|a| (z - a).norm() < 0.3) {
            continue;
        }
        let exact = derivative_eval(&f, z, 1).unwrap()[1];
        let fd = (f.eval(z + h).unwrap() - f.eval(z - h).unwrap()) / (2.0 * h);
        assert!((exact - fd).norm() <= 1e-6 * exact.norm().max(1.0), "{exact} vs {fd}");
        checked += 1;
    }
}

#[test]
fn wronskian_vanishes_exactly_for_dependent_families() {
    let mut rng = ChaCha8Rng::seed_from_u64(24);
    for trial in 0..10 {
        let m = 3;
        let mut fields: Vec<Field> = (0..m)
            .map(|_| Field::Laurent(LaurentField::from_terms((-2..=2).map(|k| (k, gaussian(&mut rng))))))
            .collect();
        let dependent = trial % 2 == 0;
        if dependent {
            let (a, b) = (gaussian(&mut rng), gaussian(&mut rng));
            let (Field::Laurent(f0), Field::Laurent(f1)) = (&fields[0], &fields[1]) else {
                unreachable!()
            };
            fields[2] = Field::Laurent(f0.scale(a).add(&f1.scale(b)));
        }
        let report = check_linear_independence(&fields).unwrap();
        assert_eq!(report.independent, !dependent);
        for _ in 0..10 {
            let alpha = Complex64::from_polar(rng.random_range(0.5..2.0), rng.random_range(0.0..std::f64::consts::TAU));
            let b = wronskian_matrix(&fields, alpha).unwrap();
            let scale: f64 = (0..m).map(|j| b.column(j).norm()).product();
            let rel = det(&b).norm() / scale;
            if dependent {
                assert!(rel < 1e-10, "trial {trial}: {rel}");
            } else {
                assert!(rel > 1e-8, "trial {trial}: {rel}");
            }
        }
    }
}

#[test]
fn two_qubit_wronskian_is_nonsingular() {
    let cfg = harmonic_qubits::field::RepresentationConfig::default_position(2).unwrap();
    let fields = harmonic_qubits::field::basis_fields(&cfg).unwrap();
    let b = wronskian_matrix(&fields, Complex64::new(0.3, 0.7)).unwrap();
    assert!(det(&b).norm() > 1e-6);
}

proptest! {
    #[test]
    fn multiplicities_sum_to_degree(coeffs in proptest::collection::vec((-3.0f64..3.0, -3.0f64..3.0), 2..12)) {
        let p = Polynomial::new(coeffs.iter().map(|&(a, b)| Complex64::new(a, b)).collect());
        prop_assume!(!p.is_zero());
        let set = roots(&p).unwrap();
        prop_assert_eq!(set.total_multiplicity(), p.degree());
    }

    #[test]
    fn taylor_shift_matches_derivatives(coeffs in proptest::collection::vec(-3.0f64..3.0, 1..8), re in -2.0f64..2.0, im in -2.0f64..2.0) {
        let p = Polynomial::from_real(&coeffs);
        let alpha = Complex64::new(re, im);
        let shifted = p.taylor_shift(alpha);
        let mut factorial = 1.0;
        for (k, c) in shifted.iter().enumerate() {
            if k > 0 { factorial *= k as f64; }
            let want = p.nth_derivative(k).eval(alpha) / factorial;
            prop_assert!((c - want).norm() <= 1e-9 * (1.0 + want.norm()));
        }
    }
}
