use std::collections::HashSet;

use harmonic_qubits::field::{
    basis_fields, charge_map, check_laurent_independence, check_linear_independence, eval_field, exponent, map_state,
    necessary_charge_bound, position_map, ternary_exponent, ternary_strings, variable_particle_fields, Field,
    RepresentationConfig,
};
use harmonic_qubits::qubit::{bits_of, QubitState};
use num_complex::Complex64;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};

fn gaussian(rng: &mut ChaCha8Rng) -> Complex64 {
    Complex64::new(StandardNormal.sample(rng), StandardNormal.sample(rng))
}

fn random_state(rng: &mut ChaCha8Rng, n: usize) -> QubitState {
    QubitState::new(n, (0..1 << n).map(|_| gaussian(rng)).collect()).unwrap()
}

fn random_point(rng: &mut ChaCha8Rng) -> Complex64 {
    Complex64::new(rng.random_range(-2.0..2.0), rng.random_range(-2.0..2.0))
}

fn rel_close(a: Complex64, b: Complex64, tol: f64) -> bool {
    (a - b).norm() <= tol * a.norm().max(b.norm()).max(1e-300)
}

#[test]
fn mapping_is_linear() {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for cfg in [
        RepresentationConfig::default_position(3).unwrap(),
        RepresentationConfig::charge(3, 3).unwrap(),
    ] {
        for _ in 0..5 {
            let (psi, phi) = (random_state(&mut rng, 3), random_state(&mut rng, 3));
            let (a, b) = (gaussian(&mut rng), gaussian(&mut rng));
            let mixed = map_state(&psi.combine(a, &phi, b).unwrap(), &cfg).unwrap();
            let fp = map_state(&psi, &cfg).unwrap();
            let fq = map_state(&phi, &cfg).unwrap();
            for _ in 0..20 {
                let z = random_point(&mut rng);
                let lhs = mixed.eval(z).unwrap();
                let rhs = a * fp.eval(z).unwrap() + b * fq.eval(z).unwrap();
                // cancellation can make the sum small, so compare on the scale of the terms
                let scale = (a * fp.eval(z).unwrap()).norm() + (b * fq.eval(z).unwrap()).norm();
                assert!((lhs - rhs).norm() <= 1e-10 * scale, "{lhs} vs {rhs}");
            }
        }
    }
}

#[test]
fn tensor_product_in_position_rep() {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    let defects = RepresentationConfig::default_defects(4).unwrap();
    let d = 3;
    let full = RepresentationConfig::position(defects.clone(), d).unwrap();
    let left = RepresentationConfig::position(defects[..1].to_vec(), d).unwrap();
    let right = RepresentationConfig::position(defects[1..].to_vec(), d).unwrap();
    for _ in 0..5 {
        let psi = random_state(&mut rng, 1);
        let phi = random_state(&mut rng, 3);
        let whole = position_map(&psi.tensor(&phi), &full).unwrap();
        let a = position_map(&psi, &left).unwrap();
        let b = position_map(&phi, &right).unwrap();
        for _ in 0..20 {
            let z = random_point(&mut rng);
            assert!(rel_close(
                whole.eval(z).unwrap(),
                a.eval(z).unwrap() * b.eval(z).unwrap(),
                1e-10
            ));
        }
    }
}

#[test]
fn tensor_product_in_charge_rep() {
    // z^{c(στ)} at d equals z^{c(σ)} · z^{d^k c(τ)}: the second factor lives on
    // the higher digits, i.e. the substitution z → z^{d^k}
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let d = 3u32;
    for _ in 0..5 {
        let psi = random_state(&mut rng, 2);
        let phi = random_state(&mut rng, 2);
        let whole = charge_map(&psi.tensor(&phi), d).unwrap();
        let a = charge_map(&psi, d).unwrap();
        let b = charge_map(&phi, d).unwrap();
        let spread = harmonic_qubits::field::LaurentField::from_terms(
            b.terms().iter().map(|(&k, &c)| (k * (d as i64).pow(2), c)),
        );
        let product = a.mul(&spread);
        for (k, c) in whole.terms() {
            assert!((product.coeff(*k) - c).norm() < 1e-12);
        }
        assert_eq!(product.terms().len(), whole.terms().len());
    }
}

#[test]
fn charge_exponents_are_injective() {
    for d in 2..=3u32 {
        for n in 1..=10usize {
            let exps: HashSet<i64> = (0..1usize << n).map(|i| exponent(&bits_of(i, n), d).unwrap()).collect();
            assert_eq!(exps.len(), 1 << n, "d = {d}, n = {n}");
        }
    }
    for d in 3..=4u32 {
        for n in 1..=6usize {
            let exps: HashSet<i64> = ternary_strings(n)
                .iter()
                .map(|t| ternary_exponent(t, d).unwrap())
                .collect();
            assert_eq!(exps.len(), 3usize.pow(n as u32) - 1, "d = {d}, n = {n}");
        }
    }
}

#[test]
fn charge_basis_independent_up_to_eight_qubits() {
    for n in 1..=8 {
        let cfg = RepresentationConfig::charge(n, 3).unwrap();
        assert!(
            check_linear_independence(&basis_fields(&cfg).unwrap())
                .unwrap()
                .independent
        );
    }
}

#[test]
fn variable_particle_families() {
    assert!(
        !check_laurent_independence(&variable_particle_fields(2, 2).unwrap())
            .unwrap()
            .independent
    );
    for n in 1..=6 {
        let r = check_laurent_independence(&variable_particle_fields(n, 3).unwrap()).unwrap();
        assert!(r.independent, "n = {n}");
        assert_eq!(r.count, 3usize.pow(n as u32) - 1);
    }
}

#[test]
fn position_instances() {
    for n in [2, 4] {
        let cfg = RepresentationConfig::default_position(n).unwrap();
        assert!(
            check_linear_independence(&basis_fields(&cfg).unwrap())
                .unwrap()
                .independent
        );
    }
    let three_d1 = RepresentationConfig::position(RepresentationConfig::default_defects(3).unwrap(), 1).unwrap();
    let r = check_linear_independence(&basis_fields(&three_d1).unwrap()).unwrap();
    assert!(!r.independent);
    assert!(r.rank < 8);
    assert_eq!(necessary_charge_bound(3).unwrap(), 2);
}

#[test]
fn odd_n_bound_is_consistent() {
    for n in (1..=25usize).step_by(2) {
        let d = necessary_charge_bound(n).unwrap();
        assert!((n as u128 - 1) * d + 1 >= 1u128 << (n - 1), "n = {n}");
    }
}

#[test]
fn position_zero_state_value() {
    let cfg = RepresentationConfig::default_position(2).unwrap();
    let f = map_state(&QubitState::basis(2, &[0, 0]).unwrap(), &cfg).unwrap();
    let v = eval_field(&f, Complex64::new(0.0, 0.0)).unwrap();
    assert!((v.f - Complex64::new(-1.0, 0.0)).norm() < 1e-15);
}

proptest! {
    #[test]
    fn field_json_round_trip(re in proptest::collection::vec(-5.0f64..5.0, 8), im in proptest::collection::vec(-5.0f64..5.0, 8)) {
        let amps: Vec<Complex64> = re.iter().zip(&im).map(|(&a, &b)| Complex64::new(a, b)).collect();
        let s = QubitState::new(3, amps).unwrap();
        for cfg in [RepresentationConfig::default_position(3).unwrap(), RepresentationConfig::charge(3, 2).unwrap()] {
            let f = map_state(&s, &cfg).unwrap();
            let back: Field = serde_json::from_str(&serde_json::to_string(&f).unwrap()).unwrap();
            prop_assert_eq!(back, f);
        }
    }

    #[test]
    fn exponent_matches_closed_form(index in 0usize..1024, d in 1u32..6) {
        let n = 10;
        let bits = bits_of(index, n);
        let digits: i64 = bits.iter().enumerate().map(|(j, &b)| b as i64 * (d as i64).pow(j as u32)).sum();
        let all: i64 = (0..n as u32).map(|j| (d as i64).pow(j)).sum();
        prop_assert_eq!(exponent(&bits, d).unwrap(), 2 * digits - all);
    }
}
