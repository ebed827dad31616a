use harmonic_qubits::field::{basis_fields, charge_map, map_state, Field, LaurentField, RepresentationConfig};
use harmonic_qubits::inner::{build_gram, circle_inner_product, inner, required_nodes};
use harmonic_qubits::linalg::CMatrix;
use harmonic_qubits::qubit::{make_named_state, qft, Gate, QubitState};
use harmonic_qubits::Error;
use num_complex::Complex64;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};

fn gaussian(rng: &mut ChaCha8Rng) -> Complex64 {
    Complex64::new(StandardNormal.sample(rng), StandardNormal.sample(rng))
}

fn random_unit_state(rng: &mut ChaCha8Rng, n: usize) -> QubitState {
    QubitState::new(n, (0..1 << n).map(|_| gaussian(rng)).collect())
        .unwrap()
        .normalized()
        .unwrap()
}

#[test]
fn basis_is_orthonormal_for_small_defaults() {
    for n in 1..=3 {
        let cfg = RepresentationConfig::default_position(n).unwrap();
        let ctx = build_gram(&cfg).unwrap();
        let dim = 1 << n;
        let err = (ctx.b.adjoint() * &ctx.p * &ctx.b - CMatrix::identity(dim, dim)).norm();
        assert!(err < 1e-8, "n = {n}: {err}");
    }
}

#[test]
fn gram_matrix_is_hermitian_positive_definite() {
    for n in 1..=3 {
        let ctx = build_gram(&RepresentationConfig::default_position(n).unwrap()).unwrap();
        let p = &ctx.p;
        assert!((p - p.adjoint()).norm() <= 1e-10 * p.norm(), "n = {n}");
        // Cholesky succeeds only for positive definite matrices
        assert!(p.clone().cholesky().is_some(), "n = {n}");
    }
}

#[test]
fn field_inner_product_matches_amplitudes() {
    let mut rng = ChaCha8Rng::seed_from_u64(31);
    for n in 1..=3 {
        let cfg = RepresentationConfig::default_position(n).unwrap();
        let ctx = build_gram(&cfg).unwrap();
        for _ in 0..100 {
            let psi = random_unit_state(&mut rng, n);
            let phi = random_unit_state(&mut rng, n);
            let got = inner(&map_state(&psi, &cfg).unwrap(), &map_state(&phi, &cfg).unwrap(), &ctx).unwrap();
            assert!((got - psi.inner(&phi)).norm() < 1e-7, "n = {n}");
        }
    }
}

#[test]
fn gates_preserve_field_norm() {
    let mut rng = ChaCha8Rng::seed_from_u64(32);
    let cfg = RepresentationConfig::default_position(3).unwrap();
    let ctx = build_gram(&cfg).unwrap();
    let norm = |s: &QubitState| inner(&map_state(s, &cfg).unwrap(), &map_state(s, &cfg).unwrap(), &ctx).unwrap();
    let gates = [
        (Gate::h(), vec![1]),
        (Gate::x(), vec![2]),
        (Gate::y(), vec![3]),
        (Gate::z(), vec![1]),
        (Gate::sx(), vec![2]),
        (Gate::s(), vec![3]),
        (Gate::cphase(0.7), vec![1, 3]),
    ];
    for _ in 0..10 {
        let psi = random_unit_state(&mut rng, 3);
        let before = norm(&psi);
        assert!((before - 1.0).norm() < 1e-7);
        for (g, targets) in &gates {
            let after = norm(&g.apply(&psi, targets).unwrap());
            assert!((after - before).norm() < 1e-7, "{}", g.label());
        }
        assert!((norm(&qft(&psi)) - before).norm() < 1e-7);
    }
}

#[test]
fn four_qubit_basis_coordinates_are_orthonormal() {
    let cfg = RepresentationConfig::default_position(4).unwrap();
    let ctx = build_gram(&cfg).unwrap();
    let fields = basis_fields(&cfg).unwrap();
    for (i, fi) in fields.iter().enumerate() {
        for (j, fj) in fields.iter().enumerate() {
            let want = if i == j { 1.0 } else { 0.0 };
            assert!((inner(fi, fj, &ctx).unwrap() - want).norm() < 1e-7, "({i}, {j})");
        }
    }
}

#[test]
fn dependent_family_reports_conditioning() {
    let cfg = RepresentationConfig::position(RepresentationConfig::default_defects(3).unwrap(), 1).unwrap();
    assert!(matches!(build_gram(&cfg), Err(Error::Conditioning { .. })));
}

#[test]
fn circle_product_is_kronecker_on_charge_basis() {
    for n in 1..=4 {
        let cfg = RepresentationConfig::charge(n, 3).unwrap();
        let fields: Vec<LaurentField> = basis_fields(&cfg)
            .unwrap()
            .into_iter()
            .map(|f| match f {
                Field::Laurent(l) => l,
                Field::Rational(_) => unreachable!(),
            })
            .collect();
        for (i, fi) in fields.iter().enumerate() {
            for (j, fj) in fields.iter().enumerate() {
                let want = if i == j { 1.0 } else { 0.0 };
                let got = circle_inner_product(fi, fj, None).unwrap();
                assert!((got - want).norm() < 1e-12, "n = {n}: ({i}, {j})");
            }
        }
    }
}

#[test]
fn circle_product_matches_coefficient_sum() {
    let mut rng = ChaCha8Rng::seed_from_u64(33);
    for _ in 0..20 {
        let f = LaurentField::from_terms((-6..=6).map(|k| (k, gaussian(&mut rng))));
        let g = LaurentField::from_terms((-6..=6).map(|k| (k, gaussian(&mut rng))));
        let want: Complex64 = (-6..=6).map(|k| f.coeff(k).conj() * g.coeff(k)).sum();
        let nodes = required_nodes(&f, &g);
        let got = circle_inner_product(&f, &g, Some(nodes)).unwrap();
        assert!((got - want).norm() < 1e-11 * (1.0 + want.norm()));
    }
}

#[test]
fn circle_product_rejects_aliasing_node_counts() {
    let f = LaurentField::monomial(4, Complex64::new(1.0, 0.0));
    let err = circle_inner_product(&f, &f, Some(8)).unwrap_err();
    assert!(matches!(err, Error::InsufficientNodes { required: 9, given: 8 }));
}

#[test]
fn bell_states_are_orthogonal_on_the_circle() {
    let plus = charge_map(&make_named_state("bell00+", 2).unwrap(), 3).unwrap();
    let minus = charge_map(&make_named_state("bell00-", 2).unwrap(), 3).unwrap();
    assert!(circle_inner_product(&plus, &minus, None).unwrap().norm() < 1e-12);
}
