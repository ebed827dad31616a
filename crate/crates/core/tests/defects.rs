use harmonic_qubits::defects::{
    extract_defects, factorizable_qubits, is_separable_geometric, is_separable_tensor, HaloStatus,
};
use harmonic_qubits::field::{map_state, RepresentationConfig};
use harmonic_qubits::qubit::{make_named_state, qft, QubitState};
use num_complex::Complex64;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};

fn gaussian(rng: &mut ChaCha8Rng) -> Complex64 {
    Complex64::new(StandardNormal.sample(rng), StandardNormal.sample(rng))
}

fn random_product(rng: &mut ChaCha8Rng, n: usize) -> QubitState {
    let factors: Vec<_> = (0..n).map(|_| (gaussian(rng), gaussian(rng))).collect();
    QubitState::product(&factors).unwrap()
}

fn random_generic(rng: &mut ChaCha8Rng, n: usize) -> QubitState {
    QubitState::new(n, (0..1 << n).map(|_| gaussian(rng)).collect()).unwrap()
}

#[test]
fn qft_of_basis_states_has_three_hexagons() {
    let cfg = RepresentationConfig::default_position(3).unwrap();
    for index in 0..8 {
        let bits: Vec<u8> = (0..3).map(|j| ((index >> (2 - j)) & 1) as u8).collect();
        let state = qft(&QubitState::basis(3, &bits).unwrap());
        let v = is_separable_geometric(&state, &cfg).unwrap();
        assert!(v.separable, "QFT|{bits:?}⟩: {:?}", v.halos);
        assert_eq!(v.halos.count(HaloStatus::Regular), 3, "QFT|{bits:?}⟩");
        for h in &v.halos.halos {
            assert_eq!(h.zeros.len(), 6);
        }
    }
}

#[test]
fn entangled_named_states_are_not_separable() {
    let cases = [
        ("GHZ", 3),
        ("W", 3),
        ("Bell00+", 2),
        ("Bell00-", 2),
        ("Bell01+", 2),
        ("Bell01-", 2),
    ];
    for (name, n) in cases {
        let state = make_named_state(name, n).unwrap();
        let cfg = RepresentationConfig::default_position(n).unwrap();
        assert!(!is_separable_geometric(&state, &cfg).unwrap().separable, "{name}");
        assert!(!is_separable_tensor(&state).unwrap(), "{name}");
    }
}

#[test]
fn detectors_agree_on_random_states() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for trial in 0..100 {
        for n in [2usize, 3] {
            let cfg = RepresentationConfig::default_position(n).unwrap();
            let sep = random_product(&mut rng, n);
            let v = is_separable_geometric(&sep, &cfg).unwrap();
            assert!(v.separable, "trial {trial}, n = {n}: {:?}", v.halos);
            assert!(is_separable_tensor(&sep).unwrap());

            let generic = random_generic(&mut rng, n);
            assert!(!is_separable_geometric(&generic, &cfg).unwrap().separable);
            assert!(!is_separable_tensor(&generic).unwrap());
        }
    }
}

#[test]
fn witness_reproduces_product_factors() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let cfg = RepresentationConfig::default_position(3).unwrap();
    let factors: Vec<_> = (0..3).map(|_| (gaussian(&mut rng), gaussian(&mut rng))).collect();
    let v = is_separable_geometric(&QubitState::product(&factors).unwrap(), &cfg).unwrap();
    let witness = v.witness.unwrap();
    for ((a, b), (wa, wb)) in factors.iter().zip(&witness) {
        // same ray: a·wb = b·wa
        assert!((a * wb - b * wa).norm() <= 1e-8 * (a.norm() + b.norm()) * (wa.norm() + wb.norm()));
    }
}

#[test]
fn basis_qubits_give_collapsed_and_infinite_halos() {
    let cfg = RepresentationConfig::default_position(3).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let state = QubitState::product(&[
        (Complex64::new(1.0, 0.0), Complex64::new(0.0, 0.0)),
        (gaussian(&mut rng), gaussian(&mut rng)),
        (Complex64::new(0.0, 0.0), Complex64::new(1.0, 0.0)),
    ])
    .unwrap();
    let v = is_separable_geometric(&state, &cfg).unwrap();
    assert!(v.separable, "{:?}", v.halos);
    let statuses: Vec<_> = v.halos.halos.iter().map(|h| h.status).collect();
    assert_eq!(
        statuses,
        [HaloStatus::AtInfinity, HaloStatus::Regular, HaloStatus::Collapsed]
    );
}

#[test]
fn degree_balance_holds() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for n in 1..=4 {
        let pos = RepresentationConfig::default_position(n).unwrap();
        let charge = RepresentationConfig::charge(n, 3).unwrap();
        for _ in 0..10 {
            let state = random_generic(&mut rng, n);
            for cfg in [&pos, &charge] {
                let set = extract_defects(&map_state(&state, cfg).unwrap()).unwrap();
                assert!(set.is_balanced(), "{set:?}");
            }
        }
    }
}

#[test]
fn factorizable_qubits_imply_halos() {
    // qubit 1 splits off; the halo around its defect must be complete
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let cfg = RepresentationConfig::default_position(3).unwrap();
    let first = QubitState::qubit(gaussian(&mut rng), gaussian(&mut rng));
    let state = first.tensor(&random_generic(&mut rng, 2));
    let factors = factorizable_qubits(&state).unwrap();
    assert_eq!(factors.into_iter().collect::<Vec<_>>(), vec![1]);
    let v = is_separable_geometric(&state, &cfg).unwrap();
    assert!(!v.separable);
    assert_eq!(v.halos.halos[0].status, HaloStatus::Regular);
}
