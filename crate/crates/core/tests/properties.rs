use dequantlab_core::linalg::Mat2;
use dequantlab_core::optical::{decompose_su2, waveplate_matrix, WavePlate};
use dequantlab_core::oracle::{apply_phase_oracle, apply_xor_oracle, negate, BooleanFunction};
use dequantlab_core::qstate::{equal_up_to_global_phase, hadamard_all, tensor, StateVector};
use dequantlab_core::separability::{
    bipartition_separable, factor_product_state, pair_product_invariant, qubit_separable,
    Factorization,
};
use dequantlab_core::solver::{
    apply_product_unitary, distribution_distance, run_dequantised, run_state_vector,
    solve_dj_quantum, ClassicalVectorOracle, FlowStep, ProductFlow,
};
use dequantlab_core::Complex64;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn random_state(n: usize, seed: u64) -> StateVector {
    StateVector::random(n, &mut rng(seed)).unwrap()
}

fn random_product(n: usize, seed: u64) -> StateVector {
    let mut r = rng(seed);
    (0..n)
        .map(|_| StateVector::random(1, &mut r).unwrap())
        .reduce(|a, b| tensor(&a, &b).unwrap())
        .unwrap()
}

fn minus() -> StateVector {
    StateVector::from_signs(&[1, -1]).unwrap()
}

fn max_amplitude_gap(a: &StateVector, b: &StateVector) -> f64 {
    a.amplitudes()
        .iter()
        .zip(b.amplitudes())
        .map(|(x, y)| (x - y).norm())
        .fold(0.0, f64::max)
}

fn function(n: usize) -> impl Strategy<Value = BooleanFunction> {
    proptest::collection::vec(any::<bool>(), 1 << n).prop_map(|t| BooleanFunction::new(t).unwrap())
}

fn any_function() -> impl Strategy<Value = BooleanFunction> {
    (1usize..=6).prop_flat_map(function)
}

fn sign_state(min_n: usize) -> impl Strategy<Value = StateVector> {
    (min_n..=6)
        .prop_flat_map(function)
        .prop_map(|f| f.phase_state().unwrap())
}

proptest! {
    #[test]
    fn hadamard_is_an_involution(n in 1usize..=6, seed in any::<u64>()) {
        let s = random_state(n, seed);
        let back = hadamard_all(&hadamard_all(&s));
        prop_assert!(max_amplitude_gap(&s, &back) < 1e-12);
    }

    #[test]
    fn hadamard_is_exact_on_sign_states(s in sign_state(1)) {
        let back = hadamard_all(&hadamard_all(&s));
        prop_assert_eq!(back.signs(), s.signs());
    }

    #[test]
    fn normalisation_is_preserved(f in any_function(), seed in any::<u64>()) {
        let s = random_state(f.n(), seed);
        prop_assert!((hadamard_all(&s).norm_sqr() - 1.0).abs() < 1e-12);
        let kicked = apply_phase_oracle(&f, &s).unwrap();
        prop_assert!((kicked.norm_sqr() - 1.0).abs() < 1e-12);
        let exact = hadamard_all(&f.phase_state().unwrap());
        prop_assert!((exact.norm_sqr() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn tensor_is_associative(a in 1usize..=3, b in 1usize..=3, c in 1usize..=3, seed in any::<u64>()) {
        let (x, y, z) = (random_state(a, seed), random_state(b, seed ^ 1), random_state(c, seed ^ 2));
        let left = tensor(&tensor(&x, &y).unwrap(), &z).unwrap();
        let right = tensor(&x, &tensor(&y, &z).unwrap()).unwrap();
        prop_assert!(max_amplitude_gap(&left, &right) < 1e-15);
    }

    #[test]
    fn global_phase_is_an_equivalence(n in 1usize..=5, seed in any::<u64>(), t1 in 0.0..6.3f64, t2 in 0.0..6.3f64) {
        let s = random_state(n, seed);
        let a = s.with_phase(Complex64::from_polar(1.0, t1));
        let b = a.with_phase(Complex64::from_polar(1.0, t2));
        prop_assert!(equal_up_to_global_phase(&s, &s, 1e-12).unwrap());
        prop_assert!(equal_up_to_global_phase(&s, &a, 1e-12).unwrap());
        prop_assert!(equal_up_to_global_phase(&a, &s, 1e-12).unwrap());
        prop_assert!(equal_up_to_global_phase(&s, &b, 1e-12).unwrap());
        let other = random_state(n, seed.wrapping_add(1));
        prop_assert!(!equal_up_to_global_phase(&s, &other, 1e-12).unwrap());
    }

    #[test]
    fn xor_oracle_kicks_back_the_phase(f in (1usize..=5).prop_flat_map(function), seed in any::<u64>()) {
        let s = random_state(f.n(), seed);
        let via_xor = apply_xor_oracle(&f, &tensor(&s, &minus()).unwrap()).unwrap();
        let via_phase = tensor(&apply_phase_oracle(&f, &s).unwrap(), &minus()).unwrap();
        prop_assert!(max_amplitude_gap(&via_xor, &via_phase) < 1e-15);
    }

    #[test]
    fn negation_is_a_global_phase(f in any_function()) {
        let g = negate(&f);
        let (s, t) = (f.phase_state().unwrap(), g.phase_state().unwrap());
        prop_assert_eq!(s.negated(), t.clone());
        prop_assert!(equal_up_to_global_phase(&s, &t, 0.0).unwrap());
        match (solve_dj_quantum(&f), solve_dj_quantum(&g)) {
            (Ok(a), Ok(b)) => {
                prop_assert_eq!(a.verdict, b.verdict);
                prop_assert_eq!(a.distribution, b.distribution);
            }
            (Err(_), Err(_)) => {}
            _ => prop_assert!(false, "negation changed promise status"),
        }
    }

    #[test]
    fn product_states_factor_and_roundtrip(n in 1usize..=6, seed in any::<u64>()) {
        let s = random_product(n, seed);
        let Factorization::Product(p) = factor_product_state(&s).unwrap() else {
            return Err(TestCaseError::fail("product state reported entangled"));
        };
        prop_assert!(p.fidelity(&s).unwrap() > 1.0 - 1e-9);
        prop_assert!(equal_up_to_global_phase(&p.reconstruct().unwrap(), &s, 1e-10).unwrap());
    }

    #[test]
    fn ppi_agrees_with_factorisation(n in 2usize..=5, seed in any::<u64>(), product in any::<bool>()) {
        let s = if product { random_product(n, seed) } else { random_state(n, seed) };
        let report = pair_product_invariant(&s).unwrap();
        prop_assert!(report.decides_separability());
        prop_assert_eq!(report.invariant, factor_product_state(&s).unwrap().is_product());
        prop_assert_eq!(report.invariant, product);
    }

    #[test]
    fn ppi_agrees_with_factorisation_on_sign_states(s in sign_state(2)) {
        let report = pair_product_invariant(&s).unwrap();
        prop_assert_eq!(report.invariant, factor_product_state(&s).unwrap().is_product());
    }

    #[test]
    fn single_qubit_test_matches_bipartition(n in 2usize..=5, seed in any::<u64>(), mix in any::<bool>()) {
        // half the time, a state with one factored-out qubit
        let s = if mix {
            let (a, b) = (random_state(1, seed), random_state(n - 1, seed ^ 7));
            tensor(&b, &a).unwrap()
        } else {
            random_state(n, seed)
        };
        for q in 0..n {
            prop_assert_eq!(qubit_separable(&s, q).unwrap(), bipartition_separable(&s, &[q]).unwrap());
        }
        if mix {
            prop_assert!(qubit_separable(&s, n - 1).unwrap());
        }
    }

    #[test]
    fn single_qubit_test_matches_bipartition_on_sign_states(s in sign_state(2)) {
        for q in 0..s.n() {
            prop_assert_eq!(qubit_separable(&s, q).unwrap(), bipartition_separable(&s, &[q]).unwrap());
        }
    }

    #[test]
    fn dequantised_flow_matches_state_vector(n in 1usize..=6, seed in any::<u64>(), steps in 0usize..6) {
        let mut r = rng(seed);
        let factors: Vec<Mat2> = (0..n).map(|_| Mat2::random_unitary(&mut r)).collect();
        let oracle = ClassicalVectorOracle::new(factors.clone()).unwrap();
        let mut flow = ProductFlow::new(n);
        flow.steps.push(FlowStep::GateAll(Mat2::hadamard()));
        for k in 0..steps {
            flow.steps.push(FlowStep::Query);
            flow.steps.push(FlowStep::Gate { qubit: k % n, gate: Mat2::random_unitary(&mut r) });
        }
        let cheap = run_dequantised(&oracle, &flow).unwrap();
        let (full, calls) = run_state_vector(&flow, |s| apply_product_unitary(s, &factors)).unwrap();
        prop_assert!(distribution_distance(&cheap.distribution, &full).unwrap() < 1e-9);
        prop_assert_eq!(cheap.oracle_calls, calls);
        prop_assert_eq!(calls as usize, flow.query_count());
    }

    #[test]
    fn su2_decomposition_roundtrips(seed in any::<u64>()) {
        let u = Mat2::random_su2(&mut rng(seed));
        let d = decompose_su2(&u).unwrap();
        prop_assert!(u.phase_aligned_distance(&d.matrix()).0 < 1e-8);
    }
}

#[test]
fn wave_plates_are_unitary_on_a_grid() {
    for k in 0..1000 {
        let theta = k as f64 * std::f64::consts::PI / 1000.0;
        for plate in [WavePlate::quarter(theta), WavePlate::half(theta)] {
            let defect = waveplate_matrix(&plate).unitarity_defect();
            assert!(defect < 1e-12, "{plate}: {defect}");
        }
    }
}

#[test]
fn xor_oracle_matches_phase_oracle_exhaustively() {
    for n in 1..=3usize {
        for index in 0..1u64 << (1 << n) {
            let f = BooleanFunction::from_table_index(n, index);
            let plus = StateVector::plus(n).unwrap();
            let via_xor = apply_xor_oracle(&f, &tensor(&plus, &minus()).unwrap()).unwrap();
            let via_phase = tensor(&apply_phase_oracle(&f, &plus).unwrap(), &minus()).unwrap();
            assert_eq!(via_xor, via_phase, "{f}");
        }
    }
}
