mod common;

use common::{random_state, random_state_with_zero_ancilla};
use gatemat::{matvec, max_abs_diff};
use grover_engine::{diffuse, grover_search, phase_flip_marked, query, SearchError, SearchParams};
use num_complex::Complex64;
use statevec_core::{MachineState, RegisterHandle};

fn re(x: f64) -> Complex64 {
    Complex64::new(x, 0.0)
}

/// Machine holding a 2-qubit search register in uniform superposition plus
/// a |0> ancilla.
fn uniform_two_qubit_setup(seed: u64) -> (MachineState, RegisterHandle, RegisterHandle) {
    let mut machine = MachineState::new(3, seed).unwrap();
    let x = machine.allocate(2).unwrap();
    let f = machine.allocate(1).unwrap();
    machine.apply_hadamard(&x).unwrap();
    (machine, x, f)
}

#[test]
fn query_marks_exactly_the_target_value() {
    let target = 5u64; // |101>
    let mut machine = MachineState::new(4, 0).unwrap();
    let x = machine.allocate(3).unwrap();
    let f = machine.allocate(1).unwrap();

    // x holds the target: the ancilla flips, x is restored.
    machine.apply_not(&x.qubit(0)).unwrap();
    machine.apply_not(&x.qubit(2)).unwrap();
    query(&mut machine, &x, &f, target).unwrap();
    assert_eq!(machine.register_probability(&f, 1).unwrap(), 1.0);
    assert_eq!(machine.register_probability(&x, target).unwrap(), 1.0);

    // x holds some other value: nothing moves.
    let mut machine = MachineState::new(4, 0).unwrap();
    let x = machine.allocate(3).unwrap();
    let f = machine.allocate(1).unwrap();
    machine.apply_not(&x.qubit(1)).unwrap(); // x = |010> = 2
    query(&mut machine, &x, &f, target).unwrap();
    assert_eq!(machine.register_probability(&f, 0).unwrap(), 1.0);
    assert_eq!(machine.register_probability(&x, 2).unwrap(), 1.0);
}

#[test]
fn query_rejects_bad_registers() {
    let mut machine = MachineState::new(4, 0).unwrap();
    let x = machine.allocate(3).unwrap();
    let f = machine.allocate(1).unwrap();
    let wide = RegisterHandle::new(vec![0, 1]);
    assert!(matches!(
        query(&mut machine, &x, &wide, 1),
        Err(SearchError::State(statevec_core::Error::InvalidRegister(_)))
    ));
    let overlapping = RegisterHandle::new(vec![2]);
    assert!(matches!(
        query(&mut machine, &x, &overlapping, 1),
        Err(SearchError::State(statevec_core::Error::Overlap(_)))
    ));
    assert!(matches!(
        query(&mut machine, &x, &f, 8),
        Err(SearchError::Domain(_))
    ));
}

#[test]
fn query_is_an_involution_checked_against_dense_matrices() {
    // Independent route: the explicit permutation matrix of the query
    // sequence squares to the identity for widths up to 4.
    for width in 1..=4usize {
        for target in 0..(1u64 << width) {
            let n = width + 1;
            let x_conj = {
                let mut m = gatemat::identity(1 << n);
                for pos in 0..width {
                    if (target >> pos) & 1 == 0 {
                        let x = gatemat::single_qubit_gate(n, pos, &gatemat::pauli_x_2x2());
                        m = gatemat::matmul(&x, &m);
                    }
                }
                m
            };
            let controls: Vec<usize> = (0..width).collect();
            let mcx = gatemat::controlled_not(n, width, &controls);
            let query_matrix = gatemat::matmul(&x_conj, &gatemat::matmul(&mcx, &x_conj));
            let squared = gatemat::matmul(&query_matrix, &query_matrix);
            let identity = gatemat::identity(1 << n);
            for r in 0..1 << n {
                assert!(max_abs_diff(&squared[r], &identity[r]) <= 1e-15);
            }
        }
    }

    // Simulator route on random states.
    for width in 1..=4usize {
        for seed in 0..10u64 {
            let start = random_state(seed, width + 1);
            let mut machine = MachineState::from_amplitudes(width + 1, 0, start.clone()).unwrap();
            let x = RegisterHandle::new((0..width).collect());
            let f = RegisterHandle::new(vec![width]);
            let target = seed % (1 << width) as u64;
            query(&mut machine, &x, &f, target).unwrap();
            query(&mut machine, &x, &f, target).unwrap();
            assert!(max_abs_diff(&machine.snapshot_amplitudes(), &start) <= 1e-12);
        }
    }
}

#[test]
fn phase_flip_negates_the_marked_component_of_a_uniform_state() {
    let (mut machine, x, f) = uniform_two_qubit_setup(0);
    phase_flip_marked(&mut machine, &x, &f, 2).unwrap();

    // Frozen expectation [1/2, 1/2, -1/2, 1/2] on the x register, ancilla
    // back in |0>; cross-checked against the diagonal sign-flip oracle.
    let want_x = vec![re(0.5), re(0.5), re(-0.5), re(0.5)];
    let oracle = matvec(
        &gatemat::marked_sign_flip(2, 2),
        &[re(0.5), re(0.5), re(0.5), re(0.5)],
    );
    assert!(max_abs_diff(&oracle, &want_x) <= 1e-15);

    let got = machine.snapshot_amplitudes();
    assert!(max_abs_diff(&got[..4], &want_x) <= 1e-12);
    for a in &got[4..] {
        assert!(a.norm() <= 1e-12, "ancilla leaked amplitude {a}");
    }
}

#[test]
fn phase_flip_on_the_marked_basis_state_is_a_global_sign() {
    let mut machine = MachineState::new(3, 0).unwrap();
    let x = machine.allocate(2).unwrap();
    let f = machine.allocate(1).unwrap();
    machine.apply_not(&x).unwrap(); // x = |11> = 3
    phase_flip_marked(&mut machine, &x, &f, 3).unwrap();
    let got = machine.snapshot_amplitudes();
    assert!((got[3] - re(-1.0)).norm() <= 1e-12);
    assert!((machine.total_probability() - 1.0).abs() <= 1e-12);
}

#[test]
fn phase_flip_twice_is_identity() {
    let (mut machine, x, f) = uniform_two_qubit_setup(0);
    let before = machine.snapshot_amplitudes();
    phase_flip_marked(&mut machine, &x, &f, 1).unwrap();
    phase_flip_marked(&mut machine, &x, &f, 1).unwrap();
    assert!(max_abs_diff(&machine.snapshot_amplitudes(), &before) <= 1e-12);
}

#[test]
fn phase_flip_requires_a_clean_ancilla() {
    let (mut machine, x, f) = uniform_two_qubit_setup(0);
    machine.apply_not(&f).unwrap();
    assert!(matches!(
        phase_flip_marked(&mut machine, &x, &f, 2),
        Err(SearchError::Ancilla)
    ));
}

#[test]
fn diffusion_fixes_the_uniform_state_up_to_phase() {
    let (mut machine, x, _f) = uniform_two_qubit_setup(0);
    let before: Vec<f64> = machine
        .snapshot_amplitudes()
        .iter()
        .map(|a| a.norm_sqr())
        .collect();
    diffuse(&mut machine, &x).unwrap();
    let after: Vec<f64> = machine
        .snapshot_amplitudes()
        .iter()
        .map(|a| a.norm_sqr())
        .collect();
    for (b, a) in before.iter().zip(&after) {
        assert!((b - a).abs() <= 1e-12);
    }
}

#[test]
fn diffusion_twice_is_identity() {
    for seed in 0..20u64 {
        let width = 1 + (seed as usize % 4);
        let start = random_state(seed, width);
        let mut machine = MachineState::from_amplitudes(width, 0, start.clone()).unwrap();
        let q = RegisterHandle::new((0..width).collect());
        diffuse(&mut machine, &q).unwrap();
        diffuse(&mut machine, &q).unwrap();
        assert!(max_abs_diff(&machine.snapshot_amplitudes(), &start) <= 1e-12);
    }
}

#[test]
fn diffusion_of_a_basis_state_matches_inversion_about_the_mean() {
    // 2|s><s| - I applied to |00> gives [-1/2, 1/2, 1/2, 1/2]; the gate
    // realization may differ by one global sign.
    let mut machine = MachineState::new(2, 0).unwrap();
    let q = machine.allocate(2).unwrap();
    diffuse(&mut machine, &q).unwrap();

    let want = matvec(
        &gatemat::inversion_about_mean(2),
        &[re(1.0), re(0.0), re(0.0), re(0.0)],
    );
    assert!(max_abs_diff(&want, &[re(-0.5), re(0.5), re(0.5), re(0.5)]) <= 1e-15);

    let got = machine.snapshot_amplitudes();
    let aligned = gatemat::align_global_phase(&want, &got);
    assert!(max_abs_diff(&aligned, &want) <= 1e-12);
}

#[test]
fn search_for_ten_reports_the_table_row() {
    for seed in 0..10u64 {
        let params = SearchParams::new(10, seed).unwrap();
        let mut machine = MachineState::new(5, seed).unwrap();
        let report = grover_search(&params, &mut machine).unwrap();
        assert_eq!(report.input, 10);
        assert_eq!(report.qubits, 4);
        assert_eq!(report.iterations_per_round, 2);
        assert_eq!(*report.measured_values.last().unwrap(), 10);
        assert_eq!(report.rounds, report.measured_values.len());
        assert_eq!(report.total_iterations, 2 * report.rounds);
    }
}

#[test]
fn search_at_four_states_succeeds_in_one_round_for_every_seed() {
    // N=4, k=1: success probability is exactly sin^2(3 asin(1/2)) = 1.
    for seed in 0..30u64 {
        let params = SearchParams::new(2, seed).unwrap();
        let mut machine = MachineState::new(3, seed).unwrap();
        let report = grover_search(&params, &mut machine).unwrap();
        assert_eq!(report.qubits, 2);
        assert_eq!(report.iterations_per_round, 1);
        assert_eq!(report.measured_values, vec![2]);
        assert_eq!(report.rounds, 1);
        assert_eq!(report.total_iterations, 1);
    }
}

#[test]
fn search_for_one_terminates_despite_coin_flip_rounds() {
    // n=1: single-round success probability is sin^2(3 pi/4) = 1/2, so
    // rounds are geometric; the guard gives failure a vanishing chance.
    for seed in 0..10u64 {
        let params = SearchParams::new(1, seed).unwrap();
        let mut machine = MachineState::new(2, seed).unwrap();
        let report = grover_search(&params, &mut machine).unwrap();
        assert_eq!(report.qubits, 1);
        assert_eq!(report.iterations_per_round, 1);
        assert_eq!(*report.measured_values.last().unwrap(), 1);
    }
}

#[test]
fn round_guard_turns_unlucky_streaks_into_an_error() {
    // Zero allowed rounds always trips the guard.
    let params = SearchParams::new(10, 0).unwrap().with_max_rounds(0);
    let mut machine = MachineState::new(5, 0).unwrap();
    assert!(matches!(
        grover_search(&params, &mut machine),
        Err(SearchError::RoundLimit(0))
    ));

    // With a cap of 1, any seed whose first round misses must error out.
    let mut saw_round_limit = false;
    for seed in 0..200u64 {
        let params = SearchParams::new(1, seed).unwrap().with_max_rounds(1);
        let mut machine = MachineState::new(2, seed).unwrap();
        match grover_search(&params, &mut machine) {
            Ok(report) => assert_eq!(report.rounds, 1),
            Err(SearchError::RoundLimit(1)) => saw_round_limit = true,
            Err(other) => panic!("unexpected error {other:?}"),
        }
    }
    assert!(saw_round_limit, "no seed missed its first round at p = 1/2");
}

#[test]
fn search_needs_room_for_register_plus_ancilla() {
    let params = SearchParams::new(10, 0).unwrap(); // needs 4 + 1 qubits
    let mut machine = MachineState::new(4, 0).unwrap();
    assert!(matches!(
        grover_search(&params, &mut machine),
        Err(SearchError::State(statevec_core::Error::Capacity(_)))
    ));
}

#[test]
fn one_simulated_iteration_matches_the_dense_diffusion_oracle_product() {
    // For n <= 5: run one phase flip + diffusion on (random state (x) |0>
    // ancilla) and compare against the explicit D*O matrix product on the
    // register alone, up to one global phase.
    for n in 1..=5usize {
        for seed in 0..10u64 {
            let target = (seed * 3) % (1 << n) as u64;
            let start = random_state_with_zero_ancilla(seed + 100 * n as u64, n);
            let mut machine = MachineState::from_amplitudes(n + 1, 0, start.clone()).unwrap();
            let x = RegisterHandle::new((0..n).collect());
            let f = RegisterHandle::new(vec![n]);
            phase_flip_marked(&mut machine, &x, &f, target).unwrap();
            diffuse(&mut machine, &x).unwrap();

            let d_oracle = gatemat::matmul(
                &gatemat::inversion_about_mean(n),
                &gatemat::marked_sign_flip(n, target as usize),
            );
            let want = matvec(&d_oracle, &start[..1 << n]);

            let got = machine.snapshot_amplitudes();
            for a in &got[1 << n..] {
                assert!(a.norm() <= 1e-12, "ancilla left |0>: {a}");
            }
            let aligned = gatemat::align_global_phase(&want, &got[..1 << n]);
            assert!(
                max_abs_diff(&aligned, &want) <= 1e-12,
                "n={n} seed={seed} target={target}"
            );
        }
    }
}
