use grover_engine::{
    analytic_success_probability, iterations_needed, probe, qubits_needed, SearchError,
};
use statevec_core::MachineState;

#[test]
fn published_table_sizing_is_reproduced() {
    // (input, qubits, iterations) for the nine rows where the published
    // table and the sizing formulas agree.
    let rows: [(u64, usize, usize); 9] = [
        (10, 4, 2),
        (30, 5, 3),
        (175, 8, 7),
        (500, 9, 9),
        (1000, 10, 13),
        (1676, 11, 18),
        (2000, 11, 18),
        (2200, 12, 26),
        (8111, 13, 36),
    ];
    for (input, qubits, iterations) in rows {
        assert_eq!(qubits_needed(input).unwrap(), qubits, "input {input}");
        assert_eq!(
            iterations_needed(qubits).unwrap(),
            iterations,
            "input {input}"
        );
    }
}

#[test]
fn simulated_probability_tracks_the_analytic_curve() {
    for n in 1..=10usize {
        let max_k = iterations_needed(n).unwrap();
        for k in 0..=max_k {
            let target = (1u64 << n) - 1;
            let mut machine = MachineState::new(n + 1, 0).unwrap();
            let result = probe(n, target, k, &mut machine).unwrap();
            let delta = (result.simulated_p - result.analytic_p).abs();
            assert!(
                delta <= 1e-9,
                "n={n} k={k}: |{} - {}| = {delta}",
                result.simulated_p,
                result.analytic_p
            );
        }
    }
}

#[test]
fn probe_at_four_qubits_two_iterations() {
    // sin^2(5 asin(1/4)) = (61/64)^2 = 0.908447265625 exactly.
    let mut machine = MachineState::new(5, 0).unwrap();
    let result = probe(4, 10, 2, &mut machine).unwrap();
    assert!((result.analytic_p - 0.908447265625).abs() <= 1e-12);
    assert!((result.simulated_p - result.analytic_p).abs() <= 1e-9);
}

#[test]
fn probe_with_no_iterations_reads_the_uniform_weight() {
    let mut machine = MachineState::new(2, 0).unwrap();
    let result = probe(1, 1, 0, &mut machine).unwrap();
    assert!((result.simulated_p - 0.5).abs() <= 1e-12);
}

#[test]
fn probe_explains_the_two_round_run_at_nine_qubits() {
    // After the formula's 9 iterations on 9 qubits the success chance is
    // only sin^2(19 asin(2^{-4.5})) = 0.55445..., which is why searches at
    // this width often need a second round.
    let mut machine = MachineState::new(10, 0).unwrap();
    let result = probe(9, 500, 9, &mut machine).unwrap();
    assert!((result.analytic_p - 0.5544564766261539).abs() <= 1e-12);
    assert!((result.simulated_p - result.analytic_p).abs() <= 1e-9);
}

#[test]
fn probe_rejects_targets_wider_than_the_register() {
    let mut machine = MachineState::new(3, 0).unwrap();
    assert!(matches!(
        probe(2, 5, 1, &mut machine),
        Err(SearchError::Domain(_))
    ));
}

#[test]
fn analytic_probability_spot_values() {
    assert!((analytic_success_probability(2, 1) - 1.0).abs() < 1e-15);
    assert!((analytic_success_probability(2, 0) - 0.25).abs() < 1e-15);
    assert!((analytic_success_probability(1, 1) - 0.5).abs() < 1e-12);
}
