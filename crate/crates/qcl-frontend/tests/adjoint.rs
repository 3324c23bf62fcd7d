use gatemat::max_abs_diff;
use num_complex::Complex64;
use qcl_frontend::{parse_source, Interpreter, RuntimeError, Value};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use statevec_core::{MachineState, RegisterHandle};

const LISTING: &str = include_str!("../../../programs/SimulasiGrover.qcl");

fn random_state(seed: u64, width: usize) -> Vec<Complex64> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut v: Vec<Complex64> = (0..1usize << width)
        .map(|_| Complex64::new(rng.gen::<f64>() - 0.5, rng.gen::<f64>() - 0.5))
        .collect();
    let norm = v.iter().map(|a| a.norm_sqr()).sum::<f64>().sqrt();
    for a in &mut v {
        *a /= norm;
    }
    v
}

#[test]
fn inverted_query_after_query_is_the_identity_on_random_states() {
    let program = parse_source(LISTING).unwrap();
    for seed in 0..20u64 {
        let start = random_state(seed, 5);
        let mut machine = MachineState::from_amplitudes(5, 0, start.clone()).unwrap();
        let x = RegisterHandle::new(vec![0, 1, 2, 3]);
        let f = RegisterHandle::new(vec![4]);
        let target = (seed % 16) as i64;

        let mut interp = Interpreter::new(&program, &mut machine);
        let args = || {
            vec![
                Value::Register(x.clone()),
                Value::Register(f.clone()),
                Value::Int(target),
            ]
        };
        interp.call_procedure("query", args(), false).unwrap();
        interp.call_procedure("query", args(), true).unwrap();
        assert!(
            max_abs_diff(&machine.snapshot_amplitudes(), &start) <= 1e-12,
            "seed {seed}"
        );
    }
}

#[test]
fn inverted_hadamard_is_exactly_the_hadamard() {
    let program = parse_source(LISTING).unwrap();
    let start = random_state(7, 3);

    let run = |inverted: bool| -> Vec<Complex64> {
        let mut machine = MachineState::from_amplitudes(3, 0, start.clone()).unwrap();
        let q = RegisterHandle::new(vec![0, 1, 2]);
        let mut interp = Interpreter::new(&program, &mut machine);
        interp
            .call_procedure("H", vec![Value::Register(q)], inverted)
            .unwrap();
        machine.snapshot_amplitudes()
    };

    // Bit-for-bit equal: the adjoint of H is realized as H itself.
    assert_eq!(run(false), run(true));
}

#[test]
fn inverting_the_diffusion_procedure_reverses_it() {
    let program = parse_source(LISTING).unwrap();
    for seed in 0..10u64 {
        let start = random_state(seed + 50, 4);
        let mut machine = MachineState::from_amplitudes(4, 0, start.clone()).unwrap();
        let q = RegisterHandle::new(vec![0, 1, 2, 3]);
        let mut interp = Interpreter::new(&program, &mut machine);
        interp
            .call_procedure("diffusi", vec![Value::Register(q.clone())], false)
            .unwrap();
        interp
            .call_procedure("diffusi", vec![Value::Register(q)], true)
            .unwrap();
        assert!(max_abs_diff(&machine.snapshot_amplitudes(), &start) <= 1e-12);
    }
}

#[test]
fn inverting_a_procedure_with_phases_replays_them_negated() {
    let program = parse_source(
        "procedure p(qureg q){ H(q[0]); CPhase(pi/3,q); CNot(q[1],q[0]); CPhase(pi/5,q); }",
    )
    .unwrap();
    for seed in 0..10u64 {
        let start = random_state(seed + 9, 2);
        let mut machine = MachineState::from_amplitudes(2, 0, start.clone()).unwrap();
        let q = RegisterHandle::new(vec![0, 1]);
        let mut interp = Interpreter::new(&program, &mut machine);
        interp
            .call_procedure("p", vec![Value::Register(q.clone())], false)
            .unwrap();
        interp
            .call_procedure("p", vec![Value::Register(q)], true)
            .unwrap();
        assert!(max_abs_diff(&machine.snapshot_amplitudes(), &start) <= 1e-12);
    }
}

#[test]
fn non_unitary_statements_cannot_be_inverted() {
    let cases = [
        ("procedure p(qureg q){ int m; measure q,m; }", "measure"),
        ("procedure p(qureg q){ reset; }", "reset"),
        ("procedure p(qureg q){ int x; input \"x:\",x; }", "input"),
        ("procedure p(qureg q){ print \"hi\"; }", "print"),
        (
            "procedure p(qureg q){ qureg r[1]; H(r); }",
            "qureg allocation",
        ),
    ];
    for (source, what) in cases {
        let program = parse_source(source).unwrap();
        let mut machine = MachineState::new(3, 0).unwrap();
        let q = machine.allocate(1).unwrap();
        let mut interp = Interpreter::new(&program, &mut machine).with_input_feed(vec![1]);
        let err = interp
            .call_procedure("p", vec![Value::Register(q)], true)
            .unwrap_err();
        assert_eq!(
            err,
            RuntimeError::NonUnitaryInverse(what.into()),
            "{source}"
        );
    }
}

#[test]
fn forward_calls_of_those_same_procedures_still_work() {
    let program = parse_source("procedure p(qureg q){ int m; measure q,m; print m; }").unwrap();
    let mut machine = MachineState::new(1, 0).unwrap();
    let q = machine.allocate(1).unwrap();
    let mut interp = Interpreter::new(&program, &mut machine);
    interp
        .call_procedure("p", vec![Value::Register(q)], false)
        .unwrap();
    assert_eq!(interp.finish().output, vec!["0"]);
}
