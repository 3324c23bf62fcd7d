use serde::Serialize;
use statevec_core::{MachineState, RegisterHandle};
use std::f64::consts::PI;

use crate::error::{Result, SearchError};
use crate::sizing::{iterations_needed, qubits_needed};

/// Upper bound on repeat-until rounds before the search is declared stuck.
pub const DEFAULT_MAX_ROUNDS: usize = 1000;

const ANCILLA_TOLERANCE: f64 = 1e-9;

/// Everything a search run needs: the target, the derived register width
/// and per-round iteration count, a round guard, and the RNG seed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchParams {
    pub target: u64,
    pub qubits: usize,
    pub iterations: usize,
    pub max_rounds: usize,
    pub seed: u64,
}

impl SearchParams {
    /// Derive the register width and iteration count for `target`.
    pub fn new(target: u64, seed: u64) -> Result<Self> {
        let qubits = qubits_needed(target)?;
        let iterations = iterations_needed(qubits)?;
        Ok(Self {
            target,
            qubits,
            iterations,
            max_rounds: DEFAULT_MAX_ROUNDS,
            seed,
        })
    }

    pub fn with_max_rounds(mut self, max_rounds: usize) -> Self {
        self.max_rounds = max_rounds;
        self
    }
}

/// Structured outcome of one search: one row of the results table.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SearchReport {
    pub input: u64,
    pub qubits: usize,
    #[serde(rename = "iterations")]
    pub iterations_per_round: usize,
    #[serde(rename = "measured")]
    pub measured_values: Vec<u64>,
    pub rounds: usize,
    pub total_iterations: usize,
}

/// Flip the one-qubit ancilla `f` exactly on basis states where `x`
/// encodes `target`, leaving `x` unchanged: X on every zero bit of
/// `target`, a multi-controlled X of `f` on all of `x`, then the same X
/// conjugation again. The sequence is its own inverse.
pub fn query(
    machine: &mut MachineState,
    x: &RegisterHandle,
    f: &RegisterHandle,
    target: u64,
) -> Result<()> {
    if f.width() != 1 {
        return Err(SearchError::State(statevec_core::Error::InvalidRegister(
            format!("ancilla must be one qubit, got width {}", f.width()),
        )));
    }
    if x.overlaps(f) {
        return Err(SearchError::State(statevec_core::Error::Overlap(
            "search register and ancilla share a qubit".into(),
        )));
    }
    if x.width() < 64 && target >> x.width() != 0 {
        return Err(SearchError::Domain(format!(
            "target {target} does not fit in a {}-qubit register",
            x.width()
        )));
    }
    let conjugate = |machine: &mut MachineState| -> Result<()> {
        for pos in 0..x.width() {
            if (target >> pos) & 1 == 0 {
                machine.apply_not(&x.qubit(pos))?;
            }
        }
        Ok(())
    };
    conjugate(machine)?;
    machine.apply_cnot(f, x)?;
    conjugate(machine)?;
    Ok(())
}

/// Multiply by -1 the amplitude of the basis component where `x` encodes
/// `target`: query to mark the ancilla, phase it by pi, query again to
/// uncompute. The ancilla must enter in |0>, verified by a probability
/// check, and leaves in |0>.
pub fn phase_flip_marked(
    machine: &mut MachineState,
    x: &RegisterHandle,
    f: &RegisterHandle,
    target: u64,
) -> Result<()> {
    let p_zero = machine.register_probability(f, 0)?;
    if (p_zero - 1.0).abs() > ANCILLA_TOLERANCE {
        return Err(SearchError::Ancilla);
    }
    query(machine, x, f, target)?;
    machine.apply_cphase(PI, f)?;
    query(machine, x, f, target)?;
    Ok(())
}

/// Inversion about the mean, up to a global phase: H, X, phase-by-pi on
/// all-ones, X, H over the whole register.
pub fn diffuse(machine: &mut MachineState, q: &RegisterHandle) -> Result<()> {
    machine.apply_hadamard(q)?;
    machine.apply_not(q)?;
    machine.apply_cphase(PI, q)?;
    machine.apply_not(q)?;
    machine.apply_hadamard(q)?;
    Ok(())
}

/// Run the full search: allocate the register and ancilla, then repeat
/// rounds of (reset, uniform superposition, `iterations` phase-flip +
/// diffuse steps, measure) until the measurement equals the target or the
/// round guard trips. Every measured value is recorded in order.
pub fn grover_search(params: &SearchParams, machine: &mut MachineState) -> Result<SearchReport> {
    let q = machine.allocate(params.qubits)?;
    let f = machine.allocate(1)?;

    let mut measured_values = Vec::new();
    loop {
        if measured_values.len() >= params.max_rounds {
            return Err(SearchError::RoundLimit(params.max_rounds));
        }
        machine.reset();
        machine.apply_hadamard(&q)?;
        for _ in 0..params.iterations {
            phase_flip_marked(machine, &q, &f, params.target)?;
            diffuse(machine, &q)?;
        }
        let outcome = machine.measure(&q)?;
        measured_values.push(outcome.value);
        if outcome.value == params.target {
            break;
        }
    }
    machine.reset();

    let rounds = measured_values.len();
    Ok(SearchReport {
        input: params.target,
        qubits: params.qubits,
        iterations_per_round: params.iterations,
        measured_values,
        rounds,
        total_iterations: params.iterations * rounds,
    })
}
