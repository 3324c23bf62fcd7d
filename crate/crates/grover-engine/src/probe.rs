use statevec_core::MachineState;

use crate::error::{Result, SearchError};
use crate::search::{diffuse, phase_flip_marked};

/// Analytic vs simulated success probability after `k` iterations on an
/// `n`-qubit register.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ProbabilityProbe {
    pub n: usize,
    pub k: usize,
    pub analytic_p: f64,
    pub simulated_p: f64,
}

/// Closed-form success probability of measuring the single marked state
/// after `k` iterations on `n` qubits: `sin^2((2k+1) asin(2^{-n/2}))`.
pub fn analytic_success_probability(n: usize, k: usize) -> f64 {
    let theta = 2f64.powf(-(n as f64) / 2.0).asin();
    ((2 * k + 1) as f64 * theta).sin().powi(2)
}

/// Run `k` iterations without measuring and read the marked-state
/// probability straight off the amplitudes, paired with the analytic
/// value.
pub fn probe(
    n: usize,
    target: u64,
    k: usize,
    machine: &mut MachineState,
) -> Result<ProbabilityProbe> {
    if n < 1 {
        return Err(SearchError::Domain(
            "register width must be at least 1".into(),
        ));
    }
    if n < 64 && target >> n != 0 {
        return Err(SearchError::Domain(format!(
            "target {target} does not fit in a {n}-qubit register"
        )));
    }
    let q = machine.allocate(n)?;
    let f = machine.allocate(1)?;

    machine.reset();
    machine.apply_hadamard(&q)?;
    for _ in 0..k {
        phase_flip_marked(machine, &q, &f, target)?;
        diffuse(machine, &q)?;
    }

    // The ancilla and anything allocated before q are in |0>, so the
    // marked component sits at the basis index built from q's bits alone.
    let mut index = 0usize;
    for (pos, &qubit) in q.indices().iter().enumerate() {
        if (target >> pos) & 1 == 1 {
            index |= 1 << qubit;
        }
    }
    let simulated_p = machine.snapshot_amplitudes()[index].norm_sqr();
    machine.reset();

    Ok(ProbabilityProbe {
        n,
        k,
        analytic_p: analytic_success_probability(n, k),
        simulated_p,
    })
}
