//! Grover search over a state-vector machine.
//!
//! The pipeline searches for a known integer `target` among the 2^n basis
//! states of an n-qubit register: size the register from the target, put
//! it in uniform superposition, repeat phase-flip + diffusion a fixed
//! number of times, measure, and retry the whole round until the
//! measurement equals the target.
//!
//! Sizing follows two fixed formulas: `qubits = floor(log2 target) + 1`
//! and `iterations = ceil(pi/8 * sqrt(2^qubits))`. The pi/8 constant
//! undershoots the rotation that would maximize the success probability,
//! so single-round success sits roughly between 50% and 91% depending on
//! register width; the repeat-until loop absorbs the misses. The analytic
//! probability `sin^2((2k+1) asin(2^{-n/2}))` is exposed so tests can
//! check the simulated amplitudes against it exactly.

mod error;
mod probe;
mod search;
mod sizing;

pub use error::{Result, SearchError};
pub use probe::{analytic_success_probability, probe, ProbabilityProbe};
pub use search::{
    diffuse, grover_search, phase_flip_marked, query, SearchParams, SearchReport,
    DEFAULT_MAX_ROUNDS,
};
pub use sizing::{iterations_needed, qubits_needed};
