//! A small state-vector quantum machine.
//!
//! The machine holds the full complex amplitude vector over all allocated
//! qubits (2^n amplitudes for n qubits) and offers the gate set needed for
//! amplitude-amplification search: Hadamard, X, multi-controlled X, and a
//! conditional phase, plus partial measurement with collapse and a whole
//! machine reset.
//!
//! Conventions, fixed once and relied on everywhere:
//!
//! * Qubit `i` of a register handle is the bit of weight `2^i` in that
//!   register's integer value (position 0 is least significant).
//! * Allocation appends qubits as the most-significant machine bits, so an
//!   existing state is extended by a tensor product with `|0>`.
//! * Randomness comes from a ChaCha8 stream seeded at construction;
//!   `measure` draws exactly one `f64` from `[0, 1)` per call, regardless
//!   of register width or outcome. Identical seeds and identical operation
//!   sequences give bit-identical measurement sequences.

mod error;
mod hadamard;
mod machine;
mod register;

pub use error::{Error, Result};
pub use hadamard::{hadamard_matrix, MAX_HADAMARD_ORDER};
pub use machine::{MachineState, MeasurementOutcome, MAX_QUBITS};
pub use register::RegisterHandle;

/// Complex coefficient of one basis state.
pub type Amplitude = num_complex::Complex64;
