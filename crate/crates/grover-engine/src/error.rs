use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SearchError {
    /// An argument is outside the formulas' domain (target < 1, zero-width
    /// register, target not representable in the register).
    #[error("domain error: {0}")]
    Domain(String),

    /// The repeat-until loop hit its round guard without measuring the
    /// target. With a sound machine the chance of r consecutive misses
    /// decays geometrically, so this signals a pathological RNG or a bug.
    #[error("round limit of {0} reached without measuring the target")]
    RoundLimit(usize),

    /// The ancilla was not in |0> when a phase flip was requested.
    #[error("ancilla register is not in |0> before the phase flip")]
    Ancilla,

    /// Error propagated from the underlying machine.
    #[error(transparent)]
    State(#[from] statevec_core::Error),
}

pub type Result<T> = std::result::Result<T, SearchError>;
