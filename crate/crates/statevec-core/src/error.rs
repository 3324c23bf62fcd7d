use thiserror::Error;

/// Errors raised by machine construction, gate application and measurement.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A qubit budget was violated: machine capacity out of range, or an
    /// allocation/matrix order beyond the supported ceiling.
    #[error("capacity error: {0}")]
    Capacity(String),

    /// A register handle does not fit the machine it was used on.
    #[error("invalid register: {0}")]
    InvalidRegister(String),

    /// Two registers that must be disjoint share a qubit.
    #[error("overlapping registers: {0}")]
    Overlap(String),

    /// The state drifted away from unit norm beyond tolerance.
    #[error("numerical error: {0}")]
    Numerical(String),
}

pub type Result<T> = std::result::Result<T, Error>;
