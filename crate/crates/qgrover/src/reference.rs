/// One row of the published reference results this tool reproduces:
/// register width and per-round iteration count for each searched input.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ReferenceRow {
    pub input: u64,
    pub qubits: usize,
    pub iterations: usize,
}

/// The reference results table. For input 9999 the listed iteration count
/// (54) disagrees with the sizing formula, which gives
/// `ceil(pi/8 * sqrt(2^14)) = 51`; the formula is what this tool computes
/// and `table` prints a footnote when its output deviates from a row here.
pub const REFERENCE_RESULTS: &[ReferenceRow] = &[
    ReferenceRow {
        input: 10,
        qubits: 4,
        iterations: 2,
    },
    ReferenceRow {
        input: 30,
        qubits: 5,
        iterations: 3,
    },
    ReferenceRow {
        input: 175,
        qubits: 8,
        iterations: 7,
    },
    ReferenceRow {
        input: 500,
        qubits: 9,
        iterations: 9,
    },
    ReferenceRow {
        input: 1000,
        qubits: 10,
        iterations: 13,
    },
    ReferenceRow {
        input: 1676,
        qubits: 11,
        iterations: 18,
    },
    ReferenceRow {
        input: 2000,
        qubits: 11,
        iterations: 18,
    },
    ReferenceRow {
        input: 2200,
        qubits: 12,
        iterations: 26,
    },
    ReferenceRow {
        input: 8111,
        qubits: 13,
        iterations: 36,
    },
    ReferenceRow {
        input: 9999,
        qubits: 14,
        iterations: 54,
    },
];

pub fn reference_row(input: u64) -> Option<&'static ReferenceRow> {
    REFERENCE_RESULTS.iter().find(|row| row.input == input)
}
