use crate::error::{Result, SearchError};
use std::f64::consts::FRAC_PI_8;

/// Number of qubits needed to represent `target`: its integer bit length,
/// which equals `floor(log2 target) + 1` for every `target >= 1`.
pub fn qubits_needed(target: u64) -> Result<usize> {
    if target < 1 {
        return Err(SearchError::Domain(
            "target must be at least 1; log2(0) is undefined".into(),
        ));
    }
    Ok((64 - target.leading_zeros()) as usize)
}

/// Iterations per round: `ceil(pi/8 * sqrt(2^qubits))`, evaluated in
/// double precision.
pub fn iterations_needed(qubits: usize) -> Result<usize> {
    if qubits < 1 {
        return Err(SearchError::Domain(
            "register width must be at least 1".into(),
        ));
    }
    let raw = FRAC_PI_8 * 2f64.powi(qubits as i32).sqrt();
    Ok(raw.ceil() as usize)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bit_length_examples() {
        assert_eq!(qubits_needed(1).unwrap(), 1);
        assert_eq!(qubits_needed(2).unwrap(), 2);
        assert_eq!(qubits_needed(10).unwrap(), 4);
        assert_eq!(qubits_needed(2200).unwrap(), 12);
    }

    #[test]
    fn zero_target_is_rejected() {
        assert!(matches!(qubits_needed(0), Err(SearchError::Domain(_))));
        assert!(matches!(iterations_needed(0), Err(SearchError::Domain(_))));
    }

    #[test]
    fn iteration_counts_for_known_widths() {
        assert_eq!(iterations_needed(1).unwrap(), 1);
        assert_eq!(iterations_needed(4).unwrap(), 2);
        assert_eq!(iterations_needed(13).unwrap(), 36);
        // ceil((pi/8) * 128) = ceil(50.265...) = 51.
        assert_eq!(iterations_needed(14).unwrap(), 51);
    }

    #[test]
    fn bit_length_matches_floating_log_formula() {
        for target in 1u64..=100_000 {
            let float_form = ((target as f64).log2().floor() as usize) + 1;
            assert_eq!(
                qubits_needed(target).unwrap(),
                float_form,
                "mismatch at {target}"
            );
        }
    }
}
