use crate::error::{Error, Result};
use std::f64::consts::FRAC_1_SQRT_2;

/// Largest order accepted by [`hadamard_matrix`]; 2^10 x 2^10 is plenty
/// for a verification oracle.
pub const MAX_HADAMARD_ORDER: usize = 10;

/// The 2^m x 2^m Walsh-Hadamard matrix, built by the recursive doubling
///
/// ```text
/// H_0 = [1],   H_m = (1/sqrt(2)) [[H_{m-1},  H_{m-1}],
///                                 [H_{m-1}, -H_{m-1}]]
/// ```
///
/// so entry (k, n) equals `2^{-m/2} * (-1)^{k.n}` with `k.n` the bitwise
/// dot product. This is a reference construction used to cross-check the
/// in-place Hadamard kernel, not a fast transform.
pub fn hadamard_matrix(m: usize) -> Result<Vec<Vec<f64>>> {
    if m > MAX_HADAMARD_ORDER {
        return Err(Error::Capacity(format!(
            "hadamard_matrix order {m} exceeds ceiling {MAX_HADAMARD_ORDER}"
        )));
    }
    let mut h = vec![vec![1.0f64]];
    for _ in 0..m {
        let dim = h.len();
        let mut next = vec![vec![0.0f64; dim * 2]; dim * 2];
        for r in 0..dim {
            for c in 0..dim {
                let v = h[r][c] * FRAC_1_SQRT_2;
                next[r][c] = v;
                next[r][c + dim] = v;
                next[r + dim][c] = v;
                next[r + dim][c + dim] = -v;
            }
        }
        h = next;
    }
    Ok(h)
}
