use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Seeded pseudo-random normalized state over `width` qubits.
pub fn random_state(seed: u64, width: usize) -> Vec<Complex64> {
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

/// Random `width`-qubit register state with a fresh `|0>` ancilla tensored
/// on as the most-significant qubit.
pub fn random_state_with_zero_ancilla(seed: u64, width: usize) -> Vec<Complex64> {
    let mut v = random_state(seed, width);
    v.resize(1 << (width + 1), Complex64::new(0.0, 0.0));
    v
}
