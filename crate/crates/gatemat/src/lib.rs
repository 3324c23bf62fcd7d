//! Dense reference matrices for small quantum registers.
//!
//! Everything here builds explicit `2^n x 2^n` matrices and multiplies them
//! out, with no shortcuts. It is deliberately independent of the amplitude
//! kernels it is used to verify: matrices are assembled from Kronecker
//! products and basis-state permutations only. Intended for test code; the
//! cost is exponential in `n` by construction.

// Index loops mirror the textbook matrix formulas.
#![allow(clippy::needless_range_loop)]

use num_complex::Complex64;

/// Row-major dense complex matrix.
pub type CMat = Vec<Vec<Complex64>>;

const FRAC_1_SQRT_2: f64 = std::f64::consts::FRAC_1_SQRT_2;

fn c(re: f64) -> Complex64 {
    Complex64::new(re, 0.0)
}

pub fn zeros(rows: usize, cols: usize) -> CMat {
    vec![vec![Complex64::new(0.0, 0.0); cols]; rows]
}

pub fn identity(dim: usize) -> CMat {
    let mut m = zeros(dim, dim);
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = c(1.0);
    }
    m
}

/// The 2x2 Hadamard matrix (1/sqrt(2)) [[1, 1], [1, -1]].
pub fn hadamard_2x2() -> CMat {
    vec![
        vec![c(FRAC_1_SQRT_2), c(FRAC_1_SQRT_2)],
        vec![c(FRAC_1_SQRT_2), c(-FRAC_1_SQRT_2)],
    ]
}

/// The 2x2 Pauli-X matrix.
pub fn pauli_x_2x2() -> CMat {
    vec![vec![c(0.0), c(1.0)], vec![c(1.0), c(0.0)]]
}

/// Kronecker product `a (x) b`.
pub fn kron(a: &CMat, b: &CMat) -> CMat {
    let (ar, ac) = (a.len(), a[0].len());
    let (br, bc) = (b.len(), b[0].len());
    let mut out = zeros(ar * br, ac * bc);
    for i in 0..ar {
        for j in 0..ac {
            for k in 0..br {
                for l in 0..bc {
                    out[i * br + k][j * bc + l] = a[i][j] * b[k][l];
                }
            }
        }
    }
    out
}

pub fn matmul(a: &CMat, b: &CMat) -> CMat {
    let (ar, ac) = (a.len(), a[0].len());
    let bc = b[0].len();
    assert_eq!(ac, b.len(), "inner dimensions must agree");
    let mut out = zeros(ar, bc);
    for i in 0..ar {
        for k in 0..ac {
            let aik = a[i][k];
            for j in 0..bc {
                out[i][j] += aik * b[k][j];
            }
        }
    }
    out
}

pub fn matvec(m: &CMat, v: &[Complex64]) -> Vec<Complex64> {
    assert_eq!(m[0].len(), v.len(), "dimensions must agree");
    m.iter()
        .map(|row| row.iter().zip(v).map(|(a, b)| a * b).sum())
        .collect()
}

/// Lift a 2x2 gate onto qubit `target` of an `n`-qubit register.
///
/// Qubit 0 is the least-significant bit of the basis index, so the full
/// operator is `I (x) ... (x) g (x) ... (x) I` with `g` in slot `target`
/// counted from the right.
pub fn single_qubit_gate(n: usize, target: usize, gate: &CMat) -> CMat {
    assert!(target < n);
    let mut m = identity(1);
    for q in 0..n {
        let factor = if q == target {
            gate.clone()
        } else {
            identity(2)
        };
        m = kron(&factor, &m);
    }
    m
}

/// Permutation matrix for an X on `target` conditioned on every bit of
/// `controls` being 1.
pub fn controlled_not(n: usize, target: usize, controls: &[usize]) -> CMat {
    let dim = 1usize << n;
    let cmask: usize = controls.iter().map(|&q| 1usize << q).sum();
    let tbit = 1usize << target;
    let mut m = zeros(dim, dim);
    for col in 0..dim {
        let row = if col & cmask == cmask {
            col ^ tbit
        } else {
            col
        };
        m[row][col] = c(1.0);
    }
    m
}

/// Diagonal matrix multiplying by `e^{i angle}` every basis state whose
/// bits in `qubits` are all 1.
pub fn phase_on_all_ones(n: usize, qubits: &[usize], angle: f64) -> CMat {
    let dim = 1usize << n;
    let mask: usize = qubits.iter().map(|&q| 1usize << q).sum();
    let factor = Complex64::from_polar(1.0, angle);
    let mut m = zeros(dim, dim);
    for i in 0..dim {
        m[i][i] = if i & mask == mask { factor } else { c(1.0) };
    }
    m
}

/// Hadamard on every qubit of an `n`-qubit register: `H^{(x) n}`.
pub fn hadamard_all(n: usize) -> CMat {
    let h = hadamard_2x2();
    let mut m = identity(1);
    for _ in 0..n {
        m = kron(&h, &m);
    }
    m
}

/// The inversion-about-the-mean operator `2|s><s| - I` on `n` qubits,
/// where `|s>` is the uniform superposition: entries `2/N - delta_ij`.
pub fn inversion_about_mean(n: usize) -> CMat {
    let dim = 1usize << n;
    let off = 2.0 / dim as f64;
    let mut m = zeros(dim, dim);
    for i in 0..dim {
        for j in 0..dim {
            m[i][j] = c(if i == j { off - 1.0 } else { off });
        }
    }
    m
}

/// Diagonal sign-flip oracle: -1 on the marked basis state, +1 elsewhere.
pub fn marked_sign_flip(n: usize, marked: usize) -> CMat {
    let dim = 1usize << n;
    assert!(marked < dim);
    let mut m = identity(dim);
    m[marked][marked] = c(-1.0);
    m
}

/// Largest elementwise absolute difference between two vectors.
pub fn max_abs_diff(a: &[Complex64], b: &[Complex64]) -> f64 {
    assert_eq!(a.len(), b.len());
    a.iter()
        .zip(b)
        .map(|(x, y)| (x - y).norm())
        .fold(0.0, f64::max)
}

/// Rescale `v` by the unit phase that best aligns it with `reference`,
/// estimated from the largest-magnitude component of `reference`.
///
/// Returns `v` unchanged when no sensible phase can be estimated (zero
/// vectors), which makes a later comparison fail loudly instead of
/// silently passing.
pub fn align_global_phase(reference: &[Complex64], v: &[Complex64]) -> Vec<Complex64> {
    assert_eq!(reference.len(), v.len());
    let pivot = (0..reference.len())
        .max_by(|&i, &j| {
            reference[i]
                .norm_sqr()
                .partial_cmp(&reference[j].norm_sqr())
                .unwrap()
        })
        .unwrap();
    let num = reference[pivot];
    let den = v[pivot];
    if den.norm_sqr() == 0.0 || num.norm_sqr() == 0.0 {
        return v.to_vec();
    }
    let phase = (num / den) / (num / den).norm();
    v.iter().map(|a| a * phase).collect()
}
