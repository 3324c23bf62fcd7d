use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::f64::consts::FRAC_1_SQRT_2;

use crate::error::{Error, Result};
use crate::register::RegisterHandle;

/// Hard ceiling on machine capacity. 2^30 amplitudes of 16 bytes is
/// already 16 GiB; anything larger is out of desk-scale reach.
pub const MAX_QUBITS: usize = 30;

const NORM_TOLERANCE: f64 = 1e-12;
const MEASURE_NORM_TOLERANCE: f64 = 1e-9;

/// Result of measuring a register: the observed integer value and the
/// probability the sampler assigned to it.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MeasurementOutcome {
    /// Little-endian integer read off the measured register bits.
    pub value: u64,
    /// Probability of this outcome at sampling time, in (0, 1].
    pub probability: f64,
}

/// An n-qubit machine as a dense, normalized complex state vector.
///
/// With zero allocated qubits the state is the scalar 1 (the empty tensor
/// product); allocation grows the vector by tensoring `|0>` qubits on as
/// the most-significant bits.
#[derive(Debug, Clone)]
pub struct MachineState {
    amplitudes: Vec<Complex64>,
    allocated: usize,
    max_qubits: usize,
    rng: ChaCha8Rng,
}

impl MachineState {
    /// New machine with the given qubit budget and RNG seed, zero qubits
    /// allocated.
    pub fn new(max_qubits: usize, seed: u64) -> Result<Self> {
        if !(1..=MAX_QUBITS).contains(&max_qubits) {
            return Err(Error::Capacity(format!(
                "max_qubits must be in 1..={MAX_QUBITS}, got {max_qubits}"
            )));
        }
        Ok(Self {
            amplitudes: vec![Complex64::new(1.0, 0.0)],
            allocated: 0,
            max_qubits,
            rng: ChaCha8Rng::seed_from_u64(seed),
        })
    }

    /// Machine pre-loaded with an explicit state vector; the length fixes
    /// the number of allocated qubits. The input must be normalized to
    /// within 1e-9 and is renormalized to machine precision on load.
    pub fn from_amplitudes(
        max_qubits: usize,
        seed: u64,
        amplitudes: Vec<Complex64>,
    ) -> Result<Self> {
        let mut machine = Self::new(max_qubits, seed)?;
        if !amplitudes.len().is_power_of_two() {
            return Err(Error::InvalidRegister(format!(
                "state length {} is not a power of two",
                amplitudes.len()
            )));
        }
        let qubits = amplitudes.len().trailing_zeros() as usize;
        if qubits > max_qubits {
            return Err(Error::Capacity(format!(
                "state of {qubits} qubits exceeds capacity {max_qubits}"
            )));
        }
        let total: f64 = amplitudes.iter().map(|a| a.norm_sqr()).sum();
        if (total - 1.0).abs() > MEASURE_NORM_TOLERANCE {
            return Err(Error::Numerical(format!(
                "input state norm {total} deviates from 1 by more than {MEASURE_NORM_TOLERANCE}"
            )));
        }
        let scale = 1.0 / total.sqrt();
        machine.amplitudes = amplitudes.into_iter().map(|a| a * scale).collect();
        machine.allocated = qubits;
        Ok(machine)
    }

    pub fn allocated_qubits(&self) -> usize {
        self.allocated
    }

    pub fn max_qubits(&self) -> usize {
        self.max_qubits
    }

    /// Sum of squared amplitude magnitudes; 1 up to numerical drift.
    pub fn total_probability(&self) -> f64 {
        self.amplitudes.iter().map(|a| a.norm_sqr()).sum()
    }

    /// Read-only copy of the full amplitude vector. Never perturbs the
    /// state; length is `2^allocated_qubits`.
    pub fn snapshot_amplitudes(&self) -> Vec<Complex64> {
        self.amplitudes.clone()
    }

    /// Append `width` fresh qubits in `|0>` and return their handle,
    /// least significant first.
    pub fn allocate(&mut self, width: usize) -> Result<RegisterHandle> {
        if self.allocated + width > self.max_qubits {
            return Err(Error::Capacity(format!(
                "allocating {width} qubits on top of {} exceeds capacity {}",
                self.allocated, self.max_qubits
            )));
        }
        let indices: Vec<usize> = (self.allocated..self.allocated + width).collect();
        // New qubits are the most-significant bits and start in |0>, so the
        // existing amplitudes keep their indices and the extension is all
        // zeros.
        let new_len = self.amplitudes.len() << width;
        self.amplitudes.resize(new_len, Complex64::new(0.0, 0.0));
        self.allocated += width;
        self.debug_check_norm();
        Ok(RegisterHandle::new(indices))
    }

    /// Hadamard on every qubit of `reg`, in handle order.
    pub fn apply_hadamard(&mut self, reg: &RegisterHandle) -> Result<()> {
        self.check_register(reg)?;
        for &q in reg.indices() {
            self.hadamard_on(q);
        }
        self.debug_check_norm();
        Ok(())
    }

    /// Pauli-X on every qubit of `reg` (a pure basis-index bit flip).
    pub fn apply_not(&mut self, reg: &RegisterHandle) -> Result<()> {
        self.check_register(reg)?;
        for &q in reg.indices() {
            self.x_on(q);
        }
        self.debug_check_norm();
        Ok(())
    }

    /// X on the single `target` qubit, applied exactly on basis states
    /// where every bit of `controls` is 1.
    pub fn apply_cnot(&mut self, target: &RegisterHandle, controls: &RegisterHandle) -> Result<()> {
        self.check_register(target)?;
        self.check_register(controls)?;
        if target.width() != 1 {
            return Err(Error::InvalidRegister(format!(
                "controlled-not target must be one qubit, got width {}",
                target.width()
            )));
        }
        if target.overlaps(controls) {
            return Err(Error::Overlap(
                "controlled-not target appears among the controls".into(),
            ));
        }
        let cmask = controls.mask();
        let tbit = 1usize << target.indices()[0];
        for i in 0..self.amplitudes.len() {
            if i & cmask == cmask && i & tbit == 0 {
                self.amplitudes.swap(i, i | tbit);
            }
        }
        self.debug_check_norm();
        Ok(())
    }

    /// Multiply by `e^{i angle}` the amplitude of every basis state whose
    /// bits in `reg` are all 1.
    pub fn apply_cphase(&mut self, angle: f64, reg: &RegisterHandle) -> Result<()> {
        self.check_register(reg)?;
        let mask = reg.mask();
        let factor = Complex64::from_polar(1.0, angle);
        for (i, a) in self.amplitudes.iter_mut().enumerate() {
            if i & mask == mask {
                *a *= factor;
            }
        }
        self.debug_check_norm();
        Ok(())
    }

    /// Probability that `reg` would read `value`, without measuring.
    pub fn register_probability(&self, reg: &RegisterHandle, value: u64) -> Result<f64> {
        self.check_register(reg)?;
        Ok(self
            .amplitudes
            .iter()
            .enumerate()
            .filter(|(i, _)| reg.extract(*i) == value)
            .map(|(_, a)| a.norm_sqr())
            .sum())
    }

    /// Measure `reg`: sample an outcome from the Born distribution, zero
    /// every inconsistent amplitude and renormalize. Qubits stay
    /// allocated. Consumes exactly one RNG draw.
    pub fn measure(&mut self, reg: &RegisterHandle) -> Result<MeasurementOutcome> {
        self.check_register(reg)?;
        let buckets = 1usize << reg.width();
        let mut masses = vec![0.0f64; buckets];
        for (i, a) in self.amplitudes.iter().enumerate() {
            masses[reg.extract(i) as usize] += a.norm_sqr();
        }
        let total: f64 = masses.iter().sum();
        if (total - 1.0).abs() > MEASURE_NORM_TOLERANCE {
            return Err(Error::Numerical(format!(
                "total probability {total} deviates from 1 by more than {MEASURE_NORM_TOLERANCE}"
            )));
        }

        let u: f64 = self.rng.gen::<f64>() * total;
        let mut value = 0usize;
        let mut cumulative = 0.0f64;
        let mut last_nonzero = None;
        for (v, &m) in masses.iter().enumerate() {
            if m == 0.0 {
                continue;
            }
            last_nonzero = Some(v);
            cumulative += m;
            if u < cumulative {
                value = v;
                break;
            }
        }
        if u >= cumulative {
            // Rounding pushed u past the last bucket boundary.
            value = last_nonzero.expect("total probability is near 1, some mass exists");
        }

        let mass = masses[value];
        let scale = 1.0 / mass.sqrt();
        for (i, a) in self.amplitudes.iter_mut().enumerate() {
            if reg.extract(i) == value as u64 {
                *a *= scale;
            } else {
                *a = Complex64::new(0.0, 0.0);
            }
        }
        self.debug_check_norm();
        Ok(MeasurementOutcome {
            value: value as u64,
            probability: mass / total,
        })
    }

    /// Force every allocated qubit back to `|0...0>`. Allocations are
    /// retained; nothing is measured.
    pub fn reset(&mut self) {
        for a in self.amplitudes.iter_mut() {
            *a = Complex64::new(0.0, 0.0);
        }
        self.amplitudes[0] = Complex64::new(1.0, 0.0);
    }

    fn check_register(&self, reg: &RegisterHandle) -> Result<()> {
        for (pos, &q) in reg.indices().iter().enumerate() {
            if q >= self.allocated {
                return Err(Error::InvalidRegister(format!(
                    "qubit index {q} out of range for {} allocated qubits",
                    self.allocated
                )));
            }
            if reg.indices()[..pos].contains(&q) {
                return Err(Error::InvalidRegister(format!(
                    "duplicate qubit index {q} in register"
                )));
            }
        }
        Ok(())
    }

    fn hadamard_on(&mut self, qubit: usize) {
        let step = 1usize << qubit;
        let amps = &mut self.amplitudes;
        let mut base = 0;
        while base < amps.len() {
            for offset in 0..step {
                let j = base + offset;
                let k = j + step;
                let a = amps[j];
                let b = amps[k];
                amps[j] = (a + b) * FRAC_1_SQRT_2;
                amps[k] = (a - b) * FRAC_1_SQRT_2;
            }
            base += step << 1;
        }
    }

    fn x_on(&mut self, qubit: usize) {
        let step = 1usize << qubit;
        let amps = &mut self.amplitudes;
        let mut base = 0;
        while base < amps.len() {
            for offset in 0..step {
                amps.swap(base + offset, base + offset + step);
            }
            base += step << 1;
        }
    }

    #[inline]
    fn debug_check_norm(&self) {
        #[cfg(debug_assertions)]
        {
            let total = self.total_probability();
            debug_assert!(
                (total - 1.0).abs() <= NORM_TOLERANCE,
                "state norm drifted to {total}"
            );
        }
    }
}
