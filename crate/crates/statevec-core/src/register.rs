/// An ordered list of machine qubit indices naming a sub-register.
///
/// Position 0 in the handle is the least-significant bit of the register's
/// integer value. Handles are plain data; validity against a machine is
/// checked when they are used.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RegisterHandle {
    indices: Vec<usize>,
}

impl RegisterHandle {
    pub fn new(indices: Vec<usize>) -> Self {
        Self { indices }
    }

    /// Number of qubits in the register.
    pub fn width(&self) -> usize {
        self.indices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.indices.is_empty()
    }

    /// Machine qubit indices, least significant first.
    pub fn indices(&self) -> &[usize] {
        &self.indices
    }

    /// Single-qubit handle for position `pos`.
    ///
    /// Panics if `pos >= width()`, like slice indexing.
    pub fn qubit(&self, pos: usize) -> RegisterHandle {
        RegisterHandle::new(vec![self.indices[pos]])
    }

    /// Whether any qubit is shared with `other`.
    pub fn overlaps(&self, other: &RegisterHandle) -> bool {
        self.indices.iter().any(|i| other.indices.contains(i))
    }

    /// Basis-state mask with a 1 at every qubit of this register.
    pub(crate) fn mask(&self) -> usize {
        self.indices.iter().map(|&q| 1usize << q).sum()
    }

    /// Integer value this register encodes within basis state `basis`.
    pub(crate) fn extract(&self, basis: usize) -> u64 {
        let mut v = 0u64;
        for (pos, &q) in self.indices.iter().enumerate() {
            v |= (((basis >> q) & 1) as u64) << pos;
        }
        v
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn extract_is_little_endian_in_handle_order() {
        // Handle [2, 0]: machine bit 2 is register bit 0.
        let reg = RegisterHandle::new(vec![2, 0]);
        assert_eq!(reg.extract(0b100), 0b01);
        assert_eq!(reg.extract(0b001), 0b10);
        assert_eq!(reg.extract(0b101), 0b11);
    }

    #[test]
    fn overlap_detection() {
        let a = RegisterHandle::new(vec![0, 1]);
        let b = RegisterHandle::new(vec![2]);
        let c = RegisterHandle::new(vec![1, 3]);
        assert!(!a.overlaps(&b));
        assert!(a.overlaps(&c));
    }
}
