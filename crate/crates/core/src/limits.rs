//! Process-wide resource ceiling for state vectors.

use core::sync::atomic::{AtomicUsize, Ordering};

/// Default ceiling: `2^24` complex amplitudes, about 256 MB.
pub const DEFAULT_MAX_QUBITS: usize = 24;

/// Hard ceiling independent of configuration; basis indices are `u64` and
/// table sizes must fit in memory addressing.
pub const ABSOLUTE_MAX_QUBITS: usize = 40;

static MAX_QUBITS: AtomicUsize = AtomicUsize::new(DEFAULT_MAX_QUBITS);

/// Current state-size ceiling in qubits.
pub fn max_qubits() -> usize {
    MAX_QUBITS.load(Ordering::Relaxed)
}

/// Overrides the ceiling, clamped to `1..=ABSOLUTE_MAX_QUBITS`. Returns the
/// value actually stored.
pub fn set_max_qubits(n: usize) -> usize {
    let n = n.clamp(1, ABSOLUTE_MAX_QUBITS);
    MAX_QUBITS.store(n, Ordering::Relaxed);
    n
}
