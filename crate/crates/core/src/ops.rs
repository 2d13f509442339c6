//! Thread-local tally of letter-level operations (comparisons plus reads and
//! writes of individual letters). The complexity tests use it to check the
//! linear-time bounds without leaning on wall-clock measurements alone.

use std::cell::Cell;

thread_local! {
    static TALLY: Cell<u64> = const { Cell::new(0) };
}

/// Resets the current thread's tally to zero.
pub fn reset() {
    TALLY.with(|c| c.set(0));
}

/// Letter operations recorded on the current thread since the last reset.
pub fn count() -> u64 {
    TALLY.with(|c| c.get())
}

#[inline]
pub(crate) fn add(n: u64) {
    TALLY.with(|c| c.set(c.get().wrapping_add(n)));
}
