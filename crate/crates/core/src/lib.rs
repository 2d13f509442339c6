//! Prefer-min and prefer-max `(n, k)` De Bruijn sequences through a shift
//! rule that computes each successor state in O(n) time and memory, for any
//! alphabet size `k >= 2`.
//!
//! The crate is organized around the machinery the rule is built on:
//!
//! - [`words`]: words over `[k] = {0, ..., k-1}`, rotation, complement,
//!   cyclic order and necklace counting;
//! - [`lyndon`]: Duval's linear-time Chen-Fox-Lyndon factorization and the
//!   expanded-Lyndon / pre-necklace / fractional-power predicates;
//! - [`shiftrule`]: the necklace-head predicate and the successor functions
//!   [`next_min`] / [`next_max`];
//! - [`generator`]: lazy letter streams ([`fsr_stream`], [`fkm_sequence`])
//!   and the window verifier [`verify_debruijn`];
//! - [`oracles`]: slow definition-literal references used by the test suites
//!   and the verify command.
//!
//! ```
//! use dbseq::{fsr_stream, SequenceOrder};
//!
//! let letters: Vec<u32> = fsr_stream(2, 3, SequenceOrder::PreferMin)
//!     .unwrap()
//!     .take(9)
//!     .collect();
//! assert_eq!(letters, [0, 0, 1, 0, 2, 1, 1, 2, 2]);
//! ```

mod bits;
pub mod error;
pub mod generator;
pub mod lyndon;
pub mod ops;
pub mod oracles;
pub mod shiftrule;
pub mod words;

pub use error::{Error, Result};
pub use generator::{
    fkm_sequence, fsr_stream, sequence_length, verify_debruijn, verify_debruijn_with_cap,
    FkmStream, FsrStream, VerificationReport,
};
pub use lyndon::{
    cfl_factorize, fractional_power_decompose, is_expanded_lyndon, is_lyndon, is_prenecklace,
    CflFactorization, FractionalPower,
};
pub use oracles::{greedy_sequence, greedy_sequence_with_cap, SequenceOrder, DEFAULT_CAP};
pub use shiftrule::{head, next_max, next_min, next_min_in_place, ShiftScratch};
pub use words::{necklace_count, Letter, Word, MAX_ALPHABET};
