use thiserror::Error;

/// Errors shared by every module of the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Alphabets need at least two letters.
    #[error("alphabet size must be at least 2, got {0}")]
    AlphabetTooSmall(u64),

    /// A letter value does not fit the alphabet.
    #[error("letter {letter} out of range for alphabet [{k}]")]
    LetterOutOfRange { letter: u64, k: u32 },

    /// Two words over different alphabets were combined.
    #[error("alphabet mismatch: [{left}] vs [{right}]")]
    AlphabetMismatch { left: u32, right: u32 },

    /// The operation is undefined on the empty word.
    #[error("operation undefined on the empty word")]
    EmptyWord,

    /// A parameter failed validation.
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    /// The job would materialize more state than the configured cap allows.
    #[error("job of size {required} exceeds cap {cap}")]
    CapExceeded { required: u128, cap: u128 },

    /// The word is not a fractional power of a Lyndon word.
    #[error("word is not a pre-necklace")]
    NotPreNecklace,

    /// A sequence has the wrong length for the requested order.
    #[error("sequence length {actual} does not match k^n = {expected}")]
    LengthMismatch { expected: u128, actual: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
