//! Words over the alphabet `[k] = {0, ..., k-1}`: lexicographic comparison,
//! rotation, complement, cyclic order and necklace counting.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigUint;

use crate::error::{Error, Result};

/// A single symbol from `[k]`, stored as a machine integer.
pub type Letter = u32;

/// Largest accepted alphabet size.
pub const MAX_ALPHABET: Letter = (1 << 31) - 1;

pub(crate) fn validate_alphabet(k: Letter) -> Result<()> {
    if k < 2 {
        return Err(Error::AlphabetTooSmall(k as u64));
    }
    if k > MAX_ALPHABET {
        return Err(Error::InvalidParameter(format!(
            "alphabet size {k} exceeds the maximum {MAX_ALPHABET}"
        )));
    }
    Ok(())
}

/// An immutable word over `[k]`, with letters ordered `0 < 1 < ... < k-1`.
///
/// Words may be empty; operations that are undefined on the empty word
/// return [`Error::EmptyWord`]. Every operation leaves its inputs untouched
/// and returns a fresh value, so words are safe to share across threads.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Word {
    letters: Vec<Letter>,
    k: Letter,
}

impl Word {
    /// Validates `letters` against the alphabet `[k]` and builds a word.
    pub fn new(letters: Vec<Letter>, k: Letter) -> Result<Self> {
        validate_alphabet(k)?;
        for &letter in &letters {
            if letter >= k {
                return Err(Error::LetterOutOfRange {
                    letter: letter as u64,
                    k,
                });
            }
        }
        Ok(Self { letters, k })
    }

    /// Builds a word from letters already known to lie in `[k]`.
    pub(crate) fn from_raw(letters: Vec<Letter>, k: Letter) -> Self {
        debug_assert!(letters.iter().all(|&l| l < k));
        Self { letters, k }
    }

    /// Parses the shared text encoding: a run of decimal digits when
    /// `k <= 10`, comma-separated letter values otherwise. The empty string
    /// is the empty word.
    pub fn parse(text: &str, k: Letter) -> Result<Self> {
        validate_alphabet(k)?;
        if text.is_empty() {
            return Ok(Self::from_raw(Vec::new(), k));
        }
        let mut letters = Vec::new();
        if k <= 10 {
            for ch in text.chars() {
                let digit = ch.to_digit(10).ok_or_else(|| {
                    Error::InvalidParameter(format!("invalid digit {ch:?} in word"))
                })?;
                letters.push(digit);
            }
        } else {
            for part in text.split(',') {
                let value: u64 = part.trim().parse().map_err(|_| {
                    Error::InvalidParameter(format!("invalid letter {part:?} in word"))
                })?;
                if value >= k as u64 {
                    return Err(Error::LetterOutOfRange { letter: value, k });
                }
                letters.push(value as Letter);
            }
        }
        Self::new(letters, k)
    }

    pub fn k(&self) -> Letter {
        self.k
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    /// Three-way lexicographic comparison. A proper prefix precedes all of
    /// its extensions; otherwise the first differing position decides.
    pub fn lex_compare(&self, other: &Word) -> Result<Ordering> {
        if self.k != other.k {
            return Err(Error::AlphabetMismatch {
                left: self.k,
                right: other.k,
            });
        }
        Ok(self.letters.as_slice().cmp(other.letters.as_slice()))
    }

    /// The `i`-fold left rotation. `i` is taken modulo the length and may be
    /// negative.
    pub fn rotate(&self, i: i64) -> Result<Word> {
        if self.is_empty() {
            return Err(Error::EmptyWord);
        }
        let n = self.letters.len();
        let shift = i.rem_euclid(n as i64) as usize;
        let mut letters = Vec::with_capacity(n);
        letters.extend_from_slice(&self.letters[shift..]);
        letters.extend_from_slice(&self.letters[..shift]);
        Ok(Self::from_raw(letters, self.k))
    }

    /// Smallest positive `d` with `rotate(d) == self`; equals the number of
    /// distinct rotations and always divides the length.
    pub fn cyclic_order(&self) -> Result<usize> {
        if self.is_empty() {
            return Err(Error::EmptyWord);
        }
        let n = self.letters.len();
        for d in 1..=n {
            if !n.is_multiple_of(d) {
                continue;
            }
            if (d..n).all(|i| self.letters[i] == self.letters[i - d]) {
                return Ok(d);
            }
        }
        unreachable!("d = n always matches")
    }

    /// The unique primitive word whose power equals `self`.
    pub fn primitive_root(&self) -> Result<Word> {
        let d = self.cyclic_order()?;
        Ok(Self::from_raw(self.letters[..d].to_vec(), self.k))
    }

    /// Letter-wise complement `x -> k-1-x`; an involution that flips the
    /// lexicographic order of equal-length words.
    pub fn complement(&self) -> Word {
        let top = self.k - 1;
        Self::from_raw(self.letters.iter().map(|&l| top - l).collect(), self.k)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.k <= 10 {
            for &l in &self.letters {
                write!(f, "{l}")?;
            }
        } else {
            let mut first = true;
            for &l in &self.letters {
                if !first {
                    f.write_str(",")?;
                }
                write!(f, "{l}")?;
                first = false;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word(\"{}\", k={})", self, self.k)
    }
}

fn divisors(n: u32) -> Vec<u32> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while (d as u64) * (d as u64) <= n as u64 {
        if n.is_multiple_of(d) {
            small.push(d);
            if d != n / d {
                large.push(n / d);
            }
        }
        d += 1;
    }
    large.reverse();
    small.extend(large);
    small
}

fn totient(mut m: u64) -> u64 {
    let mut result = m;
    let mut p = 2;
    while p * p <= m {
        if m.is_multiple_of(p) {
            while m.is_multiple_of(p) {
                m /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if m > 1 {
        result -= result / m;
    }
    result
}

/// Exact number of necklaces (rotation classes) of length-`n` words over
/// `[k]`: `(1/n) * sum over d | n of phi(d) * k^(n/d)`.
pub fn necklace_count(n: u32, k: Letter) -> Result<BigUint> {
    if n == 0 {
        return Err(Error::InvalidParameter(
            "word length must be at least 1".into(),
        ));
    }
    validate_alphabet(k)?;
    let mut sum = BigUint::from(0u32);
    for d in divisors(n) {
        sum += BigUint::from(totient(d as u64)) * BigUint::from(k).pow(n / d);
    }
    let count = &sum / n;
    debug_assert_eq!(&count * n, sum, "the necklace sum is divisible by n");
    Ok(count)
}
