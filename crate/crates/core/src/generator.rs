//! Streaming production of the sequences and the De Bruijn window verifier.
//!
//! Two independent streaming routes exist on purpose: [`fsr_stream`] walks
//! the shift rule one state at a time in O(n) memory, while
//! [`fkm_sequence`] emits the same letters in one pass as a concatenation of
//! the primitive roots of successive expanded Lyndon words. Their outputs
//! are identical letter for letter.

use std::fmt;

use crate::bits::BitSet;
use crate::error::{Error, Result};
use crate::ops;
use crate::oracles::{SequenceOrder, DEFAULT_CAP};
use crate::shiftrule::{next_letter_min, ShiftScratch};
use crate::words::{validate_alphabet, Letter, Word};

/// `k^n` as a 128-bit integer, or `None` when even that overflows.
pub fn sequence_length(n: u32, k: Letter) -> Option<u128> {
    (k as u128).checked_pow(n)
}

fn validate_order_n(n: u32) -> Result<()> {
    if n == 0 {
        return Err(Error::InvalidParameter("order n must be at least 1".into()));
    }
    Ok(())
}

/// Cursor over the register-generated sequence. Yields letters lazily at
/// O(n) work apiece and wraps around after a full period of `k^n` letters,
/// so callers may keep pulling past the end.
#[derive(Debug)]
pub struct FsrStream {
    n: usize,
    k: Letter,
    order: SequenceOrder,
    // State of the underlying prefer-min register; for the prefer-max order
    // the state and emitted letters are complemented on the way out.
    state: Vec<Letter>,
    emitted: u128,
    scratch: ShiftScratch,
}

/// Opens a cursor at the start of the `(n, k)` sequence in `order`.
pub fn fsr_stream(n: u32, k: Letter, order: SequenceOrder) -> Result<FsrStream> {
    validate_alphabet(k)?;
    validate_order_n(n)?;
    Ok(FsrStream {
        n: n as usize,
        k,
        order,
        state: vec![0; n as usize],
        emitted: 0,
        scratch: ShiftScratch::new(),
    })
}

impl FsrStream {
    pub fn n(&self) -> u32 {
        self.n as u32
    }

    pub fn k(&self) -> Letter {
        self.k
    }

    pub fn order(&self) -> SequenceOrder {
        self.order
    }

    /// Letters produced so far.
    pub fn emitted(&self) -> u128 {
        self.emitted
    }

    /// Current register content, in the requested order's letters.
    pub fn state(&self) -> Word {
        let word = Word::from_raw(self.state.clone(), self.k);
        match self.order {
            SequenceOrder::PreferMin => word,
            SequenceOrder::PreferMax => word.complement(),
        }
    }

    /// The period `k^n`, when it fits in 128 bits.
    pub fn period(&self) -> Option<u128> {
        sequence_length(self.n as u32, self.k)
    }
}

impl Iterator for FsrStream {
    type Item = Letter;

    fn next(&mut self) -> Option<Letter> {
        let out = self.state[0];
        let fed = next_letter_min(&self.state, self.k, &mut self.scratch);
        self.state.rotate_left(1);
        *self.state.last_mut().unwrap() = fed;
        ops::add(self.n as u64 + 1);
        self.emitted += 1;
        Some(match self.order {
            SequenceOrder::PreferMin => out,
            SequenceOrder::PreferMax => self.k - 1 - out,
        })
    }
}

/// One-pass generator of the whole sequence as a concatenation of the
/// primitive roots of successive expanded Lyndon words. Finite: exactly
/// `k^n` letters, in O(`k^n`) total letter operations.
#[derive(Debug)]
pub struct FkmStream {
    n: usize,
    k: Letter,
    order: SequenceOrder,
    word: Vec<Letter>,
    pos: usize,
    emit_len: usize,
    emitted: u128,
    done: bool,
}

/// Opens the concatenation stream for the `(n, k)` sequence in `order`.
pub fn fkm_sequence(n: u32, k: Letter, order: SequenceOrder) -> Result<FkmStream> {
    validate_alphabet(k)?;
    validate_order_n(n)?;
    Ok(FkmStream {
        n: n as usize,
        k,
        order,
        word: vec![0],
        pos: 0,
        emit_len: 1,
        emitted: 0,
        done: false,
    })
}

impl FkmStream {
    /// Letters produced so far.
    pub fn emitted(&self) -> u128 {
        self.emitted
    }

    // Successor step: pad the current word to a fractional power of itself
    // of length n, drop the trailing run of top letters, bump the last
    // letter. The result is the next Lyndon word of length at most n; it is
    // emitted only when its length divides n.
    fn advance(&mut self) {
        let len = self.word.len();
        for i in len..self.n {
            let repeated = self.word[i - len];
            self.word.push(repeated);
        }
        let mut work = (self.n - len) as u64;
        let top = self.k - 1;
        while self.word.last() == Some(&top) {
            self.word.pop();
            work += 1;
        }
        ops::add(work + 1);
        match self.word.last_mut() {
            None => self.done = true,
            Some(last) => {
                *last += 1;
                self.emit_len = if self.n.is_multiple_of(self.word.len()) {
                    self.word.len()
                } else {
                    0
                };
                self.pos = 0;
            }
        }
    }
}

impl Iterator for FkmStream {
    type Item = Letter;

    fn next(&mut self) -> Option<Letter> {
        loop {
            if self.done {
                return None;
            }
            if self.pos < self.emit_len {
                let letter = self.word[self.pos];
                self.pos += 1;
                self.emitted += 1;
                ops::add(1);
                return Some(match self.order {
                    SequenceOrder::PreferMin => letter,
                    SequenceOrder::PreferMax => self.k - 1 - letter,
                });
            }
            self.advance();
        }
    }
}

/// Outcome of a De Bruijn window check.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum VerificationReport {
    /// All `k^n` cyclic windows are distinct.
    Valid,
    /// Two positions carry the same cyclic n-window.
    DuplicateWindow { first: u64, second: u64 },
}

impl VerificationReport {
    pub fn is_valid(&self) -> bool {
        matches!(self, VerificationReport::Valid)
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VerificationReport::Valid => f.write_str("Valid"),
            VerificationReport::DuplicateWindow { first, second } => {
                write!(f, "duplicate windows at positions ({first}, {second})")
            }
        }
    }
}

/// Checks that every cyclic n-window of `seq` is distinct, with
/// [`DEFAULT_CAP`] as the presence-table cap.
pub fn verify_debruijn(seq: &Word, n: u32) -> Result<VerificationReport> {
    verify_debruijn_with_cap(seq, n, DEFAULT_CAP)
}

pub fn verify_debruijn_with_cap(seq: &Word, n: u32, cap: u64) -> Result<VerificationReport> {
    validate_order_n(n)?;
    let k = seq.k();
    let needed = sequence_length(n, k).unwrap_or(u128::MAX);
    if needed > cap as u128 {
        return Err(Error::CapExceeded {
            required: needed,
            cap: cap as u128,
        });
    }
    if seq.len() as u128 != needed {
        return Err(Error::LengthMismatch {
            expected: needed,
            actual: seq.len(),
        });
    }
    let kn = needed as u64;
    let s = seq.letters();
    let n_us = n as usize;
    let pow = kn / k as u64; // k^(n-1)

    let window_at = |start: usize| -> u64 {
        let mut val = 0u64;
        for j in 0..n_us {
            val = val * k as u64 + s[(start + j) % s.len()] as u64;
        }
        val
    };

    let mut seen = BitSet::new(kn);
    let mut val = window_at(0);
    for pos in 0..kn {
        if seen.get(val) {
            // Second pass locates the earlier position of the repeat.
            let mut probe = window_at(0);
            for earlier in 0..pos {
                if probe == val {
                    return Ok(VerificationReport::DuplicateWindow {
                        first: earlier,
                        second: pos,
                    });
                }
                let out = s[earlier as usize] as u64;
                let incoming = s[(earlier as usize + n_us) % s.len()] as u64;
                probe = (probe - out * pow) * k as u64 + incoming;
            }
            unreachable!("a set presence bit has an earlier witness");
        }
        seen.set(val);
        let out = s[pos as usize] as u64;
        let incoming = s[(pos as usize + n_us) % s.len()] as u64;
        val = (val - out * pow) * k as u64 + incoming;
    }
    Ok(VerificationReport::Valid)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn collect(n: u32, k: Letter, order: SequenceOrder, count: usize) -> String {
        let word = Word::from_raw(
            fsr_stream(n, k, order).unwrap().take(count).collect(),
            k,
        );
        word.to_string()
    }

    #[test]
    fn fsr_golden_sequences() {
        assert_eq!(collect(2, 3, SequenceOrder::PreferMin, 9), "001021122");
        assert_eq!(collect(2, 3, SequenceOrder::PreferMax, 9), "221201100");
        assert_eq!(collect(1, 4, SequenceOrder::PreferMin, 4), "0123");
    }

    #[test]
    fn fsr_wraps_cyclically() {
        let full: Vec<Letter> = fsr_stream(3, 2, SequenceOrder::PreferMin)
            .unwrap()
            .take(16)
            .collect();
        assert_eq!(full[..8], full[8..]);
    }

    #[test]
    fn fsr_cursor_reports_its_position() {
        let mut stream = fsr_stream(2, 3, SequenceOrder::PreferMax).unwrap();
        assert_eq!(stream.state().to_string(), "22");
        assert_eq!(stream.period(), Some(9));
        for _ in 0..9 {
            stream.next();
        }
        assert_eq!(stream.emitted(), 9);
        assert_eq!(stream.state().to_string(), "22");
    }

    #[test]
    fn fkm_golden_sequences() {
        let letters: Vec<Letter> = fkm_sequence(2, 3, SequenceOrder::PreferMin)
            .unwrap()
            .collect();
        assert_eq!(Word::from_raw(letters, 3).to_string(), "001021122");

        let letters: Vec<Letter> = fkm_sequence(3, 2, SequenceOrder::PreferMin)
            .unwrap()
            .collect();
        assert_eq!(Word::from_raw(letters, 2).to_string(), "00010111");

        let letters: Vec<Letter> = fkm_sequence(1, 2, SequenceOrder::PreferMin)
            .unwrap()
            .collect();
        assert_eq!(Word::from_raw(letters, 2).to_string(), "01");

        let letters: Vec<Letter> = fkm_sequence(2, 3, SequenceOrder::PreferMax)
            .unwrap()
            .collect();
        assert_eq!(Word::from_raw(letters, 3).to_string(), "221201100");
    }

    #[test]
    fn fkm_is_finite_with_exactly_k_to_the_n_letters() {
        let mut stream = fkm_sequence(4, 3, SequenceOrder::PreferMin).unwrap();
        let mut count = 0u32;
        while stream.next().is_some() {
            count += 1;
        }
        assert_eq!(count, 81);
        assert_eq!(stream.emitted(), 81);
        assert_eq!(stream.next(), None);
    }

    #[test]
    fn verifier_accepts_and_rejects() {
        let good = Word::parse("001021122", 3).unwrap();
        assert_eq!(
            verify_debruijn(&good, 2).unwrap(),
            VerificationReport::Valid
        );

        let constant = Word::parse("000000000", 3).unwrap();
        assert_eq!(
            verify_debruijn(&constant, 2).unwrap(),
            VerificationReport::DuplicateWindow { first: 0, second: 1 }
        );

        let short = Word::parse("0010", 3).unwrap();
        assert_eq!(
            verify_debruijn(&short, 2).unwrap_err(),
            Error::LengthMismatch {
                expected: 9,
                actual: 4
            }
        );

        assert!(matches!(
            verify_debruijn_with_cap(&good, 2, 4).unwrap_err(),
            Error::CapExceeded { .. }
        ));
    }

    #[test]
    fn report_formats_like_the_cli_expects() {
        assert_eq!(VerificationReport::Valid.to_string(), "Valid");
        assert_eq!(
            VerificationReport::DuplicateWindow { first: 0, second: 1 }.to_string(),
            "duplicate windows at positions (0, 1)"
        );
    }

    #[test]
    fn sequence_length_is_checked() {
        assert_eq!(sequence_length(2, 3), Some(9));
        assert_eq!(sequence_length(5, MAX_ALPHABET_LIKE), None);
    }

    const MAX_ALPHABET_LIKE: Letter = (1 << 31) - 1;
}
