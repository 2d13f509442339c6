//! Lyndon-word machinery: Duval's linear-time Chen-Fox-Lyndon factorization
//! and the predicates built on top of it.
//!
//! Every nonempty word factors uniquely into a lexicographically
//! nonincreasing product of Lyndon words. Because the factors are
//! nonincreasing, a word is a power of a single Lyndon word exactly when its
//! first and last factors coincide; that observation is what keeps the
//! necklace-head test in `shiftrule` linear.

use crate::error::{Error, Result};
use crate::ops;
use crate::words::{Letter, Word};

/// Runs Duval's factorization scan over `s`, calling `emit(start, len)` for
/// each Lyndon factor from left to right.
pub(crate) fn duval_scan<F: FnMut(usize, usize)>(s: &[Letter], mut emit: F) {
    let n = s.len();
    let mut compares = 0u64;
    let mut i = 0;
    while i < n {
        let mut j = i + 1;
        let mut back = i;
        while j < n {
            compares += 1;
            if s[back] > s[j] {
                break;
            }
            if s[back] < s[j] {
                back = i;
            } else {
                back += 1;
            }
            j += 1;
        }
        let len = j - back;
        while i <= back {
            emit(i, len);
            i += len;
        }
    }
    ops::add(compares);
}

pub(crate) fn first_last_spans(s: &[Letter]) -> ((usize, usize), (usize, usize)) {
    debug_assert!(!s.is_empty());
    let mut first = None;
    let mut last = (0, 0);
    duval_scan(s, |start, len| {
        if first.is_none() {
            first = Some((start, len));
        }
        last = (start, len);
    });
    (first.unwrap(), last)
}

/// `s` is a power of a single Lyndon word. With nonincreasing factors this
/// reduces to comparing the first and last factor.
pub(crate) fn expanded_lyndon_slice(s: &[Letter]) -> bool {
    let ((f_start, f_len), (l_start, l_len)) = first_last_spans(s);
    if f_len != l_len {
        return false;
    }
    ops::add(f_len as u64);
    s[f_start..f_start + f_len] == s[l_start..l_start + l_len]
}

/// Returns `(u_len, m)` such that `s` starts with exactly `m` copies of its
/// first Lyndon factor `u` and the rest is a proper prefix of `u`, or `None`
/// when no such split exists (i.e. `s` is not a pre-necklace).
pub(crate) fn fractional_split(s: &[Letter]) -> Option<(usize, usize)> {
    debug_assert!(!s.is_empty());
    let ((_, u_len), _) = first_last_spans(s);
    let mut m = 1;
    let mut end = u_len;
    while end + u_len <= s.len() && s[end..end + u_len] == s[..u_len] {
        m += 1;
        end += u_len;
    }
    let v_len = s.len() - end;
    ops::add((end + v_len.min(u_len)) as u64);
    if v_len >= u_len {
        return None;
    }
    if s[end..] == s[..v_len] {
        Some((u_len, m))
    } else {
        None
    }
}

/// The Chen-Fox-Lyndon factorization of a word: a nonincreasing sequence of
/// Lyndon factors whose concatenation restores the word.
///
/// Factors are kept as spans into the word, so the whole structure costs
/// O(|w|) memory.
#[derive(Clone, Debug)]
pub struct CflFactorization {
    word: Word,
    spans: Vec<(usize, usize)>,
}

impl CflFactorization {
    /// The factorized word.
    pub fn word(&self) -> &Word {
        &self.word
    }

    /// Number of factors.
    pub fn factor_count(&self) -> usize {
        self.spans.len()
    }

    /// The `i`th factor as a letter slice.
    pub fn factor(&self, i: usize) -> &[Letter] {
        let (start, len) = self.spans[i];
        &self.word.letters()[start..start + len]
    }

    /// Iterates the factors as letter slices, left to right.
    pub fn iter(&self) -> impl Iterator<Item = &[Letter]> + '_ {
        self.spans
            .iter()
            .map(move |&(start, len)| &self.word.letters()[start..start + len])
    }

    /// Materializes the factors as owned words.
    pub fn factor_words(&self) -> Vec<Word> {
        self.iter()
            .map(|f| Word::from_raw(f.to_vec(), self.word.k()))
            .collect()
    }
}

/// Factorizes `w` into its unique nonincreasing product of Lyndon words in
/// O(|w|) time and memory.
pub fn cfl_factorize(w: &Word) -> Result<CflFactorization> {
    if w.is_empty() {
        return Err(Error::EmptyWord);
    }
    let mut spans = Vec::new();
    duval_scan(w.letters(), |start, len| spans.push((start, len)));
    Ok(CflFactorization {
        word: w.clone(),
        spans,
    })
}

/// `w` is primitive and lexicographically least in its necklace,
/// equivalently its factorization has a single factor.
pub fn is_lyndon(w: &Word) -> Result<bool> {
    if w.is_empty() {
        return Err(Error::EmptyWord);
    }
    let mut count = 0usize;
    duval_scan(w.letters(), |_, _| count += 1);
    Ok(count == 1)
}

/// `w` is a power of a Lyndon word, equivalently lexicographically least
/// (ties allowed) among its rotations.
pub fn is_expanded_lyndon(w: &Word) -> Result<bool> {
    if w.is_empty() {
        return Err(Error::EmptyWord);
    }
    Ok(expanded_lyndon_slice(w.letters()))
}

/// A word written as `u^m v`: `m` copies of a Lyndon root `u` followed by a
/// proper prefix `v` of `u`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FractionalPower {
    /// The Lyndon root `u`.
    pub root: Word,
    /// Number of whole copies of the root.
    pub exponent: usize,
    /// Trailing proper prefix of the root, possibly empty.
    pub remainder: Word,
}

impl FractionalPower {
    /// Rebuilds the decomposed word.
    pub fn reconstruct(&self) -> Word {
        let mut letters = self.root.letters().repeat(self.exponent);
        letters.extend_from_slice(self.remainder.letters());
        Word::from_raw(letters, self.root.k())
    }
}

/// Decomposes a pre-necklace as `u^m v` with `u` its first Lyndon factor,
/// `m` the maximal leading run of `u` and `v` the remainder. Fails with
/// [`Error::NotPreNecklace`] when the remainder is not a proper prefix of
/// the root.
pub fn fractional_power_decompose(w: &Word) -> Result<FractionalPower> {
    if w.is_empty() {
        return Err(Error::EmptyWord);
    }
    let s = w.letters();
    let (u_len, m) = fractional_split(s).ok_or(Error::NotPreNecklace)?;
    Ok(FractionalPower {
        root: Word::from_raw(s[..u_len].to_vec(), w.k()),
        exponent: m,
        remainder: Word::from_raw(s[m * u_len..].to_vec(), w.k()),
    })
}

/// `w` can be extended on the right into a power of a Lyndon word.
pub fn is_prenecklace(w: &Word) -> Result<bool> {
    if w.is_empty() {
        return Err(Error::EmptyWord);
    }
    Ok(fractional_split(w.letters()).is_some())
}
