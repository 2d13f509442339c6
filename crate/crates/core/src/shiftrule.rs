//! The shift rule: successor functions that step a feedback shift register
//! through the prefer-min (or prefer-max) De Bruijn cycle in O(n) time and
//! memory per call, independent of the alphabet size.
//!
//! A state is a nonempty word `sigma w` of length n. The successor always
//! has the shift form `w sigma'`: the state slides left by one position and
//! a single new letter is fed in on the right. The fed letter is decided by
//! the necklace-head predicate [`head`]:
//!
//! 1. `sigma < k-1` and `head(w sigma)`: feed `sigma + 1`;
//! 2. `sigma = k-1` and some `sigma'' < k-1 has head(w sigma'')`: feed the
//!    smallest such letter;
//! 3. otherwise: feed `sigma` back unchanged.
//!
//! Case 2 never scans the alphabet. Writing `w = (k-1)^t w'` and decomposing
//! `w'` as a fractional power `u^m v`, the smallest head letter is either
//! `tau = w'[|v|]` or `tau + 1`, so a single extra head test settles it.
//! That is what makes the step cost independent of k.

use crate::error::{Error, Result};
use crate::lyndon::{expanded_lyndon_slice, fractional_split};
use crate::ops;
use crate::words::{validate_alphabet, Letter, Word};

/// Reusable buffers for the stepping hot path. One scratch per register run
/// keeps stepping allocation-free after warmup.
#[derive(Debug, Default)]
pub struct ShiftScratch {
    cand: Vec<Letter>,
    rot: Vec<Letter>,
}

impl ShiftScratch {
    pub fn new() -> Self {
        Self::default()
    }
}

fn leading_run(s: &[Letter], letter: Letter) -> usize {
    s.iter().take_while(|&&l| l == letter).count()
}

/// Head test on a raw word; `rot` holds the rotated copy.
pub(crate) fn head_slice(v: &[Letter], k: Letter, rot: &mut Vec<Letter>) -> bool {
    let top = k - 1;
    if *v.last().expect("head of a nonempty word") == top {
        // The definition requires the final letter to be below k-1; in
        // particular the all-top word has no head.
        return false;
    }
    let run = leading_run(v, top);
    rot.clear();
    rot.extend_from_slice(&v[run..]);
    rot.extend_from_slice(&v[..run]);
    ops::add(v.len() as u64);
    expanded_lyndon_slice(rot)
}

/// True when `v` is the head of its necklace: writing `v = (k-1)^t w sigma`
/// with a maximal leading run of top letters and `sigma < k-1`, the rotation
/// `w sigma (k-1)^t` is a power of a Lyndon word. Total: words ending in
/// `k-1` (the all-top word among them) are never heads. Every other necklace
/// has exactly one head. Runs in O(|v|).
pub fn head(v: &Word) -> Result<bool> {
    if v.is_empty() {
        return Err(Error::EmptyWord);
    }
    let mut rot = Vec::new();
    Ok(head_slice(v.letters(), v.k(), &mut rot))
}

/// Decides the letter fed into the register. `state` must be nonempty and
/// valid over `[k]`.
pub(crate) fn next_letter_min(state: &[Letter], k: Letter, scratch: &mut ShiftScratch) -> Letter {
    let n = state.len();
    let top = k - 1;
    let sigma = state[0];
    let w = &state[1..];
    let ShiftScratch { cand, rot } = scratch;

    if sigma < top {
        // Case 1, and on failure directly case 3.
        cand.clear();
        cand.extend_from_slice(w);
        cand.push(sigma);
        ops::add(n as u64);
        if head_slice(cand, k, rot) {
            return sigma + 1;
        }
        return sigma;
    }

    // sigma == k-1 from here on.
    ops::add(n as u64);
    if w.iter().all(|&l| l == top) {
        // The all-top state restarts the cycle.
        return 0;
    }

    // Case 2 applies iff w(k-2) is a head; raising the final letter keeps
    // the head property, so k-2 stands in for the whole candidate set.
    cand.clear();
    cand.extend_from_slice(w);
    cand.push(top - 1);
    ops::add(n as u64);
    if head_slice(cand, k, rot) {
        let run = leading_run(w, top);
        let tail = &w[run..];
        let (u_len, m) = fractional_split(tail)
            .expect("a positive head test makes the tail a pre-necklace");
        let v_len = tail.len() - m * u_len;
        let tau = tail[v_len];
        debug_assert!(tau < top, "the pinned letter must be feedable");
        cand.clear();
        cand.extend_from_slice(w);
        cand.push(tau);
        ops::add(n as u64);
        let fed = if head_slice(cand, k, rot) { tau } else { tau + 1 };
        debug_assert!(fed < top, "case-2 letters stay below k-1");
        return fed;
    }

    sigma // case 3
}

/// Successor of `s` along the prefer-min De Bruijn cycle.
pub fn next_min(s: &Word) -> Result<Word> {
    if s.is_empty() {
        return Err(Error::EmptyWord);
    }
    let mut scratch = ShiftScratch::new();
    let fed = next_letter_min(s.letters(), s.k(), &mut scratch);
    let mut letters = Vec::with_capacity(s.len());
    letters.extend_from_slice(&s.letters()[1..]);
    letters.push(fed);
    ops::add(s.len() as u64);
    Ok(Word::from_raw(letters, s.k()))
}

/// Successor along the prefer-max cycle: the complement conjugate of
/// [`next_min`].
pub fn next_max(s: &Word) -> Result<Word> {
    if s.is_empty() {
        return Err(Error::EmptyWord);
    }
    Ok(next_min(&s.complement())?.complement())
}

/// In-place variant of [`next_min`]: shifts `state` left by one and writes
/// the fed letter at the end. No allocation once `scratch` has grown to the
/// state length; this is the benchmark path.
pub fn next_min_in_place(
    state: &mut [Letter],
    k: Letter,
    scratch: &mut ShiftScratch,
) -> Result<()> {
    validate_alphabet(k)?;
    if state.is_empty() {
        return Err(Error::EmptyWord);
    }
    for &l in state.iter() {
        if l >= k {
            return Err(Error::LetterOutOfRange {
                letter: l as u64,
                k,
            });
        }
    }
    ops::add(state.len() as u64);
    let fed = next_letter_min(state, k, scratch);
    state.rotate_left(1);
    *state.last_mut().unwrap() = fed;
    ops::add(state.len() as u64);
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(text: &str, k: Letter) -> Word {
        Word::parse(text, k).unwrap()
    }

    #[test]
    fn head_golden_values() {
        assert!(head(&w("11", 3)).unwrap());
        assert!(!head(&w("10", 3)).unwrap());
        assert!(head(&w("21", 3)).unwrap());
        assert!(!head(&w("222", 3)).unwrap());
        assert!(!head(&w("01", 2)).unwrap()); // ends in k-1: never a head
        assert_eq!(head(&Word::new(vec![], 3).unwrap()), Err(Error::EmptyWord));
    }

    #[test]
    fn next_min_golden_values() {
        assert_eq!(next_min(&w("21", 3)).unwrap(), w("11", 3));
        assert_eq!(next_min(&w("00", 3)).unwrap(), w("01", 3));
        assert_eq!(next_min(&w("12", 3)).unwrap(), w("22", 3));
        assert_eq!(next_min(&w("22", 3)).unwrap(), w("20", 3));
        assert_eq!(next_min(&w("1111", 2)).unwrap(), w("1110", 2));
        // One hit for each return of the pinned-letter branch.
        assert_eq!(next_min(&w("202", 3)).unwrap(), w("021", 3));
        assert_eq!(next_min(&w("1101", 2)).unwrap(), w("1010", 2));
    }

    #[test]
    fn next_max_golden_values() {
        assert_eq!(next_max(&w("01", 3)).unwrap(), w("11", 3));
        assert_eq!(next_max(&w("00", 3)).unwrap(), w("02", 3));
        assert_eq!(next_max(&w("0000", 2)).unwrap(), w("0001", 2));
    }

    #[test]
    fn successor_has_shift_form() {
        let state = w("21021", 3);
        let next = next_min(&state).unwrap();
        assert_eq!(&next.letters()[..4], &state.letters()[1..]);
    }

    #[test]
    fn order_one_registers_count_through_the_alphabet() {
        let mut state = w("0", 4);
        let mut seen = Vec::new();
        for _ in 0..4 {
            seen.push(state.letters()[0]);
            state = next_min(&state).unwrap();
        }
        assert_eq!(seen, [0, 1, 2, 3]);
        assert_eq!(state, w("0", 4));

        let mut state = w("3", 4);
        let mut seen = Vec::new();
        for _ in 0..4 {
            seen.push(state.letters()[0]);
            state = next_max(&state).unwrap();
        }
        assert_eq!(seen, [3, 2, 1, 0]);
        assert_eq!(state, w("3", 4));
    }

    #[test]
    fn in_place_matches_the_pure_step() {
        let mut state = vec![0u32; 6];
        let mut scratch = ShiftScratch::new();
        let mut pure = Word::new(state.clone(), 3).unwrap();
        for _ in 0..200 {
            next_min_in_place(&mut state, 3, &mut scratch).unwrap();
            pure = next_min(&pure).unwrap();
            assert_eq!(state, pure.letters());
        }
    }

    #[test]
    fn in_place_validates_its_input() {
        let mut scratch = ShiftScratch::new();
        let mut bad = vec![0u32, 5];
        assert_eq!(
            next_min_in_place(&mut bad, 3, &mut scratch),
            Err(Error::LetterOutOfRange { letter: 5, k: 3 })
        );
        let mut empty: Vec<Letter> = vec![];
        assert_eq!(
            next_min_in_place(&mut empty, 3, &mut scratch),
            Err(Error::EmptyWord)
        );
        assert_eq!(
            next_min_in_place(&mut [0], 1, &mut scratch),
            Err(Error::AlphabetTooSmall(1))
        );
    }
}
