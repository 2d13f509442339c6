//! Brute-force oracles and enumeration helpers shared by the integration
//! suites. Everything here recomputes results from first principles and
//! stays independent of the library's fast paths.

#![allow(dead_code)]

use dbseq::{Letter, Word};

/// Tiny deterministic xorshift generator; enough randomness for sampling
/// words without pulling in a dependency.
pub struct XorShift(u64);

impl XorShift {
    pub fn new(seed: u64) -> Self {
        Self(seed.max(1))
    }

    pub fn next_u64(&mut self) -> u64 {
        let mut x = self.0;
        x ^= x << 13;
        x ^= x >> 7;
        x ^= x << 17;
        self.0 = x;
        x
    }

    pub fn letter(&mut self, k: Letter) -> Letter {
        (self.next_u64() % k as u64) as Letter
    }

    pub fn word(&mut self, len: usize, k: Letter) -> Vec<Letter> {
        (0..len).map(|_| self.letter(k)).collect()
    }
}

/// All words of [k]^n in lexicographic order, as raw letter vectors.
pub fn all_words(n: u32, k: Letter) -> Vec<Vec<Letter>> {
    let mut out = Vec::new();
    let mut current = vec![0 as Letter; n as usize];
    loop {
        out.push(current.clone());
        let mut pos = current.len();
        loop {
            if pos == 0 {
                return out;
            }
            pos -= 1;
            if current[pos] + 1 < k {
                current[pos] += 1;
                break;
            }
            current[pos] = 0;
        }
    }
}

pub fn word(letters: &[Letter], k: Letter) -> Word {
    Word::new(letters.to_vec(), k).unwrap()
}

/// Lexicographic comparison of a word against its rotation starting at `i`.
fn compare_with_rotation(s: &[Letter], i: usize) -> std::cmp::Ordering {
    let n = s.len();
    for j in 0..n {
        let ord = s[j].cmp(&s[(i + j) % n]);
        if ord != std::cmp::Ordering::Equal {
            return ord;
        }
    }
    std::cmp::Ordering::Equal
}

/// `s` is lexicographically least among its rotations, ties allowed
/// (the brute-force expanded-Lyndon test).
pub fn brute_least_rotation(s: &[Letter]) -> bool {
    (1..s.len()).all(|i| compare_with_rotation(s, i) != std::cmp::Ordering::Greater)
}

/// `s` is strictly smaller than every nontrivial rotation
/// (the brute-force Lyndon test).
pub fn brute_lyndon(s: &[Letter]) -> bool {
    !s.is_empty() && (1..s.len()).all(|i| compare_with_rotation(s, i) == std::cmp::Ordering::Less)
}

/// Brute-force pre-necklace test: some right extension of total length at
/// most 2|s| is an expanded Lyndon word. A fractional power u^m v always has
/// the witness u^(m+1), whose length is below that bound, so the search is
/// exhaustive.
pub fn brute_prenecklace(s: &[Letter], k: Letter) -> bool {
    let n = s.len();
    let mut extension: Vec<Letter> = Vec::new();
    loop {
        let mut candidate = s.to_vec();
        candidate.extend_from_slice(&extension);
        if brute_least_rotation(&candidate) {
            return true;
        }
        // Odometer over extensions by increasing length.
        let mut pos = extension.len();
        loop {
            if pos == 0 {
                extension = vec![0; extension.len() + 1];
                if extension.len() > n {
                    return false;
                }
                break;
            }
            pos -= 1;
            if extension[pos] + 1 < k {
                extension[pos] += 1;
                break;
            }
            extension[pos] = 0;
        }
    }
}

/// Every factorization of `s` into a nonincreasing product of brute-checked
/// Lyndon words, found by depth-first search. The theorem says there is
/// exactly one; the suites assert that and compare it against Duval.
pub fn brute_cfl_factorizations(s: &[Letter]) -> Vec<Vec<Vec<Letter>>> {
    fn search(
        s: &[Letter],
        start: usize,
        bound: Option<&[Letter]>,
        current: &mut Vec<Vec<Letter>>,
        out: &mut Vec<Vec<Vec<Letter>>>,
    ) {
        if start == s.len() {
            out.push(current.clone());
            return;
        }
        for end in start + 1..=s.len() {
            let factor = &s[start..end];
            if let Some(previous) = bound {
                if factor > previous {
                    continue;
                }
            }
            if !brute_lyndon(factor) {
                continue;
            }
            current.push(factor.to_vec());
            search(s, end, Some(factor), current, out);
            current.pop();
        }
    }

    let mut out = Vec::new();
    search(s, 0, None, &mut Vec::new(), &mut out);
    out
}

/// Number of rotation classes of [k]^n, counted by least representatives.
pub fn brute_necklace_count(n: u32, k: Letter) -> u64 {
    all_words(n, k)
        .iter()
        .filter(|w| brute_least_rotation(w))
        .count() as u64
}

/// The (n, k) pairs of the stream-equivalence suite.
pub fn triple_suite_pairs() -> Vec<(u32, Letter)> {
    let mut pairs = Vec::new();
    for n in 2..=12 {
        pairs.push((n, 2));
    }
    for n in 2..=7 {
        pairs.push((n, 3));
    }
    for n in 2..=5 {
        pairs.push((n, 4));
    }
    for k in 3..=8 {
        pairs.push((2, k));
    }
    for k in 3..=6 {
        pairs.push((3, k));
    }
    pairs.sort_unstable();
    pairs.dedup();
    pairs
}

/// The (n, k) pairs of the pointwise-equivalence suites: every order for
/// alphabets 2..=5 while k^n stays within 6561, plus larger-alphabet spot
/// rows with the same state bound.
pub fn pointwise_suite_pairs() -> Vec<(u32, Letter)> {
    let mut pairs = Vec::new();
    for k in 2..=5u32 {
        let mut n = 1u32;
        while (k as u64).pow(n) <= 6561 {
            pairs.push((n, k));
            n += 1;
        }
    }
    for extra in [
        (1, 512),
        (2, 8),
        (2, 16),
        (2, 81),
        (3, 6),
        (3, 8),
        (3, 16),
        (4, 6),
        (4, 7),
        (4, 8),
    ] {
        pairs.push(extra);
    }
    pairs.sort_unstable();
    pairs.dedup();
    pairs
}

/// Subset of the pointwise pairs used for the heavier lemma suites.
pub fn lemma_suite_pairs() -> Vec<(u32, Letter)> {
    pointwise_suite_pairs()
        .into_iter()
        .filter(|&(_, k)| k <= 5)
        .collect()
}
