//! Deliberately slow reference implementations: the greedy generator, a
//! definition-literal head and next, and filter-based enumeration of
//! expanded Lyndon words. These give the fast paths something obviously
//! correct to be measured against, and the verify command can run them too.

use std::fmt;
use std::str::FromStr;

use crate::bits::BitSet;
use crate::error::{Error, Result};
use crate::generator::sequence_length;
use crate::words::{validate_alphabet, Letter, Word};

/// Which of the two extremal sequences to produce.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SequenceOrder {
    /// The lexicographically smallest sequence.
    PreferMin,
    /// The lexicographically largest sequence; the letter-wise complement of
    /// the prefer-min sequence.
    PreferMax,
}

impl fmt::Display for SequenceOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SequenceOrder::PreferMin => f.write_str("min"),
            SequenceOrder::PreferMax => f.write_str("max"),
        }
    }
}

impl FromStr for SequenceOrder {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "min" => Ok(SequenceOrder::PreferMin),
            "max" => Ok(SequenceOrder::PreferMax),
            other => Err(Error::InvalidParameter(format!(
                "order must be \"min\" or \"max\", got {other:?}"
            ))),
        }
    }
}

/// Default cap on jobs that materialize all `k^n` windows.
pub const DEFAULT_CAP: u64 = 1 << 24;

fn validate_order_n(n: u32) -> Result<()> {
    if n == 0 {
        return Err(Error::InvalidParameter("order n must be at least 1".into()));
    }
    Ok(())
}

/// Greedy construction of the full sequence with [`DEFAULT_CAP`].
pub fn greedy_sequence(n: u32, k: Letter, order: SequenceOrder) -> Result<Word> {
    greedy_sequence_with_cap(n, k, order, DEFAULT_CAP)
}

/// Greedy construction: start from the worst window, repeatedly append the
/// most preferred letter that does not revisit a window, then move the
/// starting block to the end. Needs a presence bit per window, so the job is
/// refused above `cap`.
pub fn greedy_sequence_with_cap(
    n: u32,
    k: Letter,
    order: SequenceOrder,
    cap: u64,
) -> Result<Word> {
    validate_alphabet(k)?;
    validate_order_n(n)?;
    let needed = sequence_length(n, k).unwrap_or(u128::MAX);
    if needed > cap as u128 {
        return Err(Error::CapExceeded {
            required: needed,
            cap: cap as u128,
        });
    }
    let kn = needed as u64;
    let n_us = n as usize;
    let top = k - 1;
    let start = match order {
        SequenceOrder::PreferMin => top,
        SequenceOrder::PreferMax => 0,
    };

    let mut seq: Vec<Letter> = vec![start; n_us];
    let mut seen = BitSet::new(kn);
    let pow = kn / k as u64; // k^(n-1)
    let mut window = match order {
        SequenceOrder::PreferMin => kn - 1,
        SequenceOrder::PreferMax => 0,
    };
    seen.set(window);

    loop {
        let base = (window % pow) * k as u64;
        let mut fed = None;
        match order {
            SequenceOrder::PreferMin => {
                for s in 0..k {
                    if !seen.get(base + s as u64) {
                        fed = Some(s);
                        break;
                    }
                }
            }
            SequenceOrder::PreferMax => {
                for s in (0..k).rev() {
                    if !seen.get(base + s as u64) {
                        fed = Some(s);
                        break;
                    }
                }
            }
        }
        match fed {
            Some(s) => {
                window = base + s as u64;
                seen.set(window);
                seq.push(s);
            }
            None => break,
        }
    }
    assert_eq!(
        seq.len() as u64,
        kn + n as u64 - 1,
        "the greedy walk stalls exactly once every window is used"
    );

    let mut letters = Vec::with_capacity(kn as usize);
    letters.extend_from_slice(&seq[n_us..kn as usize]);
    letters.extend_from_slice(&seq[..n_us]);
    Ok(Word::from_raw(letters, k))
}

/// `s` is lexicographically least (ties allowed) among its rotations,
/// checked by comparing against every rotation.
fn least_among_rotations(s: &[Letter]) -> bool {
    let n = s.len();
    for i in 1..n {
        for j in 0..n {
            let a = s[j];
            let b = s[(i + j) % n];
            if a < b {
                break;
            }
            if a > b {
                return false;
            }
        }
    }
    true
}

/// Definition-literal head test: strip the maximal leading run of top
/// letters, rotate it to the back, and compare the result against all of its
/// rotations.
pub fn head_naive(v: &Word) -> Result<bool> {
    if v.is_empty() {
        return Err(Error::EmptyWord);
    }
    let top = v.k() - 1;
    if *v.letters().last().unwrap() == top {
        return Ok(false);
    }
    let run = v.letters().iter().take_while(|&&l| l == top).count();
    let rotated = v.rotate(run as i64)?;
    Ok(least_among_rotations(rotated.letters()))
}

/// Definition-literal successor: case 1 directly, case 2 by scanning the
/// alphabet for the smallest head letter, case 3 as the fallthrough.
pub fn next_naive(s: &Word) -> Result<Word> {
    if s.is_empty() {
        return Err(Error::EmptyWord);
    }
    let k = s.k();
    let top = k - 1;
    let sigma = s.letters()[0];
    let w = &s.letters()[1..];
    let with_last = |last: Letter| -> Word {
        let mut letters = Vec::with_capacity(s.len());
        letters.extend_from_slice(w);
        letters.push(last);
        Word::from_raw(letters, k)
    };
    if sigma < top {
        if head_naive(&with_last(sigma))? {
            return Ok(with_last(sigma + 1));
        }
        return Ok(with_last(sigma));
    }
    for candidate in 0..top {
        if head_naive(&with_last(candidate))? {
            return Ok(with_last(candidate));
        }
    }
    Ok(with_last(sigma))
}

/// All expanded Lyndon words of length `n` over `[k]` in increasing order,
/// found by filtering every word through the least-rotation test. Uses
/// [`DEFAULT_CAP`] as the work cap on `n * k^n`.
pub fn enumerate_expanded_lyndon(n: u32, k: Letter) -> Result<Vec<Word>> {
    enumerate_expanded_lyndon_with_cap(n, k, DEFAULT_CAP)
}

pub fn enumerate_expanded_lyndon_with_cap(n: u32, k: Letter, cap: u64) -> Result<Vec<Word>> {
    validate_alphabet(k)?;
    validate_order_n(n)?;
    let work = sequence_length(n, k)
        .unwrap_or(u128::MAX)
        .saturating_mul(n as u128);
    if work > cap as u128 {
        return Err(Error::CapExceeded {
            required: work,
            cap: cap as u128,
        });
    }
    let mut out = Vec::new();
    let mut current = vec![0 as Letter; n as usize];
    loop {
        if least_among_rotations(&current) {
            out.push(Word::from_raw(current.clone(), k));
        }
        // Odometer step through [k]^n in lexicographic order.
        let mut pos = n as usize;
        loop {
            if pos == 0 {
                return Ok(out);
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
