//! Bounded brute-force comparison of two behaviors.
//!
//! Word pairs are enumerated by length, then lexicographically in the
//! declared symbol order with the input symbol outranking the output
//! symbol. [`check_equiv`] evaluates both (automaton, tag) pairs on every
//! enumerated pair and reports the first divergence in enumeration order
//! together with a total failure count.

use crate::automata::{Alphabet, Automaton, WordPair};
use crate::semantics::{behavior, compatible, Semantics};
use crate::semiring::Value;
use crate::{Error, Result};
use alloc::string::String;
use alloc::vec::Vec;

/// Hard cap on the number of word pairs a single check may enumerate.
pub const MAX_WORD_PAIRS: u128 = 1_000_000;

/// The number of word pairs of length at most `max_len`:
/// Σ_{n=0}^{max_len} (|X| · |Y|)^n.
pub fn word_pair_count(inputs: usize, outputs: usize, max_len: usize) -> u128 {
    let k = inputs as u128 * outputs as u128;
    let mut total: u128 = 0;
    let mut pow: u128 = 1;
    for _ in 0..=max_len {
        total = total.saturating_add(pow);
        pow = pow.saturating_mul(k);
    }
    total
}

/// All pairs (u, v) with |u| = |v| <= max_len, shortest first, then
/// lexicographic in the declared symbol order.
pub fn word_pairs(input: &Alphabet, output: &Alphabet, max_len: usize) -> WordPairs {
    WordPairs {
        input: input.symbols().to_vec(),
        output: output.symbols().to_vec(),
        max_len,
        len: 0,
        digits: Vec::new(),
        done: false,
    }
}

/// Iterator produced by [`word_pairs`].
#[derive(Debug, Clone)]
pub struct WordPairs {
    input: Vec<String>,
    output: Vec<String>,
    max_len: usize,
    len: usize,
    digits: Vec<usize>,
    done: bool,
}

impl Iterator for WordPairs {
    type Item = WordPair;

    fn next(&mut self) -> Option<WordPair> {
        if self.done {
            return None;
        }
        let base = self.input.len() * self.output.len();
        if base == 0 && self.len > 0 {
            self.done = true;
            return None;
        }

        // Emit the pair encoded by the current digits: each digit is
        // x-index * |Y| + y-index, most significant position first.
        let pair = {
            let mut u = Vec::with_capacity(self.len);
            let mut v = Vec::with_capacity(self.len);
            for &d in &self.digits {
                u.push(self.input[d / self.output.len()].clone());
                v.push(self.output[d % self.output.len()].clone());
            }
            WordPair::new(u, v).expect("equal lengths by construction")
        };

        // Advance the odometer, growing the length when it wraps.
        let mut i = self.len;
        loop {
            if i == 0 {
                self.len += 1;
                if self.len > self.max_len {
                    self.done = true;
                } else {
                    self.digits = alloc::vec![0; self.len];
                }
                break;
            }
            i -= 1;
            self.digits[i] += 1;
            if self.digits[i] < base {
                break;
            }
            self.digits[i] = 0;
        }
        Some(pair)
    }
}

/// The first word pair on which two behaviors differ.
#[derive(Debug, Clone, PartialEq)]
pub struct Divergence {
    pub pair: WordPair,
    pub left: Value,
    pub right: Value,
}

/// Outcome of a bounded equivalence check.
#[derive(Debug, Clone, PartialEq)]
pub struct EquivVerdict {
    /// True iff no enumerated pair diverged.
    pub equal: bool,
    /// The length bound that was exhausted.
    pub max_len: usize,
    /// How many enumerated pairs diverged.
    pub failures: u64,
    /// The earliest divergence in enumeration order, if any.
    pub first_divergence: Option<Divergence>,
}

/// Compare `behavior(left, left_tag)` with `behavior(right, right_tag)` on
/// every word pair up to `max_len`.
///
/// Both automata must share their semiring and both alphabets; each tag
/// must be compatible with its automaton. Refuses to enumerate more than
/// [`MAX_WORD_PAIRS`] pairs.
pub fn check_equiv(
    left: &Automaton,
    left_tag: Semantics,
    right: &Automaton,
    right_tag: Semantics,
    max_len: usize,
) -> Result<EquivVerdict> {
    if left.semiring() != right.semiring() {
        return Err(Error::SemiringsDiffer {
            left: left.semiring(),
            right: right.semiring(),
        });
    }
    if left.input_alphabet() != right.input_alphabet()
        || left.output_alphabet() != right.output_alphabet()
    {
        return Err(Error::AlphabetMismatch);
    }
    for (aut, tag) in [(left, left_tag), (right, right_tag)] {
        if !compatible(aut.kind(), tag) {
            return Err(Error::IncompatibleSemantics {
                tag,
                kind: aut.kind(),
            });
        }
    }
    let required = word_pair_count(
        left.input_alphabet().len(),
        left.output_alphabet().len(),
        max_len,
    );
    if required > MAX_WORD_PAIRS {
        return Err(Error::TooManyWordPairs {
            required,
            limit: MAX_WORD_PAIRS,
        });
    }

    let semiring = left.semiring();
    let mut failures = 0u64;
    let mut first_divergence = None;
    for pair in word_pairs(left.input_alphabet(), left.output_alphabet(), max_len) {
        let lv = behavior(left, left_tag, &pair)?;
        let rv = behavior(right, right_tag, &pair)?;
        if !semiring.elem_eq(&lv, &rv)? {
            failures += 1;
            if first_divergence.is_none() {
                first_divergence = Some(Divergence {
                    pair,
                    left: lv,
                    right: rv,
                });
            }
        }
    }
    Ok(EquivVerdict {
        equal: first_divergence.is_none(),
        max_len,
        failures,
        first_divergence,
    })
}
