//! Behavior evaluators for every semantics, in two independent forms.
//!
//! [`behavior`] evaluates in matrix form, carrying a single vector along the
//! word (the `1n` recursion runs right to left over suffixes; the `n1`
//! recursions run left to right with a running transition-word matrix).
//! [`behavior_oracle`] evaluates the same quantity by explicit summation
//! over all state tuples, exactly as the expanded path sums read, and serves
//! as the independent check of the matrix route.
//!
//! On the pair of empty words every semantics except `cd` yields the sum of
//! the initial weights; `cd` yields the semiring one. A word pair whose
//! symbols all resolve but which uses a transition or output family member
//! that is absent (the all-zero matrix or vector) evaluates to zero.

use crate::algebra::{
    dot, hadamard, identity_matrix, mat_mul, mat_vec, vec_mat, SrMatrix, SrVector, States,
};
use crate::automata::{
    Alphabet, Automaton, AutomatonKind, CrispDetMealy, CrispDetMoore, MealyWfa, MooreWfa,
    SequentialWfa, WordPair,
};
use crate::semiring::{Semiring, Value};
use crate::{Error, Result, SymbolRole};
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

/// A semantics tag, written `seq`, `1n`, `n1`, `s`, or `cd`.
///
/// Which behaviors a tag denotes depends on the automaton model it is
/// applied to; see [`compatible`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Semantics {
    /// The behavior of a sequential automaton.
    Seq,
    /// Output weights interleaved suffix-recursively (Mealy and Moore).
    OneN,
    /// Output weights accumulated against prefix transition matrices
    /// (Mealy and Moore).
    N1,
    /// The sequential semantics of a Mealy automaton.
    S,
    /// The run-product behavior of a crisp-deterministic machine.
    Cd,
}

impl Semantics {
    pub const ALL: [Semantics; 5] = [
        Semantics::Seq,
        Semantics::OneN,
        Semantics::N1,
        Semantics::S,
        Semantics::Cd,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Semantics::Seq => "seq",
            Semantics::OneN => "1n",
            Semantics::N1 => "n1",
            Semantics::S => "s",
            Semantics::Cd => "cd",
        }
    }

    pub fn from_name(name: &str) -> Option<Semantics> {
        Semantics::ALL.into_iter().find(|t| t.name() == name)
    }
}

impl core::fmt::Display for Semantics {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.write_str(self.name())
    }
}

/// Which tags apply to which model. Crisp-deterministic machines are
/// special general machines, so they accept the general tags as well.
pub fn compatible(kind: AutomatonKind, tag: Semantics) -> bool {
    match kind {
        AutomatonKind::Sequential => matches!(tag, Semantics::Seq),
        AutomatonKind::Mealy => matches!(tag, Semantics::OneN | Semantics::N1 | Semantics::S),
        AutomatonKind::Moore => matches!(tag, Semantics::OneN | Semantics::N1),
        AutomatonKind::CdMealy => matches!(
            tag,
            Semantics::Cd | Semantics::OneN | Semantics::N1 | Semantics::S
        ),
        AutomatonKind::CdMoore => {
            matches!(tag, Semantics::Cd | Semantics::OneN | Semantics::N1)
        }
    }
}

pub(crate) fn resolve(
    alphabet: &Alphabet,
    word: &[String],
    role: SymbolRole,
) -> Result<Vec<usize>> {
    word.iter()
        .map(|s| {
            alphabet.index_of(s).ok_or_else(|| Error::UnknownSymbol {
                role,
                symbol: s.clone(),
            })
        })
        .collect()
}

impl SequentialWfa {
    /// The weighted transition-output matrix of a word pair: the identity
    /// at (ε, ε), otherwise the product of the per-symbol matrices.
    pub fn word_matrix(&self, w: &WordPair) -> Result<SrMatrix> {
        let xs = resolve(self.input_alphabet(), w.input(), SymbolRole::Input)?;
        let ys = resolve(self.output_alphabet(), w.output(), SymbolRole::Output)?;
        let mut acc = identity_matrix(self.semiring(), self.states())?;
        for (&x, &y) in xs.iter().zip(&ys) {
            match self.transition_matrix(x, y) {
                Some(m) => acc = mat_mul(&acc, m)?,
                None => return Ok(SrMatrix::new(self.semiring(), self.states().clone())),
            }
        }
        Ok(acc)
    }
}

fn word_transition_matrix<'a>(
    semiring: Semiring,
    states: &States,
    input_alphabet: &Alphabet,
    word: &[String],
    transition: impl Fn(usize) -> Option<&'a SrMatrix>,
) -> Result<SrMatrix> {
    let xs = resolve(input_alphabet, word, SymbolRole::Input)?;
    let mut acc = identity_matrix(semiring, states)?;
    for &x in &xs {
        match transition(x) {
            Some(m) => acc = mat_mul(&acc, m)?,
            None => return Ok(SrMatrix::new(semiring, states.clone())),
        }
    }
    Ok(acc)
}

impl MealyWfa {
    /// The weighted transition matrix of an input word: the identity at ε,
    /// otherwise the product of the per-symbol transition matrices.
    pub fn transition_word_matrix(&self, word: &[String]) -> Result<SrMatrix> {
        word_transition_matrix(
            self.semiring(),
            self.states(),
            self.input_alphabet(),
            word,
            |x| self.transition(x),
        )
    }
}

impl MooreWfa {
    /// The weighted transition matrix of an input word.
    pub fn transition_word_matrix(&self, word: &[String]) -> Result<SrMatrix> {
        word_transition_matrix(
            self.semiring(),
            self.states(),
            self.input_alphabet(),
            word,
            |x| self.transition(x),
        )
    }
}

/// Evaluate the behavior of `aut` under `tag` on the word pair `w`.
pub fn behavior(aut: &Automaton, tag: Semantics, w: &WordPair) -> Result<Value> {
    if !compatible(aut.kind(), tag) {
        return Err(Error::IncompatibleSemantics {
            tag,
            kind: aut.kind(),
        });
    }
    match (aut, tag) {
        (Automaton::Sequential(a), Semantics::Seq) => seq_behavior(a, w),
        (Automaton::Mealy(a), Semantics::OneN) => mealy_1n(a, w),
        (Automaton::Mealy(a), Semantics::N1) => mealy_n1(a, w),
        (Automaton::Mealy(a), Semantics::S) => mealy_s(a, w),
        (Automaton::Moore(a), Semantics::OneN) => moore_1n(a, w),
        (Automaton::Moore(a), Semantics::N1) => moore_n1(a, w),
        (Automaton::CdMealy(a), Semantics::Cd) => cd_mealy_behavior(a, w),
        (Automaton::CdMealy(a), _) => behavior(&Automaton::Mealy(a.to_general()), tag, w),
        (Automaton::CdMoore(a), Semantics::Cd) => cd_moore_behavior(a, w),
        (Automaton::CdMoore(a), _) => behavior(&Automaton::Moore(a.to_general()), tag, w),
        _ => unreachable!("compatibility checked above"),
    }
}

fn seq_behavior(a: &SequentialWfa, w: &WordPair) -> Result<Value> {
    let xs = resolve(a.input_alphabet(), w.input(), SymbolRole::Input)?;
    let ys = resolve(a.output_alphabet(), w.output(), SymbolRole::Output)?;
    if xs.is_empty() {
        return a.initial().sum();
    }
    let mut v = a.initial().clone();
    for (&x, &y) in xs.iter().zip(&ys) {
        let Some(m) = a.transition_matrix(x, y) else {
            return Ok(a.semiring().zero());
        };
        v = vec_mat(&v, m)?;
    }
    v.sum()
}

fn mealy_1n(a: &MealyWfa, w: &WordPair) -> Result<Value> {
    let xs = resolve(a.input_alphabet(), w.input(), SymbolRole::Input)?;
    let ys = resolve(a.output_alphabet(), w.output(), SymbolRole::Output)?;
    let n = xs.len();
    if n == 0 {
        return a.initial().sum();
    }
    // Suffix recursion: start from the last output vector, then prepend
    // D(output) · transition one symbol at a time.
    let Some(last) = a.output(xs[n - 1], ys[n - 1]) else {
        return Ok(a.semiring().zero());
    };
    let mut suffix = last.clone();
    for i in (0..n - 1).rev() {
        let Some(d) = a.transition(xs[i]) else {
            return Ok(a.semiring().zero());
        };
        let Some(out) = a.output(xs[i], ys[i]) else {
            return Ok(a.semiring().zero());
        };
        suffix = hadamard(out, &mat_vec(d, &suffix)?)?;
    }
    dot(a.initial(), &suffix)
}

fn mealy_n1(a: &MealyWfa, w: &WordPair) -> Result<Value> {
    let xs = resolve(a.input_alphabet(), w.input(), SymbolRole::Input)?;
    let ys = resolve(a.output_alphabet(), w.output(), SymbolRole::Output)?;
    let n = xs.len();
    if n == 0 {
        return a.initial().sum();
    }
    let Some(first) = a.output(xs[0], ys[0]) else {
        return Ok(a.semiring().zero());
    };
    let mut acc = first.clone();
    if n > 1 {
        // `running` holds the transition matrix of the processed prefix.
        let Some(d0) = a.transition(xs[0]) else {
            return Ok(a.semiring().zero());
        };
        let mut running = d0.clone();
        for i in 1..n {
            let Some(out) = a.output(xs[i], ys[i]) else {
                return Ok(a.semiring().zero());
            };
            acc = hadamard(&acc, &mat_vec(&running, out)?)?;
            if i + 1 < n {
                let Some(d) = a.transition(xs[i]) else {
                    return Ok(a.semiring().zero());
                };
                running = mat_mul(&running, d)?;
            }
        }
    }
    dot(a.initial(), &acc)
}

fn mealy_s(a: &MealyWfa, w: &WordPair) -> Result<Value> {
    let xs = resolve(a.input_alphabet(), w.input(), SymbolRole::Input)?;
    let ys = resolve(a.output_alphabet(), w.output(), SymbolRole::Output)?;
    if xs.is_empty() {
        return a.initial().sum();
    }
    // Each step multiplies by D(output) · transition; for a row vector that
    // is a Hadamard product followed by a vector-matrix product.
    let mut v = a.initial().clone();
    for (&x, &y) in xs.iter().zip(&ys) {
        let Some(out) = a.output(x, y) else {
            return Ok(a.semiring().zero());
        };
        let Some(d) = a.transition(x) else {
            return Ok(a.semiring().zero());
        };
        v = vec_mat(&hadamard(&v, out)?, d)?;
    }
    v.sum()
}

fn moore_1n(a: &MooreWfa, w: &WordPair) -> Result<Value> {
    let xs = resolve(a.input_alphabet(), w.input(), SymbolRole::Input)?;
    let ys = resolve(a.output_alphabet(), w.output(), SymbolRole::Output)?;
    let n = xs.len();
    if n == 0 {
        return a.initial().sum();
    }
    let mut v = a.initial().clone();
    for i in 0..n {
        let Some(d) = a.transition(xs[i]) else {
            return Ok(a.semiring().zero());
        };
        v = vec_mat(&v, d)?;
        let Some(out) = a.output(ys[i]) else {
            return Ok(a.semiring().zero());
        };
        if i + 1 < n {
            v = hadamard(&v, out)?;
        } else {
            return dot(&v, out);
        }
    }
    unreachable!("loop returns on the last symbol")
}

fn moore_n1(a: &MooreWfa, w: &WordPair) -> Result<Value> {
    let xs = resolve(a.input_alphabet(), w.input(), SymbolRole::Input)?;
    let ys = resolve(a.output_alphabet(), w.output(), SymbolRole::Output)?;
    let n = xs.len();
    if n == 0 {
        return a.initial().sum();
    }
    let Some(d0) = a.transition(xs[0]) else {
        return Ok(a.semiring().zero());
    };
    let mut running = d0.clone();
    let Some(out0) = a.output(ys[0]) else {
        return Ok(a.semiring().zero());
    };
    let mut acc = mat_vec(&running, out0)?;
    for i in 1..n {
        let Some(d) = a.transition(xs[i]) else {
            return Ok(a.semiring().zero());
        };
        running = mat_mul(&running, d)?;
        let Some(out) = a.output(ys[i]) else {
            return Ok(a.semiring().zero());
        };
        acc = hadamard(&acc, &mat_vec(&running, out)?)?;
    }
    dot(a.initial(), &acc)
}

fn cd_mealy_behavior(a: &CrispDetMealy, w: &WordPair) -> Result<Value> {
    let xs = resolve(a.input_alphabet(), w.input(), SymbolRole::Input)?;
    let ys = resolve(a.output_alphabet(), w.output(), SymbolRole::Output)?;
    let sr = a.semiring();
    let mut state = a.initial_state();
    let mut acc = sr.one();
    // Emit from the current state, then move.
    for (&x, &y) in xs.iter().zip(&ys) {
        acc = sr.mul(&acc, &a.output_weight(state, x, y))?;
        state = a.next(state, x);
    }
    Ok(acc)
}

fn cd_moore_behavior(a: &CrispDetMoore, w: &WordPair) -> Result<Value> {
    let xs = resolve(a.input_alphabet(), w.input(), SymbolRole::Input)?;
    let ys = resolve(a.output_alphabet(), w.output(), SymbolRole::Output)?;
    let sr = a.semiring();
    let mut state = a.initial_state();
    let mut acc = sr.one();
    // Move first, then emit from the state reached.
    for (&x, &y) in xs.iter().zip(&ys) {
        state = a.next(state, x);
        acc = sr.mul(&acc, &a.output_weight(state, y))?;
    }
    Ok(acc)
}

/// Hard cap on the number of state tuples the oracle will enumerate.
pub const ORACLE_TUPLE_LIMIT: u128 = 10_000_000;

/// Evaluate the behavior by brute-force summation over state tuples.
///
/// Every factor is read directly off the automaton tables; no matrix
/// products are formed except the explicitly enumerated path sums. Fails
/// with [`Error::EnumerationBound`] when |A|^(n+1) exceeds
/// [`ORACLE_TUPLE_LIMIT`].
pub fn behavior_oracle(aut: &Automaton, tag: Semantics, w: &WordPair) -> Result<Value> {
    if !compatible(aut.kind(), tag) {
        return Err(Error::IncompatibleSemantics {
            tag,
            kind: aut.kind(),
        });
    }
    let required = (aut.states().len() as u128)
        .checked_pow(w.len() as u32 + 1)
        .unwrap_or(u128::MAX);
    if required > ORACLE_TUPLE_LIMIT {
        return Err(Error::EnumerationBound {
            required,
            limit: ORACLE_TUPLE_LIMIT,
        });
    }
    match (aut, tag) {
        (Automaton::Sequential(a), Semantics::Seq) => seq_oracle(a, w),
        (Automaton::Mealy(a), Semantics::OneN) => mealy_1n_oracle(a, w),
        (Automaton::Mealy(a), Semantics::N1) => mealy_n1_oracle(a, w),
        (Automaton::Mealy(a), Semantics::S) => mealy_s_oracle(a, w),
        (Automaton::Moore(a), Semantics::OneN) => moore_1n_oracle(a, w),
        (Automaton::Moore(a), Semantics::N1) => moore_n1_oracle(a, w),
        (Automaton::CdMealy(a), Semantics::Cd) => cd_mealy_oracle(a, w),
        (Automaton::CdMealy(a), _) => behavior_oracle(&Automaton::Mealy(a.to_general()), tag, w),
        (Automaton::CdMoore(a), Semantics::Cd) => cd_moore_oracle(a, w),
        (Automaton::CdMoore(a), _) => behavior_oracle(&Automaton::Moore(a.to_general()), tag, w),
        _ => unreachable!("compatibility checked above"),
    }
}

/// Visit every tuple in {0, .., base-1}^len in lexicographic order.
fn for_each_tuple(
    len: usize,
    base: usize,
    mut f: impl FnMut(&[usize]) -> Result<()>,
) -> Result<()> {
    let mut t = vec![0usize; len];
    loop {
        f(&t)?;
        let mut i = len;
        loop {
            if i == 0 {
                return Ok(());
            }
            i -= 1;
            t[i] += 1;
            if t[i] < base {
                break;
            }
            t[i] = 0;
        }
    }
}

fn dense_matrix(semiring: Semiring, n: usize, m: Option<&SrMatrix>) -> Vec<Vec<Value>> {
    match m {
        Some(m) => m.to_dense(),
        None => vec![vec![semiring.zero(); n]; n],
    }
}

fn dense_vector(semiring: Semiring, n: usize, v: Option<&SrVector>) -> Vec<Value> {
    match v {
        Some(v) => v.to_dense(),
        None => vec![semiring.zero(); n],
    }
}

/// Transition matrix of a word, by explicit enumeration of all paths.
///
/// Paths whose running product has hit the exact zero are abandoned early;
/// zero annihilates every further factor and contributes nothing to the sum.
fn brute_word_matrix(semiring: Semiring, deltas: &[&Vec<Vec<Value>>]) -> Result<Vec<Vec<Value>>> {
    let n = deltas
        .first()
        .map(|d| d.len())
        .expect("word must be non-empty");
    let zero = semiring.zero();
    let mut out = vec![vec![semiring.zero(); n]; n];
    for (a, row) in out.iter_mut().enumerate() {
        for (b, slot) in row.iter_mut().enumerate() {
            let mut acc = semiring.zero();
            for_each_tuple(deltas.len() - 1, n, |mid| {
                let mut term = semiring.one();
                let mut prev = a;
                for (i, d) in deltas.iter().enumerate() {
                    let next = if i < mid.len() { mid[i] } else { b };
                    term = semiring.mul(&term, &d[prev][next])?;
                    if term == zero {
                        return Ok(());
                    }
                    prev = next;
                }
                acc = semiring.add(&acc, &term)?;
                Ok(())
            })?;
            *slot = acc;
        }
    }
    Ok(out)
}

fn seq_oracle(a: &SequentialWfa, w: &WordPair) -> Result<Value> {
    let xs = resolve(a.input_alphabet(), w.input(), SymbolRole::Input)?;
    let ys = resolve(a.output_alphabet(), w.output(), SymbolRole::Output)?;
    let sr = a.semiring();
    let n_states = a.states().len();
    let sigma = a.initial().to_dense();
    if xs.is_empty() {
        return a.initial().sum();
    }
    let mats: Vec<Vec<Vec<Value>>> = xs
        .iter()
        .zip(&ys)
        .map(|(&x, &y)| dense_matrix(sr, n_states, a.transition_matrix(x, y)))
        .collect();
    let zero = sr.zero();
    let mut acc = sr.zero();
    for_each_tuple(xs.len() + 1, n_states, |t| {
        let mut term = sigma[t[0]];
        for (i, m) in mats.iter().enumerate() {
            if term == zero {
                return Ok(());
            }
            term = sr.mul(&term, &m[t[i]][t[i + 1]])?;
        }
        if term != zero {
            acc = sr.add(&acc, &term)?;
        }
        Ok(())
    })?;
    Ok(acc)
}

fn mealy_1n_oracle(a: &MealyWfa, w: &WordPair) -> Result<Value> {
    let xs = resolve(a.input_alphabet(), w.input(), SymbolRole::Input)?;
    let ys = resolve(a.output_alphabet(), w.output(), SymbolRole::Output)?;
    let sr = a.semiring();
    let n_states = a.states().len();
    let n = xs.len();
    if n == 0 {
        return a.initial().sum();
    }
    let sigma = a.initial().to_dense();
    let outs: Vec<Vec<Value>> = xs
        .iter()
        .zip(&ys)
        .map(|(&x, &y)| dense_vector(sr, n_states, a.output(x, y)))
        .collect();
    let deltas: Vec<Vec<Vec<Value>>> = xs
        .iter()
        .map(|&x| dense_matrix(sr, n_states, a.transition(x)))
        .collect();
    let zero = sr.zero();
    let mut acc = sr.zero();
    for_each_tuple(n, n_states, |t| {
        let mut term = sr.mul(&sigma[t[0]], &outs[0][t[0]])?;
        for i in 1..n {
            if term == zero {
                return Ok(());
            }
            term = sr.mul(&term, &deltas[i - 1][t[i - 1]][t[i]])?;
            term = sr.mul(&term, &outs[i][t[i]])?;
        }
        if term != zero {
            acc = sr.add(&acc, &term)?;
        }
        Ok(())
    })?;
    Ok(acc)
}

fn mealy_n1_oracle(a: &MealyWfa, w: &WordPair) -> Result<Value> {
    let xs = resolve(a.input_alphabet(), w.input(), SymbolRole::Input)?;
    let ys = resolve(a.output_alphabet(), w.output(), SymbolRole::Output)?;
    let sr = a.semiring();
    let n_states = a.states().len();
    let n = xs.len();
    if n == 0 {
        return a.initial().sum();
    }
    let sigma = a.initial().to_dense();
    let outs: Vec<Vec<Value>> = xs
        .iter()
        .zip(&ys)
        .map(|(&x, &y)| dense_vector(sr, n_states, a.output(x, y)))
        .collect();
    let deltas: Vec<Vec<Vec<Value>>> = xs
        .iter()
        .map(|&x| dense_matrix(sr, n_states, a.transition(x)))
        .collect();
    // Word matrices of the prefixes x_0 .. x_{L-1}, L = 1 .. n-1, each by
    // explicit path enumeration.
    let mut prefixes: Vec<Vec<Vec<Value>>> = Vec::new();
    for len in 1..n {
        let slice: Vec<&Vec<Vec<Value>>> = deltas[..len].iter().collect();
        prefixes.push(brute_word_matrix(sr, &slice)?);
    }
    let zero = sr.zero();
    let mut acc = sr.zero();
    for_each_tuple(n, n_states, |t| {
        let mut term = sr.mul(&sigma[t[0]], &outs[0][t[0]])?;
        for i in 1..n {
            if term == zero {
                return Ok(());
            }
            term = sr.mul(&term, &prefixes[i - 1][t[0]][t[i]])?;
            term = sr.mul(&term, &outs[i][t[i]])?;
        }
        if term != zero {
            acc = sr.add(&acc, &term)?;
        }
        Ok(())
    })?;
    Ok(acc)
}

fn mealy_s_oracle(a: &MealyWfa, w: &WordPair) -> Result<Value> {
    let xs = resolve(a.input_alphabet(), w.input(), SymbolRole::Input)?;
    let ys = resolve(a.output_alphabet(), w.output(), SymbolRole::Output)?;
    let sr = a.semiring();
    let n_states = a.states().len();
    let n = xs.len();
    if n == 0 {
        return a.initial().sum();
    }
    let sigma = a.initial().to_dense();
    let outs: Vec<Vec<Value>> = xs
        .iter()
        .zip(&ys)
        .map(|(&x, &y)| dense_vector(sr, n_states, a.output(x, y)))
        .collect();
    let deltas: Vec<Vec<Vec<Value>>> = xs
        .iter()
        .map(|&x| dense_matrix(sr, n_states, a.transition(x)))
        .collect();
    let zero = sr.zero();
    let mut acc = sr.zero();
    for_each_tuple(n + 1, n_states, |t| {
        let mut term = sigma[t[0]];
        for i in 0..n {
            if term == zero {
                return Ok(());
            }
            term = sr.mul(&term, &outs[i][t[i]])?;
            term = sr.mul(&term, &deltas[i][t[i]][t[i + 1]])?;
        }
        if term != zero {
            acc = sr.add(&acc, &term)?;
        }
        Ok(())
    })?;
    Ok(acc)
}

fn moore_1n_oracle(a: &MooreWfa, w: &WordPair) -> Result<Value> {
    let xs = resolve(a.input_alphabet(), w.input(), SymbolRole::Input)?;
    let ys = resolve(a.output_alphabet(), w.output(), SymbolRole::Output)?;
    let sr = a.semiring();
    let n_states = a.states().len();
    let n = xs.len();
    if n == 0 {
        return a.initial().sum();
    }
    let sigma = a.initial().to_dense();
    let outs: Vec<Vec<Value>> = ys
        .iter()
        .map(|&y| dense_vector(sr, n_states, a.output(y)))
        .collect();
    let deltas: Vec<Vec<Vec<Value>>> = xs
        .iter()
        .map(|&x| dense_matrix(sr, n_states, a.transition(x)))
        .collect();
    let zero = sr.zero();
    let mut acc = sr.zero();
    for_each_tuple(n + 1, n_states, |t| {
        let mut term = sigma[t[0]];
        for i in 0..n {
            if term == zero {
                return Ok(());
            }
            term = sr.mul(&term, &deltas[i][t[i]][t[i + 1]])?;
            term = sr.mul(&term, &outs[i][t[i + 1]])?;
        }
        if term != zero {
            acc = sr.add(&acc, &term)?;
        }
        Ok(())
    })?;
    Ok(acc)
}

fn moore_n1_oracle(a: &MooreWfa, w: &WordPair) -> Result<Value> {
    let xs = resolve(a.input_alphabet(), w.input(), SymbolRole::Input)?;
    let ys = resolve(a.output_alphabet(), w.output(), SymbolRole::Output)?;
    let sr = a.semiring();
    let n_states = a.states().len();
    let n = xs.len();
    if n == 0 {
        return a.initial().sum();
    }
    let sigma = a.initial().to_dense();
    let outs: Vec<Vec<Value>> = ys
        .iter()
        .map(|&y| dense_vector(sr, n_states, a.output(y)))
        .collect();
    let deltas: Vec<Vec<Vec<Value>>> = xs
        .iter()
        .map(|&x| dense_matrix(sr, n_states, a.transition(x)))
        .collect();
    // Word matrices of the prefixes x_0 .. x_{L-1}, L = 1 .. n.
    let mut prefixes: Vec<Vec<Vec<Value>>> = Vec::new();
    for len in 1..=n {
        let slice: Vec<&Vec<Vec<Value>>> = deltas[..len].iter().collect();
        prefixes.push(brute_word_matrix(sr, &slice)?);
    }
    let zero = sr.zero();
    let mut acc = sr.zero();
    for_each_tuple(n + 1, n_states, |t| {
        let mut term = sigma[t[0]];
        for i in 0..n {
            if term == zero {
                return Ok(());
            }
            term = sr.mul(&term, &prefixes[i][t[0]][t[i + 1]])?;
            term = sr.mul(&term, &outs[i][t[i + 1]])?;
        }
        if term != zero {
            acc = sr.add(&acc, &term)?;
        }
        Ok(())
    })?;
    Ok(acc)
}

fn cd_mealy_oracle(a: &CrispDetMealy, w: &WordPair) -> Result<Value> {
    let xs = resolve(a.input_alphabet(), w.input(), SymbolRole::Input)?;
    let ys = resolve(a.output_alphabet(), w.output(), SymbolRole::Output)?;
    let sr = a.semiring();
    // The run is unique; the displayed product multiplies the output weight
    // of the state reached by each proper prefix.
    let mut acc = sr.one();
    for (i, (&x, &y)) in xs.iter().zip(&ys).enumerate() {
        let mut state = a.initial_state();
        for &step in &xs[..i] {
            state = a.next(state, step);
        }
        acc = sr.mul(&acc, &a.output_weight(state, x, y))?;
    }
    Ok(acc)
}

fn cd_moore_oracle(a: &CrispDetMoore, w: &WordPair) -> Result<Value> {
    let xs = resolve(a.input_alphabet(), w.input(), SymbolRole::Input)?;
    let ys = resolve(a.output_alphabet(), w.output(), SymbolRole::Output)?;
    let sr = a.semiring();
    let mut acc = sr.one();
    for (i, &y) in ys.iter().enumerate() {
        let mut state = a.initial_state();
        for &step in &xs[..=i] {
            state = a.next(state, step);
        }
        acc = sr.mul(&acc, &a.output_weight(state, y))?;
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::testkit::{example1, example2, r};

    fn eval(m: &MealyWfa, tag: Semantics, input: &str, output: &str) -> Value {
        let aut = Automaton::Mealy(m.clone());
        let w = WordPair::parse(input, output).unwrap();
        behavior(&aut, tag, &w).unwrap()
    }

    #[test]
    fn example1_reference_values() {
        let m = example1();
        assert_eq!(eval(&m, Semantics::OneN, "0,0,0", "0,1,0"), r(0.4));
        assert_eq!(eval(&m, Semantics::S, "0,0,0", "0,1,0"), r(0.4));
        assert_eq!(eval(&m, Semantics::N1, "0,0,0", "0,1,0"), r(0.5));
    }

    #[test]
    fn example2_reference_values() {
        let m = example2();
        assert_eq!(eval(&m, Semantics::OneN, "0,1", "0,0"), r(0.5));
        assert_eq!(eval(&m, Semantics::S, "0,1", "0,0"), r(0.2));
    }

    #[test]
    fn empty_pair_is_the_initial_sum() {
        let m = example1();
        for tag in [Semantics::OneN, Semantics::N1, Semantics::S] {
            assert_eq!(eval(&m, tag, "", ""), r(1.0));
        }
    }

    #[test]
    fn single_symbol_boundary() {
        // With one symbol the 1n and n1 chains are the bare output vector,
        // while s still sums over the trailing transition.
        let m = example1();
        assert_eq!(eval(&m, Semantics::OneN, "0", "0"), r(0.6));
        assert_eq!(eval(&m, Semantics::N1, "0", "0"), r(0.6));
        assert_eq!(eval(&m, Semantics::S, "0", "0"), r(0.6));
        assert_eq!(eval(&m, Semantics::OneN, "0", "1"), r(0.2));
        assert_eq!(eval(&m, Semantics::S, "0", "1"), r(0.2));
    }

    #[test]
    fn example1_delta_word_squared() {
        let m = example1();
        let d = m
            .transition_word_matrix(&[String::from("0"), String::from("0")])
            .unwrap();
        // Hand-expanded max-min square of the transition matrix.
        assert_eq!(
            d.to_dense(),
            [[r(0.7), r(0.5)].to_vec(), [r(0.0), r(0.8)].to_vec()]
        );
    }

    #[test]
    fn word_matrix_at_empty_is_identity() {
        let m = example1();
        let d = m.transition_word_matrix(&[]).unwrap();
        assert_eq!(d, identity_matrix(m.semiring(), m.states()).unwrap());
        let (seq, _) = crate::convert::mealy_to_sequential(&m).unwrap();
        assert_eq!(
            seq.word_matrix(&WordPair::empty()).unwrap(),
            identity_matrix(seq.semiring(), seq.states()).unwrap()
        );
    }

    #[test]
    fn unknown_symbols_error() {
        let m = example1();
        let aut = Automaton::Mealy(m);
        let w = WordPair::parse("9", "0").unwrap();
        assert!(matches!(
            behavior(&aut, Semantics::OneN, &w),
            Err(Error::UnknownSymbol {
                role: SymbolRole::Input,
                ..
            })
        ));
        let w = WordPair::parse("0", "9").unwrap();
        assert!(matches!(
            behavior(&aut, Semantics::OneN, &w),
            Err(Error::UnknownSymbol {
                role: SymbolRole::Output,
                ..
            })
        ));
    }

    #[test]
    fn incompatible_tag_errors() {
        let m = Automaton::Mealy(example1());
        let w = WordPair::empty();
        assert!(matches!(
            behavior(&m, Semantics::Seq, &w),
            Err(Error::IncompatibleSemantics { .. })
        ));
        assert!(matches!(
            behavior(&m, Semantics::Cd, &w),
            Err(Error::IncompatibleSemantics { .. })
        ));
    }

    #[test]
    fn oracle_matches_on_the_examples() {
        for m in [example1(), example2()] {
            let aut = Automaton::Mealy(m);
            let pairs = crate::equiv::word_pairs(aut.input_alphabet(), aut.output_alphabet(), 3);
            for w in pairs {
                for tag in [Semantics::OneN, Semantics::N1, Semantics::S] {
                    let fast = behavior(&aut, tag, &w).unwrap();
                    let brute = behavior_oracle(&aut, tag, &w).unwrap();
                    assert!(
                        aut.semiring().elem_eq(&fast, &brute).unwrap(),
                        "{tag} at {w}: {fast} vs {brute}"
                    );
                }
            }
        }
    }

    #[test]
    fn oracle_guard_trips() {
        let dims = crate::automata::Dimensions::new(30, 2, 2);
        let aut = crate::automata::random_automaton(AutomatonKind::Mealy, Semiring::Godel, dims, 0)
            .unwrap();
        let w = WordPair::parse("x0,x0,x0,x0", "y0,y0,y0,y0").unwrap();
        assert!(matches!(
            behavior_oracle(&aut, Semantics::OneN, &w),
            Err(Error::EnumerationBound { .. })
        ));
    }

    #[test]
    fn cd_behavior_walks_the_run() {
        let dims = crate::automata::Dimensions::new(3, 2, 2);
        let aut =
            crate::automata::random_automaton(AutomatonKind::CdMealy, Semiring::Viterbi, dims, 11)
                .unwrap();
        let w = WordPair::empty();
        assert_eq!(behavior(&aut, Semantics::Cd, &w).unwrap(), r(1.0));
        let w = WordPair::parse("x0,x1", "y1,y0").unwrap();
        assert_eq!(
            behavior(&aut, Semantics::Cd, &w).unwrap(),
            behavior_oracle(&aut, Semantics::Cd, &w).unwrap()
        );
    }
}
