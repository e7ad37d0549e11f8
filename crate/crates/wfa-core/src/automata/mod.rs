//! The three weighted automaton models, crisp-deterministic specializations,
//! validation, and seeded random generation.
//!
//! All models share a state set `A`, an input alphabet `X`, an output
//! alphabet `Y`, and an initial weight vector over `A`:
//!
//! - [`SequentialWfa`]: one matrix per pair (x, y), combining the move and
//!   the emission,
//! - [`MealyWfa`]: one transition matrix per input x plus one output weight
//!   vector per pair (x, y),
//! - [`MooreWfa`]: as Mealy, but output weight vectors are keyed by the
//!   output symbol alone.
//!
//! Family maps are sparse: a missing key denotes the all-zero matrix or
//! vector. Automata are immutable once built; [`Automaton::validate`]
//! reports structural problems as data rather than panicking.

mod random;

pub use random::{random_automaton, weight_palette, Dimensions};

use crate::algebra::{SrMatrix, SrVector, States};
use crate::semiring::{Semiring, Value};
use crate::{Error, Result};
use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec::Vec;

/// An ordered, shared list of alphabet symbols.
#[derive(Debug, Clone, Eq)]
pub struct Alphabet(Arc<Vec<String>>);

impl Alphabet {
    pub fn new<I, T>(symbols: I) -> Alphabet
    where
        I: IntoIterator<Item = T>,
        T: Into<String>,
    {
        Alphabet(Arc::new(symbols.into_iter().map(Into::into).collect()))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn symbol(&self, index: usize) -> &str {
        &self.0[index]
    }

    pub fn index_of(&self, symbol: &str) -> Option<usize> {
        self.0.iter().position(|s| s == symbol)
    }

    pub fn iter(&self) -> impl Iterator<Item = &str> {
        self.0.iter().map(String::as_str)
    }

    pub fn symbols(&self) -> &[String] {
        &self.0
    }
}

impl PartialEq for Alphabet {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0 == other.0
    }
}

/// A pair (u, v) of an input and an output word of equal length.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WordPair {
    input: Vec<String>,
    output: Vec<String>,
}

impl WordPair {
    pub fn new<I, J, S, T>(input: I, output: J) -> Result<WordPair>
    where
        I: IntoIterator<Item = S>,
        J: IntoIterator<Item = T>,
        S: Into<String>,
        T: Into<String>,
    {
        let input: Vec<String> = input.into_iter().map(Into::into).collect();
        let output: Vec<String> = output.into_iter().map(Into::into).collect();
        if input.len() != output.len() {
            return Err(Error::WordLengthMismatch {
                input: input.len(),
                output: output.len(),
            });
        }
        Ok(WordPair { input, output })
    }

    /// The pair of empty words.
    pub fn empty() -> WordPair {
        WordPair {
            input: Vec::new(),
            output: Vec::new(),
        }
    }

    /// Parse from comma-separated symbol lists; the empty string is the
    /// empty word.
    pub fn parse(input: &str, output: &str) -> Result<WordPair> {
        fn split(s: &str) -> Vec<String> {
            if s.is_empty() {
                Vec::new()
            } else {
                s.split(',').map(String::from).collect()
            }
        }
        WordPair::new(split(input), split(output))
    }

    pub fn len(&self) -> usize {
        self.input.len()
    }

    pub fn is_empty(&self) -> bool {
        self.input.is_empty()
    }

    pub fn input(&self) -> &[String] {
        &self.input
    }

    pub fn output(&self) -> &[String] {
        &self.output
    }
}

impl core::fmt::Display for WordPair {
    /// `u;v` with comma-separated symbols; an empty side stands for the
    /// empty word.
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        for (i, s) in self.input.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            f.write_str(s)?;
        }
        f.write_str(";")?;
        for (i, s) in self.output.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            f.write_str(s)?;
        }
        Ok(())
    }
}

/// The five automaton kinds understood by files and the CLI.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum AutomatonKind {
    Sequential,
    Mealy,
    Moore,
    CdMealy,
    CdMoore,
}

impl AutomatonKind {
    pub const ALL: [AutomatonKind; 5] = [
        AutomatonKind::Sequential,
        AutomatonKind::Mealy,
        AutomatonKind::Moore,
        AutomatonKind::CdMealy,
        AutomatonKind::CdMoore,
    ];

    pub fn name(self) -> &'static str {
        match self {
            AutomatonKind::Sequential => "sequential",
            AutomatonKind::Mealy => "mealy",
            AutomatonKind::Moore => "moore",
            AutomatonKind::CdMealy => "cd-mealy",
            AutomatonKind::CdMoore => "cd-moore",
        }
    }

    pub fn from_name(name: &str) -> Option<AutomatonKind> {
        AutomatonKind::ALL.into_iter().find(|k| k.name() == name)
    }
}

impl core::fmt::Display for AutomatonKind {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.write_str(self.name())
    }
}

/// A structural problem found by validation.
#[derive(Debug, Clone, PartialEq)]
pub enum Violation {
    EmptyStates,
    EmptyInputAlphabet,
    EmptyOutputAlphabet,
    DuplicateState(String),
    DuplicateInputSymbol(String),
    DuplicateOutputSymbol(String),
    /// A stored weight lies outside the semiring's carrier.
    CarrierViolation {
        context: String,
        value: Value,
    },
    /// A component was built over a different semiring than the automaton.
    SemiringMismatch {
        context: String,
    },
    /// A component was built over a different state set than the automaton.
    StateSetMismatch {
        context: String,
    },
    /// A family map is keyed by a symbol index outside the alphabet.
    KeyOutOfRange {
        context: String,
    },
    /// The designated initial state is not a state.
    InitialStateOutOfRange,
    /// The deterministic transition table is not |A| rows of |X| targets.
    TransitionTableShape,
    /// A deterministic transition points outside the state set.
    TransitionTargetOutOfRange {
        context: String,
    },
}

impl core::fmt::Display for Violation {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            Violation::EmptyStates => f.write_str("state set is empty"),
            Violation::EmptyInputAlphabet => f.write_str("input alphabet is empty"),
            Violation::EmptyOutputAlphabet => f.write_str("output alphabet is empty"),
            Violation::DuplicateState(name) => write!(f, "duplicate state {name:?}"),
            Violation::DuplicateInputSymbol(s) => write!(f, "duplicate input symbol {s:?}"),
            Violation::DuplicateOutputSymbol(s) => write!(f, "duplicate output symbol {s:?}"),
            Violation::CarrierViolation { context, value } => {
                write!(f, "{context}: weight {value} is outside the carrier")
            }
            Violation::SemiringMismatch { context } => {
                write!(f, "{context}: built over a different semiring")
            }
            Violation::StateSetMismatch { context } => {
                write!(f, "{context}: built over a different state set")
            }
            Violation::KeyOutOfRange { context } => {
                write!(f, "{context}: symbol index outside the alphabet")
            }
            Violation::InitialStateOutOfRange => f.write_str("initial state is not a state"),
            Violation::TransitionTableShape => {
                f.write_str("transition table is not |A| rows of |X| entries")
            }
            Violation::TransitionTargetOutOfRange { context } => {
                write!(f, "{context}: transition target is not a state")
            }
        }
    }
}

fn duplicates<'a>(names: impl Iterator<Item = &'a str>) -> Vec<String> {
    let mut seen = alloc::collections::BTreeSet::new();
    let mut dups = Vec::new();
    for n in names {
        if !seen.insert(n) {
            dups.push(String::from(n));
        }
    }
    dups
}

fn base_violations(states: &States, input: &Alphabet, output: &Alphabet, out: &mut Vec<Violation>) {
    if states.is_empty() {
        out.push(Violation::EmptyStates);
    }
    if input.is_empty() {
        out.push(Violation::EmptyInputAlphabet);
    }
    if output.is_empty() {
        out.push(Violation::EmptyOutputAlphabet);
    }
    for d in duplicates(states.iter()) {
        out.push(Violation::DuplicateState(d));
    }
    for d in duplicates(input.iter()) {
        out.push(Violation::DuplicateInputSymbol(d));
    }
    for d in duplicates(output.iter()) {
        out.push(Violation::DuplicateOutputSymbol(d));
    }
}

fn check_vector(
    semiring: Semiring,
    states: &States,
    v: &SrVector,
    context: &str,
    out: &mut Vec<Violation>,
) {
    if v.semiring() != semiring {
        out.push(Violation::SemiringMismatch {
            context: String::from(context),
        });
        return;
    }
    if v.states() != states {
        out.push(Violation::StateSetMismatch {
            context: String::from(context),
        });
        return;
    }
    for (i, value) in v.iter() {
        if !semiring.contains(value) {
            out.push(Violation::CarrierViolation {
                context: format!("{context}, state {:?}", states.name(i)),
                value: *value,
            });
        }
    }
}

fn check_matrix(
    semiring: Semiring,
    states: &States,
    m: &SrMatrix,
    context: &str,
    out: &mut Vec<Violation>,
) {
    if m.semiring() != semiring {
        out.push(Violation::SemiringMismatch {
            context: String::from(context),
        });
        return;
    }
    if m.states() != states {
        out.push(Violation::StateSetMismatch {
            context: String::from(context),
        });
        return;
    }
    for (a, b, value) in m.iter() {
        if !semiring.contains(value) {
            out.push(Violation::CarrierViolation {
                context: format!(
                    "{context}, entry ({:?}, {:?})",
                    states.name(a),
                    states.name(b)
                ),
                value: *value,
            });
        }
    }
}

/// A sequential weighted automaton: one weighted transition-output matrix
/// per pair of an input and an output symbol.
#[derive(Debug, Clone, PartialEq)]
pub struct SequentialWfa {
    semiring: Semiring,
    states: States,
    input_alphabet: Alphabet,
    output_alphabet: Alphabet,
    initial: SrVector,
    transitions: BTreeMap<(usize, usize), SrMatrix>,
}

impl SequentialWfa {
    pub fn new(
        semiring: Semiring,
        states: States,
        input_alphabet: Alphabet,
        output_alphabet: Alphabet,
        initial: SrVector,
        mut transitions: BTreeMap<(usize, usize), SrMatrix>,
    ) -> SequentialWfa {
        transitions.retain(|_, m| !m.is_all_zero());
        SequentialWfa {
            semiring,
            states,
            input_alphabet,
            output_alphabet,
            initial,
            transitions,
        }
    }

    pub fn semiring(&self) -> Semiring {
        self.semiring
    }

    pub fn states(&self) -> &States {
        &self.states
    }

    pub fn input_alphabet(&self) -> &Alphabet {
        &self.input_alphabet
    }

    pub fn output_alphabet(&self) -> &Alphabet {
        &self.output_alphabet
    }

    pub fn initial(&self) -> &SrVector {
        &self.initial
    }

    /// The matrix for (x, y), if any entry of it is nonzero.
    pub fn transition_matrix(&self, x: usize, y: usize) -> Option<&SrMatrix> {
        self.transitions.get(&(x, y))
    }

    pub fn transition_family(&self) -> impl Iterator<Item = ((usize, usize), &SrMatrix)> {
        self.transitions.iter().map(|(k, m)| (*k, m))
    }

    pub fn validate(&self) -> Vec<Violation> {
        let mut out = Vec::new();
        base_violations(
            &self.states,
            &self.input_alphabet,
            &self.output_alphabet,
            &mut out,
        );
        check_vector(
            self.semiring,
            &self.states,
            &self.initial,
            "initial weight vector",
            &mut out,
        );
        for (&(x, y), m) in &self.transitions {
            if x >= self.input_alphabet.len() || y >= self.output_alphabet.len() {
                out.push(Violation::KeyOutOfRange {
                    context: format!("transition matrix keyed ({x}, {y})"),
                });
                continue;
            }
            let context = format!(
                "transition matrix for input {:?}, output {:?}",
                self.input_alphabet.symbol(x),
                self.output_alphabet.symbol(y)
            );
            check_matrix(self.semiring, &self.states, m, &context, &mut out);
        }
        out
    }
}

/// A Mealy-type weighted automaton: transition matrices keyed by input
/// symbol, output weight vectors keyed by (input, output) pairs.
#[derive(Debug, Clone, PartialEq)]
pub struct MealyWfa {
    semiring: Semiring,
    states: States,
    input_alphabet: Alphabet,
    output_alphabet: Alphabet,
    initial: SrVector,
    transitions: BTreeMap<usize, SrMatrix>,
    outputs: BTreeMap<(usize, usize), SrVector>,
}

impl MealyWfa {
    pub fn new(
        semiring: Semiring,
        states: States,
        input_alphabet: Alphabet,
        output_alphabet: Alphabet,
        initial: SrVector,
        mut transitions: BTreeMap<usize, SrMatrix>,
        mut outputs: BTreeMap<(usize, usize), SrVector>,
    ) -> MealyWfa {
        transitions.retain(|_, m| !m.is_all_zero());
        outputs.retain(|_, v| !v.is_all_zero());
        MealyWfa {
            semiring,
            states,
            input_alphabet,
            output_alphabet,
            initial,
            transitions,
            outputs,
        }
    }

    pub fn semiring(&self) -> Semiring {
        self.semiring
    }

    pub fn states(&self) -> &States {
        &self.states
    }

    pub fn input_alphabet(&self) -> &Alphabet {
        &self.input_alphabet
    }

    pub fn output_alphabet(&self) -> &Alphabet {
        &self.output_alphabet
    }

    pub fn initial(&self) -> &SrVector {
        &self.initial
    }

    pub fn transition(&self, x: usize) -> Option<&SrMatrix> {
        self.transitions.get(&x)
    }

    pub fn transition_family(&self) -> impl Iterator<Item = (usize, &SrMatrix)> {
        self.transitions.iter().map(|(k, m)| (*k, m))
    }

    /// The output weight vector for the pair (x, y), if nonzero.
    pub fn output(&self, x: usize, y: usize) -> Option<&SrVector> {
        self.outputs.get(&(x, y))
    }

    pub fn output_family(&self) -> impl Iterator<Item = ((usize, usize), &SrVector)> {
        self.outputs.iter().map(|(k, v)| (*k, v))
    }

    pub fn validate(&self) -> Vec<Violation> {
        let mut out = Vec::new();
        base_violations(
            &self.states,
            &self.input_alphabet,
            &self.output_alphabet,
            &mut out,
        );
        check_vector(
            self.semiring,
            &self.states,
            &self.initial,
            "initial weight vector",
            &mut out,
        );
        for (&x, m) in &self.transitions {
            if x >= self.input_alphabet.len() {
                out.push(Violation::KeyOutOfRange {
                    context: format!("transition matrix keyed {x}"),
                });
                continue;
            }
            let context = format!(
                "transition matrix for input {:?}",
                self.input_alphabet.symbol(x)
            );
            check_matrix(self.semiring, &self.states, m, &context, &mut out);
        }
        for (&(x, y), v) in &self.outputs {
            if x >= self.input_alphabet.len() || y >= self.output_alphabet.len() {
                out.push(Violation::KeyOutOfRange {
                    context: format!("output vector keyed ({x}, {y})"),
                });
                continue;
            }
            let context = format!(
                "output vector for input {:?}, output {:?}",
                self.input_alphabet.symbol(x),
                self.output_alphabet.symbol(y)
            );
            check_vector(self.semiring, &self.states, v, &context, &mut out);
        }
        out
    }

    /// True iff the initial vector is a unit vector and every row of every
    /// transition matrix holds exactly one 1 and zeros elsewhere.
    pub fn is_crisp_deterministic(&self) -> bool {
        crisp_parts(
            self.semiring,
            &self.states,
            self.input_alphabet.len(),
            &self.initial,
            |x| self.transition(x),
        )
        .is_ok()
    }

    /// Convert to the functional crisp-deterministic form.
    pub fn to_crisp(&self) -> Result<CrispDetMealy> {
        let (initial_state, table) = crisp_parts(
            self.semiring,
            &self.states,
            self.input_alphabet.len(),
            &self.initial,
            |x| self.transition(x),
        )
        .map_err(|reason| Error::NotCrisp { reason })?;
        Ok(CrispDetMealy::new(
            self.semiring,
            self.states.clone(),
            self.input_alphabet.clone(),
            self.output_alphabet.clone(),
            initial_state,
            table,
            self.outputs.clone(),
        ))
    }
}

/// A Moore-type weighted automaton: output weight vectors keyed by the
/// output symbol alone.
#[derive(Debug, Clone, PartialEq)]
pub struct MooreWfa {
    semiring: Semiring,
    states: States,
    input_alphabet: Alphabet,
    output_alphabet: Alphabet,
    initial: SrVector,
    transitions: BTreeMap<usize, SrMatrix>,
    outputs: BTreeMap<usize, SrVector>,
}

impl MooreWfa {
    pub fn new(
        semiring: Semiring,
        states: States,
        input_alphabet: Alphabet,
        output_alphabet: Alphabet,
        initial: SrVector,
        mut transitions: BTreeMap<usize, SrMatrix>,
        mut outputs: BTreeMap<usize, SrVector>,
    ) -> MooreWfa {
        transitions.retain(|_, m| !m.is_all_zero());
        outputs.retain(|_, v| !v.is_all_zero());
        MooreWfa {
            semiring,
            states,
            input_alphabet,
            output_alphabet,
            initial,
            transitions,
            outputs,
        }
    }

    pub fn semiring(&self) -> Semiring {
        self.semiring
    }

    pub fn states(&self) -> &States {
        &self.states
    }

    pub fn input_alphabet(&self) -> &Alphabet {
        &self.input_alphabet
    }

    pub fn output_alphabet(&self) -> &Alphabet {
        &self.output_alphabet
    }

    pub fn initial(&self) -> &SrVector {
        &self.initial
    }

    pub fn transition(&self, x: usize) -> Option<&SrMatrix> {
        self.transitions.get(&x)
    }

    pub fn transition_family(&self) -> impl Iterator<Item = (usize, &SrMatrix)> {
        self.transitions.iter().map(|(k, m)| (*k, m))
    }

    /// The output weight vector for the output symbol y, if nonzero.
    pub fn output(&self, y: usize) -> Option<&SrVector> {
        self.outputs.get(&y)
    }

    pub fn output_family(&self) -> impl Iterator<Item = (usize, &SrVector)> {
        self.outputs.iter().map(|(k, v)| (*k, v))
    }

    pub fn validate(&self) -> Vec<Violation> {
        let mut out = Vec::new();
        base_violations(
            &self.states,
            &self.input_alphabet,
            &self.output_alphabet,
            &mut out,
        );
        check_vector(
            self.semiring,
            &self.states,
            &self.initial,
            "initial weight vector",
            &mut out,
        );
        for (&x, m) in &self.transitions {
            if x >= self.input_alphabet.len() {
                out.push(Violation::KeyOutOfRange {
                    context: format!("transition matrix keyed {x}"),
                });
                continue;
            }
            let context = format!(
                "transition matrix for input {:?}",
                self.input_alphabet.symbol(x)
            );
            check_matrix(self.semiring, &self.states, m, &context, &mut out);
        }
        for (&y, v) in &self.outputs {
            if y >= self.output_alphabet.len() {
                out.push(Violation::KeyOutOfRange {
                    context: format!("output vector keyed {y}"),
                });
                continue;
            }
            let context = format!(
                "output vector for output {:?}",
                self.output_alphabet.symbol(y)
            );
            check_vector(self.semiring, &self.states, v, &context, &mut out);
        }
        out
    }

    pub fn is_crisp_deterministic(&self) -> bool {
        crisp_parts(
            self.semiring,
            &self.states,
            self.input_alphabet.len(),
            &self.initial,
            |x| self.transition(x),
        )
        .is_ok()
    }

    pub fn to_crisp(&self) -> Result<CrispDetMoore> {
        let (initial_state, table) = crisp_parts(
            self.semiring,
            &self.states,
            self.input_alphabet.len(),
            &self.initial,
            |x| self.transition(x),
        )
        .map_err(|reason| Error::NotCrisp { reason })?;
        Ok(CrispDetMoore::new(
            self.semiring,
            self.states.clone(),
            self.input_alphabet.clone(),
            self.output_alphabet.clone(),
            initial_state,
            table,
            self.outputs.clone(),
        ))
    }
}

/// Decompose a crisp-deterministic (initial vector, transition family) into
/// an initial state and a total transition table, or explain why not.
fn crisp_parts<'a>(
    semiring: Semiring,
    states: &States,
    input_len: usize,
    initial: &SrVector,
    transition: impl Fn(usize) -> Option<&'a SrMatrix>,
) -> core::result::Result<(usize, Vec<Vec<usize>>), String> {
    let near = |v: &Value, target: &Value| semiring.elem_eq(v, target).unwrap_or(false);
    let one = semiring.one();
    let zero = semiring.zero();

    let mut initial_state = None;
    for a in 0..states.len() {
        let v = initial.get(a);
        if near(&v, &one) {
            if initial_state.is_some() {
                return Err(String::from("initial vector holds more than one 1"));
            }
            initial_state = Some(a);
        } else if !near(&v, &zero) {
            return Err(format!(
                "initial weight of state {:?} is neither 0 nor 1",
                states.name(a)
            ));
        }
    }
    let initial_state = initial_state.ok_or_else(|| String::from("initial vector holds no 1"))?;

    let mut table = Vec::with_capacity(states.len());
    for a in 0..states.len() {
        let mut row = Vec::with_capacity(input_len);
        for x in 0..input_len {
            let mut target = None;
            for b in 0..states.len() {
                let v = match transition(x) {
                    Some(m) => m.get(a, b),
                    None => zero,
                };
                if near(&v, &one) {
                    if target.is_some() {
                        return Err(format!(
                            "row {:?} of the transition matrix for input {x} holds more than one 1",
                            states.name(a)
                        ));
                    }
                    target = Some(b);
                } else if !near(&v, &zero) {
                    return Err(format!(
                        "entry ({:?}, {:?}) of the transition matrix for input {x} \
                         is neither 0 nor 1",
                        states.name(a),
                        states.name(b)
                    ));
                }
            }
            match target {
                Some(b) => row.push(b),
                None => {
                    return Err(format!(
                        "row {:?} of the transition matrix for input {x} holds no 1",
                        states.name(a)
                    ))
                }
            }
        }
        table.push(row);
    }
    Ok((initial_state, table))
}

/// A crisp-deterministic Mealy-type automaton in functional form: a single
/// initial state and a total transition function A × X → A.
#[derive(Debug, Clone, PartialEq)]
pub struct CrispDetMealy {
    semiring: Semiring,
    states: States,
    input_alphabet: Alphabet,
    output_alphabet: Alphabet,
    initial_state: usize,
    table: Vec<Vec<usize>>,
    outputs: BTreeMap<(usize, usize), SrVector>,
}

impl CrispDetMealy {
    pub fn new(
        semiring: Semiring,
        states: States,
        input_alphabet: Alphabet,
        output_alphabet: Alphabet,
        initial_state: usize,
        table: Vec<Vec<usize>>,
        mut outputs: BTreeMap<(usize, usize), SrVector>,
    ) -> CrispDetMealy {
        outputs.retain(|_, v| !v.is_all_zero());
        CrispDetMealy {
            semiring,
            states,
            input_alphabet,
            output_alphabet,
            initial_state,
            table,
            outputs,
        }
    }

    pub fn semiring(&self) -> Semiring {
        self.semiring
    }

    pub fn states(&self) -> &States {
        &self.states
    }

    pub fn input_alphabet(&self) -> &Alphabet {
        &self.input_alphabet
    }

    pub fn output_alphabet(&self) -> &Alphabet {
        &self.output_alphabet
    }

    pub fn initial_state(&self) -> usize {
        self.initial_state
    }

    /// The unique successor of `state` on input `x`.
    pub fn next(&self, state: usize, x: usize) -> usize {
        self.table[state][x]
    }

    pub fn table(&self) -> &[Vec<usize>] {
        &self.table
    }

    pub fn output(&self, x: usize, y: usize) -> Option<&SrVector> {
        self.outputs.get(&(x, y))
    }

    pub fn output_family(&self) -> impl Iterator<Item = ((usize, usize), &SrVector)> {
        self.outputs.iter().map(|(k, v)| (*k, v))
    }

    /// The output weight of `state` under (x, y).
    pub fn output_weight(&self, state: usize, x: usize, y: usize) -> Value {
        match self.outputs.get(&(x, y)) {
            Some(v) => v.get(state),
            None => self.semiring.zero(),
        }
    }

    /// Expand into the matrix-form Mealy automaton with 0/1 transitions.
    pub fn to_general(&self) -> MealyWfa {
        let mut initial = SrVector::new(self.semiring, self.states.clone());
        initial.set(self.initial_state, self.semiring.one());
        let mut transitions = BTreeMap::new();
        for x in 0..self.input_alphabet.len() {
            let mut m = SrMatrix::new(self.semiring, self.states.clone());
            for a in 0..self.states.len() {
                m.set(a, self.table[a][x], self.semiring.one());
            }
            transitions.insert(x, m);
        }
        MealyWfa::new(
            self.semiring,
            self.states.clone(),
            self.input_alphabet.clone(),
            self.output_alphabet.clone(),
            initial,
            transitions,
            self.outputs.clone(),
        )
    }

    pub fn validate(&self) -> Vec<Violation> {
        let mut out = Vec::new();
        base_violations(
            &self.states,
            &self.input_alphabet,
            &self.output_alphabet,
            &mut out,
        );
        if self.initial_state >= self.states.len() {
            out.push(Violation::InitialStateOutOfRange);
        }
        validate_table(
            &self.table,
            &self.states,
            self.input_alphabet.len(),
            &mut out,
        );
        for (&(x, y), v) in &self.outputs {
            if x >= self.input_alphabet.len() || y >= self.output_alphabet.len() {
                out.push(Violation::KeyOutOfRange {
                    context: format!("output vector keyed ({x}, {y})"),
                });
                continue;
            }
            let context = format!(
                "output vector for input {:?}, output {:?}",
                self.input_alphabet.symbol(x),
                self.output_alphabet.symbol(y)
            );
            check_vector(self.semiring, &self.states, v, &context, &mut out);
        }
        out
    }
}

/// A crisp-deterministic Moore-type automaton in functional form.
#[derive(Debug, Clone, PartialEq)]
pub struct CrispDetMoore {
    semiring: Semiring,
    states: States,
    input_alphabet: Alphabet,
    output_alphabet: Alphabet,
    initial_state: usize,
    table: Vec<Vec<usize>>,
    outputs: BTreeMap<usize, SrVector>,
}

impl CrispDetMoore {
    pub fn new(
        semiring: Semiring,
        states: States,
        input_alphabet: Alphabet,
        output_alphabet: Alphabet,
        initial_state: usize,
        table: Vec<Vec<usize>>,
        mut outputs: BTreeMap<usize, SrVector>,
    ) -> CrispDetMoore {
        outputs.retain(|_, v| !v.is_all_zero());
        CrispDetMoore {
            semiring,
            states,
            input_alphabet,
            output_alphabet,
            initial_state,
            table,
            outputs,
        }
    }

    pub fn semiring(&self) -> Semiring {
        self.semiring
    }

    pub fn states(&self) -> &States {
        &self.states
    }

    pub fn input_alphabet(&self) -> &Alphabet {
        &self.input_alphabet
    }

    pub fn output_alphabet(&self) -> &Alphabet {
        &self.output_alphabet
    }

    pub fn initial_state(&self) -> usize {
        self.initial_state
    }

    pub fn next(&self, state: usize, x: usize) -> usize {
        self.table[state][x]
    }

    pub fn table(&self) -> &[Vec<usize>] {
        &self.table
    }

    pub fn output(&self, y: usize) -> Option<&SrVector> {
        self.outputs.get(&y)
    }

    pub fn output_family(&self) -> impl Iterator<Item = (usize, &SrVector)> {
        self.outputs.iter().map(|(k, v)| (*k, v))
    }

    pub fn output_weight(&self, state: usize, y: usize) -> Value {
        match self.outputs.get(&y) {
            Some(v) => v.get(state),
            None => self.semiring.zero(),
        }
    }

    pub fn to_general(&self) -> MooreWfa {
        let mut initial = SrVector::new(self.semiring, self.states.clone());
        initial.set(self.initial_state, self.semiring.one());
        let mut transitions = BTreeMap::new();
        for x in 0..self.input_alphabet.len() {
            let mut m = SrMatrix::new(self.semiring, self.states.clone());
            for a in 0..self.states.len() {
                m.set(a, self.table[a][x], self.semiring.one());
            }
            transitions.insert(x, m);
        }
        MooreWfa::new(
            self.semiring,
            self.states.clone(),
            self.input_alphabet.clone(),
            self.output_alphabet.clone(),
            initial,
            transitions,
            self.outputs.clone(),
        )
    }

    pub fn validate(&self) -> Vec<Violation> {
        let mut out = Vec::new();
        base_violations(
            &self.states,
            &self.input_alphabet,
            &self.output_alphabet,
            &mut out,
        );
        if self.initial_state >= self.states.len() {
            out.push(Violation::InitialStateOutOfRange);
        }
        validate_table(
            &self.table,
            &self.states,
            self.input_alphabet.len(),
            &mut out,
        );
        for (&y, v) in &self.outputs {
            if y >= self.output_alphabet.len() {
                out.push(Violation::KeyOutOfRange {
                    context: format!("output vector keyed {y}"),
                });
                continue;
            }
            let context = format!(
                "output vector for output {:?}",
                self.output_alphabet.symbol(y)
            );
            check_vector(self.semiring, &self.states, v, &context, &mut out);
        }
        out
    }
}

fn validate_table(
    table: &[Vec<usize>],
    states: &States,
    input_len: usize,
    out: &mut Vec<Violation>,
) {
    if table.len() != states.len() || table.iter().any(|row| row.len() != input_len) {
        out.push(Violation::TransitionTableShape);
        return;
    }
    for (a, row) in table.iter().enumerate() {
        for (x, &b) in row.iter().enumerate() {
            if b >= states.len() {
                out.push(Violation::TransitionTargetOutOfRange {
                    context: format!("state {:?}, input index {x}", states.name(a)),
                });
            }
        }
    }
}

/// Any of the five automaton models.
#[derive(Debug, Clone, PartialEq)]
pub enum Automaton {
    Sequential(SequentialWfa),
    Mealy(MealyWfa),
    Moore(MooreWfa),
    CdMealy(CrispDetMealy),
    CdMoore(CrispDetMoore),
}

impl Automaton {
    pub fn kind(&self) -> AutomatonKind {
        match self {
            Automaton::Sequential(_) => AutomatonKind::Sequential,
            Automaton::Mealy(_) => AutomatonKind::Mealy,
            Automaton::Moore(_) => AutomatonKind::Moore,
            Automaton::CdMealy(_) => AutomatonKind::CdMealy,
            Automaton::CdMoore(_) => AutomatonKind::CdMoore,
        }
    }

    pub fn semiring(&self) -> Semiring {
        match self {
            Automaton::Sequential(a) => a.semiring(),
            Automaton::Mealy(a) => a.semiring(),
            Automaton::Moore(a) => a.semiring(),
            Automaton::CdMealy(a) => a.semiring(),
            Automaton::CdMoore(a) => a.semiring(),
        }
    }

    pub fn states(&self) -> &States {
        match self {
            Automaton::Sequential(a) => a.states(),
            Automaton::Mealy(a) => a.states(),
            Automaton::Moore(a) => a.states(),
            Automaton::CdMealy(a) => a.states(),
            Automaton::CdMoore(a) => a.states(),
        }
    }

    pub fn input_alphabet(&self) -> &Alphabet {
        match self {
            Automaton::Sequential(a) => a.input_alphabet(),
            Automaton::Mealy(a) => a.input_alphabet(),
            Automaton::Moore(a) => a.input_alphabet(),
            Automaton::CdMealy(a) => a.input_alphabet(),
            Automaton::CdMoore(a) => a.input_alphabet(),
        }
    }

    pub fn output_alphabet(&self) -> &Alphabet {
        match self {
            Automaton::Sequential(a) => a.output_alphabet(),
            Automaton::Mealy(a) => a.output_alphabet(),
            Automaton::Moore(a) => a.output_alphabet(),
            Automaton::CdMealy(a) => a.output_alphabet(),
            Automaton::CdMoore(a) => a.output_alphabet(),
        }
    }

    pub fn validate(&self) -> Vec<Violation> {
        match self {
            Automaton::Sequential(a) => a.validate(),
            Automaton::Mealy(a) => a.validate(),
            Automaton::Moore(a) => a.validate(),
            Automaton::CdMealy(a) => a.validate(),
            Automaton::CdMoore(a) => a.validate(),
        }
    }
}

impl From<SequentialWfa> for Automaton {
    fn from(a: SequentialWfa) -> Automaton {
        Automaton::Sequential(a)
    }
}

impl From<MealyWfa> for Automaton {
    fn from(a: MealyWfa) -> Automaton {
        Automaton::Mealy(a)
    }
}

impl From<MooreWfa> for Automaton {
    fn from(a: MooreWfa) -> Automaton {
        Automaton::Moore(a)
    }
}

impl From<CrispDetMealy> for Automaton {
    fn from(a: CrispDetMealy) -> Automaton {
        Automaton::CdMealy(a)
    }
}

impl From<CrispDetMoore> for Automaton {
    fn from(a: CrispDetMoore) -> Automaton {
        Automaton::CdMoore(a)
    }
}
