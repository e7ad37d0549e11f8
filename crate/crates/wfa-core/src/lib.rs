//! Weighted finite automata with output over generic semirings.
//!
//! This crate implements three models of weighted automata that transform
//! input words into output words:
//!
//! - [`automata::SequentialWfa`]: a single weighted transition-output
//!   function combines the move and the emission,
//! - [`automata::MealyWfa`]: separate transition weights and output weights,
//!   where the emission depends on the current state and input,
//! - [`automata::MooreWfa`]: output weights that depend only on the state.
//!
//! Weights live in one of six shipped semirings (see [`semiring::Semiring`]).
//! A behavior assigns to every pair of equal-length input/output words a
//! semiring value; Mealy machines support three inequivalent semantics
//! (`1n`, `n1`, `s`) and Moore machines two (`1n`, `n1`), all evaluated by
//! [`semantics::behavior`] and cross-checkable against the brute-force
//! path-sum evaluator [`semantics::behavior_oracle`].
//!
//! The [`convert`] module provides six constructive conversions between the
//! models, each preserving a stated pair of semantics and respecting a state
//! bound, and [`equiv`] compares two behaviors by bounded enumeration of
//! word pairs.
//!
//! The crate is `no_std` (with `alloc`); file formats and the command-line
//! front end live in the companion `wfa-cli` crate.
//!
//! ```
//! use std::collections::BTreeMap;
//! use wfa_core::algebra::{SrMatrix, SrVector, States};
//! use wfa_core::automata::{Alphabet, Automaton, MealyWfa};
//! use wfa_core::semantics::{behavior, Semantics};
//! use wfa_core::{Semiring, Value, WordPair};
//!
//! // A two-state Mealy machine over the Gödel semiring ([0,1], max, min).
//! let sr = Semiring::Godel;
//! let states = States::new(["a1", "a2"]);
//! let r = Value::Real;
//! let initial = SrVector::from_dense(sr, states.clone(), &[r(1.0), r(0.0)]);
//! let step = SrMatrix::from_rows(sr, states.clone(), &[&[r(0.7), r(0.5)], &[r(0.0), r(0.8)]]);
//! let outputs = BTreeMap::from([
//!     ((0, 0), SrVector::from_dense(sr, states.clone(), &[r(0.6), r(0.4)])),
//!     ((0, 1), SrVector::from_dense(sr, states.clone(), &[r(0.2), r(0.7)])),
//! ]);
//! let m = MealyWfa::new(
//!     sr,
//!     states,
//!     Alphabet::new(["0"]),
//!     Alphabet::new(["0", "1"]),
//!     initial,
//!     BTreeMap::from([(0, step)]),
//!     outputs,
//! );
//!
//! // The same word pair under two semantics.
//! let aut = Automaton::Mealy(m);
//! let w = WordPair::parse("0,0,0", "0,1,0")?;
//! assert_eq!(behavior(&aut, Semantics::OneN, &w)?, r(0.4));
//! assert_eq!(behavior(&aut, Semantics::N1, &w)?, r(0.5));
//! # Ok::<(), wfa_core::Error>(())
//! ```

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod algebra;
pub mod automata;
pub mod convert;
pub mod equiv;
pub mod semantics;
pub mod semiring;

mod rng;

#[cfg(test)]
mod testkit;

pub use algebra::{SrMatrix, SrVector, States};
pub use automata::{
    Automaton, AutomatonKind, CrispDetMealy, CrispDetMoore, MealyWfa, MooreWfa, SequentialWfa,
    WordPair,
};
pub use semantics::Semantics;
pub use semiring::{Semiring, Value};

use alloc::string::String;

/// Crate-wide error type.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    /// A value was handed to a semiring whose carrier does not contain it.
    #[error("value {value} does not belong to the {semiring} semiring")]
    SemiringMismatch { semiring: Semiring, value: Value },

    /// Additive powers are defined for positive exponents only.
    #[error("additive power requires n >= 1")]
    ZeroAdditivePower,

    /// Two objects over different semirings were combined.
    #[error("semirings differ: {left} vs {right}")]
    SemiringsDiffer { left: Semiring, right: Semiring },

    /// Two objects over different (or differently ordered) state sets were combined.
    #[error("state sets differ or are ordered differently")]
    StateSetMismatch,

    /// An operation requires a non-empty state set.
    #[error("state set is empty")]
    EmptyStates,

    /// The two automata compared do not share their alphabets.
    #[error("alphabets differ")]
    AlphabetMismatch,

    /// A word used a symbol that is not in the automaton's alphabet.
    #[error("unknown {role} symbol {symbol:?}")]
    UnknownSymbol { role: SymbolRole, symbol: String },

    /// Paired words must have equal length.
    #[error("input and output words differ in length: {input} vs {output}")]
    WordLengthMismatch { input: usize, output: usize },

    /// The semantics tag cannot be applied to this automaton model.
    #[error("semantics {tag} does not apply to a {kind} automaton")]
    IncompatibleSemantics { tag: Semantics, kind: AutomatonKind },

    /// The brute-force evaluator would enumerate too many state tuples.
    #[error("brute-force evaluation needs {required} state tuples, above the limit of {limit}")]
    EnumerationBound { required: u128, limit: u128 },

    /// The equivalence check would enumerate too many word pairs.
    #[error("equivalence check needs {required} word pairs, above the limit of {limit}")]
    TooManyWordPairs { required: u128, limit: u128 },

    /// A machine expected to be crisp-deterministic is not.
    #[error("automaton is not crisp-deterministic: {reason}")]
    NotCrisp { reason: String },

    /// No additive power p <= p_max satisfies the conversion condition.
    #[error(
        "no p <= {p_max} satisfies the additive-power condition for k = {k}: \
         witness value {witness}"
    )]
    PowerConditionUnsatisfied { p_max: u64, k: u64, witness: String },

    /// An automaton failed validation.
    #[error("invalid automaton: {0}")]
    Invalid(automata::Violation),

    /// A size or argument outside the supported range.
    #[error("{0}")]
    InvalidArgument(String),
}

/// Which alphabet a symbol was looked up in.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SymbolRole {
    Input,
    Output,
}

impl core::fmt::Display for SymbolRole {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            SymbolRole::Input => f.write_str("input"),
            SymbolRole::Output => f.write_str("output"),
        }
    }
}

pub type Result<T> = core::result::Result<T, Error>;
