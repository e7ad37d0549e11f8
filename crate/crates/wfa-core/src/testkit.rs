//! Fixture machines shared by the unit tests.

use crate::algebra::{SrMatrix, SrVector, States};
use crate::automata::{Alphabet, MealyWfa};
use crate::semiring::{Semiring, Value};
use alloc::collections::BTreeMap;

pub(crate) fn r(x: f64) -> Value {
    Value::Real(x)
}

/// Gödel Mealy machine, |A| = 2, X = {0}, Y = {0, 1}:
/// initial [1, 0], one transition matrix [[0.7, 0.5], [0, 0.8]],
/// output vectors [0.6, 0.4] for (0, 0) and [0.2, 0.7] for (0, 1).
pub(crate) fn example1() -> MealyWfa {
    let sr = Semiring::Godel;
    let states = States::new(["a1", "a2"]);
    let initial = SrVector::from_dense(sr, states.clone(), &[r(1.0), r(0.0)]);
    let delta0 = SrMatrix::from_rows(sr, states.clone(), &[&[r(0.7), r(0.5)], &[r(0.0), r(0.8)]]);
    let mut transitions = BTreeMap::new();
    transitions.insert(0, delta0);
    let mut outputs = BTreeMap::new();
    outputs.insert(
        (0, 0),
        SrVector::from_dense(sr, states.clone(), &[r(0.6), r(0.4)]),
    );
    outputs.insert(
        (0, 1),
        SrVector::from_dense(sr, states.clone(), &[r(0.2), r(0.7)]),
    );
    MealyWfa::new(
        sr,
        states,
        Alphabet::new(["0"]),
        Alphabet::new(["0", "1"]),
        initial,
        transitions,
        outputs,
    )
}

/// Gödel Mealy machine, |A| = 2, X = {0, 1}, Y = {0}: as `example1` plus a
/// second transition matrix [[0.3, 1], [0.2, 0]]; output vectors
/// [0.6, 0.4] for (0, 0) and [0.2, 0.7] for (1, 0).
pub(crate) fn example2() -> MealyWfa {
    let sr = Semiring::Godel;
    let states = States::new(["a1", "a2"]);
    let initial = SrVector::from_dense(sr, states.clone(), &[r(1.0), r(0.0)]);
    let delta0 = SrMatrix::from_rows(sr, states.clone(), &[&[r(0.7), r(0.5)], &[r(0.0), r(0.8)]]);
    let delta1 = SrMatrix::from_rows(sr, states.clone(), &[&[r(0.3), r(1.0)], &[r(0.2), r(0.0)]]);
    let mut transitions = BTreeMap::new();
    transitions.insert(0, delta0);
    transitions.insert(1, delta1);
    let mut outputs = BTreeMap::new();
    outputs.insert(
        (0, 0),
        SrVector::from_dense(sr, states.clone(), &[r(0.6), r(0.4)]),
    );
    outputs.insert(
        (1, 0),
        SrVector::from_dense(sr, states.clone(), &[r(0.2), r(0.7)]),
    );
    MealyWfa::new(
        sr,
        states,
        Alphabet::new(["0", "1"]),
        Alphabet::new(["0"]),
        initial,
        transitions,
        outputs,
    )
}
