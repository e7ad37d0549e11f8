//! Shared fixtures and helpers for the integration tests.

#![allow(dead_code)]

use std::collections::BTreeMap;
use wfa_core::algebra::{SrMatrix, SrVector, States};
use wfa_core::automata::{Alphabet, MealyWfa};
use wfa_core::{Semiring, Value};

pub fn r(x: f64) -> Value {
    Value::Real(x)
}

/// Gödel Mealy machine, |A| = 2, X = {0}, Y = {0, 1}:
/// initial [1, 0], transition matrix [[0.7, 0.5], [0, 0.8]],
/// outputs [0.6, 0.4] for (0, 0) and [0.2, 0.7] for (0, 1).
pub fn example1() -> MealyWfa {
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
/// second transition matrix [[0.3, 1], [0.2, 0]]; outputs [0.6, 0.4] for
/// (0, 0) and [0.2, 0.7] for (1, 0).
pub fn example2() -> MealyWfa {
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

/// The same machine with a different initial vector.
pub fn with_initial(m: &MealyWfa, initial: SrVector) -> MealyWfa {
    MealyWfa::new(
        m.semiring(),
        m.states().clone(),
        m.input_alphabet().clone(),
        m.output_alphabet().clone(),
        initial,
        m.transition_family().map(|(x, d)| (x, d.clone())).collect(),
        m.output_family().map(|(k, v)| (k, v.clone())).collect(),
    )
}

/// Tiny deterministic stream for test-local sampling.
pub struct TestRng(u64);

impl TestRng {
    pub fn new(seed: u64) -> TestRng {
        TestRng(seed)
    }

    pub fn next_u64(&mut self) -> u64 {
        self.0 = self.0.wrapping_add(0x9e3779b97f4a7c15);
        let mut z = self.0;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
        z ^ (z >> 31)
    }

    pub fn below(&mut self, bound: usize) -> usize {
        (self.next_u64() % bound as u64) as usize
    }

    pub fn pick<'a, T>(&mut self, items: &'a [T]) -> &'a T {
        &items[self.below(items.len())]
    }
}

/// A random vector over the generator palette.
pub fn random_vector(semiring: Semiring, states: &States, rng: &mut TestRng) -> SrVector {
    let palette = wfa_core::automata::weight_palette(semiring);
    let mut v = SrVector::new(semiring, states.clone());
    for i in 0..states.len() {
        v.set(i, *rng.pick(&palette));
    }
    v
}

/// A random matrix over the generator palette.
pub fn random_matrix(semiring: Semiring, states: &States, rng: &mut TestRng) -> SrMatrix {
    let palette = wfa_core::automata::weight_palette(semiring);
    let mut m = SrMatrix::new(semiring, states.clone());
    for a in 0..states.len() {
        for b in 0..states.len() {
            m.set(a, b, *rng.pick(&palette));
        }
    }
    m
}
