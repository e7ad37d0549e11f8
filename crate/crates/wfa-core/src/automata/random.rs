//! Seeded random automata for property tests.
//!
//! Generation is fully determined by (kind, semiring, dimensions, seed).
//! Weights are drawn from a small palette containing the semiring's zero and
//! one plus a few mid-range carrier values, so structural zeros and
//! annihilation paths occur in every sufficiently large sample. The
//! real-valued palette entries are dyadic, which keeps float products exact.

use super::{
    Alphabet, Automaton, AutomatonKind, CrispDetMealy, CrispDetMoore, MealyWfa, MooreWfa,
    SequentialWfa,
};
use crate::algebra::{SrMatrix, SrVector, States};
use crate::rng::SplitMix64;
use crate::semiring::{Semiring, Value};
use crate::{Error, Result};
use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

/// Requested sizes of the generated automaton.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Dimensions {
    pub states: usize,
    pub inputs: usize,
    pub outputs: usize,
}

impl Dimensions {
    pub fn new(states: usize, inputs: usize, outputs: usize) -> Dimensions {
        Dimensions {
            states,
            inputs,
            outputs,
        }
    }
}

/// The weight palette the generator samples from: zero, one, and mid-range
/// carrier values (the Boolean semiring has no mid-range).
pub fn weight_palette(semiring: Semiring) -> Vec<Value> {
    fn real(values: [f64; 6]) -> Vec<Value> {
        values.into_iter().map(Value::Real).collect()
    }
    match semiring {
        Semiring::Boolean => vec![Value::Bool(false), Value::Bool(true)],
        Semiring::Godel | Semiring::Viterbi => real([0.0, 1.0, 0.125, 0.25, 0.5, 0.75]),
        Semiring::Tropical => real([f64::INFINITY, 0.0, 0.5, 1.0, 2.0, 3.5]),
        Semiring::Naturals => [0u64, 1, 2, 3, 5, 7].into_iter().map(Value::Nat).collect(),
        Semiring::Rationals => vec![
            Value::rational(0, 1),
            Value::rational(1, 1),
            Value::rational(1, 2),
            Value::rational(1, 3),
            Value::rational(2, 3),
            Value::rational(5, 2),
        ],
    }
}

/// Generate a valid automaton of the requested kind, deterministically in
/// (kind, semiring, dimensions, seed).
pub fn random_automaton(
    kind: AutomatonKind,
    semiring: Semiring,
    dims: Dimensions,
    seed: u64,
) -> Result<Automaton> {
    if dims.states == 0 || dims.inputs == 0 || dims.outputs == 0 {
        return Err(Error::InvalidArgument(format!(
            "dimensions must be positive, got {} states, {} inputs, {} outputs",
            dims.states, dims.inputs, dims.outputs
        )));
    }
    let states = States::new((0..dims.states).map(|i| format!("q{i}")));
    let input_alphabet = Alphabet::new((0..dims.inputs).map(|i| format!("x{i}")));
    let output_alphabet = Alphabet::new((0..dims.outputs).map(|i| format!("y{i}")));
    let palette = weight_palette(semiring);
    let mut rng = SplitMix64::new(seed);
    let mut draw = move |rng: &mut SplitMix64| palette[rng.below(palette.len())];

    let random_vector = |rng: &mut SplitMix64, draw: &mut dyn FnMut(&mut SplitMix64) -> Value| {
        let mut v = SrVector::new(semiring, states.clone());
        for a in 0..dims.states {
            v.set(a, draw(rng));
        }
        v
    };
    let random_matrix = |rng: &mut SplitMix64, draw: &mut dyn FnMut(&mut SplitMix64) -> Value| {
        let mut m = SrMatrix::new(semiring, states.clone());
        for a in 0..dims.states {
            for b in 0..dims.states {
                m.set(a, b, draw(rng));
            }
        }
        m
    };

    Ok(match kind {
        AutomatonKind::Sequential => {
            let initial = random_vector(&mut rng, &mut draw);
            let mut transitions = BTreeMap::new();
            for x in 0..dims.inputs {
                for y in 0..dims.outputs {
                    transitions.insert((x, y), random_matrix(&mut rng, &mut draw));
                }
            }
            SequentialWfa::new(
                semiring,
                states.clone(),
                input_alphabet,
                output_alphabet,
                initial,
                transitions,
            )
            .into()
        }
        AutomatonKind::Mealy => {
            let initial = random_vector(&mut rng, &mut draw);
            let mut transitions = BTreeMap::new();
            for x in 0..dims.inputs {
                transitions.insert(x, random_matrix(&mut rng, &mut draw));
            }
            let mut outputs = BTreeMap::new();
            for x in 0..dims.inputs {
                for y in 0..dims.outputs {
                    outputs.insert((x, y), random_vector(&mut rng, &mut draw));
                }
            }
            MealyWfa::new(
                semiring,
                states.clone(),
                input_alphabet,
                output_alphabet,
                initial,
                transitions,
                outputs,
            )
            .into()
        }
        AutomatonKind::Moore => {
            let initial = random_vector(&mut rng, &mut draw);
            let mut transitions = BTreeMap::new();
            for x in 0..dims.inputs {
                transitions.insert(x, random_matrix(&mut rng, &mut draw));
            }
            let mut outputs = BTreeMap::new();
            for y in 0..dims.outputs {
                outputs.insert(y, random_vector(&mut rng, &mut draw));
            }
            MooreWfa::new(
                semiring,
                states.clone(),
                input_alphabet,
                output_alphabet,
                initial,
                transitions,
                outputs,
            )
            .into()
        }
        AutomatonKind::CdMealy => {
            let initial_state = rng.below(dims.states);
            let table = random_table(&mut rng, dims);
            let mut outputs = BTreeMap::new();
            for x in 0..dims.inputs {
                for y in 0..dims.outputs {
                    outputs.insert((x, y), random_vector(&mut rng, &mut draw));
                }
            }
            CrispDetMealy::new(
                semiring,
                states.clone(),
                input_alphabet,
                output_alphabet,
                initial_state,
                table,
                outputs,
            )
            .into()
        }
        AutomatonKind::CdMoore => {
            let initial_state = rng.below(dims.states);
            let table = random_table(&mut rng, dims);
            let mut outputs = BTreeMap::new();
            for y in 0..dims.outputs {
                outputs.insert(y, random_vector(&mut rng, &mut draw));
            }
            CrispDetMoore::new(
                semiring,
                states.clone(),
                input_alphabet,
                output_alphabet,
                initial_state,
                table,
                outputs,
            )
            .into()
        }
    })
}

fn random_table(rng: &mut SplitMix64, dims: Dimensions) -> Vec<Vec<usize>> {
    (0..dims.states)
        .map(|_| (0..dims.inputs).map(|_| rng.below(dims.states)).collect())
        .collect()
}
