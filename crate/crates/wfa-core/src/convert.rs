//! Constructive conversions between the three automaton models.
//!
//! Each conversion returns the constructed automaton together with a
//! [`ConversionReport`] naming the theorem it instantiates, the pair(s) of
//! semantics it preserves, and the parameters it fixed. Composite states
//! are named by joining the source names with `|`, so converted automata
//! remain serializable and traceable.
//!
//! | theorem | from       | to         | preserves          | states bound        |
//! |---------|------------|------------|--------------------|---------------------|
//! | 1       | Mealy      | sequential | s = seq            | |A|                 |
//! | 2       | Moore      | sequential | 1n = seq           | |A|                 |
//! | 3       | sequential | Moore      | seq = 1n           | |A| · |Y|           |
//! | 4       | Mealy      | Moore      | 1n = 1n, n1 = n1   | |A| · (|X| + 1)     |
//! | 5       | Moore      | Mealy      | 1n = 1n            | |A|²                |
//! | 6       | sequential | Mealy      | seq = s            | |A| · |X| · |Y|     |
//!
//! Theorem 6 applies only when some p <= p_max makes the (p · |X| · |Y|)-th
//! additive power fix every value in the image of the transition-output
//! function; [`find_additive_power`] searches for the smallest such p.

use crate::algebra::{diag, mat_mul, SrMatrix, SrVector, States};
use crate::automata::{AutomatonKind, MealyWfa, MooreWfa, SequentialWfa, Violation};
use crate::semantics::Semantics;
use crate::semiring::Value;
use crate::{Error, Result};
use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

/// What a conversion did and what it guarantees.
#[derive(Debug, Clone, PartialEq)]
pub struct ConversionReport {
    /// Which of the six conversion theorems was applied (1..=6).
    pub theorem: u8,
    pub source_kind: AutomatonKind,
    pub source_states: usize,
    pub target_kind: AutomatonKind,
    pub target_states: usize,
    /// (source tag, target tag) pairs guaranteed equal on every word pair.
    pub guarantees: Vec<(Semantics, Semantics)>,
    /// The additive power chosen by theorem 6.
    pub chosen_power: Option<u64>,
    /// The arbitrary output symbol fixed by theorem 3.
    pub fixed_output_symbol: Option<String>,
}

impl core::fmt::Display for ConversionReport {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(
            f,
            "theorem {}: {} ({} states) -> {} ({} states); guarantees",
            self.theorem,
            self.source_kind,
            self.source_states,
            self.target_kind,
            self.target_states
        )?;
        for (i, (src, tgt)) in self.guarantees.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, " {src} = {tgt}")?;
        }
        if let Some(p) = self.chosen_power {
            write!(f, "; p = {p}")?;
        }
        if let Some(y0) = &self.fixed_output_symbol {
            write!(f, "; fixed output symbol {y0:?}")?;
        }
        Ok(())
    }
}

fn ensure_valid(violations: Vec<Violation>) -> Result<()> {
    match violations.into_iter().next() {
        Some(v) => Err(Error::Invalid(v)),
        None => Ok(()),
    }
}

/// Theorem 1: a Mealy automaton as a sequential automaton over the same
/// states, with the per-pair matrix D(output) · transition. Preserves the
/// s-behavior as the sequential behavior.
pub fn mealy_to_sequential(a: &MealyWfa) -> Result<(SequentialWfa, ConversionReport)> {
    ensure_valid(a.validate())?;
    let mut transitions = BTreeMap::new();
    for ((x, y), out) in a.output_family() {
        if let Some(d) = a.transition(x) {
            transitions.insert((x, y), mat_mul(&diag(out), d)?);
        }
    }
    let b = SequentialWfa::new(
        a.semiring(),
        a.states().clone(),
        a.input_alphabet().clone(),
        a.output_alphabet().clone(),
        a.initial().clone(),
        transitions,
    );
    let report = ConversionReport {
        theorem: 1,
        source_kind: AutomatonKind::Mealy,
        source_states: a.states().len(),
        target_kind: AutomatonKind::Sequential,
        target_states: b.states().len(),
        guarantees: vec![(Semantics::S, Semantics::Seq)],
        chosen_power: None,
        fixed_output_symbol: None,
    };
    Ok((b, report))
}

/// Theorem 2: a Moore automaton as a sequential automaton over the same
/// states, with the per-pair matrix transition · D(output). Preserves the
/// 1n-behavior as the sequential behavior.
pub fn moore_to_sequential(a: &MooreWfa) -> Result<(SequentialWfa, ConversionReport)> {
    ensure_valid(a.validate())?;
    let mut transitions = BTreeMap::new();
    for (x, d) in a.transition_family() {
        for (y, out) in a.output_family() {
            transitions.insert((x, y), mat_mul(d, &diag(out))?);
        }
    }
    let b = SequentialWfa::new(
        a.semiring(),
        a.states().clone(),
        a.input_alphabet().clone(),
        a.output_alphabet().clone(),
        a.initial().clone(),
        transitions,
    );
    let report = ConversionReport {
        theorem: 2,
        source_kind: AutomatonKind::Moore,
        source_states: a.states().len(),
        target_kind: AutomatonKind::Sequential,
        target_states: b.states().len(),
        guarantees: vec![(Semantics::OneN, Semantics::Seq)],
        chosen_power: None,
        fixed_output_symbol: None,
    };
    Ok((b, report))
}

/// Theorem 3: a sequential automaton as a Moore automaton over states
/// A × Y. The second component remembers the output symbol just emitted;
/// the Moore output weight is 1 exactly when it matches. The initial
/// weights sit on the slice tagged with an arbitrary fixed output symbol
/// (the first in declaration order). Preserves the sequential behavior as
/// the 1n-behavior.
pub fn sequential_to_moore(a: &SequentialWfa) -> Result<(MooreWfa, ConversionReport)> {
    ensure_valid(a.validate())?;
    let sr = a.semiring();
    let n_states = a.states().len();
    let y_count = a.output_alphabet().len();
    let pair = |ai: usize, yi: usize| ai * y_count + yi;
    let mut names = Vec::with_capacity(n_states * y_count);
    for s in a.states().iter() {
        for y in a.output_alphabet().iter() {
            names.push(format!("{s}|{y}"));
        }
    }
    let b_states = States::new(names);

    let mut initial = SrVector::new(sr, b_states.clone());
    for (ai, v) in a.initial().iter() {
        initial.set(pair(ai, 0), *v);
    }

    let mut transitions = BTreeMap::new();
    for x in 0..a.input_alphabet().len() {
        let mut m = SrMatrix::new(sr, b_states.clone());
        for y2 in 0..y_count {
            if let Some(mu) = a.transition_matrix(x, y2) {
                for (a1, a2, v) in mu.iter() {
                    for y1 in 0..y_count {
                        m.set(pair(a1, y1), pair(a2, y2), *v);
                    }
                }
            }
        }
        transitions.insert(x, m);
    }

    let mut outputs = BTreeMap::new();
    for y in 0..y_count {
        let mut v = SrVector::new(sr, b_states.clone());
        for ai in 0..n_states {
            v.set(pair(ai, y), sr.one());
        }
        outputs.insert(y, v);
    }

    let b = MooreWfa::new(
        sr,
        b_states,
        a.input_alphabet().clone(),
        a.output_alphabet().clone(),
        initial,
        transitions,
        outputs,
    );
    let report = ConversionReport {
        theorem: 3,
        source_kind: AutomatonKind::Sequential,
        source_states: n_states,
        target_kind: AutomatonKind::Moore,
        target_states: b.states().len(),
        guarantees: vec![(Semantics::Seq, Semantics::OneN)],
        chosen_power: None,
        fixed_output_symbol: Some(String::from(a.output_alphabet().symbol(0))),
    };
    Ok((b, report))
}

/// Theorem 4: a Mealy automaton as a Moore automaton over A ∪ (A × X).
/// A pair state (a, x) remembers the input consumed on entry, letting the
/// Moore output look up the Mealy output weight. Preserves both the 1n- and
/// the n1-behavior.
pub fn mealy_to_moore(a: &MealyWfa) -> Result<(MooreWfa, ConversionReport)> {
    ensure_valid(a.validate())?;
    let sr = a.semiring();
    let n_states = a.states().len();
    let x_count = a.input_alphabet().len();
    let orig = |ai: usize| ai;
    let pair = |ai: usize, xi: usize| n_states + ai * x_count + xi;
    let mut names: Vec<String> = a.states().iter().map(String::from).collect();
    for s in a.states().iter() {
        for x in a.input_alphabet().iter() {
            names.push(format!("{s}|{x}"));
        }
    }
    let b_states = States::new(names);

    let mut initial = SrVector::new(sr, b_states.clone());
    for (ai, v) in a.initial().iter() {
        initial.set(orig(ai), *v);
    }

    let mut transitions = BTreeMap::new();
    for x in 0..x_count {
        let mut m = SrMatrix::new(sr, b_states.clone());
        for ai in 0..n_states {
            m.set(orig(ai), pair(ai, x), sr.one());
        }
        for (x1, d) in a.transition_family() {
            for (a1, a2, v) in d.iter() {
                m.set(pair(a1, x1), pair(a2, x), *v);
            }
        }
        transitions.insert(x, m);
    }

    let mut outputs = BTreeMap::new();
    for y in 0..a.output_alphabet().len() {
        let mut vec_b = SrVector::new(sr, b_states.clone());
        for ((x, yy), out) in a.output_family() {
            if yy == y {
                for (ai, v) in out.iter() {
                    vec_b.set(pair(ai, x), *v);
                }
            }
        }
        outputs.insert(y, vec_b);
    }

    let b = MooreWfa::new(
        sr,
        b_states,
        a.input_alphabet().clone(),
        a.output_alphabet().clone(),
        initial,
        transitions,
        outputs,
    );
    let report = ConversionReport {
        theorem: 4,
        source_kind: AutomatonKind::Mealy,
        source_states: n_states,
        target_kind: AutomatonKind::Moore,
        target_states: b.states().len(),
        guarantees: vec![
            (Semantics::OneN, Semantics::OneN),
            (Semantics::N1, Semantics::N1),
        ],
        chosen_power: None,
        fixed_output_symbol: None,
    };
    Ok((b, report))
}

/// Theorem 5: a Moore automaton as a Mealy automaton over A × A. A state
/// (a, a') stands for "at a, about to move to a'"; transitions carry weight
/// 1 exactly when consecutive pairs chain, and the Mealy output weight is
/// transition(a, a') · output(a'). Preserves the 1n-behavior.
pub fn moore_to_mealy(a: &MooreWfa) -> Result<(MealyWfa, ConversionReport)> {
    ensure_valid(a.validate())?;
    let sr = a.semiring();
    let n_states = a.states().len();
    let pair = |a1: usize, a2: usize| a1 * n_states + a2;
    let mut names = Vec::with_capacity(n_states * n_states);
    for s1 in a.states().iter() {
        for s2 in a.states().iter() {
            names.push(format!("{s1}|{s2}"));
        }
    }
    let b_states = States::new(names);

    let mut initial = SrVector::new(sr, b_states.clone());
    for (a1, v) in a.initial().iter() {
        for a2 in 0..n_states {
            initial.set(pair(a1, a2), *v);
        }
    }

    // The same chaining matrix serves every input symbol.
    let mut chain = SrMatrix::new(sr, b_states.clone());
    for a1 in 0..n_states {
        for a2 in 0..n_states {
            for a3 in 0..n_states {
                chain.set(pair(a1, a2), pair(a2, a3), sr.one());
            }
        }
    }
    let mut transitions = BTreeMap::new();
    for x in 0..a.input_alphabet().len() {
        transitions.insert(x, chain.clone());
    }

    let mut outputs = BTreeMap::new();
    for (x, d) in a.transition_family() {
        for (y, out_y) in a.output_family() {
            let mut v = SrVector::new(sr, b_states.clone());
            for (a1, a2, dv) in d.iter() {
                v.set(pair(a1, a2), sr.mul(dv, &out_y.get(a2))?);
            }
            outputs.insert((x, y), v);
        }
    }

    let b = MealyWfa::new(
        sr,
        b_states,
        a.input_alphabet().clone(),
        a.output_alphabet().clone(),
        initial,
        transitions,
        outputs,
    );
    let report = ConversionReport {
        theorem: 5,
        source_kind: AutomatonKind::Moore,
        source_states: n_states,
        target_kind: AutomatonKind::Mealy,
        target_states: b.states().len(),
        guarantees: vec![(Semantics::OneN, Semantics::OneN)],
        chosen_power: None,
        fixed_output_symbol: None,
    };
    Ok((b, report))
}

/// Every value the transition-output function takes: the stored entries
/// plus the implicit zero.
fn transition_image(a: &SequentialWfa) -> Vec<Value> {
    let mut image = vec![a.semiring().zero()];
    for (_, m) in a.transition_family() {
        for (_, _, v) in m.iter() {
            if !image.contains(v) {
                image.push(*v);
            }
        }
    }
    image
}

/// The smallest p <= p_max such that the (p·k)-th additive power fixes
/// every value in the transition image, k = |X| · |Y|; `None` if there is
/// none. Additively idempotent semirings always admit p = 1.
pub fn find_additive_power(a: &SequentialWfa, p_max: u64) -> Result<Option<u64>> {
    if a.semiring().is_idempotent() {
        return Ok(Some(1));
    }
    let sr = a.semiring();
    let k = (a.input_alphabet().len() * a.output_alphabet().len()) as u64;
    let image = transition_image(a);
    'candidates: for p in 1..=p_max {
        for s in &image {
            if !sr.elem_eq(&sr.nat_scale(p * k, s)?, s)? {
                continue 'candidates;
            }
        }
        return Ok(Some(p));
    }
    Ok(None)
}

fn power_condition_witness(a: &SequentialWfa, p_max: u64, k: u64) -> Result<Value> {
    let sr = a.semiring();
    for s in transition_image(a) {
        let mut fixed_by_some_p = false;
        for p in 1..=p_max {
            if sr.elem_eq(&sr.nat_scale(p * k, &s)?, &s)? {
                fixed_by_some_p = true;
                break;
            }
        }
        if !fixed_by_some_p {
            return Ok(s);
        }
    }
    // Each value admits its own p but no common one exists; name any
    // nonzero value (zero is always fixed).
    Ok(transition_image(a)
        .into_iter()
        .find(|v| *v != sr.zero())
        .unwrap_or_else(|| sr.zero()))
}

/// Theorem 6: a sequential automaton as a Mealy automaton over A × X × Y,
/// provided [`find_additive_power`] finds a p <= p_max. A state (a, x, y)
/// remembers the pair just processed; the output weight is 1 exactly on the
/// matching pair, and initial weights are rescaled by the p-th additive
/// power. Preserves the sequential behavior as the s-behavior.
pub fn sequential_to_mealy(a: &SequentialWfa, p_max: u64) -> Result<(MealyWfa, ConversionReport)> {
    ensure_valid(a.validate())?;
    let sr = a.semiring();
    let x_count = a.input_alphabet().len();
    let y_count = a.output_alphabet().len();
    let k = (x_count * y_count) as u64;
    let Some(p) = find_additive_power(a, p_max)? else {
        return Err(Error::PowerConditionUnsatisfied {
            p_max,
            k,
            witness: alloc::string::ToString::to_string(&power_condition_witness(a, p_max, k)?),
        });
    };

    let n_states = a.states().len();
    let triple = |ai: usize, xi: usize, yi: usize| (ai * x_count + xi) * y_count + yi;
    let mut names = Vec::with_capacity(n_states * x_count * y_count);
    for s in a.states().iter() {
        for x in a.input_alphabet().iter() {
            for y in a.output_alphabet().iter() {
                names.push(format!("{s}|{x}|{y}"));
            }
        }
    }
    let b_states = States::new(names);

    let mut initial = SrVector::new(sr, b_states.clone());
    for (ai, v) in a.initial().iter() {
        let scaled = sr.nat_scale(p, v)?;
        for xi in 0..x_count {
            for yi in 0..y_count {
                initial.set(triple(ai, xi, yi), scaled);
            }
        }
    }

    let mut transitions = BTreeMap::new();
    for x in 0..x_count {
        let mut m = SrMatrix::new(sr, b_states.clone());
        // The source state's output component selects which transition
        // matrix of the source applies; the target components are free.
        for y1 in 0..y_count {
            if let Some(mu) = a.transition_matrix(x, y1) {
                for (a1, a2, v) in mu.iter() {
                    for x1 in 0..x_count {
                        for x2 in 0..x_count {
                            for y2 in 0..y_count {
                                m.set(triple(a1, x1, y1), triple(a2, x2, y2), *v);
                            }
                        }
                    }
                }
            }
        }
        transitions.insert(x, m);
    }

    let mut outputs = BTreeMap::new();
    for x in 0..x_count {
        for y in 0..y_count {
            let mut v = SrVector::new(sr, b_states.clone());
            for ai in 0..n_states {
                v.set(triple(ai, x, y), sr.one());
            }
            outputs.insert((x, y), v);
        }
    }

    let b = MealyWfa::new(
        sr,
        b_states,
        a.input_alphabet().clone(),
        a.output_alphabet().clone(),
        initial,
        transitions,
        outputs,
    );
    let report = ConversionReport {
        theorem: 6,
        source_kind: AutomatonKind::Sequential,
        source_states: n_states,
        target_kind: AutomatonKind::Mealy,
        target_states: b.states().len(),
        guarantees: vec![(Semantics::Seq, Semantics::S)],
        chosen_power: Some(p),
        fixed_output_symbol: None,
    };
    Ok((b, report))
}
