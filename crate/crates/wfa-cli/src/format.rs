//! The JSON automaton file format.
//!
//! A document is a single JSON object:
//!
//! ```json
//! {
//!   "semiring": "godel",
//!   "kind": "mealy",
//!   "states": ["a1", "a2"],
//!   "input_alphabet": ["0"],
//!   "output_alphabet": ["0", "1"],
//!   "initial": {"a1": 1},
//!   "transitions": [{"from": "a1", "input": "0", "to": "a2", "weight": 0.5}],
//!   "outputs": [{"state": "a1", "input": "0", "output": "1", "weight": 0.2}]
//! }
//! ```
//!
//! Record shapes depend on the kind: sequential transitions carry
//! `{from, input, output, to, weight}` and no outputs section; Mealy
//! transitions `{from, input, to, weight}` with outputs
//! `{state, input, output, weight}`; Moore outputs `{state, output, weight}`;
//! the crisp-deterministic kinds replace `initial` with `"initial_state"`
//! and use weightless transitions `{from, input, to}`. Omitted records mean
//! the semiring zero. Weights are JSON numbers, except that the tropical
//! zero is spelled `"inf"` and non-integer rationals are spelled `"n/d"`.
//! Unknown fields and duplicate records are rejected; parsing never
//! panics.

use serde::Deserialize;
use serde_json::Value as Json;
use std::collections::{BTreeMap, BTreeSet};
use wfa_core::algebra::{SrMatrix, SrVector, States};
use wfa_core::automata::{
    Alphabet, Automaton, CrispDetMealy, CrispDetMoore, MealyWfa, MooreWfa, SequentialWfa, Violation,
};
use wfa_core::{Semiring, Value};

#[derive(Debug, thiserror::Error)]
pub enum FormatError {
    #[error("syntax error at line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("unknown semiring {0:?}")]
    UnknownSemiring(String),

    #[error("unknown automaton kind {0:?}")]
    UnknownKind(String),

    #[error("{context}: {message}")]
    Semantic { context: String, message: String },

    #[error("invalid automaton: {}", join_violations(.0))]
    Invalid(Vec<Violation>),
}

fn join_violations(violations: &[Violation]) -> String {
    violations
        .iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join("; ")
}

fn syntax(err: serde_json::Error) -> FormatError {
    FormatError::Syntax {
        line: err.line(),
        column: err.column(),
        message: err.to_string(),
    }
}

fn semantic(context: impl Into<String>, message: impl Into<String>) -> FormatError {
    FormatError::Semantic {
        context: context.into(),
        message: message.into(),
    }
}

/// Parse a document into a validated automaton.
pub fn parse_automaton(text: &str) -> Result<Automaton, FormatError> {
    #[derive(Deserialize)]
    struct Probe {
        semiring: String,
        kind: String,
    }
    let probe: Probe = serde_json::from_str(text).map_err(syntax)?;
    let semiring = Semiring::from_name(&probe.semiring)
        .ok_or_else(|| FormatError::UnknownSemiring(probe.semiring.clone()))?;
    match probe.kind.as_str() {
        "sequential" => build_sequential(serde_json::from_str(text).map_err(syntax)?, semiring),
        "mealy" => build_mealy(serde_json::from_str(text).map_err(syntax)?, semiring),
        "moore" => build_moore(serde_json::from_str(text).map_err(syntax)?, semiring),
        "cd-mealy" => build_cd_mealy(serde_json::from_str(text).map_err(syntax)?, semiring),
        "cd-moore" => build_cd_moore(serde_json::from_str(text).map_err(syntax)?, semiring),
        other => Err(FormatError::UnknownKind(other.to_string())),
    }
}

/// Render an automaton as a pretty-printed document that parses back to an
/// equal automaton.
pub fn serialize_automaton(aut: &Automaton) -> String {
    let doc = match aut {
        Automaton::Sequential(a) => sequential_doc(a),
        Automaton::Mealy(a) => mealy_doc(a),
        Automaton::Moore(a) => moore_doc(a),
        Automaton::CdMealy(a) => cd_mealy_doc(a),
        Automaton::CdMoore(a) => cd_moore_doc(a),
    };
    let mut text = serde_json::to_string_pretty(&doc).expect("document serialization");
    text.push('\n');
    text
}

fn decode_weight(semiring: Semiring, raw: &Json, context: &str) -> Result<Value, FormatError> {
    let carrier_err = || {
        semantic(
            context,
            format!(
                "weight {raw} is outside the {semiring} carrier ({})",
                semiring.carrier_description()
            ),
        )
    };
    let value = match (semiring, raw) {
        (Semiring::Boolean, Json::Bool(b)) => Value::Bool(*b),
        (Semiring::Boolean, Json::Number(n)) => match n.as_u64() {
            Some(0) => Value::Bool(false),
            Some(1) => Value::Bool(true),
            _ => return Err(carrier_err()),
        },
        (Semiring::Godel | Semiring::Viterbi | Semiring::Tropical, Json::Number(n)) => {
            Value::Real(n.as_f64().ok_or_else(carrier_err)?)
        }
        (Semiring::Tropical, Json::String(s)) if s == "inf" => Value::Real(f64::INFINITY),
        (Semiring::Naturals, Json::Number(n)) => Value::Nat(n.as_u64().ok_or_else(carrier_err)?),
        (Semiring::Rationals, Json::Number(n)) => {
            Value::rational(n.as_u64().ok_or_else(carrier_err)?, 1)
        }
        (Semiring::Rationals, Json::String(s)) => {
            let (numer, denom) = s
                .split_once('/')
                .ok_or_else(|| semantic(context, format!("malformed rational {s:?}")))?;
            let numer: u64 = numer
                .parse()
                .map_err(|_| semantic(context, format!("malformed rational {s:?}")))?;
            let denom: u64 = denom
                .parse()
                .map_err(|_| semantic(context, format!("malformed rational {s:?}")))?;
            if denom == 0 {
                return Err(semantic(context, format!("zero denominator in {s:?}")));
            }
            Value::rational(numer, denom)
        }
        _ => return Err(carrier_err()),
    };
    if !semiring.contains(&value) {
        return Err(carrier_err());
    }
    Ok(value)
}

fn encode_weight(value: &Value) -> Json {
    match value {
        Value::Bool(b) => Json::from(u8::from(*b)),
        Value::Real(x) if *x == f64::INFINITY => Json::from("inf"),
        Value::Real(x) => Json::from(*x),
        Value::Nat(n) => Json::from(*n),
        Value::Rat(r) if r.is_integer() => Json::from(*r.numer()),
        Value::Rat(r) => Json::from(format!("{}/{}", r.numer(), r.denom())),
    }
}

fn state_index(states: &States, name: &str, context: &str) -> Result<usize, FormatError> {
    states
        .index_of(name)
        .ok_or_else(|| semantic(context, format!("unknown state {name:?}")))
}

fn input_index(alphabet: &Alphabet, symbol: &str, context: &str) -> Result<usize, FormatError> {
    alphabet
        .index_of(symbol)
        .ok_or_else(|| semantic(context, format!("unknown input symbol {symbol:?}")))
}

fn output_index(alphabet: &Alphabet, symbol: &str, context: &str) -> Result<usize, FormatError> {
    alphabet
        .index_of(symbol)
        .ok_or_else(|| semantic(context, format!("unknown output symbol {symbol:?}")))
}

fn decode_initial(
    semiring: Semiring,
    states: &States,
    raw: &BTreeMap<String, Json>,
) -> Result<SrVector, FormatError> {
    let mut sigma = SrVector::new(semiring, states.clone());
    for (name, weight) in raw {
        let context = format!("initial weight of {name:?}");
        let i = state_index(states, name, &context)?;
        sigma.set(i, decode_weight(semiring, weight, &context)?);
    }
    Ok(sigma)
}

fn finish(aut: Automaton) -> Result<Automaton, FormatError> {
    let violations = aut.validate();
    if violations.is_empty() {
        Ok(aut)
    } else {
        Err(FormatError::Invalid(violations))
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct SequentialDoc {
    #[allow(dead_code)]
    semiring: String,
    #[allow(dead_code)]
    kind: String,
    states: Vec<String>,
    input_alphabet: Vec<String>,
    output_alphabet: Vec<String>,
    #[serde(default)]
    initial: BTreeMap<String, Json>,
    #[serde(default)]
    transitions: Vec<SequentialTransitionRec>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct SequentialTransitionRec {
    from: String,
    input: String,
    output: String,
    to: String,
    weight: Json,
}

fn build_sequential(doc: SequentialDoc, semiring: Semiring) -> Result<Automaton, FormatError> {
    let states = States::new(doc.states);
    let input_alphabet = Alphabet::new(doc.input_alphabet);
    let output_alphabet = Alphabet::new(doc.output_alphabet);
    let initial = decode_initial(semiring, &states, &doc.initial)?;
    let mut seen = BTreeSet::new();
    let mut transitions: BTreeMap<(usize, usize), SrMatrix> = BTreeMap::new();
    for rec in &doc.transitions {
        let context = format!(
            "transition {{from: {:?}, input: {:?}, output: {:?}, to: {:?}}}",
            rec.from, rec.input, rec.output, rec.to
        );
        let a = state_index(&states, &rec.from, &context)?;
        let x = input_index(&input_alphabet, &rec.input, &context)?;
        let y = output_index(&output_alphabet, &rec.output, &context)?;
        let b = state_index(&states, &rec.to, &context)?;
        if !seen.insert((x, y, a, b)) {
            return Err(semantic(context, "duplicate record"));
        }
        let w = decode_weight(semiring, &rec.weight, &context)?;
        transitions
            .entry((x, y))
            .or_insert_with(|| SrMatrix::new(semiring, states.clone()))
            .set(a, b, w);
    }
    finish(
        SequentialWfa::new(
            semiring,
            states,
            input_alphabet,
            output_alphabet,
            initial,
            transitions,
        )
        .into(),
    )
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct MealyDoc {
    #[allow(dead_code)]
    semiring: String,
    #[allow(dead_code)]
    kind: String,
    states: Vec<String>,
    input_alphabet: Vec<String>,
    output_alphabet: Vec<String>,
    #[serde(default)]
    initial: BTreeMap<String, Json>,
    #[serde(default)]
    transitions: Vec<MealyTransitionRec>,
    #[serde(default)]
    outputs: Vec<MealyOutputRec>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct MealyTransitionRec {
    from: String,
    input: String,
    to: String,
    weight: Json,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct MealyOutputRec {
    state: String,
    input: String,
    output: String,
    weight: Json,
}

fn decode_mealy_transitions(
    semiring: Semiring,
    states: &States,
    input_alphabet: &Alphabet,
    records: &[MealyTransitionRec],
) -> Result<BTreeMap<usize, SrMatrix>, FormatError> {
    let mut seen = BTreeSet::new();
    let mut transitions: BTreeMap<usize, SrMatrix> = BTreeMap::new();
    for rec in records {
        let context = format!(
            "transition {{from: {:?}, input: {:?}, to: {:?}}}",
            rec.from, rec.input, rec.to
        );
        let a = state_index(states, &rec.from, &context)?;
        let x = input_index(input_alphabet, &rec.input, &context)?;
        let b = state_index(states, &rec.to, &context)?;
        if !seen.insert((x, a, b)) {
            return Err(semantic(context, "duplicate record"));
        }
        let w = decode_weight(semiring, &rec.weight, &context)?;
        transitions
            .entry(x)
            .or_insert_with(|| SrMatrix::new(semiring, states.clone()))
            .set(a, b, w);
    }
    Ok(transitions)
}

fn decode_mealy_outputs(
    semiring: Semiring,
    states: &States,
    input_alphabet: &Alphabet,
    output_alphabet: &Alphabet,
    records: &[MealyOutputRec],
) -> Result<BTreeMap<(usize, usize), SrVector>, FormatError> {
    let mut seen = BTreeSet::new();
    let mut outputs: BTreeMap<(usize, usize), SrVector> = BTreeMap::new();
    for rec in records {
        let context = format!(
            "output {{state: {:?}, input: {:?}, output: {:?}}}",
            rec.state, rec.input, rec.output
        );
        let a = state_index(states, &rec.state, &context)?;
        let x = input_index(input_alphabet, &rec.input, &context)?;
        let y = output_index(output_alphabet, &rec.output, &context)?;
        if !seen.insert((x, y, a)) {
            return Err(semantic(context, "duplicate record"));
        }
        let w = decode_weight(semiring, &rec.weight, &context)?;
        outputs
            .entry((x, y))
            .or_insert_with(|| SrVector::new(semiring, states.clone()))
            .set(a, w);
    }
    Ok(outputs)
}

fn build_mealy(doc: MealyDoc, semiring: Semiring) -> Result<Automaton, FormatError> {
    let states = States::new(doc.states);
    let input_alphabet = Alphabet::new(doc.input_alphabet);
    let output_alphabet = Alphabet::new(doc.output_alphabet);
    let initial = decode_initial(semiring, &states, &doc.initial)?;
    let transitions =
        decode_mealy_transitions(semiring, &states, &input_alphabet, &doc.transitions)?;
    let outputs = decode_mealy_outputs(
        semiring,
        &states,
        &input_alphabet,
        &output_alphabet,
        &doc.outputs,
    )?;
    finish(
        MealyWfa::new(
            semiring,
            states,
            input_alphabet,
            output_alphabet,
            initial,
            transitions,
            outputs,
        )
        .into(),
    )
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct MooreDoc {
    #[allow(dead_code)]
    semiring: String,
    #[allow(dead_code)]
    kind: String,
    states: Vec<String>,
    input_alphabet: Vec<String>,
    output_alphabet: Vec<String>,
    #[serde(default)]
    initial: BTreeMap<String, Json>,
    #[serde(default)]
    transitions: Vec<MealyTransitionRec>,
    #[serde(default)]
    outputs: Vec<MooreOutputRec>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct MooreOutputRec {
    state: String,
    output: String,
    weight: Json,
}

fn decode_moore_outputs(
    semiring: Semiring,
    states: &States,
    output_alphabet: &Alphabet,
    records: &[MooreOutputRec],
) -> Result<BTreeMap<usize, SrVector>, FormatError> {
    let mut seen = BTreeSet::new();
    let mut outputs: BTreeMap<usize, SrVector> = BTreeMap::new();
    for rec in records {
        let context = format!(
            "output {{state: {:?}, output: {:?}}}",
            rec.state, rec.output
        );
        let a = state_index(states, &rec.state, &context)?;
        let y = output_index(output_alphabet, &rec.output, &context)?;
        if !seen.insert((y, a)) {
            return Err(semantic(context, "duplicate record"));
        }
        let w = decode_weight(semiring, &rec.weight, &context)?;
        outputs
            .entry(y)
            .or_insert_with(|| SrVector::new(semiring, states.clone()))
            .set(a, w);
    }
    Ok(outputs)
}

fn build_moore(doc: MooreDoc, semiring: Semiring) -> Result<Automaton, FormatError> {
    let states = States::new(doc.states);
    let input_alphabet = Alphabet::new(doc.input_alphabet);
    let output_alphabet = Alphabet::new(doc.output_alphabet);
    let initial = decode_initial(semiring, &states, &doc.initial)?;
    let transitions =
        decode_mealy_transitions(semiring, &states, &input_alphabet, &doc.transitions)?;
    let outputs = decode_moore_outputs(semiring, &states, &output_alphabet, &doc.outputs)?;
    finish(
        MooreWfa::new(
            semiring,
            states,
            input_alphabet,
            output_alphabet,
            initial,
            transitions,
            outputs,
        )
        .into(),
    )
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct CdMealyDoc {
    #[allow(dead_code)]
    semiring: String,
    #[allow(dead_code)]
    kind: String,
    states: Vec<String>,
    input_alphabet: Vec<String>,
    output_alphabet: Vec<String>,
    initial_state: String,
    #[serde(default)]
    transitions: Vec<CdTransitionRec>,
    #[serde(default)]
    outputs: Vec<MealyOutputRec>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct CdTransitionRec {
    from: String,
    input: String,
    to: String,
}

fn decode_cd_table(
    states: &States,
    input_alphabet: &Alphabet,
    records: &[CdTransitionRec],
) -> Result<Vec<Vec<usize>>, FormatError> {
    let mut map: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    for rec in records {
        let context = format!(
            "transition {{from: {:?}, input: {:?}, to: {:?}}}",
            rec.from, rec.input, rec.to
        );
        let a = state_index(states, &rec.from, &context)?;
        let x = input_index(input_alphabet, &rec.input, &context)?;
        let b = state_index(states, &rec.to, &context)?;
        if map.insert((a, x), b).is_some() {
            return Err(semantic(context, "duplicate record"));
        }
    }
    let mut table = vec![vec![0usize; input_alphabet.len()]; states.len()];
    for (a, row) in table.iter_mut().enumerate() {
        for (x, slot) in row.iter_mut().enumerate() {
            *slot = *map.get(&(a, x)).ok_or_else(|| {
                semantic(
                    "transition function",
                    format!(
                        "missing transition for state {:?} on input {:?}",
                        states.name(a),
                        input_alphabet.symbol(x)
                    ),
                )
            })?;
        }
    }
    Ok(table)
}

fn build_cd_mealy(doc: CdMealyDoc, semiring: Semiring) -> Result<Automaton, FormatError> {
    let states = States::new(doc.states);
    let input_alphabet = Alphabet::new(doc.input_alphabet);
    let output_alphabet = Alphabet::new(doc.output_alphabet);
    let initial_state = state_index(&states, &doc.initial_state, "initial_state")?;
    let table = decode_cd_table(&states, &input_alphabet, &doc.transitions)?;
    let outputs = decode_mealy_outputs(
        semiring,
        &states,
        &input_alphabet,
        &output_alphabet,
        &doc.outputs,
    )?;
    finish(
        CrispDetMealy::new(
            semiring,
            states,
            input_alphabet,
            output_alphabet,
            initial_state,
            table,
            outputs,
        )
        .into(),
    )
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct CdMooreDoc {
    #[allow(dead_code)]
    semiring: String,
    #[allow(dead_code)]
    kind: String,
    states: Vec<String>,
    input_alphabet: Vec<String>,
    output_alphabet: Vec<String>,
    initial_state: String,
    #[serde(default)]
    transitions: Vec<CdTransitionRec>,
    #[serde(default)]
    outputs: Vec<MooreOutputRec>,
}

fn build_cd_moore(doc: CdMooreDoc, semiring: Semiring) -> Result<Automaton, FormatError> {
    let states = States::new(doc.states);
    let input_alphabet = Alphabet::new(doc.input_alphabet);
    let output_alphabet = Alphabet::new(doc.output_alphabet);
    let initial_state = state_index(&states, &doc.initial_state, "initial_state")?;
    let table = decode_cd_table(&states, &input_alphabet, &doc.transitions)?;
    let outputs = decode_moore_outputs(semiring, &states, &output_alphabet, &doc.outputs)?;
    finish(
        CrispDetMoore::new(
            semiring,
            states,
            input_alphabet,
            output_alphabet,
            initial_state,
            table,
            outputs,
        )
        .into(),
    )
}

fn header(aut: &Automaton) -> serde_json::Map<String, Json> {
    let mut doc = serde_json::Map::new();
    doc.insert("semiring".into(), Json::from(aut.semiring().name()));
    doc.insert("kind".into(), Json::from(aut.kind().name()));
    doc.insert("states".into(), Json::from(aut.states().names().to_vec()));
    doc.insert(
        "input_alphabet".into(),
        Json::from(aut.input_alphabet().symbols().to_vec()),
    );
    doc.insert(
        "output_alphabet".into(),
        Json::from(aut.output_alphabet().symbols().to_vec()),
    );
    doc
}

fn initial_map(states: &States, sigma: &SrVector) -> Json {
    let mut map = serde_json::Map::new();
    for (i, v) in sigma.iter() {
        map.insert(states.name(i).to_string(), encode_weight(v));
    }
    Json::Object(map)
}

fn record(fields: &[(&str, Json)]) -> Json {
    let mut map = serde_json::Map::new();
    for (k, v) in fields {
        map.insert((*k).to_string(), v.clone());
    }
    Json::Object(map)
}

fn sequential_doc(a: &SequentialWfa) -> Json {
    let mut doc = header(&Automaton::Sequential(a.clone()));
    doc.insert("initial".into(), initial_map(a.states(), a.initial()));
    let mut transitions = Vec::new();
    for ((x, y), m) in a.transition_family() {
        for (s, t, w) in m.iter() {
            transitions.push(record(&[
                ("from", Json::from(a.states().name(s))),
                ("input", Json::from(a.input_alphabet().symbol(x))),
                ("output", Json::from(a.output_alphabet().symbol(y))),
                ("to", Json::from(a.states().name(t))),
                ("weight", encode_weight(w)),
            ]));
        }
    }
    doc.insert("transitions".into(), Json::from(transitions));
    Json::Object(doc)
}

fn mealy_doc(a: &MealyWfa) -> Json {
    let mut doc = header(&Automaton::Mealy(a.clone()));
    doc.insert("initial".into(), initial_map(a.states(), a.initial()));
    let mut transitions = Vec::new();
    for (x, m) in a.transition_family() {
        for (s, t, w) in m.iter() {
            transitions.push(record(&[
                ("from", Json::from(a.states().name(s))),
                ("input", Json::from(a.input_alphabet().symbol(x))),
                ("to", Json::from(a.states().name(t))),
                ("weight", encode_weight(w)),
            ]));
        }
    }
    doc.insert("transitions".into(), Json::from(transitions));
    let mut outputs = Vec::new();
    for ((x, y), v) in a.output_family() {
        for (s, w) in v.iter() {
            outputs.push(record(&[
                ("state", Json::from(a.states().name(s))),
                ("input", Json::from(a.input_alphabet().symbol(x))),
                ("output", Json::from(a.output_alphabet().symbol(y))),
                ("weight", encode_weight(w)),
            ]));
        }
    }
    doc.insert("outputs".into(), Json::from(outputs));
    Json::Object(doc)
}

fn moore_doc(a: &MooreWfa) -> Json {
    let mut doc = header(&Automaton::Moore(a.clone()));
    doc.insert("initial".into(), initial_map(a.states(), a.initial()));
    let mut transitions = Vec::new();
    for (x, m) in a.transition_family() {
        for (s, t, w) in m.iter() {
            transitions.push(record(&[
                ("from", Json::from(a.states().name(s))),
                ("input", Json::from(a.input_alphabet().symbol(x))),
                ("to", Json::from(a.states().name(t))),
                ("weight", encode_weight(w)),
            ]));
        }
    }
    doc.insert("transitions".into(), Json::from(transitions));
    let mut outputs = Vec::new();
    for (y, v) in a.output_family() {
        for (s, w) in v.iter() {
            outputs.push(record(&[
                ("state", Json::from(a.states().name(s))),
                ("output", Json::from(a.output_alphabet().symbol(y))),
                ("weight", encode_weight(w)),
            ]));
        }
    }
    doc.insert("outputs".into(), Json::from(outputs));
    Json::Object(doc)
}

fn cd_transitions(states: &States, input_alphabet: &Alphabet, table: &[Vec<usize>]) -> Json {
    let mut transitions = Vec::new();
    for (a, row) in table.iter().enumerate() {
        for (x, &b) in row.iter().enumerate() {
            transitions.push(record(&[
                ("from", Json::from(states.name(a))),
                ("input", Json::from(input_alphabet.symbol(x))),
                ("to", Json::from(states.name(b))),
            ]));
        }
    }
    Json::from(transitions)
}

fn cd_mealy_doc(a: &CrispDetMealy) -> Json {
    let mut doc = header(&Automaton::CdMealy(a.clone()));
    doc.insert(
        "initial_state".into(),
        Json::from(a.states().name(a.initial_state())),
    );
    doc.insert(
        "transitions".into(),
        cd_transitions(a.states(), a.input_alphabet(), a.table()),
    );
    let mut outputs = Vec::new();
    for ((x, y), v) in a.output_family() {
        for (s, w) in v.iter() {
            outputs.push(record(&[
                ("state", Json::from(a.states().name(s))),
                ("input", Json::from(a.input_alphabet().symbol(x))),
                ("output", Json::from(a.output_alphabet().symbol(y))),
                ("weight", encode_weight(w)),
            ]));
        }
    }
    doc.insert("outputs".into(), Json::from(outputs));
    Json::Object(doc)
}

fn cd_moore_doc(a: &CrispDetMoore) -> Json {
    let mut doc = header(&Automaton::CdMoore(a.clone()));
    doc.insert(
        "initial_state".into(),
        Json::from(a.states().name(a.initial_state())),
    );
    doc.insert(
        "transitions".into(),
        cd_transitions(a.states(), a.input_alphabet(), a.table()),
    );
    let mut outputs = Vec::new();
    for (y, v) in a.output_family() {
        for (s, w) in v.iter() {
            outputs.push(record(&[
                ("state", Json::from(a.states().name(s))),
                ("output", Json::from(a.output_alphabet().symbol(y))),
                ("weight", encode_weight(w)),
            ]));
        }
    }
    doc.insert("outputs".into(), Json::from(outputs));
    Json::Object(doc)
}
