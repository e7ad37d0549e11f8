//! Behavior evaluation: reference values, recursion laws, and agreement
//! between the matrix route and the brute-force path sums.

mod common;

use common::{example1, example2, r, with_initial, TestRng};
use wfa_core::algebra::{diag, dot, mat_mul, mat_vec, SrVector};
use wfa_core::automata::{random_automaton, Dimensions};
use wfa_core::equiv::word_pairs;
use wfa_core::semantics::{behavior, behavior_oracle, compatible};
use wfa_core::{Automaton, AutomatonKind, Semantics, Semiring, WordPair};

fn tags_for(kind: AutomatonKind) -> Vec<Semantics> {
    Semantics::ALL
        .into_iter()
        .filter(|t| compatible(kind, *t))
        .collect()
}

#[test]
fn example_values() {
    let w1 = WordPair::parse("0,0,0", "0,1,0").unwrap();
    let m1 = Automaton::Mealy(example1());
    assert_eq!(behavior(&m1, Semantics::OneN, &w1).unwrap(), r(0.4));
    assert_eq!(behavior(&m1, Semantics::S, &w1).unwrap(), r(0.4));
    assert_eq!(behavior(&m1, Semantics::N1, &w1).unwrap(), r(0.5));

    let w2 = WordPair::parse("0,1", "0,0").unwrap();
    let m2 = Automaton::Mealy(example2());
    assert_eq!(behavior(&m2, Semantics::OneN, &w2).unwrap(), r(0.5));
    assert_eq!(behavior(&m2, Semantics::S, &w2).unwrap(), r(0.2));
}

#[test]
fn empty_pair_values() {
    // Non-cd semantics yield the sum of initial weights at (ε, ε); the cd
    // semantics yields 1.
    let w = WordPair::empty();
    for semiring in Semiring::ALL {
        let dims = Dimensions::new(3, 2, 2);
        for kind in AutomatonKind::ALL {
            let aut = random_automaton(kind, semiring, dims, 77).unwrap();
            for tag in tags_for(kind) {
                let got = behavior(&aut, tag, &w).unwrap();
                let brute = behavior_oracle(&aut, tag, &w).unwrap();
                assert!(semiring.elem_eq(&got, &brute).unwrap());
                if tag == Semantics::Cd {
                    assert_eq!(got, semiring.one());
                }
            }
        }
    }
}

#[test]
fn word_matrix_concatenation_law() {
    // The matrix of a concatenated pair is the product of the matrices.
    let mut rng = TestRng::new(41);
    for semiring in Semiring::ALL {
        for seed in 0..10 {
            let dims = Dimensions::new(3, 2, 2);
            let Automaton::Sequential(a) =
                random_automaton(AutomatonKind::Sequential, semiring, dims, seed).unwrap()
            else {
                panic!()
            };
            let pairs: Vec<WordPair> =
                word_pairs(a.input_alphabet(), a.output_alphabet(), 3).collect();
            for _ in 0..20 {
                let left = &pairs[rng.below(pairs.len())];
                let right = &pairs[rng.below(pairs.len())];
                let joined = WordPair::new(
                    left.input().iter().chain(right.input()).cloned(),
                    left.output().iter().chain(right.output()).cloned(),
                )
                .unwrap();
                let product = mat_mul(
                    &a.word_matrix(left).unwrap(),
                    &a.word_matrix(right).unwrap(),
                )
                .unwrap();
                assert!(a.word_matrix(&joined).unwrap().elem_eq(&product).unwrap());
            }
        }
    }
}

#[test]
fn transition_word_matrix_concatenation_law() {
    let mut rng = TestRng::new(43);
    for semiring in Semiring::ALL {
        for seed in 0..10 {
            let dims = Dimensions::new(3, 2, 2);
            let Automaton::Mealy(a) =
                random_automaton(AutomatonKind::Mealy, semiring, dims, seed).unwrap()
            else {
                panic!()
            };
            let symbols: Vec<String> = a.input_alphabet().symbols().to_vec();
            for _ in 0..20 {
                let len_u = rng.below(4);
                let len_v = rng.below(4);
                let u: Vec<String> = (0..len_u)
                    .map(|_| symbols[rng.below(symbols.len())].clone())
                    .collect();
                let v: Vec<String> = (0..len_v)
                    .map(|_| symbols[rng.below(symbols.len())].clone())
                    .collect();
                let uv: Vec<String> = u.iter().chain(&v).cloned().collect();
                let product = mat_mul(
                    &a.transition_word_matrix(&u).unwrap(),
                    &a.transition_word_matrix(&v).unwrap(),
                )
                .unwrap();
                assert!(a
                    .transition_word_matrix(&uv)
                    .unwrap()
                    .elem_eq(&product)
                    .unwrap());
            }
        }
    }
}

#[test]
fn mealy_1n_suffix_recursion_matches_matrix_chain() {
    // The 1n output vector of a word equals
    // D(out_1) · delta_1 · ... · D(out_{n-1}) · delta_{n-1} · out_n,
    // checked coordinatewise by evaluating against every unit initial
    // vector.
    for semiring in Semiring::ALL {
        for seed in 0..10 {
            let dims = Dimensions::new(3, 2, 2);
            let Automaton::Mealy(m) =
                random_automaton(AutomatonKind::Mealy, semiring, dims, seed).unwrap()
            else {
                panic!()
            };
            for w in word_pairs(m.input_alphabet(), m.output_alphabet(), 3) {
                if w.is_empty() {
                    continue;
                }
                let n = w.len();
                let xs: Vec<usize> = w
                    .input()
                    .iter()
                    .map(|s| m.input_alphabet().index_of(s).unwrap())
                    .collect();
                let ys: Vec<usize> = w
                    .output()
                    .iter()
                    .map(|s| m.output_alphabet().index_of(s).unwrap())
                    .collect();

                let zero_vec = SrVector::new(semiring, m.states().clone());
                let zero_mat = wfa_core::SrMatrix::new(semiring, m.states().clone());
                let out = |i: usize| {
                    m.output(xs[i], ys[i])
                        .cloned()
                        .unwrap_or_else(|| zero_vec.clone())
                };
                let delta = |i: usize| {
                    m.transition(xs[i])
                        .cloned()
                        .unwrap_or_else(|| zero_mat.clone())
                };

                let mut chain = wfa_core::algebra::identity_matrix(semiring, m.states()).unwrap();
                for i in 0..n - 1 {
                    chain = mat_mul(&chain, &diag(&out(i))).unwrap();
                    chain = mat_mul(&chain, &delta(i)).unwrap();
                }
                let expected = mat_vec(&chain, &out(n - 1)).unwrap();

                for a in 0..m.states().len() {
                    let mut unit = SrVector::new(semiring, m.states().clone());
                    unit.set(a, semiring.one());
                    let variant = Automaton::Mealy(with_initial(&m, unit));
                    let got = behavior(&variant, Semantics::OneN, &w).unwrap();
                    assert!(
                        semiring.elem_eq(&got, &expected.get(a)).unwrap(),
                        "{semiring} seed {seed} word {w} coordinate {a}"
                    );
                }
            }
        }
    }
}

#[test]
fn moore_base_case_is_transition_times_output() {
    // On a single pair (x, y) both Moore semantics reduce to
    // initial · (transition_x · output_y).
    for semiring in Semiring::ALL {
        for seed in 0..20 {
            let dims = Dimensions::new(3, 2, 2);
            let Automaton::Moore(m) =
                random_automaton(AutomatonKind::Moore, semiring, dims, seed).unwrap()
            else {
                panic!()
            };
            let zero_vec = SrVector::new(semiring, m.states().clone());
            let zero_mat = wfa_core::SrMatrix::new(semiring, m.states().clone());
            for x in 0..m.input_alphabet().len() {
                for y in 0..m.output_alphabet().len() {
                    let base = mat_vec(
                        &m.transition(x).cloned().unwrap_or_else(|| zero_mat.clone()),
                        &m.output(y).cloned().unwrap_or_else(|| zero_vec.clone()),
                    )
                    .unwrap();
                    let expected = dot(m.initial(), &base).unwrap();
                    let w = WordPair::new(
                        [m.input_alphabet().symbol(x)],
                        [m.output_alphabet().symbol(y)],
                    )
                    .unwrap();
                    let aut = Automaton::Moore(m.clone());
                    for tag in [Semantics::OneN, Semantics::N1] {
                        let got = behavior(&aut, tag, &w).unwrap();
                        assert!(semiring.elem_eq(&got, &expected).unwrap());
                    }
                }
            }
        }
    }
}

#[test]
fn oracle_agreement_smoke() {
    // A small slice of the full oracle-equivalence property; the acceptance
    // suite runs the complete sweep.
    for semiring in [Semiring::Godel, Semiring::Naturals, Semiring::Tropical] {
        for kind in AutomatonKind::ALL {
            for seed in 0..5 {
                let dims = Dimensions::new(3, 2, 2);
                let aut = random_automaton(kind, semiring, dims, seed).unwrap();
                for tag in tags_for(kind) {
                    for w in word_pairs(aut.input_alphabet(), aut.output_alphabet(), 3) {
                        let fast = behavior(&aut, tag, &w).unwrap();
                        let brute = behavior_oracle(&aut, tag, &w).unwrap();
                        assert!(
                            semiring.elem_eq(&fast, &brute).unwrap(),
                            "{semiring} {kind} {tag} seed {seed} at {w}: {fast} vs {brute}"
                        );
                    }
                }
            }
        }
    }
}

#[test]
fn crisp_roundtrip_preserves_weights() {
    let dims = Dimensions::new(3, 2, 2);
    for semiring in Semiring::ALL {
        for seed in 0..20 {
            match random_automaton(AutomatonKind::CdMealy, semiring, dims, seed).unwrap() {
                Automaton::CdMealy(cd) => {
                    let general = cd.to_general();
                    assert!(general.is_crisp_deterministic());
                    assert_eq!(general.to_crisp().unwrap(), cd);
                }
                _ => panic!(),
            }
            match random_automaton(AutomatonKind::CdMoore, semiring, dims, seed).unwrap() {
                Automaton::CdMoore(cd) => {
                    let general = cd.to_general();
                    assert!(general.is_crisp_deterministic());
                    assert_eq!(general.to_crisp().unwrap(), cd);
                }
                _ => panic!(),
            }
        }
    }
}

#[test]
fn cd_coincidence_smoke() {
    // For crisp machines all applicable semantics coincide; the acceptance
    // suite runs the full sweep.
    let dims = Dimensions::new(3, 2, 2);
    for seed in 0..10 {
        let semiring = Semiring::ALL[seed as usize % Semiring::ALL.len()];
        let aut = random_automaton(AutomatonKind::CdMealy, semiring, dims, seed).unwrap();
        for w in word_pairs(aut.input_alphabet(), aut.output_alphabet(), 3) {
            let cd = behavior(&aut, Semantics::Cd, &w).unwrap();
            for tag in [Semantics::OneN, Semantics::N1, Semantics::S] {
                let other = behavior(&aut, tag, &w).unwrap();
                assert!(
                    semiring.elem_eq(&cd, &other).unwrap(),
                    "{semiring} seed {seed} {tag} at {w}"
                );
            }
        }
    }
}
