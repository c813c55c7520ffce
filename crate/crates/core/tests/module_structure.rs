mod common;

use std::collections::HashMap;

use common::{corpus_algebras, nonzero, run_from, words_up_to};
use monomial_automata::algebra::{
    decompose_word, factor_over_generators, first_return_language, is_q_avoiding,
};
use monomial_automata::structure::{choose_pivot, class_structure};
use monomial_automata::{MinimalDfa, Presentation, Source, Word};

fn with_pivot() -> Vec<(String, Presentation, MinimalDfa, usize)> {
    corpus_algebras()
        .into_iter()
        .map(|(name, p)| {
            let a = Source::Presentation(p.clone()).minimal_automaton();
            let q = choose_pivot(&class_structure(&a).unwrap()).unwrap();
            (name, p, a, q)
        })
        .collect()
}

/// First-return words by definition, up to a length.
fn brute_first_returns(a: &MinimalDfa, q: usize, max_len: usize) -> Vec<Word> {
    words_up_to(a.alphabet().len(), max_len)
        .into_iter()
        .filter(|w| {
            !w.is_empty()
                && run_from(a, q, &w.0) == q
                && (1..w.len()).all(|i| run_from(a, q, &w.0[..i]) != q)
        })
        .collect()
}

#[test]
fn decomposition_is_the_unique_valid_split() {
    for (name, p, a, q) in with_pivot() {
        for w in words_up_to(p.alphabet.len(), 10) {
            if !nonzero(&p, &w.0) {
                continue;
            }
            let valid: Vec<(Word, Word)> = (0..=w.len())
                .map(|i| (Word(w.0[..i].to_vec()), Word(w.0[i..].to_vec())))
                .filter(|(b, x)| run_from(&a, q, &b.0) == q && is_q_avoiding(&a, q, x))
                .collect();
            assert_eq!(valid.len(), 1, "{name}: {w:?}");
            assert_eq!(decompose_word(&a, q, &w).unwrap(), valid[0], "{name}");
        }
    }
}

#[test]
fn first_return_words_factor_uniquely() {
    for (name, p, a, q) in with_pivot() {
        let max_len = if p.alphabet.len() > 2 { 10 } else { 12 };
        let e = first_return_language(&a, q).unwrap();
        let gens = brute_first_returns(&a, q, max_len);
        assert_eq!(e.automaton.accepted_words(max_len), gens, "{name}");

        // Every product of generators up to the length bound, counted.
        let mut seen: HashMap<Vec<usize>, usize> = HashMap::from([(vec![], 1)]);
        let mut frontier = vec![vec![]];
        while let Some(w) = frontier.pop() {
            for g in &gens {
                if w.len() + g.len() <= max_len {
                    let next = common::concat(&w, &g.0);
                    let n = seen.entry(next.clone()).or_insert(0);
                    *n += 1;
                    assert_eq!(*n, 1, "{name}: two factorisations of {next:?}");
                    frontier.push(next);
                }
            }
        }
    }
}

#[test]
fn factorisation_reassembles_its_input() {
    for (name, p, a, q) in with_pivot() {
        let e = first_return_language(&a, q).unwrap();
        for w in words_up_to(p.alphabet.len(), 10) {
            let returns = run_from(&a, q, &w.0) == q;
            match factor_over_generators(&a, q, &w) {
                Some(parts) => {
                    assert!(returns, "{name}");
                    assert!(parts.iter().all(|g| e.contains(g)), "{name}");
                    let joined: Vec<usize> = parts.iter().flat_map(|g| g.0.clone()).collect();
                    assert_eq!(joined, w.0, "{name}");
                }
                None => assert!(!returns, "{name}"),
            }
        }
    }
}

#[test]
fn pivot_lies_in_a_maximal_class() {
    for (name, _, a, q) in with_pivot() {
        let cs = class_structure(&a).unwrap();
        let c = cs.class_of[q].unwrap();
        assert!(cs.is_maximal(c), "{name}");
        // Brute-force maximality: every accepting state reachable from q
        // reaches back (the dead state is absorbing, so paths between
        // accepting states stay accepting).
        let reach = common::reachable(&a, q);
        for s in (0..a.state_count()).filter(|&s| reach[s] && a.is_accepting(s)) {
            assert!(
                common::reachable(&a, s)[q],
                "{name}: state {s} does not return to the pivot"
            );
        }
    }
}
