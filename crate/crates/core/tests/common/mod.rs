#![allow(dead_code)]

use monomial_automata::{corpus, Alphabet, Dfa, Presentation, Word};
use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// All words over `k` letters of length at most `max_len`, shortlex.
pub fn words_up_to(k: usize, max_len: usize) -> Vec<Word> {
    let mut out = vec![Word(vec![])];
    let mut layer = vec![Word(vec![])];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for w in &layer {
            for x in 0..k {
                let mut v = w.0.clone();
                v.push(x);
                next.push(Word(v));
            }
        }
        out.extend(next.iter().cloned());
        layer = next;
    }
    out
}

fn has_factor(w: &[usize], f: &[usize]) -> bool {
    f.len() <= w.len() && w.windows(f.len()).any(|win| win == f)
}

/// Nonzero in the algebra: no forbidden word occurs as a factor.
pub fn nonzero(p: &Presentation, w: &[usize]) -> bool {
    p.forbidden.iter().all(|f| !has_factor(w, &f.0))
}

/// Word counts by enumeration.
pub fn brute_counts(p: &Presentation, max_len: usize) -> Vec<u64> {
    let mut counts = vec![0u64; max_len + 1];
    for w in words_up_to(p.alphabet.len(), max_len) {
        if nonzero(p, &w.0) {
            counts[w.len()] += 1;
        }
    }
    counts
}

/// Runs a word letter by letter from `q`.
pub fn run_from(a: &Dfa, q: usize, w: &[usize]) -> usize {
    w.iter().fold(q, |s, &x| a.step(s, x))
}

pub fn concat(u: &[usize], v: &[usize]) -> Vec<usize> {
    let mut w = u.to_vec();
    w.extend_from_slice(v);
    w
}

/// Random complete DFA with `1..=max_states` states over `k` letters.
pub fn random_dfa(rng: &mut ChaCha8Rng, max_states: usize, k: usize) -> Dfa {
    let n = rng.gen_range(1..=max_states);
    let symbols: Vec<String> = (0..k).map(|i| format!("a{i}")).collect();
    let alphabet = Alphabet::new(symbols).unwrap();
    let rows = (0..n)
        .map(|_| (0..k).map(|_| rng.gen_range(0..n)).collect())
        .collect();
    let accepting: Vec<usize> = (0..n).filter(|_| rng.gen_bool(0.5)).collect();
    Dfa::new(alphabet, rows, rng.gen_range(0..n), &accepting).unwrap()
}

/// Table-filling: `eq[p][q]` iff `p` and `q` accept the same words.
pub fn myhill_nerode(a: &Dfa) -> Vec<Vec<bool>> {
    let n = a.state_count();
    let k = a.alphabet().len();
    let mut distinct: Vec<Vec<bool>> = (0..n)
        .map(|p| {
            (0..n)
                .map(|q| a.is_accepting(p) != a.is_accepting(q))
                .collect()
        })
        .collect();
    let mut changed = true;
    while changed {
        changed = false;
        for p in 0..n {
            for q in 0..n {
                if !distinct[p][q] && (0..k).any(|x| distinct[a.step(p, x)][a.step(q, x)]) {
                    distinct[p][q] = true;
                    changed = true;
                }
            }
        }
    }
    distinct
        .into_iter()
        .map(|row| row.into_iter().map(|d| !d).collect())
        .collect()
}

/// Reachable states by plain graph search.
pub fn reachable(a: &Dfa, from: usize) -> Vec<bool> {
    let mut seen = vec![false; a.state_count()];
    let mut stack = vec![from];
    seen[from] = true;
    while let Some(q) = stack.pop() {
        for x in 0..a.alphabet().len() {
            let t = a.step(q, x);
            if !seen[t] {
                seen[t] = true;
                stack.push(t);
            }
        }
    }
    seen
}

/// Named algebras followed by a fixed batch of random two-letter ones.
pub fn corpus_algebras() -> Vec<(String, Presentation)> {
    let mut all: Vec<(String, Presentation)> = corpus::named()
        .into_iter()
        .map(|(n, p)| (n.to_string(), p))
        .collect();
    for (i, p) in corpus::random_xy(12, 2024).into_iter().enumerate() {
        all.push((format!("random{i}"), p));
    }
    all
}

pub fn render(p: &Presentation, w: &[usize]) -> String {
    p.alphabet.display(&Word(w.to_vec()))
}

/// Same language, different shape: states permuted and one state cloned.
pub fn scramble(a: &Dfa, rng: &mut ChaCha8Rng) -> Dfa {
    let n = a.state_count();
    let k = a.alphabet().len();
    let clone_of = rng.gen_range(0..n);
    let mut perm: Vec<usize> = (0..=n).collect();
    perm.shuffle(rng);
    // Old state s (or the clone at index n) goes to perm[s]; edges into
    // `clone_of` are split between it and its clone.
    let mut rows = vec![vec![0; k]; n + 1];
    for s in 0..=n {
        let orig = if s == n { clone_of } else { s };
        for (x, cell) in rows[perm[s]].iter_mut().enumerate() {
            let mut t = a.step(orig, x);
            if t == clone_of && rng.gen_bool(0.5) {
                t = n;
            }
            *cell = perm[t];
        }
    }
    let accepting: Vec<usize> = (0..=n)
        .filter(|&s| a.is_accepting(if s == n { clone_of } else { s }))
        .map(|s| perm[s])
        .collect();
    Dfa::new(a.alphabet().clone(), rows, perm[a.initial()], &accepting).unwrap()
}
