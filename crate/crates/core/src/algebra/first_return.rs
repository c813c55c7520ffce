use crate::automaton::{minimize, Cardinality, Dfa, MinimalDfa};
use crate::error::{Error, Result};
use crate::presentation::Word;

/// The first-return words at a state `q`: words leading from `q` back to
/// `q` whose nonempty proper prefixes never visit `q`. They freely generate
/// the state subalgebra at `q`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FirstReturnLanguage {
    pub pivot: usize,
    pub automaton: MinimalDfa,
}

impl FirstReturnLanguage {
    pub fn contains(&self, w: &Word) -> bool {
        self.automaton.accepts(w).unwrap_or(false)
    }

    pub fn cardinality(&self) -> Cardinality {
        self.automaton.language_cardinality()
    }

    /// Up to `limit` generators in shortlex order.
    pub fn sample(&self, limit: usize) -> Vec<Word> {
        self.automaton.first_words(limit)
    }
}

/// Number of free generators of a state subalgebra.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum GeneratorCount {
    Zero,
    One,
    AtLeastTwo,
}

/// True iff no nonempty prefix of `w`, read from `q`, ends at `q`.
pub fn is_q_avoiding(a: &Dfa, q: usize, w: &Word) -> bool {
    let mut s = q;
    for &x in w.letters() {
        s = a.step(s, x);
        if s == q {
            return false;
        }
    }
    true
}

/// Automaton for the first-return words at `q`: a copy of `a` started at
/// `q` in which every edge into `q` is redirected to a fresh accepting
/// terminal with no live continuation.
pub fn first_return_language(a: &MinimalDfa, q: usize) -> Result<FirstReturnLanguage> {
    if q >= a.state_count() {
        return Err(Error::StateOutOfRange(q));
    }
    if !a.is_accepting(q) {
        return Err(Error::NotAccepting(q));
    }
    let n = a.state_count();
    let (terminal, sink) = (n, n + 1);
    let mut rows = Vec::with_capacity(n + 2);
    for s in 0..n {
        rows.push(
            (0..a.alphabet().len())
                .map(|x| {
                    let t = a.step(s, x);
                    if t == q {
                        terminal
                    } else {
                        t
                    }
                })
                .collect(),
        );
    }
    rows.push(vec![sink; a.alphabet().len()]);
    rows.push(vec![sink; a.alphabet().len()]);
    let dfa = Dfa::new(a.alphabet().clone(), rows, q, &[terminal])?;
    Ok(FirstReturnLanguage {
        pivot: q,
        automaton: minimize(&dfa),
    })
}

/// Infinite first-return languages count as at least two generators.
pub fn generator_count(e: &FirstReturnLanguage) -> GeneratorCount {
    match e.cardinality() {
        Cardinality::Empty => GeneratorCount::Zero,
        Cardinality::Finite(n) if n == 1u32.into() => GeneratorCount::One,
        Cardinality::Finite(_) | Cardinality::Infinite => GeneratorCount::AtLeastTwo,
    }
}

/// Splits a nonzero word as `w = b·x` with `b` the longest prefix returning
/// `q` to itself and `x` the `q`-avoiding remainder.
pub fn decompose_word(a: &MinimalDfa, q: usize, w: &Word) -> Result<(Word, Word)> {
    if q >= a.state_count() {
        return Err(Error::StateOutOfRange(q));
    }
    if !a.is_accepting(q) {
        return Err(Error::NotAccepting(q));
    }
    if !a.accepts(w)? {
        return Err(Error::ZeroWord(a.alphabet().display(w)));
    }
    let mut cut = 0;
    let mut s = q;
    for (i, &x) in w.letters().iter().enumerate() {
        s = a.step(s, x);
        if s == q {
            cut = i + 1;
        }
    }
    let (b, x) = w.letters().split_at(cut);
    Ok((Word(b.to_vec()), Word(x.to_vec())))
}

/// Cuts a word returning `q` to itself at every visit to `q`, giving its
/// unique factorisation into first-return words. `None` if the word does
/// not return to `q`.
pub fn factor_over_generators(a: &Dfa, q: usize, w: &Word) -> Option<Vec<Word>> {
    if q >= a.state_count() || w.letters().iter().any(|&x| x >= a.alphabet().len()) {
        return None;
    }
    let mut parts = Vec::new();
    let mut start = 0;
    let mut s = q;
    for (i, &x) in w.letters().iter().enumerate() {
        s = a.step(s, x);
        if s == q {
            parts.push(Word(w.letters()[start..=i].to_vec()));
            start = i + 1;
        }
    }
    (start == w.len()).then_some(parts)
}
