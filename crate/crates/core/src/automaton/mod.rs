//! Deterministic finite automata with total transition functions.

mod dot;
mod factor;
mod file;
mod minimize;

use std::collections::{HashMap, VecDeque};
use std::ops::Deref;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::presentation::{Alphabet, Word};

pub use dot::to_dot;
pub use factor::build_factor_automaton;
pub use file::parse_automaton;
pub use minimize::{language_partition, minimize, minimize_with_map};

/// A complete DFA `(Q, Σ, δ, q0, F)`.
///
/// Rejection is modeled by an explicit absorbing non-accepting state
/// whenever one is needed, so `δ` is defined everywhere.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Dfa {
    alphabet: Alphabet,
    // Row-major: delta[state * |Σ| + letter].
    delta: Vec<usize>,
    initial: usize,
    accepting: Vec<bool>,
}

/// Size of a regular language.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Cardinality {
    Empty,
    Finite(BigUint),
    Infinite,
}

/// Outcome of a language inclusion test.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Inclusion {
    Holds,
    /// Shortest (then alphabet-least) word of the candidate sublanguage that
    /// the superset rejects.
    Counterexample(Word),
}

impl Inclusion {
    pub fn holds(&self) -> bool {
        matches!(self, Inclusion::Holds)
    }
}

impl Dfa {
    /// Builds a DFA from a transition table with one row per state and one
    /// column per letter.
    pub fn new(
        alphabet: Alphabet,
        transitions: Vec<Vec<usize>>,
        initial: usize,
        accepting: &[usize],
    ) -> Result<Self> {
        let n = transitions.len();
        if n == 0 {
            return Err(Error::InvalidAutomaton("no states".into()));
        }
        let k = alphabet.len();
        let mut delta = Vec::with_capacity(n * k);
        for (q, row) in transitions.iter().enumerate() {
            if row.len() != k {
                return Err(Error::InvalidAutomaton(format!(
                    "state {q} has {} transitions, expected {k}",
                    row.len()
                )));
            }
            for &t in row {
                if t >= n {
                    return Err(Error::StateOutOfRange(t));
                }
                delta.push(t);
            }
        }
        if initial >= n {
            return Err(Error::StateOutOfRange(initial));
        }
        let mut acc = vec![false; n];
        for &q in accepting {
            if q >= n {
                return Err(Error::StateOutOfRange(q));
            }
            acc[q] = true;
        }
        Ok(Dfa {
            alphabet,
            delta,
            initial,
            accepting: acc,
        })
    }

    pub(crate) fn from_parts(
        alphabet: Alphabet,
        delta: Vec<usize>,
        initial: usize,
        accepting: Vec<bool>,
    ) -> Self {
        debug_assert_eq!(delta.len(), accepting.len() * alphabet.len());
        Dfa {
            alphabet,
            delta,
            initial,
            accepting,
        }
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn state_count(&self) -> usize {
        self.accepting.len()
    }

    pub fn initial(&self) -> usize {
        self.initial
    }

    pub fn is_accepting(&self, q: usize) -> bool {
        self.accepting[q]
    }

    pub fn accepting_states(&self) -> Vec<usize> {
        (0..self.state_count())
            .filter(|&q| self.accepting[q])
            .collect()
    }

    /// One transition.
    #[inline]
    pub fn step(&self, q: usize, letter: usize) -> usize {
        self.delta[q * self.alphabet.len() + letter]
    }

    /// Transition table, one row per state.
    pub fn transitions(&self) -> Vec<Vec<usize>> {
        self.delta
            .chunks(self.alphabet.len())
            .map(<[usize]>::to_vec)
            .collect()
    }

    /// Same automaton with a different initial state.
    pub fn with_initial(&self, q: usize) -> Result<Dfa> {
        if q >= self.state_count() {
            return Err(Error::StateOutOfRange(q));
        }
        Ok(Dfa {
            initial: q,
            ..self.clone()
        })
    }

    fn check_state(&self, q: usize) -> Result<()> {
        if q < self.state_count() {
            Ok(())
        } else {
            Err(Error::StateOutOfRange(q))
        }
    }

    /// Extended transition function `δ(q, w)`.
    pub fn run(&self, q: usize, w: &Word) -> Result<usize> {
        self.check_state(q)?;
        let k = self.alphabet.len();
        let mut state = q;
        for &a in w.letters() {
            if a >= k {
                return Err(Error::UnknownSymbol(format!("#{a}")));
            }
            state = self.step(state, a);
        }
        Ok(state)
    }

    /// `run` for words already known to be over this alphabet.
    pub(crate) fn walk(&self, q: usize, letters: &[usize]) -> usize {
        letters.iter().fold(q, |s, &a| self.step(s, a))
    }

    pub fn accepts(&self, w: &Word) -> Result<bool> {
        Ok(self.accepting[self.run(self.initial, w)?])
    }

    /// States reachable from `from` by some (possibly empty) word.
    pub fn reachable_from(&self, from: usize) -> Vec<bool> {
        let mut seen = vec![false; self.state_count()];
        let mut stack = vec![from];
        seen[from] = true;
        while let Some(q) = stack.pop() {
            for a in 0..self.alphabet.len() {
                let t = self.step(q, a);
                if !seen[t] {
                    seen[t] = true;
                    stack.push(t);
                }
            }
        }
        seen
    }

    /// States from which some accepting state is reachable.
    pub fn coreachable(&self) -> Vec<bool> {
        let n = self.state_count();
        let mut preds = vec![Vec::new(); n];
        for q in 0..n {
            for a in 0..self.alphabet.len() {
                preds[self.step(q, a)].push(q);
            }
        }
        let mut seen = self.accepting.clone();
        let mut stack: Vec<usize> = (0..n).filter(|&q| seen[q]).collect();
        while let Some(q) = stack.pop() {
            for &p in &preds[q] {
                if !seen[p] {
                    seen[p] = true;
                    stack.push(p);
                }
            }
        }
        seen
    }

    /// States reachable from the initial state that can still reach an
    /// accepting state.
    pub fn useful_states(&self) -> Vec<bool> {
        let reach = self.reachable_from(self.initial);
        let co = self.coreachable();
        reach.iter().zip(&co).map(|(&r, &c)| r && c).collect()
    }

    /// Shortest word, ties broken by alphabet order, leading from `from` to a
    /// state satisfying `goal`, using only states allowed by `within` after
    /// the start.
    pub(crate) fn shortest_word(
        &self,
        from: usize,
        goal: impl Fn(usize) -> bool,
        within: impl Fn(usize) -> bool,
    ) -> Option<Word> {
        let n = self.state_count();
        let mut parent: Vec<Option<(usize, usize)>> = vec![None; n];
        let mut seen = vec![false; n];
        let mut queue = VecDeque::from([from]);
        seen[from] = true;
        while let Some(q) = queue.pop_front() {
            if goal(q) {
                let mut letters = Vec::new();
                let mut cur = q;
                while let Some((p, a)) = parent[cur] {
                    letters.push(a);
                    cur = p;
                }
                letters.reverse();
                return Some(Word(letters));
            }
            for a in 0..self.alphabet.len() {
                let t = self.step(q, a);
                if !seen[t] && within(t) {
                    seen[t] = true;
                    parent[t] = Some((q, a));
                    queue.push_back(t);
                }
            }
        }
        None
    }

    /// Removes states unreachable from the initial state. Kept states retain
    /// their relative order.
    pub fn trim(&self) -> Dfa {
        let reach = self.reachable_from(self.initial);
        let mut index = vec![usize::MAX; self.state_count()];
        let mut next = 0;
        for q in 0..self.state_count() {
            if reach[q] {
                index[q] = next;
                next += 1;
            }
        }
        let k = self.alphabet.len();
        let mut delta = Vec::with_capacity(next * k);
        let mut accepting = Vec::with_capacity(next);
        for q in (0..self.state_count()).filter(|&q| reach[q]) {
            for a in 0..k {
                // Successors of reachable states are reachable, so the
                // result stays total.
                delta.push(index[self.step(q, a)]);
            }
            accepting.push(self.accepting[q]);
        }
        Dfa::from_parts(self.alphabet.clone(), delta, index[self.initial], accepting)
    }

    /// Number of accepted words of each length `0..=max_len`.
    pub fn word_counts(&self, max_len: usize) -> Vec<BigUint> {
        let n = self.state_count();
        let mut dist = vec![BigUint::zero(); n];
        dist[self.initial] = BigUint::one();
        let mut out = Vec::with_capacity(max_len + 1);
        for len in 0..=max_len {
            let total = (0..n)
                .filter(|&q| self.accepting[q])
                .fold(BigUint::zero(), |acc, q| acc + &dist[q]);
            out.push(total);
            if len == max_len {
                break;
            }
            let mut next = vec![BigUint::zero(); n];
            for (q, c) in dist.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                for a in 0..self.alphabet.len() {
                    next[self.step(q, a)] += c;
                }
            }
            dist = next;
        }
        out
    }

    /// Number of accepted words of length exactly `n`.
    pub fn count_words(&self, n: usize) -> BigUint {
        self.word_counts(n).pop().expect("nonempty counts")
    }

    pub fn language_cardinality(&self) -> Cardinality {
        let useful = self.useful_states();
        if !useful[self.initial] {
            return Cardinality::Empty;
        }
        // A cycle among useful states yields infinitely many words.
        if has_cycle(self, &useful) {
            return Cardinality::Infinite;
        }
        let total = self
            .word_counts(self.state_count())
            .into_iter()
            .fold(BigUint::zero(), |acc, c| acc + c);
        Cardinality::Finite(total)
    }

    /// Accepted words of length at most `max_len`, in shortlex order.
    pub fn accepted_words(&self, max_len: usize) -> Vec<Word> {
        let mut out = Vec::new();
        let co = self.coreachable();
        for len in 0..=max_len {
            self.collect_words(len, &co, usize::MAX, &mut out);
        }
        out
    }

    /// The first `limit` accepted words in shortlex order. Stops early when
    /// the language is finite.
    pub fn first_words(&self, limit: usize) -> Vec<Word> {
        let mut out = Vec::new();
        if limit == 0 {
            return out;
        }
        let co = self.coreachable();
        let bound = match self.language_cardinality() {
            Cardinality::Empty => return out,
            Cardinality::Finite(_) => self.state_count(),
            Cardinality::Infinite => usize::MAX,
        };
        let mut len = 0;
        while out.len() < limit && len <= bound {
            self.collect_words(len, &co, limit, &mut out);
            len += 1;
        }
        out
    }

    fn collect_words(&self, len: usize, co: &[bool], limit: usize, out: &mut Vec<Word>) {
        // alive[r][q]: some accepted completion of length exactly r from q.
        let n = self.state_count();
        let mut alive = vec![self.accepting.clone()];
        for r in 1..=len {
            let prev = &alive[r - 1];
            let row = (0..n)
                .map(|q| co[q] && (0..self.alphabet.len()).any(|a| prev[self.step(q, a)]))
                .collect();
            alive.push(row);
        }
        let mut prefix = Vec::with_capacity(len);
        self.dfs_words(self.initial, len, &alive, &mut prefix, limit, out);
    }

    fn dfs_words(
        &self,
        q: usize,
        remaining: usize,
        alive: &[Vec<bool>],
        prefix: &mut Vec<usize>,
        limit: usize,
        out: &mut Vec<Word>,
    ) {
        if out.len() >= limit || !alive[remaining][q] {
            return;
        }
        if remaining == 0 {
            out.push(Word(prefix.clone()));
            return;
        }
        for a in 0..self.alphabet.len() {
            prefix.push(a);
            self.dfs_words(self.step(q, a), remaining - 1, alive, prefix, limit, out);
            prefix.pop();
        }
    }

    /// Letter-reversal of the accepted language: reverse every edge, run the
    /// subset construction from the accepting set, then trim.
    #[allow(clippy::needless_range_loop)]
    pub fn reverse(&self) -> Dfa {
        let n = self.state_count();
        let k = self.alphabet.len();
        let mut preds = vec![vec![Vec::new(); k]; n];
        for q in 0..n {
            for a in 0..k {
                preds[self.step(q, a)][a].push(q);
            }
        }
        let start: Vec<usize> = self.accepting_states();
        let mut index: HashMap<Vec<usize>, usize> = HashMap::new();
        let mut subsets = vec![start.clone()];
        index.insert(start, 0);
        let mut delta = Vec::new();
        let mut i = 0;
        while i < subsets.len() {
            for a in 0..k {
                let mut target: Vec<usize> = subsets[i]
                    .iter()
                    .flat_map(|&q| preds[q][a].iter().copied())
                    .collect();
                target.sort_unstable();
                target.dedup();
                let id = match index.get(&target) {
                    Some(&id) => id,
                    None => {
                        let id = subsets.len();
                        index.insert(target.clone(), id);
                        subsets.push(target);
                        id
                    }
                };
                delta.push(id);
            }
            i += 1;
        }
        let accepting = subsets.iter().map(|s| s.contains(&self.initial)).collect();
        Dfa::from_parts(self.alphabet.clone(), delta, 0, accepting).trim()
    }
}

/// `language(sub) ⊆ language(sup)`, with a shortest counterexample otherwise.
pub fn includes(sup: &Dfa, sub: &Dfa) -> Result<Inclusion> {
    if sup.alphabet != sub.alphabet {
        return Err(Error::AlphabetMismatch);
    }
    let k = sup.alphabet.len();
    let m = sub.state_count();
    let key = |p: usize, q: usize| p * m + q;
    let mut parent: HashMap<usize, (usize, usize)> = HashMap::new();
    let start = (sup.initial, sub.initial);
    let mut seen = vec![false; sup.state_count() * m];
    seen[key(start.0, start.1)] = true;
    let mut queue = VecDeque::from([start]);
    // BFS in letter order: the first bad pair dequeued has the shortlex-least
    // word among all bad words.
    while let Some((p, q)) = queue.pop_front() {
        if sub.accepting[q] && !sup.accepting[p] {
            let mut letters = Vec::new();
            let mut cur = key(p, q);
            while let Some(&(prev, a)) = parent.get(&cur) {
                letters.push(a);
                cur = prev;
            }
            letters.reverse();
            return Ok(Inclusion::Counterexample(Word(letters)));
        }
        for a in 0..k {
            let (np, nq) = (sup.step(p, a), sub.step(q, a));
            let nk = key(np, nq);
            if !seen[nk] {
                seen[nk] = true;
                parent.insert(nk, (key(p, q), a));
                queue.push_back((np, nq));
            }
        }
    }
    Ok(Inclusion::Holds)
}

/// Accepts the letter-reversals of the words `a` accepts.
pub fn reverse_dfa(a: &Dfa) -> Dfa {
    a.reverse()
}

fn has_cycle(a: &Dfa, within: &[bool]) -> bool {
    // Iterative three-colour DFS restricted to `within`.
    let n = a.state_count();
    let k = a.alphabet().len();
    let mut colour = vec![0u8; n];
    for root in 0..n {
        if !within[root] || colour[root] != 0 {
            continue;
        }
        let mut stack = vec![(root, 0usize)];
        colour[root] = 1;
        while let Some(&mut (q, ref mut next)) = stack.last_mut() {
            if *next == k {
                colour[q] = 2;
                stack.pop();
                continue;
            }
            let t = a.step(q, *next);
            *next += 1;
            if !within[t] {
                continue;
            }
            match colour[t] {
                0 => {
                    colour[t] = 1;
                    stack.push((t, 0));
                }
                1 => return true,
                _ => {}
            }
        }
    }
    false
}

/// A DFA in canonical minimal form: every state reachable, pairwise distinct
/// right languages, states numbered breadth-first from the initial state in
/// alphabet order with the dead state (if any) last.
///
/// Automata with equal languages have equal `MinimalDfa` values.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MinimalDfa(Dfa);

impl MinimalDfa {
    pub fn as_dfa(&self) -> &Dfa {
        &self.0
    }

    pub fn into_dfa(self) -> Dfa {
        self.0
    }

    /// The absorbing state with empty right language, if present.
    pub fn dead_state(&self) -> Option<usize> {
        let last = self.0.state_count() - 1;
        let dead = !self.0.accepting[last]
            && (0..self.0.alphabet.len()).all(|a| self.0.step(last, a) == last);
        dead.then_some(last)
    }

    /// True unless `q` is the dead state.
    pub fn is_live(&self, q: usize) -> bool {
        self.dead_state() != Some(q)
    }
}

impl Deref for MinimalDfa {
    type Target = Dfa;

    fn deref(&self) -> &Dfa {
        &self.0
    }
}

/// Whether every factor of every accepted word is accepted.
///
/// In a minimal automaton this holds exactly when the non-accepting states
/// form at most one absorbing sink and, for each letter `a`, the language
/// read from `δ(q0, a)` is contained in the whole language.
pub fn is_factor_closed(a: &MinimalDfa) -> bool {
    let rejecting: Vec<usize> = (0..a.state_count())
        .filter(|&q| !a.is_accepting(q))
        .collect();
    match rejecting.as_slice() {
        [] => {}
        [sink] => {
            if (0..a.alphabet().len()).any(|x| a.step(*sink, x) != *sink) {
                return false;
            }
        }
        _ => return false,
    }
    (0..a.alphabet().len()).all(|x| {
        let derivative = a
            .with_initial(a.step(a.initial(), x))
            .expect("state in range");
        includes(a, &derivative).expect("same alphabet").holds()
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;
    use crate::presentation::Presentation;

    fn xy() -> Alphabet {
        Alphabet::new(["x", "y"]).unwrap()
    }

    fn word(a: &Dfa, s: &str) -> Word {
        a.alphabet().parse_word(s).unwrap()
    }

    fn factor(forbidden: &[&str]) -> Dfa {
        build_factor_automaton(&Presentation::from_words(&["x", "y"], forbidden).unwrap())
    }

    #[test]
    fn run_examples() {
        let parity = corpus::parity_automaton(&[0]);
        assert_eq!(parity.run(0, &word(&parity, "1 1")).unwrap(), 0);
        assert_eq!(parity.run(1, &Word::empty()).unwrap(), 1);
        let a = factor(&["x x", "y y"]);
        assert_eq!(a.run(0, &word(&a, "y x")).unwrap(), 1);
        assert_eq!(
            a.run(0, &Word(vec![2])),
            Err(Error::UnknownSymbol("#2".into()))
        );
        assert_eq!(a.run(9, &Word::empty()), Err(Error::StateOutOfRange(9)));
    }

    #[test]
    fn accepts_examples() {
        let a = factor(&["x x", "y y"]);
        assert!(a.accepts(&word(&a, "x y x")).unwrap());
        assert!(!a.accepts(&word(&a, "x x")).unwrap());
        assert!(a.accepts(&Word::empty()).unwrap());
    }

    #[test]
    fn trim_drops_unreachable_states() {
        // State 3 is accepting but unreachable; state 4 likewise.
        let a = Dfa::new(
            xy(),
            vec![vec![1, 0], vec![2, 0], vec![2, 2], vec![3, 4], vec![4, 4]],
            0,
            &[0, 1, 3, 4],
        )
        .unwrap();
        let t = a.trim();
        assert_eq!(t.state_count(), 3);
        for len in 0..=8 {
            for w in Word::all_of_length(2, len) {
                assert_eq!(a.accepts(&w).unwrap(), t.accepts(&w).unwrap());
            }
        }
        assert_eq!(t.trim(), t);
    }

    #[test]
    fn count_examples() {
        let a = factor(&["x x", "y y"]);
        let counts: Vec<u32> = (0..4)
            .map(|n| a.count_words(n).try_into().unwrap())
            .collect();
        assert_eq!(counts, [1, 2, 2, 2]);
        let a = factor(&["x x"]);
        assert_eq!(
            a.word_counts(4),
            [1u32, 2, 3, 5, 8].map(BigUint::from).to_vec()
        );
        assert_eq!(factor(&[]).count_words(5), BigUint::from(32u32));
    }

    #[test]
    fn cardinality_examples() {
        let empty = Dfa::new(xy(), vec![vec![0, 0], vec![1, 1]], 0, &[1]).unwrap();
        assert_eq!(empty.language_cardinality(), Cardinality::Empty);
        assert_eq!(factor(&[]).language_cardinality(), Cardinality::Infinite);
        // {ε, x, x y}
        let finite = Dfa::new(
            xy(),
            vec![vec![1, 3], vec![3, 2], vec![3, 3], vec![3, 3]],
            0,
            &[0, 1, 2],
        )
        .unwrap();
        assert_eq!(
            finite.language_cardinality(),
            Cardinality::Finite(3u32.into())
        );
        assert_eq!(finite.accepted_words(5).len(), 3);
        assert_eq!(finite.first_words(10).len(), 3);
    }

    #[test]
    fn inclusion_examples() {
        let full = factor(&[]);
        let xx = factor(&["x x"]);
        let xxyy = factor(&["x x", "y y"]);
        assert!(includes(&full, &xxyy).unwrap().holds());
        assert!(includes(&xx, &xxyy).unwrap().holds());
        assert_eq!(
            includes(&xxyy, &xx).unwrap(),
            Inclusion::Counterexample(word(&xx, "y y"))
        );
        let other = corpus::parity_automaton(&[0]);
        assert_eq!(includes(&full, &other), Err(Error::AlphabetMismatch));
    }

    #[test]
    fn reversal_examples() {
        // {x y}
        let a = Dfa::new(
            xy(),
            vec![vec![1, 3], vec![3, 2], vec![3, 3], vec![3, 3]],
            0,
            &[2],
        )
        .unwrap();
        let r = a.reverse();
        assert_eq!(r.accepted_words(4), vec![word(&a, "y x")]);
        assert_eq!(
            minimize(&factor(&["x y"]).reverse()),
            minimize(&factor(&["y x"]))
        );
        let sq = factor(&["x x", "y y"]);
        assert_eq!(minimize(&sq.reverse()), minimize(&sq));
    }

    #[test]
    fn factor_closed_examples() {
        assert!(!is_factor_closed(&minimize(&corpus::parity_automaton(&[
            0
        ]))));
        assert!(is_factor_closed(&minimize(&factor(&["x x", "y y"]))));
        assert!(is_factor_closed(&minimize(&factor(&[]))));
        // Prefix-closed but not suffix-closed: words x y^n.
        let a = Dfa::new(xy(), vec![vec![1, 2], vec![2, 1], vec![2, 2]], 0, &[0, 1]).unwrap();
        assert!(!is_factor_closed(&minimize(&a)));
    }

    #[test]
    fn first_words_of_infinite_language() {
        let a = factor(&["x x"]);
        let words: Vec<String> = a
            .first_words(5)
            .iter()
            .map(|w| a.alphabet().display(w))
            .collect();
        assert_eq!(words, ["ε", "x", "y", "x y", "y x"]);
    }
}
