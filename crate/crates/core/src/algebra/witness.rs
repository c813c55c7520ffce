use std::collections::{HashMap, HashSet, VecDeque};

use super::AlgebraElement;
use crate::classify::{is_prime, Primeness};
use crate::error::{Error, Result};
use crate::presentation::Word;
use crate::structure::class_structure;

/// Configurations explored per left factor before giving up.
const SEARCH_LIMIT: usize = 1 << 18;

/// Words `v`, `r` with `v·z·r` a nonzero element of the state subalgebra at
/// the pivot.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdealWitness {
    pub left: Word,
    pub right: Word,
    /// `left · z · right`, computed in the algebra.
    pub result: AlgebraElement,
}

/// Each surviving term of `v·z·r` tracked by the pair of states reached
/// from the initial state (nonzero in the algebra iff live) and from the
/// pivot (membership in the state subalgebra iff it equals the pivot).
type Config = Vec<Option<(usize, usize)>>;

/// Moves a nonzero element of a two-sided ideal into the state subalgebra
/// at `q` by multiplying with words on both sides.
///
/// Candidate left factors are the shortest words for each pair of states
/// reachable from `(q0, q)`, tried in breadth-first order, so `v = ε` comes
/// first. For each, a breadth-first search over right factors finds the
/// shortest `r` after which every surviving term returns `q` to itself and
/// at least one term survives. Distinct terms stay distinct under `v·_·r`,
/// so no cancellation can occur.
pub fn ideal_intersection_witness(
    a: &crate::MinimalDfa,
    q: usize,
    z: &AlgebraElement,
) -> Result<IdealWitness> {
    if z.is_zero() {
        return Err(Error::ZeroElement);
    }
    if z.algebra().as_ref() != a {
        return Err(Error::AlgebraMismatch);
    }
    let cs = class_structure(a)?;
    if !matches!(is_prime(a)?, Primeness::Prime) {
        return Err(Error::NotPrime);
    }
    match cs.class_of.get(q).copied().flatten() {
        Some(c) if cs.is_maximal(c) => {}
        _ => return Err(Error::NotMaximalPivot(q)),
    }

    let k = a.alphabet().len();
    let support: Vec<&Word> = z.support().collect();
    let live = |s: usize| a.is_accepting(s);

    // Left factors: one shortest word per reachable (from q0, from q) pair.
    let start = (a.initial(), q);
    let mut lefts = vec![(start, Word::empty())];
    let mut seen = HashSet::from([start]);
    let mut i = 0;
    while i < lefts.len() {
        let ((s, t), ref v) = lefts[i];
        let v = v.clone();
        for x in 0..k {
            let next = (a.step(s, x), a.step(t, x));
            if seen.insert(next) {
                let mut w = v.letters().to_vec();
                w.push(x);
                lefts.push((next, Word(w)));
            }
        }
        i += 1;
    }

    let mut exhausted = false;
    for ((from_initial, from_pivot), v) in lefts {
        let config: Config = support
            .iter()
            .map(|w| {
                let s = a.walk(from_initial, w.letters());
                live(s).then(|| (s, a.walk(from_pivot, w.letters())))
            })
            .collect();
        if !config.iter().flatten().any(|&(_, t)| live(t)) {
            continue;
        }
        match search_right(a, q, config) {
            Search::Found(r) => {
                let result = z.left_mul_word(&v).right_mul_word(&r);
                debug_assert!(!result.is_zero());
                debug_assert!(result.support().all(|t| a.walk(q, t.letters()) == q));
                return Ok(IdealWitness {
                    left: v,
                    right: r,
                    result,
                });
            }
            Search::Exhausted => exhausted = true,
            Search::Impossible => {}
        }
    }
    if exhausted {
        Err(Error::ResourceLimit(format!(
            "witness search explored more than {SEARCH_LIMIT} configurations"
        )))
    } else {
        Err(Error::NoWitness)
    }
}

enum Search {
    Found(Word),
    Impossible,
    Exhausted,
}

fn search_right(a: &crate::MinimalDfa, q: usize, start: Config) -> Search {
    let k = a.alphabet().len();
    let live = |s: usize| a.is_accepting(s);
    let done =
        |c: &Config| c.iter().any(Option::is_some) && c.iter().flatten().all(|&(_, t)| t == q);
    // A configuration with no term still able to reach `q` is hopeless.
    let viable = |c: &Config| c.iter().flatten().any(|&(_, t)| live(t));

    let mut parent: HashMap<Config, (Config, usize)> = HashMap::new();
    let mut seen = HashSet::from([start.clone()]);
    let mut queue = VecDeque::from([start]);
    while let Some(c) = queue.pop_front() {
        if done(&c) {
            let mut letters = Vec::new();
            let mut cur = c;
            while let Some((prev, x)) = parent.remove(&cur) {
                letters.push(x);
                cur = prev;
            }
            letters.reverse();
            return Search::Found(Word(letters));
        }
        if seen.len() > SEARCH_LIMIT {
            return Search::Exhausted;
        }
        for x in 0..k {
            let next: Config = c
                .iter()
                .map(|term| {
                    term.and_then(|(s, t)| {
                        let s = a.step(s, x);
                        live(s).then(|| (s, a.step(t, x)))
                    })
                })
                .collect();
            if viable(&next) && seen.insert(next.clone()) {
                parent.insert(next.clone(), (c.clone(), x));
                queue.push_back(next);
            }
        }
    }
    Search::Impossible
}
