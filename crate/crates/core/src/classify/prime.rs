use std::collections::HashMap;

use crate::automaton::{is_factor_closed, MinimalDfa};
use crate::error::{Error, Result};
use crate::presentation::Word;

/// Default cap on the number of distinct viability sets.
pub const DEFAULT_VIABILITY_LIMIT: usize = 1 << 20;

/// Outcome of the primeness test.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Primeness {
    Prime,
    /// Nonzero words with `u·w·v = 0` for every word `w`.
    NotPrime {
        u: Word,
        v: Word,
    },
}

impl Primeness {
    pub fn is_prime(&self) -> bool {
        matches!(self, Primeness::Prime)
    }
}

/// Decides primeness with the default viability-set limit.
pub fn is_prime(a: &MinimalDfa) -> Result<Primeness> {
    is_prime_with_limit(a, DEFAULT_VIABILITY_LIMIT)
}

/// The algebra is prime iff for every live state `p` reached by a nonzero
/// word `u` and every nonzero word `v`, some state reachable from `p` can
/// still read `v`. The sets `R_v = { r : δ(r, v) live }` are enumerated by
/// extending `v` on the left, `R_{xv} = δ_x⁻¹(R_v)`; only sets containing
/// the initial state (that is, nonzero `v`) matter.
pub fn is_prime_with_limit(a: &MinimalDfa, limit: usize) -> Result<Primeness> {
    if !is_factor_closed(a) {
        return Err(Error::NotFactorClosed);
    }
    let n = a.state_count();
    let k = a.alphabet().len();
    let live: Vec<bool> = (0..n).map(|q| a.is_accepting(q)).collect();
    if !live[a.initial()] {
        return Err(Error::NoAcceptingState);
    }

    // Viability sets as bit vectors, each with its shortlex-least word.
    let mut index: HashMap<Vec<bool>, usize> = HashMap::new();
    let mut sets: Vec<(Vec<bool>, Word)> = vec![(live.clone(), Word::empty())];
    index.insert(live.clone(), 0);
    let mut level = vec![0usize];
    while !level.is_empty() {
        // `level` is sorted by word, so scanning letters outermost assigns
        // each new set its least word `x·v`.
        let mut next = Vec::new();
        for x in 0..k {
            for &i in &level {
                let set = &sets[i].0;
                let pre: Vec<bool> = (0..n).map(|r| live[r] && set[a.step(r, x)]).collect();
                if !pre[a.initial()] || index.contains_key(&pre) {
                    continue;
                }
                if sets.len() >= limit {
                    return Err(Error::ResourceLimit(format!(
                        "more than {limit} viability sets"
                    )));
                }
                let mut w = Vec::with_capacity(sets[i].1.len() + 1);
                w.push(x);
                w.extend_from_slice(sets[i].1.letters());
                index.insert(pre.clone(), sets.len());
                next.push(sets.len());
                sets.push((pre, Word(w)));
            }
        }
        level = next;
    }

    // Live states in order of their shortlex-least access word.
    let mut access: Vec<(Word, usize)> = (0..n)
        .filter(|&p| live[p])
        .filter_map(|p| {
            a.shortest_word(a.initial(), |s| s == p, |s| live[s])
                .map(|u| (u, p))
        })
        .collect();
    access.sort();

    for (u, p) in access {
        let reach = a.reachable_from(p);
        let bad = sets
            .iter()
            .filter(|(set, _)| !(0..n).any(|r| reach[r] && set[r]))
            .map(|(_, v)| v)
            .min();
        if let Some(v) = bad {
            return Ok(Primeness::NotPrime { u, v: v.clone() });
        }
    }
    Ok(Primeness::Prime)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::automaton::minimize;
    use crate::corpus;
    use crate::input::Source;

    fn min(forbidden: &[&str]) -> MinimalDfa {
        Source::Presentation(corpus::xy(forbidden)).minimal_automaton()
    }

    fn witness(forbidden: &[&str]) -> (String, String) {
        let a = min(forbidden);
        match is_prime(&a).unwrap() {
            Primeness::NotPrime { u, v } => (a.alphabet().render(&u), a.alphabet().render(&v)),
            Primeness::Prime => panic!("expected not prime"),
        }
    }

    #[test]
    fn prime_examples() {
        assert!(is_prime(&min(&["x x", "y y"])).unwrap().is_prime());
        assert!(is_prime(&min(&[])).unwrap().is_prime());
        assert!(is_prime(&min(&["x x"])).unwrap().is_prime());
    }

    #[test]
    fn not_prime_examples() {
        assert_eq!(witness(&["x y", "y x"]), ("x".into(), "y".into()));
        assert_eq!(witness(&["y x"]), ("y".into(), "x".into()));
    }

    #[test]
    fn errors() {
        let parity = minimize(&corpus::parity_automaton(&[0]));
        assert_eq!(is_prime(&parity), Err(Error::NotFactorClosed));
        let a = min(&["x x", "y y"]);
        assert!(matches!(
            is_prime_with_limit(&a, 1),
            Err(Error::ResourceLimit(_))
        ));
    }
}
