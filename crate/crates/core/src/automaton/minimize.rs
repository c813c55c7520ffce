use std::collections::VecDeque;

use super::{Dfa, MinimalDfa};

/// Hopcroft partition refinement over all states of `a`.
///
/// Returns a block id per state; two states share a block iff they accept
/// the same right language. Block ids are numbered by first occurrence in
/// state order.
#[allow(clippy::needless_range_loop)]
pub fn language_partition(a: &Dfa) -> Vec<usize> {
    let n = a.state_count();
    let k = a.alphabet().len();

    let mut inverse = vec![vec![Vec::new(); n]; k];
    for q in 0..n {
        for x in 0..k {
            inverse[x][a.step(q, x)].push(q);
        }
    }

    let (acc, rej): (Vec<usize>, Vec<usize>) = (0..n).partition(|&q| a.is_accepting(q));
    let mut blocks: Vec<Vec<usize>> = [acc, rej].into_iter().filter(|b| !b.is_empty()).collect();
    let mut block_of = vec![0usize; n];
    for (i, b) in blocks.iter().enumerate() {
        for &q in b {
            block_of[q] = i;
        }
    }

    let mut pending: Vec<Vec<bool>> = vec![vec![false; k]; blocks.len()];
    let mut work = VecDeque::new();
    // With two initial blocks, splitting against the smaller one suffices.
    let seed = if blocks.len() == 2 && blocks[1].len() < blocks[0].len() {
        1
    } else {
        0
    };
    if blocks.len() == 2 {
        for (x, flag) in pending[seed].iter_mut().enumerate() {
            *flag = true;
            work.push_back((seed, x));
        }
    }

    let mut mark = vec![false; n];
    while let Some((splitter, x)) = work.pop_front() {
        pending[splitter][x] = false;
        let mut preimage = Vec::new();
        for &q in &blocks[splitter] {
            for &p in &inverse[x][q] {
                if !mark[p] {
                    mark[p] = true;
                    preimage.push(p);
                }
            }
        }
        let mut touched: Vec<usize> = preimage.iter().map(|&p| block_of[p]).collect();
        touched.sort_unstable();
        touched.dedup();
        for b in touched {
            let (inside, outside): (Vec<usize>, Vec<usize>) =
                blocks[b].iter().partition(|&&q| mark[q]);
            if outside.is_empty() {
                continue;
            }
            let new = blocks.len();
            blocks[b] = inside;
            for &q in &outside {
                block_of[q] = new;
            }
            blocks.push(outside);
            pending.push(vec![false; k]);
            for y in 0..k {
                if pending[b][y] {
                    pending[new][y] = true;
                    work.push_back((new, y));
                } else {
                    let smaller = if blocks[new].len() < blocks[b].len() {
                        new
                    } else {
                        b
                    };
                    pending[smaller][y] = true;
                    work.push_back((smaller, y));
                }
            }
        }
        for p in preimage {
            mark[p] = false;
        }
    }

    let mut renumber = vec![usize::MAX; blocks.len()];
    let mut next = 0;
    (0..n)
        .map(|q| {
            let b = block_of[q];
            if renumber[b] == usize::MAX {
                renumber[b] = next;
                next += 1;
            }
            renumber[b]
        })
        .collect()
}

/// Minimizes and canonicalizes `a`; see [`MinimalDfa`].
pub fn minimize(a: &Dfa) -> MinimalDfa {
    minimize_with_map(a).0
}

/// Like [`minimize`], also returning for each input state its canonical
/// state, or `None` when no state of its class is reachable.
pub fn minimize_with_map(a: &Dfa) -> (MinimalDfa, Vec<Option<usize>>) {
    let k = a.alphabet().len();
    let block = language_partition(a);
    let blocks = block.iter().max().map_or(0, |m| m + 1);

    let mut rep = vec![usize::MAX; blocks];
    for (q, &b) in block.iter().enumerate().rev() {
        rep[b] = q;
    }
    let co = a.coreachable();

    // Breadth-first numbering of reachable classes, letters in order; the
    // class with empty right language is held back and numbered last.
    let mut canon = vec![usize::MAX; blocks];
    let mut order = Vec::with_capacity(blocks);
    let mut dead = None;
    let start = block[a.initial()];
    let mut seen = vec![false; blocks];
    seen[start] = true;
    let mut queue = VecDeque::from([start]);
    while let Some(b) = queue.pop_front() {
        if co[rep[b]] {
            canon[b] = order.len();
            order.push(b);
        } else {
            dead = Some(b);
        }
        for x in 0..k {
            let t = block[a.step(rep[b], x)];
            if !seen[t] {
                seen[t] = true;
                queue.push_back(t);
            }
        }
    }
    if let Some(d) = dead {
        canon[d] = order.len();
        order.push(d);
    }

    let mut delta = Vec::with_capacity(order.len() * k);
    let mut accepting = Vec::with_capacity(order.len());
    for &b in &order {
        for x in 0..k {
            delta.push(canon[block[a.step(rep[b], x)]]);
        }
        accepting.push(a.is_accepting(rep[b]));
    }
    let min = Dfa::from_parts(a.alphabet().clone(), delta, canon[start], accepting);
    let map = block
        .iter()
        .map(|&b| (canon[b] != usize::MAX).then_some(canon[b]))
        .collect();
    (MinimalDfa(min), map)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::automaton::build_factor_automaton;
    use crate::corpus;
    use crate::presentation::{Alphabet, Presentation};

    #[test]
    fn parity_is_already_minimal() {
        let parity = corpus::parity_automaton(&[0]);
        let m = minimize(&parity);
        assert_eq!(m.as_dfa(), &parity);
    }

    #[test]
    fn full_language_collapses() {
        let a = Dfa::new(
            Alphabet::new(["x", "y"]).unwrap(),
            vec![vec![1, 2], vec![2, 0], vec![0, 1]],
            0,
            &[0, 1, 2],
        )
        .unwrap();
        let m = minimize(&a);
        assert_eq!(m.state_count(), 1);
        assert_eq!(m.dead_state(), None);
    }

    #[test]
    fn square_zero_has_no_merges() {
        let a = build_factor_automaton(
            &Presentation::from_words(&["x", "y"], &["x x", "y y"]).unwrap(),
        );
        let m = minimize(&a);
        assert_eq!(m.as_dfa(), &a);
        assert_eq!(m.dead_state(), Some(3));
    }

    #[test]
    fn dead_state_is_numbered_last() {
        // Breadth-first order would reach the sink (via x) before "y".
        let a =
            build_factor_automaton(&Presentation::from_words(&["x", "y"], &["x", "y y"]).unwrap());
        let m = minimize(&a);
        assert_eq!(m.transitions(), vec![vec![2, 1], vec![2, 2], vec![2, 2]]);
        assert_eq!(m.dead_state(), Some(2));
    }

    #[test]
    fn empty_language_is_a_single_dead_state() {
        let a = Dfa::new(
            Alphabet::new(["x"]).unwrap(),
            vec![vec![1], vec![0]],
            0,
            &[],
        )
        .unwrap();
        let m = minimize(&a);
        assert_eq!(m.state_count(), 1);
        assert_eq!(m.dead_state(), Some(0));
    }

    #[test]
    fn map_sends_states_to_their_class() {
        let a = Dfa::new(
            Alphabet::new(["x"]).unwrap(),
            vec![vec![1], vec![0], vec![2]],
            0,
            &[0, 1, 2],
        )
        .unwrap();
        let (m, map) = minimize_with_map(&a);
        assert_eq!(m.state_count(), 1);
        assert_eq!(map, vec![Some(0), Some(0), Some(0)]);
    }
}
