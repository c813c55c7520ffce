use std::collections::VecDeque;

use super::Dfa;
use crate::presentation::Presentation;

const NONE: usize = usize::MAX;

/// Automaton accepting exactly the words with no forbidden factor.
///
/// States are the proper prefixes of forbidden words, in breadth-first trie
/// order, followed by a sink when some word is forbidden. Missing trie edges
/// are filled in through failure links.
pub fn build_factor_automaton(p: &Presentation) -> Dfa {
    let k = p.alphabet.len();

    // Trie over all forbidden words.
    let mut children: Vec<Vec<usize>> = vec![vec![NONE; k]];
    let mut terminal = vec![false];
    for w in &p.forbidden {
        let mut node = 0;
        for &a in w.letters() {
            if children[node][a] == NONE {
                children.push(vec![NONE; k]);
                terminal.push(false);
                children[node][a] = children.len() - 1;
            }
            node = children[node][a];
        }
        terminal[node] = true;
    }

    // Breadth-first completion: goto[node][a] and failure links. A node is
    // dead when it, or any suffix reached via failure links, ends a
    // forbidden word.
    let nodes = children.len();
    let mut goto = vec![vec![NONE; k]; nodes];
    let mut fail = vec![0usize; nodes];
    let mut dead = terminal.clone();
    let mut order = Vec::with_capacity(nodes);
    let mut queue = VecDeque::from([0usize]);
    while let Some(u) = queue.pop_front() {
        order.push(u);
        if u != 0 && dead[fail[u]] {
            dead[u] = true;
        }
        for a in 0..k {
            let c = children[u][a];
            if c != NONE {
                fail[c] = if u == 0 { 0 } else { goto[fail[u]][a] };
                goto[u][a] = c;
                queue.push_back(c);
            } else {
                goto[u][a] = if u == 0 { 0 } else { goto[fail[u]][a] };
            }
        }
    }

    let mut index = vec![NONE; nodes];
    let mut next = 0;
    for &u in &order {
        if !dead[u] {
            index[u] = next;
            next += 1;
        }
    }
    let live = next;
    let sink = live;
    let mut delta = Vec::with_capacity((live + 1) * k);
    let mut uses_sink = false;
    for &u in order.iter().filter(|&&u| !dead[u]) {
        for &t in &goto[u] {
            if dead[t] {
                uses_sink = true;
                delta.push(sink);
            } else {
                delta.push(index[t]);
            }
        }
    }
    let mut accepting = vec![true; live];
    if uses_sink {
        delta.extend(std::iter::repeat_n(sink, k));
        accepting.push(false);
    }
    Dfa::from_parts(p.alphabet.clone(), delta, 0, accepting)
}
