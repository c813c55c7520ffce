//! Mutual-reachability classes of accepting states and their order.

use crate::automaton::{is_factor_closed, Dfa, MinimalDfa};
use crate::error::{Error, Result};
use crate::presentation::Word;

/// Classes of accepting states under mutual reachability, with the induced
/// partial order and its maximal elements.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassStructure {
    /// Each class lists its states in increasing order; classes are numbered
    /// by their smallest member.
    pub classes: Vec<Vec<usize>>,
    /// Class index of each accepting state, `None` for rejecting states.
    pub class_of: Vec<Option<usize>>,
    /// `order[c][d]`: some state of `c` reaches some state of `d`.
    pub order: Vec<Vec<bool>>,
    pub maximal: Vec<usize>,
}

impl ClassStructure {
    pub fn is_maximal(&self, class: usize) -> bool {
        self.maximal.contains(&class)
    }

    /// Class containing the accepting state `q`.
    pub fn class(&self, q: usize) -> Option<&[usize]> {
        self.class_of
            .get(q)
            .copied()
            .flatten()
            .map(|c| self.classes[c].as_slice())
    }
}

/// Reflexive-transitive reachability between states.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReachSet(Vec<Vec<bool>>);

impl ReachSet {
    pub fn of(a: &Dfa) -> ReachSet {
        ReachSet((0..a.state_count()).map(|q| a.reachable_from(q)).collect())
    }

    pub fn contains(&self, from: usize, to: usize) -> bool {
        self.0[from][to]
    }

    /// States reachable from `from`.
    pub fn from_state(&self, from: usize) -> &[bool] {
        &self.0[from]
    }
}

/// Strongly connected components of the subgraph induced by `within`
/// (iterative Tarjan). Components come out in reverse topological order.
pub(crate) fn tarjan_scc(a: &Dfa, within: &[bool]) -> Vec<Vec<usize>> {
    const UNSEEN: usize = usize::MAX;
    let n = a.state_count();
    let k = a.alphabet().len();
    let mut index = vec![UNSEEN; n];
    let mut low = vec![0usize; n];
    let mut on_stack = vec![false; n];
    let mut stack = Vec::new();
    let mut components = Vec::new();
    let mut counter = 0;

    for root in 0..n {
        if !within[root] || index[root] != UNSEEN {
            continue;
        }
        let mut call: Vec<(usize, usize)> = vec![(root, 0)];
        index[root] = counter;
        low[root] = counter;
        counter += 1;
        stack.push(root);
        on_stack[root] = true;

        while let Some(&mut (v, ref mut edge)) = call.last_mut() {
            if *edge < k {
                let w = a.step(v, *edge);
                *edge += 1;
                if !within[w] {
                    continue;
                }
                if index[w] == UNSEEN {
                    index[w] = counter;
                    low[w] = counter;
                    counter += 1;
                    stack.push(w);
                    on_stack[w] = true;
                    call.push((w, 0));
                } else if on_stack[w] {
                    low[v] = low[v].min(index[w]);
                }
                continue;
            }
            call.pop();
            if let Some(&(parent, _)) = call.last() {
                low[parent] = low[parent].min(low[v]);
            }
            if low[v] == index[v] {
                let mut comp = Vec::new();
                loop {
                    let w = stack.pop().expect("tarjan stack");
                    on_stack[w] = false;
                    comp.push(w);
                    if w == v {
                        break;
                    }
                }
                comp.sort_unstable();
                components.push(comp);
            }
        }
    }
    components
}

/// Computes the class structure of a factor-closed minimal automaton.
pub fn class_structure(a: &MinimalDfa) -> Result<ClassStructure> {
    if !is_factor_closed(a) {
        return Err(Error::NotFactorClosed);
    }
    Ok(accepting_classes(a))
}

/// Class structure of the accepting states of any automaton.
pub(crate) fn accepting_classes(a: &Dfa) -> ClassStructure {
    let n = a.state_count();
    let accepting: Vec<bool> = (0..n).map(|q| a.is_accepting(q)).collect();
    let mut classes = tarjan_scc(a, &accepting);
    classes.sort_by_key(|c| c[0]);

    let mut class_of = vec![None; n];
    for (i, c) in classes.iter().enumerate() {
        for &q in c {
            class_of[q] = Some(i);
        }
    }

    // Reachability through accepting states only.
    let m = classes.len();
    let mut order = vec![vec![false; m]; m];
    for (i, c) in classes.iter().enumerate() {
        let mut seen = vec![false; n];
        let mut stack = vec![c[0]];
        seen[c[0]] = true;
        while let Some(q) = stack.pop() {
            order[i][class_of[q].expect("accepting")] = true;
            for x in 0..a.alphabet().len() {
                let t = a.step(q, x);
                if accepting[t] && !seen[t] {
                    seen[t] = true;
                    stack.push(t);
                }
            }
        }
    }
    let maximal = (0..m)
        .filter(|&i| (0..m).all(|j| j == i || !order[i][j]))
        .collect();
    ClassStructure {
        classes,
        class_of,
        order,
        maximal,
    }
}

/// Shortest word (alphabet order breaks ties) taking `p` to `q`. When both
/// endpoints accept, the path stays inside accepting states.
pub fn connecting_word(a: &Dfa, p: usize, q: usize) -> Option<Word> {
    if p >= a.state_count() || q >= a.state_count() {
        return None;
    }
    let inside = a.is_accepting(p) && a.is_accepting(q);
    a.shortest_word(p, |s| s == q, |s| !inside || a.is_accepting(s))
}

/// Smallest state of the smallest-numbered maximal class.
pub fn choose_pivot(cs: &ClassStructure) -> Result<usize> {
    cs.maximal
        .iter()
        .map(|&c| cs.classes[c][0])
        .min()
        .ok_or(Error::NoAcceptingState)
}
