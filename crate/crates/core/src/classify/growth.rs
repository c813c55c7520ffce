use std::fmt;

use crate::automaton::{is_factor_closed, Dfa, MinimalDfa};
use crate::error::{Error, Result};
use crate::structure::tarjan_scc;

/// Growth of the number of nonzero words.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Growth {
    /// GK dimension `d`: about `n^(d-1)` words of length `n`; `d = 0` means
    /// finitely many nonzero words.
    Polynomial(u32),
    Exponential,
}

impl Growth {
    pub fn gk_dimension(&self) -> Option<u32> {
        match self {
            Growth::Polynomial(d) => Some(*d),
            Growth::Exponential => None,
        }
    }
}

impl fmt::Display for Growth {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Growth::Polynomial(d) => write!(f, "polynomial (GK dimension {d})"),
            Growth::Exponential => f.write_str("exponential"),
        }
    }
}

/// Growth type of a factor-closed minimal automaton.
pub fn growth(a: &MinimalDfa) -> Result<Growth> {
    if !is_factor_closed(a) {
        return Err(Error::NotFactorClosed);
    }
    Ok(growth_of(a))
}

/// Cycle-structure criterion on the useful states of any automaton: an SCC
/// with more internal edges than states gives exponential growth; otherwise
/// the GK dimension is the largest number of cyclic SCCs on one path of the
/// condensation.
pub(crate) fn growth_of(a: &Dfa) -> Growth {
    let useful = a.useful_states();
    let comps = tarjan_scc(a, &useful);
    let mut comp_of = vec![usize::MAX; a.state_count()];
    for (i, c) in comps.iter().enumerate() {
        for &q in c {
            comp_of[q] = i;
        }
    }
    let k = a.alphabet().len();
    let mut cyclic = vec![false; comps.len()];
    for (i, c) in comps.iter().enumerate() {
        let edges = c
            .iter()
            .flat_map(|&q| (0..k).map(move |x| a.step(q, x)))
            .filter(|&t| comp_of[t] == i)
            .count();
        if edges > c.len() {
            return Growth::Exponential;
        }
        cyclic[i] = edges > 0;
    }
    // Tarjan emits components successors-first.
    let mut depth = vec![0u32; comps.len()];
    for (i, c) in comps.iter().enumerate() {
        let best = c
            .iter()
            .flat_map(|&q| (0..k).map(move |x| a.step(q, x)))
            .filter(|&t| useful[t] && comp_of[t] != i)
            .map(|t| depth[comp_of[t]])
            .max()
            .unwrap_or(0);
        depth[i] = best + u32::from(cyclic[i]);
    }
    Growth::Polynomial(depth.into_iter().max().unwrap_or(0))
}
