//! Small named algebras and automata used by examples and tests.

use crate::automaton::Dfa;
use crate::presentation::{Alphabet, Presentation};

/// Two-state automaton over `{0, 1}` tracking the parity of ones, with the
/// given accepting states.
pub fn parity_automaton(accepting: &[usize]) -> Dfa {
    Dfa::new(
        Alphabet::new(["0", "1"]).expect("valid alphabet"),
        vec![vec![0, 1], vec![1, 0]],
        0,
        accepting,
    )
    .expect("valid automaton")
}

/// A presentation over `x, y`.
pub fn xy(forbidden: &[&str]) -> Presentation {
    Presentation::from_words(&["x", "y"], forbidden).expect("valid presentation")
}

/// Hand-picked presentations covering every verdict and growth type.
pub fn named() -> Vec<(&'static str, Presentation)> {
    vec![
        (
            "free1",
            Presentation::from_words(&["x"], &[]).expect("valid"),
        ),
        ("free2", xy(&[])),
        ("x2", xy(&["x x"])),
        ("x2y2", xy(&["x x", "y y"])),
        ("xy_yx", xy(&["x y", "y x"])),
        ("yx", xy(&["y x"])),
        ("xy", xy(&["x y"])),
        ("xxy", xy(&["x x y"])),
        ("yxx", xy(&["y x x"])),
        (
            "x3",
            Presentation::from_words(&["x"], &["x x x"]).expect("valid"),
        ),
        ("x2_yxy", xy(&["x x", "y x y"])),
        ("xyx_yy", xy(&["x y x", "y y"])),
        (
            "free3_ab",
            Presentation::from_words(&["a", "b", "c"], &["a b"]).expect("valid"),
        ),
    ]
}

/// Deterministic pseudo-random presentations over `x, y` with one to three
/// forbidden words of length at most three.
pub fn random_xy(count: usize, seed: u64) -> Vec<Presentation> {
    // SplitMix64; keeps the corpus reproducible without a dev-only RNG.
    let mut state = seed;
    let mut next = move || {
        state = state.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    };
    (0..count)
        .map(|_| {
            let words = 1 + (next() % 3) as usize;
            let forbidden: Vec<String> = (0..words)
                .map(|_| {
                    let len = 1 + (next() % 3) as usize;
                    (0..len)
                        .map(|_| if next() % 2 == 0 { "x" } else { "y" })
                        .collect::<Vec<_>>()
                        .join(" ")
                })
                .collect();
            let refs: Vec<&str> = forbidden.iter().map(String::as_str).collect();
            xy(&refs)
        })
        .collect()
}
