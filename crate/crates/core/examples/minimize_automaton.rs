// Minimizes a redundant automaton and compares canonical forms.

use monomial_automata::automaton::{includes, minimize};
use monomial_automata::{Alphabet, Dfa};

pub fn run_example() -> monomial_automata::Result<()> {
    let ab = Alphabet::new(["0", "1"])?;
    // Two copies of the even-parity automaton glued together.
    let big = Dfa::new(
        ab.clone(),
        vec![vec![2, 1], vec![3, 0], vec![0, 3], vec![1, 2]],
        0,
        &[0, 2],
    )?;
    let small = Dfa::new(ab, vec![vec![0, 1], vec![1, 0]], 0, &[0])?;
    let (m1, m2) = (minimize(&big), minimize(&small));
    println!(
        "{} states -> {} states",
        big.state_count(),
        m1.state_count()
    );
    assert_eq!(m1, m2);
    assert!(includes(&big, &small)?.holds() && includes(&small, &big)?.holds());
    print!("{}", m1.to_text());
    Ok(())
}

#[allow(dead_code)]
fn main() -> monomial_automata::Result<()> {
    run_example()
}
