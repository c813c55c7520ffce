// Builds the automaton of nonzero words for k{x,y}/(x², y²) and renders it.

use monomial_automata::automaton::{build_factor_automaton, minimize, to_dot};
use monomial_automata::Presentation;

pub fn run_example() -> monomial_automata::Result<()> {
    let p = Presentation::from_words(&["x", "y"], &["x x", "y y"])?;
    let a = build_factor_automaton(&p);
    println!("{p}: {} states", a.state_count());
    for (q, row) in a.transitions().iter().enumerate() {
        println!("  q{q} --x--> q{}  --y--> q{}", row[0], row[1]);
    }
    let m = minimize(&a);
    assert_eq!(m.state_count(), 4);
    for w in m.accepted_words(3) {
        println!("  nonzero: {}", m.alphabet().display(&w));
    }
    print!("{}", to_dot(&m, None));
    Ok(())
}

#[allow(dead_code)]
fn main() -> monomial_automata::Result<()> {
    run_example()
}
