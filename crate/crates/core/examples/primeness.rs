// Decides primeness and prints the witness pair when it fails.

use monomial_automata::classify::{is_prime, Primeness};
use monomial_automata::{corpus, Source};

pub fn run_example() -> monomial_automata::Result<()> {
    for forbidden in [&["x x", "y y"][..], &["x y", "y x"], &["y x"], &[]] {
        let a = Source::Presentation(corpus::xy(forbidden)).minimal_automaton();
        let name = corpus::xy(forbidden).to_string();
        match is_prime(&a)? {
            Primeness::Prime => println!("{name}: prime"),
            Primeness::NotPrime { u, v } => println!(
                "{name}: not prime, {} · w · {} = 0 for every w",
                a.alphabet().display(&u),
                a.alphabet().display(&v)
            ),
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> monomial_automata::Result<()> {
    run_example()
}
