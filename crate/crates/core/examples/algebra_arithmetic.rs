// Exact arithmetic with elements of a monomial algebra.

use std::sync::Arc;

use monomial_automata::{corpus, AlgebraElement, Source};

pub fn run_example() -> monomial_automata::Result<()> {
    let a = Arc::new(Source::Presentation(corpus::xy(&["x x", "y y"])).minimal_automaton());
    let s = AlgebraElement::parse(a.clone(), "1 x; 1 y")?;
    let square = s.mul(&s)?;
    println!("({s})^2 = {square}");
    let t = AlgebraElement::parse(a.clone(), "1/2 x y; -3")?;
    println!("({t}) - ({square}) = {}", t.sub(&square)?);
    println!("({s})·({t}) = {}", s.mul(&t)?);
    println!("triples: {:?}", square.to_triples());
    Ok(())
}

#[allow(dead_code)]
fn main() -> monomial_automata::Result<()> {
    run_example()
}
