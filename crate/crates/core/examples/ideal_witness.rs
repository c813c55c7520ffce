// Moves elements of two-sided ideals into the pivot subalgebra.

use std::sync::Arc;

use monomial_automata::algebra::ideal_intersection_witness;
use monomial_automata::structure::{choose_pivot, class_structure};
use monomial_automata::{corpus, AlgebraElement, Source};

pub fn run_example() -> monomial_automata::Result<()> {
    for (forbidden, spec) in [
        (&["x x"][..], "1 x"),
        (&["x x"], "1 x; 1 y"),
        (&["x x", "y y"], "2 x y; -1/3 y x; 1"),
        (&[], "1 x x; -1 y"),
    ] {
        let a = Arc::new(Source::Presentation(corpus::xy(forbidden)).minimal_automaton());
        let q = choose_pivot(&class_structure(&a)?)?;
        let z = AlgebraElement::parse(a.clone(), spec)?;
        let w = ideal_intersection_witness(&a, q, &z)?;
        println!(
            "{}: z = {z}, v = {}, r = {}, v·z·r = {}",
            corpus::xy(forbidden),
            a.alphabet().display(&w.left),
            a.alphabet().display(&w.right),
            w.result
        );
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> monomial_automata::Result<()> {
    run_example()
}
