// The pivot state, its first-return generators, and word decompositions.

use monomial_automata::algebra::{
    decompose_word, factor_over_generators, first_return_language, generator_count,
};
use monomial_automata::structure::{choose_pivot, class_structure};
use monomial_automata::{corpus, Source};

pub fn run_example() -> monomial_automata::Result<()> {
    let a = Source::Presentation(corpus::xy(&["x x", "y y"])).minimal_automaton();
    let alphabet = a.alphabet().clone();
    let cs = class_structure(&a)?;
    let q = choose_pivot(&cs)?;
    println!(
        "classes {:?}, maximal {:?}, pivot q{q}",
        cs.classes, cs.maximal
    );

    let e = first_return_language(&a, q)?;
    let gens: Vec<String> = e.sample(5).iter().map(|w| alphabet.display(w)).collect();
    println!("generators {gens:?} ({:?})", generator_count(&e));

    for text in ["y x y", "y x y x", "x y x", "ε"] {
        let w = alphabet.parse_word(text)?;
        let (b, x) = decompose_word(&a, q, &w)?;
        println!(
            "{text:>8} = ({}) · ({})",
            alphabet.display(&b),
            alphabet.display(&x)
        );
        if let Some(parts) = factor_over_generators(&a, q, &b) {
            let parts: Vec<String> = parts.iter().map(|p| alphabet.display(p)).collect();
            println!("{:>8}   b factors as {parts:?}", "");
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> monomial_automata::Result<()> {
    run_example()
}
