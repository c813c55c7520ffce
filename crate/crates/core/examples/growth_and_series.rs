// Word counts, Hilbert series and growth for a few algebras.

use monomial_automata::classify::{growth, hilbert_series};
use monomial_automata::{corpus, Source};

pub fn run_example() -> monomial_automata::Result<()> {
    for forbidden in [&["x x", "y y"][..], &[], &["x x"], &["y x"], &["x", "y y"]] {
        let a = Source::Presentation(corpus::xy(forbidden)).minimal_automaton();
        let h = hilbert_series(&a)?;
        let counts: Vec<String> = a.word_counts(8).iter().map(|c| c.to_string()).collect();
        println!("{}", corpus::xy(forbidden));
        println!("  counts  {}", counts.join(" "));
        println!("  series  {h}");
        println!("  growth  {}", growth(&a)?);
        let from_series: Vec<String> = h.coefficients(8).iter().map(|c| c.to_string()).collect();
        assert_eq!(counts, from_series);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> monomial_automata::Result<()> {
    run_example()
}
