// Classifies every named corpus algebra and prints the report summary.

use monomial_automata::classify::classify_presentation;
use monomial_automata::corpus;

pub fn run_example() -> monomial_automata::Result<()> {
    for (name, p) in corpus::named() {
        let report = classify_presentation(&p)?;
        println!(
            "{name:>10}  {:<24} {:<20} {}",
            p.to_string(),
            report.verdict.to_string(),
            report.growth
        );
    }
    let report = classify_presentation(&corpus::xy(&["x x", "y y"]))?;
    println!("\n{}", report.to_text());
    Ok(())
}

#[allow(dead_code)]
fn main() -> monomial_automata::Result<()> {
    run_example()
}
