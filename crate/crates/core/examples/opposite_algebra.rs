// An algebra and its opposite share primeness, verdict, growth and counts.

use monomial_automata::classify::{check_reversal_invariance, classify_presentation};
use monomial_automata::corpus;
use monomial_automata::presentation::reverse_presentation;

pub fn run_example() -> monomial_automata::Result<()> {
    for (name, p) in corpus::named() {
        let op = reverse_presentation(&p);
        let (r, s) = (classify_presentation(&p)?, classify_presentation(&op)?);
        let same = check_reversal_invariance(&p)?;
        println!(
            "{name:>10}  {p} -> {op}: {} / {} agree={same}",
            r.verdict, s.verdict
        );
        assert!(same);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> monomial_automata::Result<()> {
    run_example()
}
