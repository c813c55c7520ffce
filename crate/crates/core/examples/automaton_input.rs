// Reads automaton files; a language that is not factor-closed is rejected.

use monomial_automata::classify::classify;
use monomial_automata::Source;

const PARITY: &str = "\
letters 0 1
states 2
initial 0
accept 0
trans 0 0 0
trans 0 1 1
trans 1 0 1
trans 1 1 0
";

// Nonzero words of k{x,y}/(x x, y y) written out by hand.
const SQUARES: &str = "\
letters x y
states 4
initial 0
accept 0 1 2
trans 0 x 1
trans 0 y 2
trans 1 x 3
trans 1 y 2
trans 2 x 1
trans 2 y 3
trans 3 x 3
trans 3 y 3
";

pub fn run_example() -> monomial_automata::Result<()> {
    for text in [PARITY, SQUARES] {
        let report = classify(&Source::parse(text)?)?;
        println!(
            "factor-closed: {}, verdict: {}",
            report.factor_closed, report.verdict
        );
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> monomial_automata::Result<()> {
    run_example()
}
