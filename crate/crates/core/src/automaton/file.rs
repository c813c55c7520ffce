use super::Dfa;
use crate::error::{Error, Result};
use crate::presentation::{directives, parse_letters, Alphabet, Directive};

fn number(d: &Directive<'_>, index: usize) -> Result<usize> {
    let tok = d
        .tokens
        .get(index)
        .ok_or_else(|| d.error(index.saturating_sub(1), "missing number"))?
        .1;
    tok.parse()
        .map_err(|_| d.error(index, format!("expected a state number, found `{tok}`")))
}

fn arity(d: &Directive<'_>, expected: usize) -> Result<()> {
    if d.tokens.len() == expected + 1 {
        Ok(())
    } else {
        Err(d.error(
            0,
            format!("`{}` takes {expected} argument(s)", d.tokens[0].1),
        ))
    }
}

/// Parses the `letters` / `states` / `initial` / `accept` / `trans` format.
/// Every `(state, symbol)` pair needs exactly one `trans` line.
pub fn parse_automaton(text: &str) -> Result<Dfa> {
    let mut alphabet: Option<Alphabet> = None;
    let mut states: Option<usize> = None;
    let mut initial: Option<usize> = None;
    let mut accept: Option<Vec<usize>> = None;
    let mut table: Vec<Vec<Option<usize>>> = Vec::new();

    for d in directives(text) {
        let once = |seen: bool| {
            if seen {
                Err(d.error(0, format!("duplicate `{}` directive", d.tokens[0].1)))
            } else {
                Ok(())
            }
        };
        match d.tokens[0].1 {
            "letters" => {
                once(alphabet.is_some())?;
                alphabet = Some(parse_letters(&d)?);
            }
            "states" => {
                once(states.is_some())?;
                arity(&d, 1)?;
                let n = number(&d, 1)?;
                if n == 0 {
                    return Err(d.error(1, "an automaton needs at least one state"));
                }
                let k = alphabet
                    .as_ref()
                    .ok_or_else(|| d.error(0, "`states` before `letters`"))?
                    .len();
                table = vec![vec![None; k]; n];
                states = Some(n);
            }
            "initial" => {
                once(initial.is_some())?;
                arity(&d, 1)?;
                initial = Some(number(&d, 1)?);
            }
            "accept" => {
                once(accept.is_some())?;
                let qs = (1..d.tokens.len())
                    .map(|i| number(&d, i))
                    .collect::<Result<Vec<_>>>()?;
                accept = Some(qs);
            }
            "trans" => {
                arity(&d, 3)?;
                let n = states.ok_or_else(|| d.error(0, "`trans` before `states`"))?;
                let alpha = alphabet.as_ref().expect("states requires letters");
                let from = number(&d, 1)?;
                let sym = d.tokens[2].1;
                let to = number(&d, 3)?;
                let a = alpha
                    .index_of(sym)
                    .ok_or_else(|| Error::UnknownSymbol(sym.to_string()))?;
                if from >= n {
                    return Err(d.error(1, format!("state {from} out of range")));
                }
                if to >= n {
                    return Err(d.error(3, format!("state {to} out of range")));
                }
                if table[from][a].replace(to).is_some() {
                    return Err(d.error(0, format!("duplicate transition for ({from}, {sym})")));
                }
            }
            other => {
                return Err(d.error(0, format!("unknown directive `{other}`")));
            }
        }
    }

    let missing = |what: &str| Error::Syntax {
        line: 1,
        column: 1,
        message: format!("missing `{what}` directive"),
    };
    let alphabet = alphabet.ok_or_else(|| missing("letters"))?;
    states.ok_or_else(|| missing("states"))?;
    let initial = initial.ok_or_else(|| missing("initial"))?;
    let accept = accept.ok_or_else(|| missing("accept"))?;
    let mut rows = Vec::with_capacity(table.len());
    for (q, row) in table.into_iter().enumerate() {
        let row = row
            .into_iter()
            .enumerate()
            .map(|(a, t)| {
                t.ok_or_else(|| {
                    Error::InvalidAutomaton(format!(
                        "missing transition for ({q}, {})",
                        alphabet.symbol(a)
                    ))
                })
            })
            .collect::<Result<Vec<_>>>()?;
        rows.push(row);
    }
    Dfa::new(alphabet, rows, initial, &accept)
}

impl Dfa {
    /// Serialises in the format read by [`parse_automaton`].
    pub fn to_text(&self) -> String {
        let mut out = format!("letters {}\n", self.alphabet().symbols().join(" "));
        out.push_str(&format!("states {}\n", self.state_count()));
        out.push_str(&format!("initial {}\n", self.initial()));
        out.push_str("accept");
        for q in self.accepting_states() {
            out.push_str(&format!(" {q}"));
        }
        out.push('\n');
        for q in 0..self.state_count() {
            for a in 0..self.alphabet().len() {
                out.push_str(&format!(
                    "trans {q} {} {}\n",
                    self.alphabet().symbol(a),
                    self.step(q, a)
                ));
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;

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

    #[test]
    fn parses_and_round_trips() {
        let a = parse_automaton(SQUARES).unwrap();
        assert_eq!(
            a.transitions(),
            vec![vec![1, 2], vec![3, 2], vec![1, 3], vec![3, 3]]
        );
        assert_eq!(a.to_text(), SQUARES);
        let parity = corpus::parity_automaton(&[0]);
        assert_eq!(parse_automaton(&parity.to_text()).unwrap(), parity);
    }

    #[test]
    fn missing_transition_is_an_error() {
        let text = SQUARES.replace("trans 3 y 3\n", "");
        assert!(matches!(
            parse_automaton(&text),
            Err(Error::InvalidAutomaton(_))
        ));
    }

    #[test]
    fn other_errors() {
        let dup = format!("{SQUARES}trans 0 x 2\n");
        assert!(matches!(
            parse_automaton(&dup),
            Err(Error::Syntax { line: 13, .. })
        ));
        let bad = SQUARES.replace("trans 0 x 1", "trans 0 z 1");
        assert_eq!(parse_automaton(&bad), Err(Error::UnknownSymbol("z".into())));
        let range = SQUARES.replace("trans 0 x 1", "trans 0 x 9");
        assert!(matches!(
            parse_automaton(&range),
            Err(Error::Syntax { line: 5, .. })
        ));
        let no_init = SQUARES.replace("initial 0\n", "");
        assert!(matches!(
            parse_automaton(&no_init),
            Err(Error::Syntax { .. })
        ));
        let init_range = SQUARES.replace("initial 0", "initial 7");
        assert_eq!(parse_automaton(&init_range), Err(Error::StateOutOfRange(7)));
    }
}
