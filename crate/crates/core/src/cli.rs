//! The `monalg` command line.
//!
//! Exit codes: `0` on success (every verdict, including `NotPrime`, is a
//! successful analysis), `1` for usage, parse and validation errors, `2`
//! when the input language is not the word basis of a monomial algebra.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;
use std::sync::Arc;

use clap::{Parser, Subcommand};
use num_bigint::BigInt;
use serde_json::{json, Value};

use crate::algebra::{decompose_word, ideal_intersection_witness, AlgebraElement};
use crate::automaton::{is_factor_closed, to_dot, MinimalDfa};
use crate::classify::{
    automaton_json, classify, growth, hilbert_series, int_array, int_json, is_prime, Growth,
    Primeness, Verdict,
};
use crate::error::Error;
use crate::input::Source;
use crate::structure::{choose_pivot, class_structure};

#[derive(Debug, Parser)]
#[command(
    name = "monalg",
    version,
    about = "Analyse monomial algebras given by automata"
)]
pub struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Full report: primeness, pivot, generators, growth, verdict.
    Classify {
        input: PathBuf,
    },
    /// Nonzero words up to a length, in shortlex order.
    Basis {
        input: PathBuf,
        #[arg(long)]
        max_len: usize,
    },
    /// Number of nonzero words of each length `0..=max-len`.
    Count {
        input: PathBuf,
        #[arg(long)]
        max_len: usize,
    },
    /// Reduced Hilbert series.
    Hilbert {
        input: PathBuf,
    },
    Growth {
        input: PathBuf,
    },
    /// Primeness, with a witness pair when it fails.
    Prime {
        input: PathBuf,
    },
    /// Split a word as (return to the pivot) · (pivot-avoiding tail).
    Decompose {
        input: PathBuf,
        /// Defaults to the chosen pivot.
        #[arg(long)]
        state: Option<usize>,
        #[arg(long)]
        word: String,
    },
    /// Words v, r with v·z·r a nonzero element of the pivot subalgebra.
    Witness {
        input: PathBuf,
        /// Terms `num/den tok tok ...` separated by `;`.
        #[arg(long, allow_hyphen_values = true)]
        element: String,
        #[arg(long)]
        state: Option<usize>,
    },
    /// Graphviz rendering of the minimal automaton.
    Dot {
        input: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// The opposite algebra in the input's own format.
    Reverse {
        input: PathBuf,
    },
    /// The minimal automaton as an automaton file.
    Minimize {
        input: PathBuf,
    },
}

/// A failed command: message plus exit code.
struct Failure(i32, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = if e == Error::NotFactorClosed { 2 } else { 1 };
        Failure(code, e.to_string())
    }
}

/// Parses `args` (program name first) and runs one command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(err, "{text}");
                1
            } else {
                let _ = write!(out, "{text}");
                0
            };
        }
    };
    match execute(&cli, out) {
        Ok(code) => code,
        Err(Failure(code, message)) => {
            let _ = writeln!(err, "error: {message}");
            code
        }
    }
}

fn emit(out: &mut dyn Write, text: &str) -> Result<(), Failure> {
    out.write_all(text.as_bytes())
        .map_err(|e| Failure(1, format!("cannot write output: {e}")))
}

fn emit_json(out: &mut dyn Write, v: &Value) -> Result<(), Failure> {
    let text = serde_json::to_string_pretty(v).expect("JSON values serialize");
    emit(out, &format!("{text}\n"))
}

/// Minimal automaton of an input that must describe a monomial algebra.
fn monomial(source: &Source) -> Result<MinimalDfa, Failure> {
    let a = source.minimal_automaton();
    if !is_factor_closed(&a) {
        return Err(Error::NotFactorClosed.into());
    }
    if !a.is_accepting(a.initial()) {
        return Err(Failure(
            2,
            "no word is accepted, so the language is not the basis of a monomial algebra".into(),
        ));
    }
    Ok(a)
}

fn execute(cli: &Cli, out: &mut dyn Write) -> Result<i32, Failure> {
    let json = cli.json;
    match &cli.command {
        Command::Classify { input } => {
            let report = classify(&Source::read(input)?)?;
            if json {
                emit_json(out, &report.to_json())?;
            } else {
                emit(out, &report.to_text())?;
            }
            if report.verdict == Verdict::NotMonomialLanguage {
                let why = if report.factor_closed {
                    "the automaton accepts no word".to_string()
                } else {
                    Error::NotFactorClosed.to_string()
                };
                return Err(Failure(2, why));
            }
        }
        Command::Basis { input, max_len } => {
            let a = monomial(&Source::read(input)?)?;
            let words = a.accepted_words(*max_len);
            if json {
                let list: Vec<String> = words.iter().map(|w| a.alphabet().render(w)).collect();
                emit_json(out, &json!({ "words": list }))?;
            } else {
                for w in &words {
                    emit(out, &format!("{}\n", a.alphabet().display(w)))?;
                }
            }
        }
        Command::Count { input, max_len } => {
            let a = monomial(&Source::read(input)?)?;
            let counts: Vec<BigInt> = a
                .word_counts(*max_len)
                .into_iter()
                .map(BigInt::from)
                .collect();
            if json {
                emit_json(out, &json!({ "counts": int_array(&counts) }))?;
            } else {
                let parts: Vec<String> = counts.iter().map(BigInt::to_string).collect();
                emit(out, &format!("{}\n", parts.join(" ")))?;
            }
        }
        Command::Hilbert { input } => {
            let h = hilbert_series(&monomial(&Source::read(input)?)?)?;
            if json {
                emit_json(
                    out,
                    &json!({
                        "numerator": int_array(&h.numerator),
                        "denominator": int_array(&h.denominator),
                    }),
                )?;
            } else {
                emit(out, &format!("{h}\n"))?;
            }
        }
        Command::Growth { input } => {
            let g = growth(&monomial(&Source::read(input)?)?)?;
            if json {
                let v = match g {
                    Growth::Polynomial(d) => json!({"kind": "polynomial", "gk": d}),
                    Growth::Exponential => json!({"kind": "exponential"}),
                };
                emit_json(out, &v)?;
            } else {
                emit(out, &format!("{g}\n"))?;
            }
        }
        Command::Prime { input } => {
            let a = monomial(&Source::read(input)?)?;
            let p = is_prime(&a)?;
            let alphabet = a.alphabet();
            match (&p, json) {
                (Primeness::Prime, false) => emit(out, "prime\n")?,
                (Primeness::Prime, true) => emit_json(out, &json!({"prime": true}))?,
                (Primeness::NotPrime { u, v }, false) => emit(
                    out,
                    &format!(
                        "not prime: u = {}, v = {}\n",
                        alphabet.display(u),
                        alphabet.display(v)
                    ),
                )?,
                (Primeness::NotPrime { u, v }, true) => emit_json(
                    out,
                    &json!({"prime": false, "u": alphabet.render(u), "v": alphabet.render(v)}),
                )?,
            }
        }
        Command::Decompose { input, state, word } => {
            let a = monomial(&Source::read(input)?)?;
            let q = match state {
                Some(q) => *q,
                None => choose_pivot(&class_structure(&a)?)?,
            };
            let w = a.alphabet().parse_word(word)?;
            let (b, x) = decompose_word(&a, q, &w)?;
            let alphabet = a.alphabet();
            if json {
                emit_json(
                    out,
                    &json!({"state": q, "b": alphabet.render(&b), "x": alphabet.render(&x)}),
                )?;
            } else {
                emit(
                    out,
                    &format!(
                        "b = {} ; x = {}\n",
                        alphabet.display(&b),
                        alphabet.display(&x)
                    ),
                )?;
            }
        }
        Command::Witness {
            input,
            element,
            state,
        } => {
            let a = Arc::new(monomial(&Source::read(input)?)?);
            let q = match state {
                Some(q) => *q,
                None => choose_pivot(&class_structure(&a)?)?,
            };
            let z = AlgebraElement::parse(a.clone(), element)?;
            let wit = ideal_intersection_witness(&a, q, &z)?;
            let alphabet = a.alphabet();
            if json {
                let triples: Vec<Value> = wit
                    .result
                    .to_triples()
                    .into_iter()
                    .map(|(n, d, w)| json!([int_json(&n), int_json(&d), w]))
                    .collect();
                emit_json(
                    out,
                    &json!({
                        "state": q,
                        "v": alphabet.render(&wit.left),
                        "r": alphabet.render(&wit.right),
                        "result": triples,
                    }),
                )?;
            } else {
                emit(
                    out,
                    &format!(
                        "v = {} ; r = {} ; result = {}\n",
                        alphabet.display(&wit.left),
                        alphabet.display(&wit.right),
                        wit.result
                    ),
                )?;
            }
        }
        Command::Dot { input, out: path } => {
            let dot = to_dot(&Source::read(input)?.minimal_automaton(), None);
            match path {
                Some(p) => std::fs::write(p, &dot)
                    .map_err(|e| Failure(1, format!("cannot write {}: {e}", p.display())))?,
                None if json => emit_json(out, &json!({ "dot": dot }))?,
                None => emit(out, &dot)?,
            }
        }
        Command::Reverse { input } => {
            let text = Source::read(input)?.reversed().to_text();
            if json {
                emit_json(out, &json!({ "input": text }))?;
            } else {
                emit(out, &text)?;
            }
        }
        Command::Minimize { input } => {
            let a = Source::read(input)?.minimal_automaton();
            if json {
                emit_json(out, &automaton_json(&a))?;
            } else {
                emit(out, &a.to_text())?;
            }
        }
    }
    Ok(0)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn file(text: &str) -> tempfile::NamedTempFile {
        let mut f = tempfile::NamedTempFile::new().unwrap();
        f.write_all(text.as_bytes()).unwrap();
        f
    }

    fn call(args: &[&str]) -> (i32, String, String) {
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let mut full = vec!["monalg"];
        full.extend_from_slice(args);
        let code = run(full, &mut out, &mut err);
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    const SQUARES: &str = "letters x y\nforbid x x\nforbid y y\n";
    const SQUARE: &str = "letters x y\nforbid x x\n";

    #[test]
    fn classify_text() {
        let f = file(SQUARES);
        let (code, out, _) = call(&["classify", f.path().to_str().unwrap()]);
        assert_eq!(code, 0);
        assert!(out.contains("verdict: PI"));
        let g = file(SQUARE);
        let (_, out, _) = call(&["classify", g.path().to_str().unwrap()]);
        assert!(out.contains("verdict: Primitive"));
    }

    #[test]
    fn small_commands() {
        let sq = file(SQUARES);
        let one = file(SQUARE);
        let p = |f: &tempfile::NamedTempFile| f.path().to_str().unwrap().to_string();
        assert_eq!(
            call(&["count", &p(&one), "--max-len", "4"]).1,
            "1 2 3 5 8\n"
        );
        assert_eq!(call(&["hilbert", &p(&sq)]).1, "(1 + t) / (1 - t)\n");
        assert_eq!(
            call(&["basis", &p(&sq), "--max-len", "2"]).1,
            "ε\nx\ny\nx y\ny x\n"
        );
        assert_eq!(
            call(&["decompose", &p(&sq), "--word", "y x y"]).1,
            "b = y x ; x = y\n"
        );
        assert_eq!(
            call(&["witness", &p(&one), "--element", "1/1 x"]).1,
            "v = ε ; r = y ; result = x y\n"
        );
        let yx = file("letters x y\nforbid y x\n");
        assert_eq!(call(&["prime", &p(&yx)]).1, "not prime: u = y, v = x\n");
        let xxy = file("letters x y\nforbid x x y\n");
        assert!(call(&["reverse", &p(&xxy)]).1.contains("forbid y x x"));
    }

    #[test]
    fn exit_codes() {
        let parity = file("letters 0 1\nstates 2\ninitial 0\naccept 0\ntrans 0 0 0\ntrans 0 1 1\ntrans 1 0 1\ntrans 1 1 0\n");
        let (code, _, err) = call(&["classify", parity.path().to_str().unwrap()]);
        assert_eq!(code, 2);
        assert!(err.contains("factor-closed"));
        let bad = file("letters x y\nforbid x z\n");
        assert_eq!(call(&["classify", bad.path().to_str().unwrap()]).0, 1);
        assert_eq!(call(&["classify", "/no/such/file"]).0, 1);
        assert_eq!(call(&["frobnicate"]).0, 1);
        assert_eq!(call(&["--help"]).0, 0);
        let sq = file(SQUARES);
        let yx = file("letters x y\nforbid y x\n");
        assert_eq!(call(&["classify", yx.path().to_str().unwrap()]).0, 0);
        assert_eq!(
            call(&["witness", sq.path().to_str().unwrap(), "--element", "0 x"]).0,
            1
        );
    }

    #[test]
    fn json_round_trip() {
        let sq = file(SQUARES);
        let (code, out, _) = call(&["--json", "classify", sq.path().to_str().unwrap()]);
        assert_eq!(code, 0);
        let v: Value = serde_json::from_str(&out).unwrap();
        assert_eq!(
            format!("{}\n", serde_json::to_string_pretty(&v).unwrap()),
            out
        );
    }
}
