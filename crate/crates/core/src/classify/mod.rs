//! Primeness, growth, Hilbert series, and the primitive / PI verdict.

mod growth;
mod hilbert;
mod prime;

use std::fmt;

use num_bigint::BigInt;
use serde_json::{json, Map, Value};

pub use growth::{growth, Growth};
pub use hilbert::{hilbert_series, HilbertSeries};
pub use prime::{is_prime, is_prime_with_limit, Primeness, DEFAULT_VIABILITY_LIMIT};

use crate::algebra::{first_return_language, generator_count, FirstReturnLanguage, GeneratorCount};
use crate::automaton::{is_factor_closed, Cardinality, Dfa, MinimalDfa};
use crate::error::{Error, Result};
use crate::input::Source;
use crate::presentation::{reverse_presentation, Presentation, Word};
use crate::structure::{choose_pivot, class_structure, ClassStructure};

/// Number of first-return words listed in a report.
pub const SAMPLE_SIZE: usize = 5;

/// Word-count prefix compared by [`check_reversal_invariance`].
pub const REVERSAL_COUNT_LENGTH: usize = 12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Verdict {
    /// The accepted language is not the word basis of any monomial algebra.
    NotMonomialLanguage,
    NotPrime,
    /// Prime with at most one first-return generator: GK dimension at most
    /// one, hence PI.
    Pi,
    /// Prime with at least two first-return generators.
    Primitive,
}

impl Verdict {
    /// Snake-case tag used in JSON.
    pub fn tag(&self) -> &'static str {
        match self {
            Verdict::NotMonomialLanguage => "not_monomial_language",
            Verdict::NotPrime => "not_prime",
            Verdict::Pi => "pi",
            Verdict::Primitive => "primitive",
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::NotMonomialLanguage => "NotMonomialLanguage",
            Verdict::NotPrime => "NotPrime",
            Verdict::Pi => "PI",
            Verdict::Primitive => "Primitive",
        })
    }
}

/// Everything the pipeline learned about one algebra.
///
/// Fields after `factor_closed` are `None` once an earlier stage settles
/// the verdict; growth and Hilbert series are always present.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassificationReport {
    /// Normalized presentation, or the automaton as given.
    pub source: Source,
    pub minimal: MinimalDfa,
    pub factor_closed: bool,
    pub prime: Option<Primeness>,
    pub classes: Option<ClassStructure>,
    pub pivot: Option<usize>,
    pub first_return: Option<FirstReturnLanguage>,
    pub generator_count: Option<GeneratorCount>,
    pub generators_sample: Vec<Word>,
    pub growth: Growth,
    pub hilbert: HilbertSeries,
    pub verdict: Verdict,
}

pub fn classify_presentation(p: &Presentation) -> Result<ClassificationReport> {
    classify(&Source::Presentation(p.clone()))
}

pub fn classify_automaton(a: &Dfa) -> Result<ClassificationReport> {
    classify(&Source::Automaton(a.clone()))
}

/// Runs the full pipeline.
pub fn classify(source: &Source) -> Result<ClassificationReport> {
    let source = source.normalized();
    let minimal = source.minimal_automaton();
    let mut report = ClassificationReport {
        factor_closed: is_factor_closed(&minimal),
        prime: None,
        classes: None,
        pivot: None,
        first_return: None,
        generator_count: None,
        generators_sample: Vec::new(),
        growth: growth::growth_of(&minimal),
        hilbert: hilbert::hilbert_of(&minimal),
        verdict: Verdict::NotMonomialLanguage,
        source,
        minimal,
    };
    // The zero ring (no nonzero words at all) is not a monomial algebra.
    if !report.factor_closed || !report.minimal.is_accepting(report.minimal.initial()) {
        report.check()?;
        return Ok(report);
    }

    let primeness = is_prime(&report.minimal)?;
    let prime = primeness.is_prime();
    report.prime = Some(primeness);
    report.classes = Some(class_structure(&report.minimal)?);
    if !prime {
        report.verdict = Verdict::NotPrime;
        report.check()?;
        return Ok(report);
    }

    let pivot = choose_pivot(report.classes.as_ref().expect("computed above"))?;
    let e = first_return_language(&report.minimal, pivot)?;
    let count = generator_count(&e);
    report.pivot = Some(pivot);
    report.generators_sample = e.sample(SAMPLE_SIZE);
    report.first_return = Some(e);
    report.generator_count = Some(count);
    report.verdict = if count == GeneratorCount::AtLeastTwo {
        Verdict::Primitive
    } else {
        Verdict::Pi
    };
    report.check()?;
    Ok(report)
}

/// Compares an algebra with its opposite: factor-closedness, primeness,
/// verdict, growth and word counts up to length 12 must all agree.
pub fn check_reversal_invariance(p: &Presentation) -> Result<bool> {
    let a = classify_presentation(p)?;
    let b = classify_presentation(&reverse_presentation(p))?;
    Ok(a.factor_closed == b.factor_closed
        && a.is_prime() == b.is_prime()
        && a.verdict == b.verdict
        && a.growth == b.growth
        && a.minimal.word_counts(REVERSAL_COUNT_LENGTH)
            == b.minimal.word_counts(REVERSAL_COUNT_LENGTH))
}

impl ClassificationReport {
    pub fn is_prime(&self) -> Option<bool> {
        self.prime.as_ref().map(Primeness::is_prime)
    }

    /// Enforces the invariants linking verdict, primeness, generators and
    /// growth.
    fn check(&self) -> Result<()> {
        let fail = |m: &str| Err(Error::Inconsistent(m.to_string()));
        let prime = self.is_prime() == Some(true);
        let few = matches!(
            self.generator_count,
            Some(GeneratorCount::Zero | GeneratorCount::One)
        );
        if (self.verdict == Verdict::Pi) != (prime && few) {
            return fail("PI verdict must coincide with prime and at most one generator");
        }
        if (self.verdict == Verdict::Primitive)
            != (prime && self.generator_count == Some(GeneratorCount::AtLeastTwo))
        {
            return fail("Primitive verdict must coincide with prime and at least two generators");
        }
        if self.verdict == Verdict::Pi && !matches!(self.growth, Growth::Polynomial(d) if d <= 1) {
            return fail("PI verdict with GK dimension above one");
        }
        if self.verdict == Verdict::NotPrime && self.is_prime() != Some(false) {
            return fail("NotPrime verdict without a primeness witness");
        }
        Ok(())
    }

    /// Generator count as reported: infinite first-return languages are
    /// distinguished from finite ones with two or more words.
    pub fn generator_count_tag(&self) -> Option<&'static str> {
        let e = self.first_return.as_ref()?;
        Some(match self.generator_count? {
            GeneratorCount::Zero => "zero",
            GeneratorCount::One => "one",
            GeneratorCount::AtLeastTwo if e.cardinality() == Cardinality::Infinite => "infinite",
            GeneratorCount::AtLeastTwo => "at_least_two",
        })
    }

    fn input_description(&self) -> String {
        match &self.source {
            Source::Presentation(p) => p.to_string(),
            Source::Automaton(a) => format!(
                "automaton with {} states over {{{}}}",
                a.state_count(),
                a.alphabet().symbols().join(",")
            ),
        }
    }

    /// Human-readable summary, one fact per line.
    pub fn to_text(&self) -> String {
        let alphabet = self.minimal.alphabet();
        let set = |qs: &[usize]| {
            let inner: Vec<String> = qs.iter().map(|q| format!("q{q}")).collect();
            format!("{{{}}}", inner.join(","))
        };
        let mut lines = vec![format!("input: {}", self.input_description())];
        lines.push(format!(
            "minimal automaton: {} states, initial q{}, accepting {}",
            self.minimal.state_count(),
            self.minimal.initial(),
            set(&self.minimal.accepting_states())
        ));
        lines.push(format!("factor-closed: {}", yes_no(self.factor_closed)));
        match &self.prime {
            Some(Primeness::Prime) => lines.push("prime: yes".into()),
            Some(Primeness::NotPrime { u, v }) => lines.push(format!(
                "prime: no (u = {}, v = {})",
                alphabet.display(u),
                alphabet.display(v)
            )),
            None => {}
        }
        if let Some(cs) = &self.classes {
            let all: Vec<String> = cs.classes.iter().map(|c| set(c)).collect();
            let max: Vec<String> = cs.maximal.iter().map(|&c| set(&cs.classes[c])).collect();
            lines.push(format!("classes: {}", all.join(" ")));
            lines.push(format!("maximal classes: {}", max.join(" ")));
        }
        if let Some(q) = self.pivot {
            lines.push(format!("pivot: q{q}"));
        }
        if let Some(tag) = self.generator_count_tag() {
            let sample: Vec<String> = self
                .generators_sample
                .iter()
                .map(|w| alphabet.display(w))
                .collect();
            let more = if tag == "infinite" || self.generators_sample.len() == SAMPLE_SIZE {
                ", ..."
            } else {
                ""
            };
            lines.push(format!(
                "generators: {} [{}{more}]",
                tag.replace('_', " "),
                sample.join(", ")
            ));
        }
        lines.push(format!("growth: {}", self.growth));
        lines.push(format!("hilbert: {}", self.hilbert));
        lines.push(format!("verdict: {}", self.verdict));
        let mut out = lines.join("\n");
        out.push('\n');
        out
    }

    /// JSON object with a fixed key order and exact integers.
    pub fn to_json(&self) -> Value {
        let alphabet = self.minimal.alphabet();
        let word = |w: &Word| Value::String(alphabet.render(w));
        let mut m = Map::new();
        m.insert("input".into(), Value::String(self.source.to_text()));
        m.insert("minimal_automaton".into(), automaton_json(&self.minimal));
        m.insert("factor_closed".into(), Value::Bool(self.factor_closed));
        m.insert("prime".into(), json!(self.is_prime()));
        m.insert(
            "prime_witness".into(),
            match &self.prime {
                Some(Primeness::NotPrime { u, v }) => json!({"u": word(u), "v": word(v)}),
                _ => Value::Null,
            },
        );
        let cs = self.classes.as_ref();
        m.insert("classes".into(), json!(cs.map(|c| &c.classes)));
        m.insert("class_order".into(), json!(cs.map(|c| &c.order)));
        m.insert("maximal_classes".into(), json!(cs.map(|c| &c.maximal)));
        m.insert("pivot".into(), json!(self.pivot));
        m.insert("generator_count".into(), json!(self.generator_count_tag()));
        m.insert(
            "generators_sample".into(),
            Value::Array(self.generators_sample.iter().map(word).collect()),
        );
        m.insert(
            "growth".into(),
            match self.growth {
                Growth::Polynomial(d) => json!({"kind": "polynomial", "gk": d}),
                Growth::Exponential => json!({"kind": "exponential"}),
            },
        );
        m.insert(
            "hilbert".into(),
            json!({
                "numerator": int_array(&self.hilbert.numerator),
                "denominator": int_array(&self.hilbert.denominator),
            }),
        );
        m.insert("verdict".into(), Value::String(self.verdict.tag().into()));
        Value::Object(m)
    }
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

pub(crate) fn automaton_json(a: &Dfa) -> Value {
    json!({
        "letters": a.alphabet().symbols(),
        "states": a.state_count(),
        "initial": a.initial(),
        "accepting": a.accepting_states(),
        "transitions": a.transitions(),
    })
}

/// Arbitrary-size integer as an exact JSON number.
pub(crate) fn int_json(n: &BigInt) -> Value {
    serde_json::from_str(&n.to_string()).expect("integer literal is valid JSON")
}

pub(crate) fn int_array(ns: &[BigInt]) -> Value {
    Value::Array(ns.iter().map(int_json).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;

    fn report(forbidden: &[&str]) -> ClassificationReport {
        classify_presentation(&corpus::xy(forbidden)).unwrap()
    }

    fn sample(r: &ClassificationReport) -> Vec<String> {
        let alphabet = r.minimal.alphabet();
        r.generators_sample
            .iter()
            .map(|w| alphabet.render(w))
            .collect()
    }

    #[test]
    fn squares_are_pi() {
        let r = report(&["x x", "y y"]);
        assert_eq!(r.is_prime(), Some(true));
        assert_eq!(r.pivot, Some(1));
        assert_eq!(sample(&r), ["y x"]);
        assert_eq!(r.generator_count, Some(GeneratorCount::One));
        assert_eq!(r.verdict, Verdict::Pi);
        assert_eq!(r.growth, Growth::Polynomial(1));
        assert_eq!(r.hilbert.to_string(), "(1 + t) / (1 - t)");
        assert!(r.to_text().contains("verdict: PI"));
    }

    #[test]
    fn one_square_is_primitive() {
        let r = report(&["x x"]);
        assert_eq!(r.pivot, Some(0));
        assert_eq!(sample(&r)[..2], ["y", "x y"]);
        assert_eq!(r.verdict, Verdict::Primitive);
        assert_eq!(r.growth, Growth::Exponential);
        assert_eq!(r.generator_count_tag(), Some("at_least_two"));
        assert_eq!(report(&[]).generator_count_tag(), Some("at_least_two"));
    }

    #[test]
    fn yx_is_not_prime() {
        let r = report(&["y x"]);
        let alphabet = r.minimal.alphabet().clone();
        match r.prime.as_ref().unwrap() {
            Primeness::NotPrime { u, v } => {
                assert_eq!(
                    (alphabet.render(u), alphabet.render(v)),
                    ("y".into(), "x".into())
                )
            }
            Primeness::Prime => panic!("expected a witness"),
        }
        assert_eq!(r.verdict, Verdict::NotPrime);
        assert_eq!(r.growth, Growth::Polynomial(2));
        assert_eq!(r.pivot, None);
    }

    #[test]
    fn parity_automaton_is_rejected() {
        let r = classify_automaton(&corpus::parity_automaton(&[0])).unwrap();
        assert!(!r.factor_closed);
        assert_eq!(r.verdict, Verdict::NotMonomialLanguage);
        assert_eq!(r.prime, None);
    }

    #[test]
    fn empty_language_is_rejected() {
        let r = classify_automaton(&corpus::parity_automaton(&[])).unwrap();
        assert_eq!(r.verdict, Verdict::NotMonomialLanguage);
        assert_eq!(r.hilbert.coefficients(3), vec![BigInt::from(0); 4]);
    }

    #[test]
    fn reversal_examples() {
        assert!(check_reversal_invariance(&corpus::xy(&["x x", "y y"])).unwrap());
        assert!(check_reversal_invariance(&corpus::xy(&["x x y"])).unwrap());
        assert!(check_reversal_invariance(&corpus::xy(&["y x"])).unwrap());
    }

    #[test]
    fn json_layout() {
        let v = report(&["x x", "y y"]).to_json();
        let keys: Vec<&str> = v.as_object().unwrap().keys().map(String::as_str).collect();
        assert_eq!(
            keys,
            [
                "input",
                "minimal_automaton",
                "factor_closed",
                "prime",
                "prime_witness",
                "classes",
                "class_order",
                "maximal_classes",
                "pivot",
                "generator_count",
                "generators_sample",
                "growth",
                "hilbert",
                "verdict"
            ]
        );
        assert_eq!(v["verdict"], "pi");
        assert_eq!(v["generator_count"], "one");
        assert_eq!(v["growth"], json!({"kind": "polynomial", "gk": 1}));
        assert_eq!(v["hilbert"]["denominator"], json!([1, -1]));
        assert_eq!(v["generators_sample"], json!(["y x"]));
    }

    #[test]
    fn huge_integers_stay_exact() {
        let n: BigInt = "123456789012345678901234567890".parse().unwrap();
        assert_eq!(int_json(&n).to_string(), "123456789012345678901234567890");
    }
}
