//! Alphabets, words, and finite monomial presentations.
//!
//! A presentation lists the generators of a free algebra and a finite set of
//! forbidden words; the monomial algebra it presents has the words avoiding
//! every forbidden factor as a basis.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

/// Rendering of the empty word in human-readable output.
pub const EMPTY_WORD: &str = "ε";

/// An ordered list of distinct symbol names.
///
/// The order fixes letter indices, canonical state numbering, and every
/// deterministic tie-break downstream.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Alphabet {
    symbols: Vec<String>,
}

impl Alphabet {
    pub fn new<I, S>(symbols: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let symbols: Vec<String> = symbols.into_iter().map(Into::into).collect();
        if symbols.is_empty() {
            return Err(Error::EmptyAlphabet);
        }
        for (i, s) in symbols.iter().enumerate() {
            if s.is_empty() || s.chars().any(|c| c.is_whitespace() || c == '#' || c == ',') {
                return Err(Error::Syntax {
                    line: 0,
                    column: 0,
                    message: format!("invalid symbol name `{s}`"),
                });
            }
            if s == EMPTY_WORD {
                return Err(Error::Syntax {
                    line: 0,
                    column: 0,
                    message: format!("`{EMPTY_WORD}` is reserved for the empty word"),
                });
            }
            if symbols[..i].contains(s) {
                return Err(Error::DuplicateSymbol(s.clone()));
            }
        }
        Ok(Alphabet { symbols })
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn symbol(&self, index: usize) -> &str {
        &self.symbols[index]
    }

    pub fn symbols(&self) -> &[String] {
        &self.symbols
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.symbols.iter().position(|s| s == name)
    }

    fn single_char(&self) -> bool {
        self.symbols.iter().all(|s| s.chars().count() == 1)
    }

    /// Resolves one token into letters. A token that is not a symbol is
    /// read character by character when every symbol is a single character.
    fn resolve_token(&self, token: &str, out: &mut Vec<usize>) -> Result<()> {
        if let Some(i) = self.index_of(token) {
            out.push(i);
            return Ok(());
        }
        if self.single_char() {
            let mut buf = [0u8; 4];
            for c in token.chars() {
                let i = self
                    .index_of(c.encode_utf8(&mut buf))
                    .ok_or_else(|| Error::UnknownSymbol(c.to_string()))?;
                out.push(i);
            }
            return Ok(());
        }
        Err(Error::UnknownSymbol(token.to_string()))
    }

    /// Parses a whitespace-separated word. Blank input and `ε` denote the
    /// empty word.
    pub fn parse_word(&self, text: &str) -> Result<Word> {
        let mut letters = Vec::new();
        for token in text.split_whitespace() {
            if token == EMPTY_WORD {
                continue;
            }
            self.resolve_token(token, &mut letters)?;
        }
        Ok(Word(letters))
    }

    /// Space-separated tokens; the empty word renders as the empty string.
    pub fn render(&self, word: &Word) -> String {
        let mut out = String::new();
        for (i, &a) in word.0.iter().enumerate() {
            if i > 0 {
                out.push(' ');
            }
            out.push_str(&self.symbols[a]);
        }
        out
    }

    /// Like [`Alphabet::render`] but the empty word shows as `ε`.
    pub fn display(&self, word: &Word) -> String {
        if word.is_empty() {
            EMPTY_WORD.to_string()
        } else {
            self.render(word)
        }
    }
}

/// A finite word, stored as letter indices into its alphabet.
///
/// Words are ordered by length first and then lexicographically by letter
/// index (shortlex), which is the deterministic term order used throughout.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct Word(pub Vec<usize>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn letters(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut letters = Vec::with_capacity(self.len() + other.len());
        letters.extend_from_slice(&self.0);
        letters.extend_from_slice(&other.0);
        Word(letters)
    }

    pub fn reversed(&self) -> Word {
        Word(self.0.iter().rev().copied().collect())
    }

    /// True if `factor` occurs as a contiguous subword.
    pub fn contains_factor(&self, factor: &Word) -> bool {
        factor.is_empty()
            || self
                .0
                .windows(factor.len())
                .any(|w| w == factor.0.as_slice())
    }

    /// All words of length exactly `n` over `k` letters, in shortlex order.
    pub fn all_of_length(k: usize, n: usize) -> impl Iterator<Item = Word> {
        let total = k.checked_pow(n as u32).expect("word enumeration overflow");
        (0..total).map(move |mut code| {
            let mut letters = vec![0; n];
            for slot in letters.iter_mut().rev() {
                *slot = code % k;
                code /= k;
            }
            Word(letters)
        })
    }
}

impl From<Vec<usize>> for Word {
    fn from(letters: Vec<usize>) -> Self {
        Word(letters)
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Generators plus monomial relations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Presentation {
    pub alphabet: Alphabet,
    pub forbidden: Vec<Word>,
}

impl Presentation {
    pub fn new(alphabet: Alphabet, forbidden: Vec<Word>) -> Result<Self> {
        for w in &forbidden {
            if w.is_empty() {
                return Err(Error::EmptyForbiddenWord(0));
            }
            if let Some(&a) = w.0.iter().find(|&&a| a >= alphabet.len()) {
                return Err(Error::UnknownSymbol(format!("#{a}")));
            }
        }
        Ok(Presentation {
            alphabet,
            forbidden,
        })
    }

    /// The free algebra on `alphabet`.
    pub fn free(alphabet: Alphabet) -> Self {
        Presentation {
            alphabet,
            forbidden: Vec::new(),
        }
    }

    /// Builds a presentation from symbol names and whitespace-separated
    /// forbidden words.
    pub fn from_words(symbols: &[&str], forbidden: &[&str]) -> Result<Self> {
        let alphabet = Alphabet::new(symbols.iter().copied())?;
        let words = forbidden
            .iter()
            .enumerate()
            .map(|(i, text)| {
                let w = alphabet.parse_word(text)?;
                if w.is_empty() {
                    Err(Error::EmptyForbiddenWord(i + 1))
                } else {
                    Ok(w)
                }
            })
            .collect::<Result<Vec<_>>>()?;
        Presentation::new(alphabet, words)
    }

    /// Non-fatal remarks about the presentation, such as generators that are
    /// themselves forbidden.
    pub fn warnings(&self) -> Vec<String> {
        self.forbidden
            .iter()
            .filter(|w| w.len() == 1)
            .map(|w| {
                format!(
                    "generator `{}` is forbidden and is zero in the algebra",
                    self.alphabet.render(w)
                )
            })
            .collect()
    }

    /// True if some forbidden word occurs as a factor of `word`.
    pub fn kills(&self, word: &Word) -> bool {
        self.forbidden.iter().any(|f| word.contains_factor(f))
    }

    /// Serialises in the line format accepted by [`parse_presentation`].
    pub fn to_text(&self) -> String {
        let mut out = format!("letters {}\n", self.alphabet.symbols().join(" "));
        for w in &self.forbidden {
            out.push_str("forbid ");
            out.push_str(&self.alphabet.render(w));
            out.push('\n');
        }
        out
    }
}

/// Drops duplicate forbidden words and those containing another forbidden
/// word as a factor, then sorts the rest in shortlex order. The generated
/// ideal is unchanged.
pub fn normalize(p: &Presentation) -> Presentation {
    let mut words = p.forbidden.clone();
    words.sort();
    words.dedup();
    let mut kept: Vec<Word> = Vec::with_capacity(words.len());
    // Shortlex order visits every factor of a word before the word itself.
    for w in words {
        if !kept.iter().any(|k| w.contains_factor(k)) {
            kept.push(w);
        }
    }
    Presentation {
        alphabet: p.alphabet.clone(),
        forbidden: kept,
    }
}

/// Reverses every forbidden word; presents the opposite algebra.
pub fn reverse_presentation(p: &Presentation) -> Presentation {
    Presentation {
        alphabet: p.alphabet.clone(),
        forbidden: p.forbidden.iter().map(Word::reversed).collect(),
    }
}

/// A non-blank, comment-stripped line split into `(column, token)` pairs.
pub(crate) struct Directive<'a> {
    pub line: usize,
    pub tokens: Vec<(usize, &'a str)>,
}

impl Directive<'_> {
    pub fn error(&self, index: usize, message: impl Into<String>) -> Error {
        let column = self.tokens.get(index).map_or(1, |t| t.0);
        Error::Syntax {
            line: self.line,
            column,
            message: message.into(),
        }
    }
}

pub(crate) fn directives(text: &str) -> Vec<Directive<'_>> {
    let mut out = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let content = match raw.find('#') {
            Some(pos) => &raw[..pos],
            None => raw,
        };
        let mut tokens = Vec::new();
        let mut start = None;
        for (pos, c) in content.char_indices() {
            if c.is_whitespace() {
                if let Some(s) = start.take() {
                    tokens.push((s, &content[s..pos]));
                }
            } else if start.is_none() {
                start = Some(pos);
            }
        }
        if let Some(s) = start {
            tokens.push((s, &content[s..]));
        }
        if !tokens.is_empty() {
            let tokens = tokens
                .into_iter()
                .map(|(byte, tok)| (content[..byte].chars().count() + 1, tok))
                .collect();
            out.push(Directive {
                line: i + 1,
                tokens,
            });
        }
    }
    out
}

pub(crate) fn parse_letters(d: &Directive<'_>) -> Result<Alphabet> {
    let names: Vec<&str> = d.tokens[1..].iter().map(|t| t.1).collect();
    if names.is_empty() {
        return Err(Error::EmptyAlphabet);
    }
    for (i, name) in names.iter().enumerate() {
        if name.contains(',') {
            return Err(d.error(i + 1, format!("reserved character in symbol `{name}`")));
        }
        if *name == EMPTY_WORD {
            return Err(d.error(i + 1, format!("`{EMPTY_WORD}` cannot be a symbol")));
        }
        if names[..i].contains(name) {
            return Err(Error::DuplicateSymbol(name.to_string()));
        }
    }
    Alphabet::new(names)
}

/// Parses the `letters` / `forbid` line format. Forbidden words are kept as
/// written; see [`normalize`].
pub fn parse_presentation(text: &str) -> Result<Presentation> {
    let mut alphabet: Option<Alphabet> = None;
    let mut forbidden = Vec::new();
    for d in directives(text) {
        match d.tokens[0].1 {
            "letters" => {
                if alphabet.is_some() {
                    return Err(d.error(0, "duplicate `letters` directive"));
                }
                alphabet = Some(parse_letters(&d)?);
            }
            "forbid" => {
                let alpha = alphabet
                    .as_ref()
                    .ok_or_else(|| d.error(0, "`forbid` before `letters`"))?;
                let mut letters = Vec::new();
                for &(_, tok) in &d.tokens[1..] {
                    alpha.resolve_token(tok, &mut letters)?;
                }
                if letters.is_empty() {
                    return Err(Error::EmptyForbiddenWord(d.line));
                }
                forbidden.push(Word(letters));
            }
            other => return Err(d.error(0, format!("unknown directive `{other}`"))),
        }
    }
    let alphabet = alphabet.ok_or(Error::Syntax {
        line: 1,
        column: 1,
        message: "missing `letters` directive".into(),
    })?;
    Ok(Presentation {
        alphabet,
        forbidden,
    })
}

impl fmt::Display for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "k{{{}}}", self.alphabet.symbols().join(","))?;
        if !self.forbidden.is_empty() {
            let rels: Vec<String> = self
                .forbidden
                .iter()
                .map(|w| self.alphabet.render(w).replace(' ', ""))
                .collect();
            write!(f, "/({})", rels.join(", "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn words(p: &Presentation) -> Vec<String> {
        p.forbidden.iter().map(|w| p.alphabet.render(w)).collect()
    }

    #[test]
    fn parses_square_zero_relations() {
        let p = parse_presentation("letters x y\nforbid x x\nforbid y y").unwrap();
        assert_eq!(p.alphabet.symbols(), ["x", "y"]);
        assert_eq!(words(&p), ["x x", "y y"]);
    }

    #[test]
    fn parses_free_and_truncated() {
        let p = parse_presentation("letters x y").unwrap();
        assert!(p.forbidden.is_empty());
        let p = parse_presentation("letters x\nforbid x x x").unwrap();
        assert_eq!(words(&p), ["x x x"]);
    }

    #[test]
    fn comments_and_contiguous_form() {
        let p = parse_presentation("# header\nletters x y  # gens\n\nforbid xy\n").unwrap();
        assert_eq!(words(&p), ["x y"]);
    }

    #[test]
    fn contiguous_form_needs_single_char_symbols() {
        let err = parse_presentation("letters xa y\nforbid xay").unwrap_err();
        assert_eq!(err, Error::UnknownSymbol("xay".into()));
    }

    #[test]
    fn parse_errors() {
        assert_eq!(
            parse_presentation("letters x x").unwrap_err(),
            Error::DuplicateSymbol("x".into())
        );
        assert_eq!(
            parse_presentation("letters").unwrap_err(),
            Error::EmptyAlphabet
        );
        assert_eq!(
            parse_presentation("letters x\nforbid z").unwrap_err(),
            Error::UnknownSymbol("z".into())
        );
        assert_eq!(
            parse_presentation("letters x\nforbid").unwrap_err(),
            Error::EmptyForbiddenWord(2)
        );
        match parse_presentation("letters x\n  bogus x").unwrap_err() {
            Error::Syntax { line, column, .. } => assert_eq!((line, column), (2, 3)),
            e => panic!("unexpected {e:?}"),
        }
        assert!(matches!(
            parse_presentation("forbid x").unwrap_err(),
            Error::Syntax { line: 1, .. }
        ));
        assert!(matches!(
            parse_presentation("letters a,b").unwrap_err(),
            Error::Syntax { .. }
        ));
    }

    #[test]
    fn normalize_examples() {
        let p = Presentation::from_words(&["x", "y"], &["x x y", "x x"]).unwrap();
        assert_eq!(words(&normalize(&p)), ["x x"]);
        let p = Presentation::from_words(&["x", "y"], &["y y", "x x"]).unwrap();
        assert_eq!(words(&normalize(&p)), ["x x", "y y"]);
        let p = Presentation::from_words(&["x", "y"], &["x y", "x y"]).unwrap();
        assert_eq!(words(&normalize(&p)), ["x y"]);
    }

    #[test]
    fn reverse_examples() {
        let rev = |fs: &[&str]| {
            let p = Presentation::from_words(&["x", "y"], fs).unwrap();
            words(&reverse_presentation(&p))
        };
        assert_eq!(rev(&["x y"]), ["y x"]);
        assert_eq!(rev(&["x x", "y y"]), ["x x", "y y"]);
        assert_eq!(rev(&["x x y"]), ["y x x"]);
    }

    #[test]
    fn length_one_relation_warns() {
        let p = Presentation::from_words(&["x", "y"], &["x"]).unwrap();
        assert_eq!(p.warnings().len(), 1);
    }

    #[test]
    fn shortlex_order() {
        let a = Word(vec![1]);
        let b = Word(vec![0, 0]);
        assert!(a < b);
        assert!(Word(vec![0, 1]) < Word(vec![1, 0]));
        let all: Vec<Word> = Word::all_of_length(2, 2).collect();
        assert_eq!(
            all,
            vec![
                Word(vec![0, 0]),
                Word(vec![0, 1]),
                Word(vec![1, 0]),
                Word(vec![1, 1])
            ]
        );
    }

    #[test]
    fn text_round_trip() {
        let p = Presentation::from_words(&["a", "bb"], &["a bb a"]).unwrap();
        assert_eq!(parse_presentation(&p.to_text()).unwrap(), p);
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn arb_presentation() -> impl Strategy<Value = Presentation> {
            prop::collection::vec(prop::collection::vec(0usize..2, 1..4), 0..5).prop_map(|ws| {
                Presentation::new(
                    Alphabet::new(["x", "y"]).unwrap(),
                    ws.into_iter().map(Word).collect(),
                )
                .unwrap()
            })
        }

        proptest! {
            #[test]
            fn reversal_is_an_involution(p in arb_presentation()) {
                let twice = reverse_presentation(&reverse_presentation(&p));
                prop_assert_eq!(normalize(&twice), normalize(&p));
            }

            #[test]
            fn normalize_is_idempotent_and_keeps_the_ideal(p in arb_presentation()) {
                let n = normalize(&p);
                prop_assert_eq!(normalize(&n), n.clone());
                let max = p.forbidden.iter().map(Word::len).max().unwrap_or(0) + 2;
                for len in 0..=max {
                    for w in Word::all_of_length(2, len) {
                        prop_assert_eq!(p.kills(&w), n.kills(&w));
                    }
                }
            }
        }
    }
}
