//! Reading either input format, detected from the directives present.

use std::path::Path;

use crate::automaton::{build_factor_automaton, minimize, parse_automaton, Dfa, MinimalDfa};
use crate::error::Result;
use crate::presentation::{directives, normalize, parse_presentation, Alphabet, Presentation};

/// An algebra given either by a finite presentation or by an automaton.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Source {
    Presentation(Presentation),
    Automaton(Dfa),
}

impl Source {
    /// Parses text in either format. The first directive after `letters`
    /// decides: `forbid` (or nothing) means a presentation, anything else an
    /// automaton file.
    pub fn parse(text: &str) -> Result<Source> {
        let is_automaton = directives(text)
            .iter()
            .map(|d| d.tokens[0].1)
            .find(|&t| t != "letters")
            .is_some_and(|t| t != "forbid");
        if is_automaton {
            parse_automaton(text).map(Source::Automaton)
        } else {
            parse_presentation(text).map(Source::Presentation)
        }
    }

    pub fn read(path: impl AsRef<Path>) -> Result<Source> {
        let text = std::fs::read_to_string(path.as_ref()).map_err(|e| {
            crate::Error::Io(format!("cannot read {}: {e}", path.as_ref().display()))
        })?;
        Source::parse(&text)
    }

    pub fn alphabet(&self) -> &Alphabet {
        match self {
            Source::Presentation(p) => &p.alphabet,
            Source::Automaton(a) => a.alphabet(),
        }
    }

    /// Normalizes presentations; automata pass through.
    pub fn normalized(&self) -> Source {
        match self {
            Source::Presentation(p) => Source::Presentation(normalize(p)),
            Source::Automaton(a) => Source::Automaton(a.clone()),
        }
    }

    /// An automaton recognising the nonzero words.
    pub fn automaton(&self) -> Dfa {
        match self {
            Source::Presentation(p) => build_factor_automaton(&normalize(p)),
            Source::Automaton(a) => a.clone(),
        }
    }

    pub fn minimal_automaton(&self) -> MinimalDfa {
        minimize(&self.automaton())
    }

    /// The opposite algebra: reversed relations or reversed language.
    pub fn reversed(&self) -> Source {
        match self {
            Source::Presentation(p) => {
                Source::Presentation(crate::presentation::reverse_presentation(p))
            }
            Source::Automaton(a) => Source::Automaton(a.reverse()),
        }
    }

    /// Serialises in the matching file format.
    pub fn to_text(&self) -> String {
        match self {
            Source::Presentation(p) => p.to_text(),
            Source::Automaton(a) => a.to_text(),
        }
    }
}
