//! Exact arithmetic in a monomial algebra and the state-subalgebra machinery
//! built on the minimal automaton.

mod first_return;
mod witness;

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::automaton::MinimalDfa;
use crate::error::{Error, Result};
use crate::presentation::Word;

pub use first_return::{
    decompose_word, factor_over_generators, first_return_language, generator_count, is_q_avoiding,
    FirstReturnLanguage, GeneratorCount,
};
pub use witness::{ideal_intersection_witness, IdealWitness};

/// A finite linear combination of nonzero words with rational coefficients.
///
/// The governing automaton decides which words are nonzero; products that
/// contain a forbidden factor vanish.
#[derive(Debug, Clone)]
pub struct AlgebraElement {
    algebra: Arc<MinimalDfa>,
    terms: BTreeMap<Word, BigRational>,
}

impl PartialEq for AlgebraElement {
    fn eq(&self, other: &Self) -> bool {
        same_algebra(&self.algebra, &other.algebra) && self.terms == other.terms
    }
}

impl Eq for AlgebraElement {}

fn same_algebra(a: &Arc<MinimalDfa>, b: &Arc<MinimalDfa>) -> bool {
    Arc::ptr_eq(a, b) || a == b
}

impl AlgebraElement {
    pub fn zero(algebra: Arc<MinimalDfa>) -> Self {
        AlgebraElement {
            algebra,
            terms: BTreeMap::new(),
        }
    }

    /// The empty word.
    pub fn one(algebra: Arc<MinimalDfa>) -> Self {
        Self::word(algebra, Word::empty())
    }

    /// A single word with coefficient one; zero if the word is rejected.
    pub fn word(algebra: Arc<MinimalDfa>, w: Word) -> Self {
        Self::from_terms(algebra, [(BigRational::one(), w)])
    }

    /// Sums `coefficient · word` terms, dropping rejected words and
    /// cancelled coefficients.
    pub fn from_terms<I>(algebra: Arc<MinimalDfa>, terms: I) -> Self
    where
        I: IntoIterator<Item = (BigRational, Word)>,
    {
        let mut e = Self::zero(algebra);
        for (c, w) in terms {
            e.add_term(w, c);
        }
        e
    }

    fn add_term(&mut self, w: Word, c: BigRational) {
        if c.is_zero() || !self.algebra.accepts(&w).unwrap_or(false) {
            return;
        }
        match self.terms.entry(w) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn algebra(&self) -> &Arc<MinimalDfa> {
        &self.algebra
    }

    /// Terms in shortlex word order.
    pub fn terms(&self) -> impl Iterator<Item = (&Word, &BigRational)> {
        self.terms.iter()
    }

    pub fn support(&self) -> impl Iterator<Item = &Word> {
        self.terms.keys()
    }

    pub fn coefficient(&self, w: &Word) -> BigRational {
        self.terms.get(w).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Least support word in shortlex order.
    pub fn leading_support(&self) -> Result<&Word> {
        self.terms.keys().next().ok_or(Error::ZeroElement)
    }

    fn check(&self, other: &Self) -> Result<()> {
        if same_algebra(&self.algebra, &other.algebra) {
            Ok(())
        } else {
            Err(Error::AlgebraMismatch)
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.scale(&-BigRational::one()))
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero(self.algebra.clone());
        }
        AlgebraElement {
            algebra: self.algebra.clone(),
            terms: self.terms.iter().map(|(w, v)| (w.clone(), v * c)).collect(),
        }
    }

    /// Bilinear extension of concatenation; concatenations the automaton
    /// rejects vanish.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let mut out = Self::zero(self.algebra.clone());
        for (u, c) in &self.terms {
            for (v, d) in &other.terms {
                out.add_term(u.concat(v), c * d);
            }
        }
        Ok(out)
    }

    /// `w · self` for a word `w`.
    pub fn left_mul_word(&self, w: &Word) -> Self {
        Self::from_terms(
            self.algebra.clone(),
            self.terms.iter().map(|(u, c)| (c.clone(), w.concat(u))),
        )
    }

    /// `self · w` for a word `w`.
    pub fn right_mul_word(&self, w: &Word) -> Self {
        Self::from_terms(
            self.algebra.clone(),
            self.terms.iter().map(|(u, c)| (c.clone(), u.concat(w))),
        )
    }

    /// Parses `num/den tok tok ...; ...`. A term without tokens is a
    /// multiple of the identity; the denominator may be omitted.
    pub fn parse(algebra: Arc<MinimalDfa>, text: &str) -> Result<Self> {
        let mut terms = Vec::new();
        for (i, part) in text.split(';').enumerate() {
            let part = part.trim();
            if part.is_empty() {
                continue;
            }
            let (coef, rest) = part.split_once(char::is_whitespace).unwrap_or((part, ""));
            let c = parse_rational(coef).ok_or_else(|| Error::Syntax {
                line: 1,
                column: i + 1,
                message: format!("bad coefficient `{coef}`"),
            })?;
            terms.push((c, algebra.alphabet().parse_word(rest)?));
        }
        Ok(Self::from_terms(algebra, terms))
    }

    /// Human-readable form such as `2 x y - 1/3 y + 1`.
    pub fn render(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let alphabet = self.algebra.alphabet();
        let mut out = String::new();
        for (i, (w, c)) in self.terms.iter().enumerate() {
            let negative = c.is_negative();
            match (i, negative) {
                (0, true) => out.push('-'),
                (0, false) => {}
                (_, true) => out.push_str(" - "),
                (_, false) => out.push_str(" + "),
            }
            let mag = c.abs();
            let word = alphabet.render(w);
            if w.is_empty() {
                out.push_str(&mag.to_string());
            } else if mag.is_one() {
                out.push_str(&word);
            } else {
                out.push_str(&format!("{mag} {word}"));
            }
        }
        out
    }

    /// `(numerator, denominator, word)` triples in shortlex order.
    pub fn to_triples(&self) -> Vec<(BigInt, BigInt, String)> {
        let alphabet = self.algebra.alphabet();
        self.terms
            .iter()
            .map(|(w, c)| (c.numer().clone(), c.denom().clone(), alphabet.render(w)))
            .collect()
    }
}

fn parse_rational(s: &str) -> Option<BigRational> {
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n.parse::<BigInt>().ok()?, d.parse::<BigInt>().ok()?),
        None => (s.parse::<BigInt>().ok()?, BigInt::one()),
    };
    if d.is_zero() {
        return None;
    }
    Some(BigRational::new(n, d))
}

impl fmt::Display for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}
