//! Primeness and the primitive / PI dichotomy for monomial algebras whose
//! nonzero words form a regular language.
//!
//! A monomial algebra `k{x1,...,xd}/I` has the words outside `I` as a
//! basis. When that set of words is recognised by a finite automaton (every
//! finitely presented monomial algebra qualifies), the minimal automaton
//! decides whether the algebra is prime and, if so, whether it is primitive
//! or satisfies a polynomial identity:
//!
//! * pick an accepting state `q` in a maximal class of mutually reachable
//!   accepting states;
//! * the words returning `q` to itself span a free subalgebra `B`, freely
//!   generated by the first-return words;
//! * if `B` has at most one generator the algebra has GK dimension at most
//!   one and is PI, otherwise it is primitive.
//!
//! ```
//! use monomial_automata::{classify, corpus, Verdict};
//!
//! let report = classify::classify_presentation(&corpus::xy(&["x x", "y y"])).unwrap();
//! assert_eq!(report.verdict, Verdict::Pi);
//!
//! let report = classify::classify_presentation(&corpus::xy(&["x x"])).unwrap();
//! assert_eq!(report.verdict, Verdict::Primitive);
//! ```
//!
//! Runnable walkthroughs for each capability live in `examples/`.

pub mod algebra;
pub mod automaton;
pub mod classify;
pub mod cli;
pub mod corpus;
pub mod error;
pub mod input;
mod poly;
pub mod presentation;
pub mod structure;

pub use algebra::{AlgebraElement, FirstReturnLanguage, GeneratorCount};
pub use automaton::{Cardinality, Dfa, Inclusion, MinimalDfa};
pub use classify::{ClassificationReport, Growth, HilbertSeries, Verdict};
pub use error::{Error, Result};
pub use input::Source;
pub use presentation::{Alphabet, Presentation, Word};
pub use structure::ClassStructure;
