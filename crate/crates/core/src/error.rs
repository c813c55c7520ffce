use thiserror::Error;

/// Errors raised while reading, validating, or analysing monomial algebras.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("syntax error at line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("unknown symbol `{0}`")]
    UnknownSymbol(String),

    #[error("duplicate symbol `{0}` in alphabet")]
    DuplicateSymbol(String),

    #[error("alphabet is empty")]
    EmptyAlphabet,

    #[error("forbidden word at line {0} is empty")]
    EmptyForbiddenWord(usize),

    #[error("invalid automaton: {0}")]
    InvalidAutomaton(String),

    #[error("alphabet mismatch between automata")]
    AlphabetMismatch,

    #[error("elements belong to different algebras")]
    AlgebraMismatch,

    #[error("state {0} out of range")]
    StateOutOfRange(usize),

    #[error("state {0} is not accepting")]
    NotAccepting(usize),

    #[error("automaton has no accepting state")]
    NoAcceptingState,

    #[error(
        "accepted language is not factor-closed, so it is not the word basis of a monomial algebra"
    )]
    NotFactorClosed,

    #[error("word `{0}` is zero in the algebra")]
    ZeroWord(String),

    #[error("element is zero")]
    ZeroElement,

    #[error("algebra is not prime")]
    NotPrime,

    #[error("state {0} does not lie in a maximal class")]
    NotMaximalPivot(usize),

    #[error("no witness found for the ideal intersection")]
    NoWitness,

    #[error("resource limit exceeded: {0}")]
    ResourceLimit(String),

    #[error("{0}")]
    Io(String),

    #[error("inconsistent report: {0}")]
    Inconsistent(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
