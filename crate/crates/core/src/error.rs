use thiserror::Error;

/// Errors raised by the automata, decider and grammar layers.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("syntax error at position {position}: {message}")]
    Syntax { position: usize, message: String },

    #[error("symbol '{symbol}' is not in the alphabet {{{alphabet}}}")]
    UnknownSymbol { symbol: char, alphabet: String },

    #[error("invalid alphabet: {0}")]
    InvalidAlphabet(String),

    #[error("alphabet mismatch: {{{left}}} vs {{{right}}}")]
    AlphabetMismatch { left: String, right: String },

    #[error("invalid automaton: {0}")]
    InvalidAutomaton(String),

    #[error("invalid language description: {0}")]
    InvalidSpec(String),

    #[error("invalid grammar: {}", .0.join("; "))]
    InvalidGrammar(Vec<String>),

    #[error("resource limit exceeded: {what} (limit {limit})")]
    Resource { what: String, limit: usize },

    #[error("unknown lemma id '{0}'")]
    UnknownLemma(String),

    #[error("json: {0}")]
    Json(String),
}

impl Error {
    pub(crate) fn syntax(position: usize, message: impl Into<String>) -> Self {
        Error::Syntax {
            position,
            message: message.into(),
        }
    }

    pub fn is_resource(&self) -> bool {
        matches!(self, Error::Resource { .. })
    }
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Json(e.to_string())
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
