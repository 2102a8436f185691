//! Regular-language carrier types and constructions.

pub mod alphabet;
pub mod dfa;
pub mod nfa;
pub mod ops;
pub mod regex;
pub mod spec;

pub use alphabet::{Alphabet, Word};
pub use dfa::{Dfa, WordCount};
pub use nfa::Nfa;
pub use ops::BoolOp;
pub use regex::Regex;
pub use spec::{LanguageKind, LanguageSpec};
