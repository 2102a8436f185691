//! Workbench for subregular language classification and contextual grammars.
//!
//! * [`automata`]: regexes, NFAs, canonical minimal DFAs, and the closure
//!   operations (prefix, suffix, infix, cyclic shift).
//! * [`subregular`]: deciders for subregular families relative to a declared
//!   alphabet.
//! * [`contextual`]: contextual grammars with selection, external and
//!   internal derivation, exact bounded generation.
//! * [`harness`]: a registry of witness claims compiled into machine checks,
//!   and the hierarchy implication corpus test.

pub mod automata;
pub mod contextual;
pub mod error;
pub mod harness;
pub mod subregular;

pub use automata::{Alphabet, Dfa, LanguageSpec, Word};
pub use error::{Error, Result};
