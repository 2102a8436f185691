//! User-facing language descriptions and their JSON file format.
//!
//! ```json
//! {"alphabet":["a","b"],"kind":"regex","expr":"(a|b)*b"}
//! {"kind":"finite","words":["ab","a",""]}
//! {"kind":"dfa","states":2,"initial":0,"accepting":[1],"delta":{"0":{"a":1},"1":{"a":1}}}
//! ```
//!
//! The empty string denotes λ in word lists. When `alphabet` is omitted it is
//! inferred from the payload (sorted). Missing DFA transitions go to a sink.

use std::collections::BTreeMap;
use std::path::Path;

use serde::{Deserialize, Serialize};

use super::alphabet::{Alphabet, Word};
use super::dfa::Dfa;
use super::nfa::Nfa;
use super::regex::Regex;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LanguageSpec {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub alphabet: Option<Vec<String>>,
    #[serde(flatten)]
    pub kind: LanguageKind,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum LanguageKind {
    Regex {
        expr: String,
    },
    Finite {
        words: Vec<String>,
    },
    Dfa {
        states: usize,
        initial: usize,
        accepting: Vec<usize>,
        /// State ids are written as string keys, as JSON requires.
        delta: BTreeMap<String, BTreeMap<String, usize>>,
    },
}

fn letter_of(s: &str) -> Result<char> {
    let mut it = s.chars();
    match (it.next(), it.next()) {
        (Some(c), None) => Ok(c),
        _ => Err(Error::InvalidAlphabet(format!(
            "alphabet entries must be single symbols, got {s:?}"
        ))),
    }
}

impl LanguageSpec {
    pub fn regex(expr: &str) -> Self {
        LanguageSpec {
            alphabet: None,
            kind: LanguageKind::Regex { expr: expr.into() },
        }
    }

    /// Finite word list; `""` and `"~"` both denote λ.
    pub fn finite<S: AsRef<str>>(words: &[S]) -> Self {
        LanguageSpec {
            alphabet: None,
            kind: LanguageKind::Finite {
                words: words
                    .iter()
                    .map(|w| Word::parse(w.as_ref()).as_plain())
                    .collect(),
            },
        }
    }

    /// Declares the alphabet from a string of letters.
    pub fn with_alphabet(mut self, letters: &str) -> Self {
        self.alphabet = Some(letters.chars().map(String::from).collect());
        self
    }

    pub fn with_alphabet_of(mut self, alphabet: &Alphabet) -> Self {
        self.alphabet = Some(alphabet.chars().map(String::from).collect());
        self
    }

    /// Serializes a minimized automaton as a `dfa`-kind description.
    pub fn from_dfa(dfa: &Dfa) -> Self {
        let alphabet = dfa.alphabet();
        let mut delta = BTreeMap::new();
        for q in 0..dfa.num_states() {
            let row: BTreeMap<String, usize> = alphabet
                .chars()
                .enumerate()
                .map(|(a, c)| (c.to_string(), dfa.next(q, a)))
                .collect();
            delta.insert(q.to_string(), row);
        }
        LanguageSpec {
            alphabet: Some(alphabet.chars().map(String::from).collect()),
            kind: LanguageKind::Dfa {
                states: dfa.num_states(),
                initial: dfa.initial(),
                accepting: (0..dfa.num_states())
                    .filter(|&q| dfa.is_accepting(q))
                    .collect(),
                delta,
            },
        }
    }

    pub fn from_json(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn from_path(path: impl AsRef<Path>) -> Result<Self> {
        let path = path.as_ref();
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::InvalidSpec(format!("{}: {e}", path.display())))?;
        Self::from_json(&text)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("language spec serializes")
    }

    /// The declared alphabet, or the sorted set of symbols in the payload.
    pub fn alphabet(&self) -> Result<Alphabet> {
        if let Some(letters) = &self.alphabet {
            let chars = letters
                .iter()
                .map(|s| letter_of(s))
                .collect::<Result<Vec<char>>>()?;
            return Alphabet::new(chars);
        }
        match &self.kind {
            LanguageKind::Regex { expr } => {
                let re = Regex::parse_unchecked(expr)?;
                let lits = re.literals();
                Alphabet::inferred([lits.as_slice()])
            }
            LanguageKind::Finite { words } => {
                Alphabet::inferred(words.iter().map(|w| Word::parse(w).0).collect::<Vec<_>>().iter().map(|v| v.as_slice()))
            }
            LanguageKind::Dfa { delta, .. } => {
                let mut letters: Vec<char> = Vec::new();
                for row in delta.values() {
                    for key in row.keys() {
                        let c = letter_of(key)?;
                        if !letters.contains(&c) {
                            letters.push(c);
                        }
                    }
                }
                letters.sort_unstable();
                Alphabet::new(letters)
            }
        }
    }

    /// Minimal canonical automaton of the described language.
    pub fn compile(&self) -> Result<Dfa> {
        let alphabet = self.alphabet()?;
        match &self.kind {
            LanguageKind::Regex { expr } => {
                let re = Regex::parse(expr, &alphabet)?;
                Ok(Nfa::from_regex(&re, &alphabet).determinize().minimize())
            }
            LanguageKind::Finite { words } => {
                let words: Vec<Word> = words.iter().map(|w| Word::parse(w)).collect();
                Dfa::from_words(&alphabet, &words)
            }
            LanguageKind::Dfa {
                states,
                initial,
                accepting,
                delta,
            } => compile_table(&alphabet, *states, *initial, accepting, delta),
        }
    }
}

fn compile_table(
    alphabet: &Alphabet,
    states: usize,
    initial: usize,
    accepting: &[usize],
    delta: &BTreeMap<String, BTreeMap<String, usize>>,
) -> Result<Dfa> {
    if states == 0 {
        return Err(Error::InvalidAutomaton("no states".into()));
    }
    let k = alphabet.len();
    let sink = states;
    let mut table = vec![sink; (states + 1) * k];
    for (key, row) in delta {
        let q: usize = key
            .parse()
            .map_err(|_| Error::InvalidAutomaton(format!("bad state id {key:?}")))?;
        if q >= states {
            return Err(Error::InvalidAutomaton(format!("state {q} out of range")));
        }
        for (key, &t) in row {
            let c = letter_of(key)?;
            let a = alphabet.index_of(c as u8).ok_or_else(|| Error::UnknownSymbol {
                symbol: c,
                alphabet: alphabet.to_string(),
            })?;
            if t >= states {
                return Err(Error::InvalidAutomaton(format!(
                    "transition target {t} out of range"
                )));
            }
            table[q * k + a] = t;
        }
    }
    let mut acc = vec![false; states + 1];
    for &q in accepting {
        if q >= states {
            return Err(Error::InvalidAutomaton(format!(
                "accepting state {q} out of range"
            )));
        }
        acc[q] = true;
    }
    Ok(Dfa::from_table(alphabet.clone(), table, initial, acc)?.minimize())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::automata::ops;

    #[test]
    fn parses_all_three_kinds() {
        let r = LanguageSpec::from_json(r#"{"alphabet":["a","b"],"kind":"regex","expr":"(a|b)*b"}"#)
            .unwrap();
        assert_eq!(r.compile().unwrap().num_states(), 2);
        let f = LanguageSpec::from_json(r#"{"kind":"finite","words":["ab","a",""]}"#).unwrap();
        assert_eq!(f.alphabet().unwrap().to_string(), "a,b");
        let d = LanguageSpec::from_json(
            r#"{"kind":"dfa","states":2,"initial":0,"accepting":[1],"delta":{"0":{"a":0,"b":1},"1":{"a":0,"b":1}}}"#,
        )
        .unwrap();
        assert!(ops::equivalent(&d.compile().unwrap(), &r.compile().unwrap()).unwrap());
    }

    #[test]
    fn regex_universal_and_finite_agree_with_regex() {
        let u = LanguageSpec::regex("(a|b)*").compile().unwrap();
        assert_eq!(u.num_states(), 1);
        assert!(u.is_accepting(0));
        let f = LanguageSpec::finite(&["ab", "a", ""]).compile().unwrap();
        let r = LanguageSpec::regex("~|a|ab").with_alphabet("ab").compile().unwrap();
        assert_eq!(f, r);
    }

    #[test]
    fn partial_dfa_gets_a_sink() {
        let d = LanguageSpec::from_json(
            r#"{"alphabet":["a","b"],"kind":"dfa","states":2,"initial":0,"accepting":[1],"delta":{"0":{"a":1}}}"#,
        )
        .unwrap()
        .compile()
        .unwrap();
        assert_eq!(d.num_states(), 3);
        assert!(d.accepts(b"a"));
        assert!(!d.accepts(b"b"));
    }

    #[test]
    fn roundtrip_through_dfa_kind() {
        let d = LanguageSpec::regex("a(bb)(bb)*a").compile().unwrap();
        let back = LanguageSpec::from_json(&LanguageSpec::from_dfa(&d).to_json())
            .unwrap()
            .compile()
            .unwrap();
        assert_eq!(back, d);
    }

    #[test]
    fn rejects_bad_payloads() {
        assert!(LanguageSpec::finite(&["ac"]).with_alphabet("ab").compile().is_err());
        assert!(LanguageSpec::regex("a(b").compile().is_err());
        assert!(LanguageSpec::from_json(r#"{"kind":"dfa","states":1,"initial":2,"accepting":[],"delta":{}}"#)
            .unwrap()
            .compile()
            .is_err());
        assert!(LanguageSpec::from_json(r#"{"alphabet":["ab"],"kind":"finite","words":[]}"#)
            .unwrap()
            .compile()
            .is_err());
        assert!(LanguageSpec::from_json(r#"{"kind":"nope"}"#).is_err());
    }
}
