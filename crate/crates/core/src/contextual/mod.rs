//! Contextual grammars with selection.
//!
//! A grammar `(V, 𝒮, A)` rewrites a word by wrapping a context `(u, v)`
//! around it (external mode) or around one of its infixes (internal mode),
//! provided the wrapped part belongs to the selection language paired with
//! the context.
//!
//! Grammar files look like
//!
//! ```json
//! {"alphabet":["a","b","c","d"], "axioms":["aab"],
//!  "selections":[{"selection":{"kind":"finite","words":["ab","b",""]}, "contexts":[["c","d"]]}]}
//! ```
//!
//! with `""` (or `"~"`) for λ.

use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;
use std::path::Path;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::automata::{Alphabet, Dfa, LanguageSpec, Word};
use crate::error::{Error, Result};

pub const DEFAULT_MAX_LEN: usize = 16;
pub const DEFAULT_FRONTIER_CAP: usize = 1_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    External,
    Internal,
}

impl Mode {
    pub fn short(self) -> &'static str {
        match self {
            Mode::External => "ex",
            Mode::Internal => "in",
        }
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::External => "external",
            Mode::Internal => "internal",
        })
    }
}

impl FromStr for Mode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Mode> {
        match s {
            "ex" | "external" => Ok(Mode::External),
            "in" | "internal" => Ok(Mode::Internal),
            _ => Err(Error::InvalidSpec(format!("unknown derivation mode '{s}'"))),
        }
    }
}

/// A context `(u, v)` as written in grammar files.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Context(pub String, pub String);

impl Context {
    pub fn new(left: &str, right: &str) -> Self {
        Context(Word::parse(left).as_plain(), Word::parse(right).as_plain())
    }

    pub fn left(&self) -> Word {
        Word::parse(&self.0)
    }

    pub fn right(&self) -> Word {
        Word::parse(&self.1)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SelectionPair {
    pub selection: LanguageSpec,
    pub contexts: Vec<Context>,
}

/// A grammar as read from a file, before validation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ContextualGrammar {
    pub alphabet: Vec<String>,
    pub axioms: Vec<String>,
    pub selections: Vec<SelectionPair>,
}

impl ContextualGrammar {
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
        serde_json::to_string_pretty(self).expect("grammar serializes")
    }

    /// Every violated invariant, each naming the offending component.
    pub fn validate(&self) -> Vec<String> {
        let mut out = Vec::new();
        let v = match self.parse_alphabet() {
            Ok(v) => v,
            Err(e) => {
                out.push(format!("alphabet: {e}"));
                return out;
            }
        };
        if self.axioms.is_empty() {
            out.push("axioms: at least one axiom is required".into());
        }
        for a in &self.axioms {
            if let Err(e) = v.check_word(&Word::parse(a)) {
                out.push(format!("axiom '{a}': {e}"));
            }
        }
        for (i, pair) in self.selections.iter().enumerate() {
            let at = format!("selection {}", i + 1);
            match pair.selection.alphabet() {
                Ok(u) if !u.is_subset_of(&v) => out.push(format!(
                    "{at}: selection alphabet {{{u}}} is not a subset of {{{v}}}"
                )),
                Ok(_) => {
                    if let Err(e) = pair.selection.compile() {
                        out.push(format!("{at}: {e}"));
                    }
                }
                Err(e) => out.push(format!("{at}: {e}")),
            }
            if pair.contexts.is_empty() {
                out.push(format!("{at}: no contexts"));
            }
            for c in &pair.contexts {
                let (l, r) = (c.left(), c.right());
                if l.is_empty() && r.is_empty() {
                    out.push(format!("{at}: empty context (~, ~)"));
                }
                for side in [&l, &r] {
                    if let Err(e) = v.check_word(side) {
                        out.push(format!("{at}: context ({l}, {r}): {e}"));
                    }
                }
            }
        }
        out
    }

    fn parse_alphabet(&self) -> Result<Alphabet> {
        let mut chars = Vec::new();
        for s in &self.alphabet {
            let mut it = s.chars();
            match (it.next(), it.next()) {
                (Some(c), None) => chars.push(c),
                _ => {
                    return Err(Error::InvalidAlphabet(format!(
                        "entries must be single symbols, got {s:?}"
                    )))
                }
            }
        }
        Alphabet::new(chars)
    }

    /// Validates and compiles every selection language once.
    pub fn compile(&self) -> Result<Grammar> {
        let violations = self.validate();
        if !violations.is_empty() {
            return Err(Error::InvalidGrammar(violations));
        }
        let alphabet = self.parse_alphabet()?;
        let mut axioms: Vec<Word> = self.axioms.iter().map(|a| Word::parse(a)).collect();
        alphabet.sort_words(&mut axioms);
        axioms.dedup();
        let mut rules = Vec::new();
        for pair in &self.selections {
            let dfa = pair.selection.compile()?.over_alphabet(&alphabet)?;
            let live = dfa.coreachable();
            let contexts = pair
                .contexts
                .iter()
                .map(|c| (c.left().into_bytes(), c.right().into_bytes()))
                .collect();
            rules.push(Rule {
                dfa,
                live,
                contexts,
            });
        }
        Ok(Grammar {
            alphabet,
            axioms,
            rules,
            source: self.clone(),
        })
    }
}

struct Rule {
    dfa: Dfa,
    live: Vec<bool>,
    contexts: Vec<(Vec<u8>, Vec<u8>)>,
}

/// A validated grammar with compiled selection automata.
pub struct Grammar {
    alphabet: Alphabet,
    axioms: Vec<Word>,
    rules: Vec<Rule>,
    source: ContextualGrammar,
}

/// `(ℓ_A, ℓ_C, ℓ)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Ell {
    pub axioms: usize,
    pub contexts: usize,
    pub total: usize,
}

impl Grammar {
    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn axioms(&self) -> &[Word] {
        &self.axioms
    }

    pub fn source(&self) -> &ContextualGrammar {
        &self.source
    }

    /// Selection automata over the grammar alphabet, in rule order.
    pub fn selection_dfas(&self) -> impl Iterator<Item = &Dfa> {
        self.rules.iter().map(|r| &r.dfa)
    }

    pub fn ell(&self) -> Ell {
        let axioms = self.axioms.iter().map(Word::len).max().unwrap_or(0);
        let contexts = self
            .rules
            .iter()
            .flat_map(|r| r.contexts.iter().map(|(u, v)| u.len() + v.len()))
            .max()
            .unwrap_or(0);
        Ell {
            axioms,
            contexts,
            total: axioms + contexts + 1,
        }
    }

    /// Calls `emit` on every one-step successor of `w` no longer than `max_len`
    /// (duplicates included).
    fn for_each_successor(&self, mode: Mode, w: &[u8], max_len: usize, mut emit: impl FnMut(Vec<u8>)) {
        let syms = self.alphabet.symbols();
        let letter = |b: u8| syms.iter().position(|&x| x == b).unwrap();
        for rule in &self.rules {
            let fits = |u: &Vec<u8>, v: &Vec<u8>| w.len() + u.len() + v.len() <= max_len;
            if !rule.contexts.iter().any(|(u, v)| fits(u, v)) {
                continue;
            }
            let wrap = |i: usize, j: usize, emit: &mut dyn FnMut(Vec<u8>)| {
                for (u, v) in &rule.contexts {
                    if fits(u, v) {
                        let mut y = Vec::with_capacity(w.len() + u.len() + v.len());
                        y.extend_from_slice(&w[..i]);
                        y.extend_from_slice(u);
                        y.extend_from_slice(&w[i..j]);
                        y.extend_from_slice(v);
                        y.extend_from_slice(&w[j..]);
                        emit(y);
                    }
                }
            };
            match mode {
                Mode::External => {
                    if rule.dfa.accepts(w) {
                        wrap(0, w.len(), &mut emit);
                    }
                }
                Mode::Internal => {
                    for i in 0..=w.len() {
                        let mut q = rule.dfa.initial();
                        let mut j = i;
                        loop {
                            if !rule.live[q] {
                                break;
                            }
                            if rule.dfa.is_accepting(q) {
                                wrap(i, j, &mut emit);
                            }
                            if j == w.len() {
                                break;
                            }
                            q = rule.dfa.next(q, letter(w[j]));
                            j += 1;
                        }
                    }
                }
            }
        }
    }

    /// One derivation step, deduplicated, in (length, lex) order.
    pub fn step(&self, mode: Mode, w: &Word) -> Result<Vec<Word>> {
        self.alphabet.check_word(w)?;
        let mut set = HashSet::new();
        self.for_each_successor(mode, w.as_bytes(), usize::MAX, |y| {
            set.insert(y);
        });
        Ok(self.sorted(set))
    }

    fn sorted(&self, set: HashSet<Vec<u8>>) -> Vec<Word> {
        let mut out: Vec<Word> = set.into_iter().map(Word::from_bytes).collect();
        self.alphabet.sort_words(&mut out);
        out
    }

    /// `L_μ(G) ∩ V^{≤max_len}` with the default frontier cap.
    pub fn generate(&self, mode: Mode, max_len: usize) -> Result<Vec<Word>> {
        self.generate_capped(mode, max_len, DEFAULT_FRONTIER_CAP)
    }

    /// Breadth-first generation. Every step strictly lengthens the word, so
    /// pruning at `max_len` loses nothing. Fails once more than
    /// `frontier_cap` distinct words have been discovered.
    pub fn generate_capped(&self, mode: Mode, max_len: usize, frontier_cap: usize) -> Result<Vec<Word>> {
        let mut seen: HashSet<Vec<u8>> = HashSet::new();
        let mut level: Vec<Vec<u8>> = Vec::new();
        for a in &self.axioms {
            if a.len() <= max_len && seen.insert(a.as_bytes().to_vec()) {
                level.push(a.as_bytes().to_vec());
            }
        }
        let over = |n: usize| -> Result<()> {
            if n > frontier_cap {
                Err(Error::Resource {
                    what: "generation frontier".into(),
                    limit: frontier_cap,
                })
            } else {
                Ok(())
            }
        };
        over(seen.len())?;
        while !level.is_empty() {
            let found: Vec<Vec<Vec<u8>>> = level
                .par_iter()
                .map(|w| {
                    let mut local = Vec::new();
                    self.for_each_successor(mode, w, max_len, |y| local.push(y));
                    local
                })
                .collect();
            let mut next = Vec::new();
            for y in found.into_iter().flatten() {
                if !seen.contains(&y) {
                    seen.insert(y.clone());
                    next.push(y);
                    over(seen.len())?;
                }
            }
            level = next;
        }
        Ok(self.sorted(seen))
    }

    /// Whether `to` is derivable from `from` in zero or more steps.
    pub fn derives(&self, mode: Mode, from: &Word, to: &Word) -> bool {
        self.derivation(mode, from, to).is_some()
    }

    /// A shortest derivation `from ⟹ … ⟹ to`, if one exists. Steps only
    /// insert letters, so the search keeps to subsequences of `to`.
    pub fn derivation(&self, mode: Mode, from: &Word, to: &Word) -> Option<Vec<Word>> {
        if self.alphabet.check_word(from).is_err()
            || self.alphabet.check_word(to).is_err()
            || !from.is_subsequence_of(to)
        {
            return None;
        }
        let target = to.as_bytes();
        let mut parent: HashMap<Vec<u8>, Option<Vec<u8>>> = HashMap::new();
        parent.insert(from.as_bytes().to_vec(), None);
        let mut queue = VecDeque::from([from.as_bytes().to_vec()]);
        while let Some(w) = queue.pop_front() {
            if w == target {
                let mut path = vec![Word::from_bytes(w.clone())];
                let mut cur = &w;
                while let Some(Some(p)) = parent.get(cur) {
                    path.push(Word::from_bytes(p.clone()));
                    cur = p;
                }
                path.reverse();
                return Some(path);
            }
            let mut succ = Vec::new();
            self.for_each_successor(mode, &w, target.len(), |y| succ.push(y));
            for y in succ {
                if !parent.contains_key(&y) && Word::from_bytes(y.clone()).is_subsequence_of(to) {
                    parent.insert(y.clone(), Some(w.clone()));
                    queue.push_back(y);
                }
            }
        }
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn words(ws: &[Word]) -> Vec<String> {
        ws.iter().map(|w| w.to_string()).collect()
    }

    fn ec_pre_o_suf() -> Grammar {
        ContextualGrammar::from_json(
            r#"{"alphabet":["a","b"],"axioms":["ab","b"],"selections":[
                {"selection":{"kind":"regex","expr":"~|a+b*"},"contexts":[["a","b"]]},
                {"selection":{"kind":"regex","expr":"b*"},"contexts":[["","b"]]}]}"#,
        )
        .unwrap()
        .compile()
        .unwrap()
    }

    fn ic_suf_o_pre() -> Grammar {
        ContextualGrammar::from_json(
            r#"{"alphabet":["a","b","c","d"],"axioms":["aab"],"selections":[
                {"selection":{"kind":"finite","words":["ab","b",""]},"contexts":[["c","d"]]}]}"#,
        )
        .unwrap()
        .compile()
        .unwrap()
    }

    #[test]
    fn validation_violations() {
        let g = ContextualGrammar {
            alphabet: vec!["a".into(), "b".into(), "c".into()],
            axioms: vec!["a".into()],
            selections: vec![SelectionPair {
                selection: LanguageSpec::regex("a*d"),
                contexts: vec![Context::new("", "")],
            }],
        };
        let v = g.validate();
        assert!(v.iter().any(|s| s.contains("empty context")), "{v:?}");
        assert!(v.iter().any(|s| s.contains("selection alphabet")), "{v:?}");
        assert!(matches!(g.compile(), Err(Error::InvalidGrammar(_))));
        let no_axioms = ContextualGrammar {
            axioms: vec![],
            selections: vec![],
            ..g
        };
        assert!(no_axioms.validate()[0].contains("axiom"));
    }

    #[test]
    fn ell_examples() {
        let e = ic_suf_o_pre().ell();
        assert_eq!((e.axioms, e.contexts, e.total), (3, 2, 6));
        let g = ContextualGrammar {
            alphabet: vec!["a".into()],
            axioms: vec!["".into()],
            selections: vec![SelectionPair {
                selection: LanguageSpec::regex("a*"),
                contexts: vec![Context::new("a", "")],
            }],
        }
        .compile()
        .unwrap();
        let e = g.ell();
        assert_eq!((e.axioms, e.contexts, e.total), (0, 1, 2));
    }

    #[test]
    fn step_examples() {
        let g = ec_pre_o_suf();
        assert_eq!(words(&g.step(Mode::External, &Word::parse("ab")).unwrap()), ["aabb"]);
        assert!(g.step(Mode::External, &Word::parse("ba")).unwrap().is_empty());
        assert!(g.step(Mode::External, &Word::parse("ac")).is_err());
        let g = ic_suf_o_pre();
        let mut got = words(&g.step(Mode::Internal, &Word::parse("aab")).unwrap());
        got.sort();
        let mut want = ["acabd", "aacbd", "cdaab", "acdab", "aacdb", "aabcd"];
        want.sort();
        assert_eq!(got, want);
    }

    #[test]
    fn generate_examples() {
        let g = ec_pre_o_suf();
        assert_eq!(
            words(&g.generate(Mode::External, 4).unwrap()),
            ["b", "ab", "bb", "bbb", "aabb", "bbbb"]
        );
        assert!(g.generate(Mode::External, 0).unwrap().is_empty());
        assert!(g.generate_capped(Mode::External, 12, 5).unwrap_err().is_resource());
    }

    #[test]
    fn derives_examples() {
        let g = ec_pre_o_suf();
        assert!(g.derives(Mode::External, &Word::parse("ab"), &Word::parse("aabb")));
        assert!(!g.derives(Mode::External, &Word::parse("aabb"), &Word::parse("ab")));
        let g = ic_suf_o_pre();
        let path = g
            .derivation(Mode::Internal, &Word::parse("aab"), &Word::parse("acabd"))
            .unwrap();
        assert_eq!(words(&path), ["aab", "acabd"]);
        assert!(g.derives(Mode::Internal, &Word::parse("aab"), &Word::parse("aab")));
    }
}
