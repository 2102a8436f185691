//! Naive contextual-grammar rewriter used as a second opinion on the engine.
//!
//! Nothing here touches the automata layer beyond parsing regex text:
//! selections are matched by a set-of-positions regex interpreter, by plain
//! word lists, or by walking the raw transition table from the file. Words
//! are generated by whole-set fixpoint rounds, and internal splits are
//! enumerated by infix length first.

use std::collections::{BTreeSet, HashMap, HashSet};

use crate::automata::{LanguageKind, Regex, Word};
use crate::contextual::{ContextualGrammar, Mode};
use crate::error::{Error, Result};

enum Matcher {
    Regex(Regex),
    Words(HashSet<Vec<u8>>),
    Table {
        initial: usize,
        accepting: HashSet<usize>,
        delta: HashMap<(usize, u8), usize>,
    },
}

fn ends(re: &Regex, s: &[u8], from: &BTreeSet<usize>) -> BTreeSet<usize> {
    match re {
        Regex::Empty => BTreeSet::new(),
        Regex::Epsilon => from.clone(),
        Regex::Literal(c) => from
            .iter()
            .filter(|&&i| i < s.len() && s[i] == *c)
            .map(|&i| i + 1)
            .collect(),
        Regex::Concat(parts) => parts.iter().fold(from.clone(), |acc, p| ends(p, s, &acc)),
        Regex::Union(parts) => parts.iter().flat_map(|p| ends(p, s, from)).collect(),
        Regex::Optional(r) => {
            let mut out = from.clone();
            out.extend(ends(r, s, from));
            out
        }
        Regex::Star(r) | Regex::Plus(r) => {
            let mut reached = if matches!(re, Regex::Star(_)) {
                from.clone()
            } else {
                BTreeSet::new()
            };
            let mut frontier = ends(r, s, from);
            while !frontier.is_empty() {
                let fresh: BTreeSet<usize> = frontier.difference(&reached).copied().collect();
                reached.extend(fresh.iter().copied());
                frontier = ends(r, s, &fresh);
            }
            reached
        }
    }
}

impl Matcher {
    fn new(kind: &LanguageKind) -> Result<Matcher> {
        Ok(match kind {
            LanguageKind::Regex { expr } => Matcher::Regex(Regex::parse_unchecked(expr)?),
            LanguageKind::Finite { words } => {
                Matcher::Words(words.iter().map(|w| Word::parse(w).into_bytes()).collect())
            }
            LanguageKind::Dfa {
                initial,
                accepting,
                delta,
                ..
            } => {
                let mut table = HashMap::new();
                for (q, row) in delta {
                    let q: usize = q
                        .parse()
                        .map_err(|_| Error::InvalidAutomaton(format!("bad state id {q:?}")))?;
                    for (sym, &t) in row {
                        table.insert((q, sym.as_bytes()[0]), t);
                    }
                }
                Matcher::Table {
                    initial: *initial,
                    accepting: accepting.iter().copied().collect(),
                    delta: table,
                }
            }
        })
    }

    fn matches(&self, s: &[u8]) -> bool {
        match self {
            Matcher::Regex(re) => ends(re, s, &BTreeSet::from([0])).contains(&s.len()),
            Matcher::Words(set) => set.contains(s),
            Matcher::Table {
                initial,
                accepting,
                delta,
            } => {
                let mut q = *initial;
                for b in s {
                    match delta.get(&(q, *b)) {
                        Some(&t) => q = t,
                        None => return false,
                    }
                }
                accepting.contains(&q)
            }
        }
    }
}

struct Component {
    matcher: Matcher,
    memo: HashMap<Vec<u8>, bool>,
    contexts: Vec<(Vec<u8>, Vec<u8>)>,
}

impl Component {
    fn selects(&mut self, s: &[u8]) -> bool {
        if let Some(&b) = self.memo.get(s) {
            return b;
        }
        let b = self.matcher.matches(s);
        self.memo.insert(s.to_vec(), b);
        b
    }
}

/// All words of `L_μ(G)` up to length `max_len`, sorted by length then bytes.
pub fn naive_generate(g: &ContextualGrammar, mode: Mode, max_len: usize) -> Result<Vec<Word>> {
    let mut comps = Vec::new();
    for pair in &g.selections {
        comps.push(Component {
            matcher: Matcher::new(&pair.selection.kind)?,
            memo: HashMap::new(),
            contexts: pair
                .contexts
                .iter()
                .map(|c| (c.left().into_bytes(), c.right().into_bytes()))
                .collect(),
        });
    }
    let mut lang: BTreeSet<Vec<u8>> = g
        .axioms
        .iter()
        .map(|a| Word::parse(a).into_bytes())
        .filter(|a| a.len() <= max_len)
        .collect();
    loop {
        let mut added = Vec::new();
        for w in &lang {
            let n = w.len();
            for comp in comps.iter_mut() {
                let mut hits = Vec::new();
                match mode {
                    Mode::External => {
                        if comp.selects(w) {
                            hits.push((0, n));
                        }
                    }
                    Mode::Internal => {
                        for len in 0..=n {
                            for i in 0..=n - len {
                                if comp.selects(&w[i..i + len]) {
                                    hits.push((i, i + len));
                                }
                            }
                        }
                    }
                }
                for (i, j) in hits {
                    for (u, v) in &comp.contexts {
                        if n + u.len() + v.len() > max_len {
                            continue;
                        }
                        let y = [&w[..i], u, &w[i..j], v, &w[j..]].concat();
                        if !lang.contains(&y) {
                            added.push(y);
                        }
                    }
                }
            }
        }
        if added.is_empty() {
            break;
        }
        lang.extend(added);
    }
    let mut out: Vec<Vec<u8>> = lang.into_iter().collect();
    out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    Ok(out.into_iter().map(Word::from_bytes).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn regex_interpreter() {
        let m = Matcher::new(&LanguageKind::Regex {
            expr: "a(bb)(bb)*a|~".into(),
        })
        .unwrap();
        assert!(m.matches(b""));
        assert!(m.matches(b"abba"));
        assert!(m.matches(b"abbbba"));
        assert!(!m.matches(b"abbba"));
        assert!(!m.matches(b"aa"));
        let p = Matcher::new(&LanguageKind::Regex { expr: "(a?b)+".into() }).unwrap();
        assert!(p.matches(b"abbab"));
        assert!(!p.matches(b""));
    }

    #[test]
    fn generates_small_language() {
        let g = ContextualGrammar::from_json(
            r#"{"alphabet":["a","b"],"axioms":["ab","b"],"selections":[
                {"selection":{"kind":"regex","expr":"~|a+b*"},"contexts":[["a","b"]]},
                {"selection":{"kind":"regex","expr":"b*"},"contexts":[["","b"]]}]}"#,
        )
        .unwrap();
        let got: Vec<String> = naive_generate(&g, Mode::External, 4)
            .unwrap()
            .iter()
            .map(|w| w.to_string())
            .collect();
        assert_eq!(got, ["b", "ab", "bb", "bbb", "aabb", "bbbb"]);
    }
}
