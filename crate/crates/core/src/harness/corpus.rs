//! Hierarchy inclusions restated as decider implications and checked on a
//! language corpus.

use rand::Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::automata::{ops, Alphabet, Dfa, LanguageSpec};
use crate::subregular::{Family, Limits, Subject, Verdict};

use Family::*;

/// Inclusion edges `X ⊆ Y` of the subregular hierarchy with deciders at both ends.
pub const EDGES: [(Family, Family); 12] = [
    (Mon, Inf),
    (Inf, Pre),
    (Inf, Suf),
    (Pre, Ps),
    (Suf, Ps),
    (Fin, Nil),
    (Nil, Def),
    (Def, Nc),
    (Nc, Ps),
    (Comb, Def),
    (Comm, Circ),
    (Ord, Nc),
];

#[derive(Clone, Debug)]
pub struct CorpusEntry {
    pub name: String,
    pub dfa: Dfa,
}

fn entry(name: &str, spec: LanguageSpec) -> CorpusEntry {
    CorpusEntry {
        name: name.into(),
        dfa: spec.compile().expect("bundled corpus language compiles"),
    }
}

/// Witness languages of the lemmas plus properness witnesses and the edge cases.
pub fn witness_corpus() -> Vec<CorpusEntry> {
    let inf = LanguageSpec::regex("a(bb)(bb)*a").compile().unwrap();
    vec![
        CorpusEntry {
            name: "Inf(a(bb)(bb)*a)".into(),
            dfa: ops::infix_closure(&inf),
        },
        entry("{ab,a,~}", LanguageSpec::finite(&["ab", "a", ""])),
        entry("{ab,b,~}", LanguageSpec::finite(&["ab", "b", ""])),
        entry("{ab,a,b,~}", LanguageSpec::finite(&["ab", "a", "b", ""])),
        entry("(a|b)*b", LanguageSpec::regex("(a|b)*b")),
        entry("(aa)*", LanguageSpec::regex("(aa)*")),
        entry("(ab)*", LanguageSpec::regex("(ab)*")),
        entry("(a|b)*", LanguageSpec::regex("(a|b)*")),
        entry("{abc,bca,cab}", LanguageSpec::finite(&["abc", "bca", "cab"])),
        entry("{ab,ba}", LanguageSpec::finite(&["ab", "ba"])),
        entry("a*b*", LanguageSpec::regex("a*b*")),
        entry("{}", LanguageSpec::finite::<&str>(&[]).with_alphabet("ab")),
        entry("{~}", LanguageSpec::finite(&[""]).with_alphabet("ab")),
        entry("V*", LanguageSpec::regex("(a|b)*")),
    ]
}

/// Uniformly random complete automaton with `1..=max_states` states over the
/// first `1..=max_letters` letters of `abc…`.
pub fn random_dfa<R: Rng>(rng: &mut R, max_states: usize, max_letters: usize) -> Dfa {
    let n = rng.gen_range(1..=max_states);
    let k = rng.gen_range(1..=max_letters);
    let letters: String = "abcdefgh".chars().take(k).collect();
    let alphabet = Alphabet::from_letters(&letters).unwrap();
    let delta = (0..n * k).map(|_| rng.gen_range(0..n)).collect();
    let accepting = (0..n).map(|_| rng.gen_bool(0.5)).collect();
    Dfa::from_table(alphabet, delta, 0, accepting).unwrap()
}

#[derive(Clone, Debug, Serialize)]
pub struct EdgeReport {
    pub from: Family,
    pub to: Family,
    pub violations: Vec<String>,
    pub proper_witness: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct CorpusReport {
    pub corpus_size: usize,
    pub edges: Vec<EdgeReport>,
    /// Languages a decider could not handle (resource caps).
    pub errors: Vec<String>,
}

impl CorpusReport {
    pub fn violations(&self) -> usize {
        self.edges.iter().map(|e| e.violations.len()).sum()
    }

    pub fn unwitnessed(&self) -> Vec<(Family, Family)> {
        self.edges
            .iter()
            .filter(|e| e.proper_witness.is_none())
            .map(|e| (e.from, e.to))
            .collect()
    }
}

/// Checks `X yes ⇒ Y yes` for each edge on each language (over its own
/// alphabet), and records a language in `Y ∖ X` per edge when there is one.
pub fn implication_corpus_check(corpus: &[CorpusEntry], edges: &[(Family, Family)]) -> CorpusReport {
    let mut families: Vec<Family> = edges.iter().flat_map(|&(x, y)| [x, y]).collect();
    families.sort();
    families.dedup();
    let verdicts: Vec<Result<Vec<(Family, Verdict)>, String>> = corpus
        .par_iter()
        .map(|e| {
            let s = Subject::new(&e.dfa, Some(e.dfa.alphabet()), Limits::default())
                .map_err(|err| format!("{}: {err}", e.name))?;
            families
                .iter()
                .map(|&f| s.decide(f).map(|v| (f, v.verdict)))
                .collect::<Result<Vec<_>, _>>()
                .map_err(|err| format!("{}: {err}", e.name))
        })
        .collect();
    let mut errors = Vec::new();
    let mut edge_reports: Vec<EdgeReport> = edges
        .iter()
        .map(|&(from, to)| EdgeReport {
            from,
            to,
            violations: Vec::new(),
            proper_witness: None,
        })
        .collect();
    for (e, v) in corpus.iter().zip(verdicts) {
        let v = match v {
            Ok(v) => v,
            Err(msg) => {
                errors.push(msg);
                continue;
            }
        };
        let get = |f: Family| v.iter().find(|(g, _)| *g == f).unwrap().1;
        for r in edge_reports.iter_mut() {
            let (x, y) = (get(r.from), get(r.to));
            if x == Verdict::Yes && y == Verdict::No {
                r.violations.push(e.name.clone());
            }
            if x == Verdict::No && y == Verdict::Yes && r.proper_witness.is_none() {
                r.proper_witness = Some(e.name.clone());
            }
        }
    }
    CorpusReport {
        corpus_size: corpus.len(),
        edges: edge_reports,
        errors,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn witnesses_cover_every_edge() {
        let r = implication_corpus_check(&witness_corpus(), &EDGES);
        assert_eq!(r.violations(), 0, "{:?}", r.edges);
        assert!(r.unwitnessed().is_empty(), "{:?}", r.unwitnessed());
        assert!(r.errors.is_empty());
        let mon = r.edges.iter().find(|e| e.from == Mon).unwrap();
        assert_eq!(mon.proper_witness.as_deref(), Some("Inf(a(bb)(bb)*a)"));
    }

    #[test]
    fn random_three_state_automata() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let corpus: Vec<CorpusEntry> = (0..200)
            .map(|i| CorpusEntry {
                name: format!("random#{i}"),
                dfa: random_dfa(&mut rng, 3, 2),
            })
            .collect();
        let r = implication_corpus_check(&corpus, &EDGES);
        assert_eq!(r.violations(), 0, "{:?}", r.edges);
    }
}
