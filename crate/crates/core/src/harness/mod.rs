//! Machine checks for the witness claims behind the subregular and
//! contextual-grammar hierarchies.
//!
//! Each [`LemmaRecord`] bundles witness languages with family claims, and
//! optionally a contextual grammar with a reference language, selection
//! claims and membership spot checks. [`verify_record`] turns a record into a
//! [`LemmaReport`].

pub mod corpus;
pub mod oracle;
pub mod reference;
mod registry;
mod report;

use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use crate::automata::{ops, LanguageSpec, Word};
use crate::contextual::{ContextualGrammar, Grammar, Mode};
use crate::error::{Error, Result};
use crate::subregular::{Family, Limits, Subject, Verdict};

pub use corpus::{implication_corpus_check, random_dfa, witness_corpus, EDGES};
pub use reference::ReferencePredicate;
pub use registry::registry;
pub use report::{render_table, Outcome, Summary, VerificationReport};

pub const DEFAULT_BOUND: usize = 12;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    MachineChecked,
    ExternalProof,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Closure {
    Pre,
    Suf,
    Inf,
}

/// A language with expected family verdicts.
#[derive(Clone, Debug)]
pub struct LanguageClaim {
    pub label: String,
    pub spec: LanguageSpec,
    pub claims: Vec<(Family, bool)>,
}

/// States that selection `index` (0-based) is the given closure of `base`.
#[derive(Clone, Debug)]
pub struct SelectionIdentity {
    pub index: usize,
    pub closure: Option<Closure>,
    pub base: LanguageSpec,
}

#[derive(Clone, Debug)]
pub struct GrammarSubject {
    pub grammar: ContextualGrammar,
    pub mode: Mode,
    pub reference: Option<ReferencePredicate>,
    /// Family claims per selection, by 0-based index.
    pub selection_claims: Vec<(usize, Family, bool)>,
    pub selection_identities: Vec<SelectionIdentity>,
    /// `(word, expected membership)`, decided by derivation from the axioms.
    pub spot_checks: Vec<(String, bool)>,
    /// Exact one-step successor sets `(word, successors)`.
    pub step_checks: Vec<(String, Vec<String>)>,
}

#[derive(Clone, Debug)]
pub struct LemmaRecord {
    pub id: String,
    pub statement: String,
    pub status: Status,
    pub bound: usize,
    pub notes: Vec<String>,
    pub languages: Vec<LanguageClaim>,
    pub grammar: Option<GrammarSubject>,
    /// Inclusions checked as decider implications over the witness corpus.
    pub implications: Vec<(Family, Family)>,
    /// Parts of the statement that are not machine-checked.
    pub external_claims: Vec<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub name: String,
    pub outcome: Outcome,
    pub detail: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub millis: Option<f64>,
}

#[derive(Clone, Debug, Serialize)]
pub struct LemmaReport {
    pub id: String,
    pub statement: String,
    pub status: Status,
    pub outcome: Outcome,
    pub checks: Vec<Check>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub external_claims: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub millis: Option<f64>,
}

struct Checker {
    checks: Vec<Check>,
}

impl Checker {
    fn run(&mut self, name: impl Into<String>, f: impl FnOnce() -> Result<(bool, String)>) {
        let start = Instant::now();
        let (outcome, detail) = match f() {
            Ok((true, d)) => (Outcome::Pass, d),
            Ok((false, d)) => (Outcome::Fail, d),
            Err(e) if e.is_resource() => (Outcome::Skipped, format!("skipped (resource): {e}")),
            Err(e) => (Outcome::Fail, format!("error: {e}")),
        };
        self.checks.push(Check {
            name: name.into(),
            outcome,
            detail,
            millis: Some(start.elapsed().as_secs_f64() * 1e3),
        });
    }
}

fn language_checks(c: &mut Checker, lang: &LanguageClaim) {
    let prepared = lang.spec.compile().and_then(|d| {
        let v = lang.spec.alphabet()?;
        Subject::new(&d, Some(&v), Limits::default())
    });
    let subject = match prepared {
        Ok(s) => s,
        Err(e) => {
            c.run(format!("{}: compile", lang.label), || Err(e));
            return;
        }
    };
    for &(family, want) in &lang.claims {
        c.run(format!("{} {family}={}", lang.label, yes_no(want)), || {
            let v = subject.decide(family)?;
            let ok = v.verdict == Verdict::from_bool(want);
            Ok((ok, format!("{} ({})", v.verdict, v.evidence)))
        });
    }
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn words_to_strings(ws: &[Word]) -> Vec<String> {
    ws.iter().map(|w| w.to_string()).collect()
}

fn diff_detail(engine: &[Word], other: &[Word], other_name: &str) -> String {
    let e: std::collections::HashSet<&Word> = engine.iter().collect();
    let o: std::collections::HashSet<&Word> = other.iter().collect();
    let mut extra: Vec<String> = engine.iter().filter(|w| !o.contains(w)).map(|w| w.to_string()).collect();
    let mut missing: Vec<String> = other.iter().filter(|w| !e.contains(w)).map(|w| w.to_string()).collect();
    extra.truncate(5);
    missing.truncate(5);
    format!("engine-only {extra:?}, {other_name}-only {missing:?}")
}

fn grammar_checks(c: &mut Checker, g: &GrammarSubject, bound: usize) {
    let compiled: Grammar = match g.grammar.compile() {
        Ok(x) => x,
        Err(e) => {
            c.run("grammar validates", || Err(e));
            return;
        }
    };
    c.run("grammar validates", || Ok((true, "ok".into())));

    for &(i, family, want) in &g.selection_claims {
        c.run(format!("S{} {family}={}", i + 1, yes_no(want)), || {
            let spec = &g.grammar.selections[i].selection;
            let d = spec.compile()?;
            let v = Subject::new(&d, Some(&spec.alphabet()?), Limits::default())?.decide(family)?;
            Ok((v.verdict == Verdict::from_bool(want), format!("{} ({})", v.verdict, v.evidence)))
        });
    }

    for id in &g.selection_identities {
        let op = match id.closure {
            Some(Closure::Pre) => "Pre",
            Some(Closure::Suf) => "Suf",
            Some(Closure::Inf) => "Inf",
            None => "",
        };
        c.run(format!("S{} = {op}(base)", id.index + 1), || {
            let spec = &g.grammar.selections[id.index].selection;
            let sel = spec.compile()?;
            let base = id.base.compile()?.over_alphabet(sel.alphabet())?;
            let closed = match id.closure {
                Some(Closure::Pre) => ops::prefix_closure(&base),
                Some(Closure::Suf) => ops::suffix_closure(&base),
                Some(Closure::Inf) => ops::infix_closure(&base),
                None => base,
            };
            Ok(match ops::distinguishing_word(&sel, &closed)? {
                None => (true, "equal".into()),
                Some(w) => (false, format!("differ on {w}")),
            })
        });
    }

    for (w, want) in &g.step_checks {
        c.run(format!("step {w}"), || {
            let mut got = words_to_strings(&compiled.step(g.mode, &Word::parse(w))?);
            let mut exp = want.clone();
            got.sort();
            exp.sort();
            Ok((got == exp, format!("{got:?}")))
        });
    }

    let engine = compiled.generate(g.mode, bound);
    let trivial = |ws: &[Word]| ws.iter().all(|w| compiled.axioms().contains(w));

    if let Some(reference) = g.reference {
        c.run(format!("generate({}, {bound}) = {}", g.mode.short(), reference.id), || {
            let engine = engine.clone()?;
            let expected: Vec<Word> = compiled
                .alphabet()
                .words_up_to(bound)
                .into_iter()
                .filter(|w| (reference.accepts)(w.as_bytes()))
                .collect();
            let mut detail = format!("{} words", engine.len());
            if trivial(&engine) {
                detail = format!("trivial slice, {detail}");
            }
            if engine == expected {
                Ok((true, detail))
            } else {
                Ok((false, diff_detail(&engine, &expected, "reference")))
            }
        });
    }

    c.run(format!("engine = oracle up to {bound}"), || {
        let engine = engine.clone()?;
        let mut naive = oracle::naive_generate(&g.grammar, g.mode, bound)?;
        compiled.alphabet().sort_words(&mut naive);
        let mut detail = format!("{} words", engine.len());
        if trivial(&engine) {
            detail = format!("trivial slice, {detail}");
        }
        if engine == naive {
            Ok((true, detail))
        } else {
            Ok((false, diff_detail(&engine, &naive, "oracle")))
        }
    });

    for (w, want) in &g.spot_checks {
        let word = Word::parse(w);
        c.run(format!("{w} {} L", if *want { "in" } else { "not in" }), || {
            compiled.alphabet().check_word(&word)?;
            let path = compiled
                .axioms()
                .iter()
                .find_map(|a| compiled.derivation(g.mode, a, &word));
            let detail = match &path {
                Some(p) => format!("derivation {}", words_to_strings(p).join(" => ")),
                None => "no derivation from any axiom".into(),
            };
            Ok((path.is_some() == *want, detail))
        });
    }
}

fn implication_checks(c: &mut Checker, edges: &[(Family, Family)]) {
    if edges.is_empty() {
        return;
    }
    let corpus = witness_corpus();
    let report = implication_corpus_check(&corpus, edges);
    for e in &report.edges {
        c.run(format!("{} => {}", e.from, e.to), || {
            let ok = e.violations.is_empty() && e.proper_witness.is_some();
            let detail = match (&e.violations.first(), &e.proper_witness) {
                (Some(v), _) => format!("violated by {v}"),
                (None, Some(w)) => format!("holds on {} languages; proper via {w}", report.corpus_size),
                (None, None) => "no properness witness in corpus".into(),
            };
            Ok((ok, detail))
        });
    }
}

/// Runs every machine-checkable sub-claim of `record`. Generation claims use
/// `bound` if given, else the record's own bound.
pub fn verify_record(record: &LemmaRecord, bound: Option<usize>) -> LemmaReport {
    let start = Instant::now();
    let mut c = Checker { checks: Vec::new() };
    if record.status == Status::MachineChecked {
        for lang in &record.languages {
            language_checks(&mut c, lang);
        }
        if let Some(g) = &record.grammar {
            grammar_checks(&mut c, g, bound.unwrap_or(record.bound));
        }
        implication_checks(&mut c, &record.implications);
    }
    let outcome = if record.status == Status::ExternalProof {
        Outcome::Skipped
    } else if c.checks.iter().any(|x| x.outcome == Outcome::Fail) {
        Outcome::Fail
    } else if c.checks.is_empty() || c.checks.iter().any(|x| x.outcome == Outcome::Skipped) {
        Outcome::Skipped
    } else {
        Outcome::Pass
    };
    LemmaReport {
        id: record.id.clone(),
        statement: record.statement.clone(),
        status: record.status,
        outcome,
        checks: c.checks,
        notes: record.notes.clone(),
        external_claims: record.external_claims.clone(),
        millis: Some(start.elapsed().as_secs_f64() * 1e3),
    }
}

pub fn find(id: &str) -> Result<LemmaRecord> {
    registry()
        .into_iter()
        .find(|r| r.id == id)
        .ok_or_else(|| Error::UnknownLemma(id.into()))
}

pub fn verify_lemma(id: &str, bound: Option<usize>) -> Result<LemmaReport> {
    Ok(verify_record(&find(id)?, bound))
}

/// Verifies `records` in parallel; the report keeps input order.
pub fn verify_records(records: &[LemmaRecord], bound: Option<usize>) -> VerificationReport {
    let lemmas: Vec<LemmaReport> = records.par_iter().map(|r| verify_record(r, bound)).collect();
    VerificationReport::new(lemmas)
}

pub fn verify_all(bound: Option<usize>) -> VerificationReport {
    verify_records(&registry(), bound)
}
