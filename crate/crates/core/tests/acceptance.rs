//! One line per acceptance criterion. Exits non-zero when any fails.

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use subreg::automata::ops;
use subreg::contextual::Mode;
use subreg::harness::corpus::CorpusEntry;
use subreg::harness::{self, oracle, LemmaRecord, Outcome};
use subreg::subregular::{Family, Limits, Subject, TransitionMonoid, Verdict, DEFAULT_MONOID_CAP};
use subreg::{Alphabet, Dfa, LanguageSpec, Word};

// Pinned limits.
const SRL_TIME_LIMIT: Duration = Duration::from_secs(5);
const EC_TIME_LIMIT: Duration = Duration::from_secs(60);
const EC_BOUND: usize = 12;
const IC_BOUND: usize = 12;
const CORPUS_SEED: u64 = 0x5eed_0004;
const CORPUS_RANDOM: usize = 500;
const CORPUS_MAX_STATES: usize = 4;
const CORPUS_MAX_LETTERS: usize = 3;
const ORACLE_SEED: u64 = 0x5eed_0005;
const ORACLE_RANDOM: usize = 300;
const ORACLE_MAX_STATES: usize = 3;
const ORACLE_MAX_LETTERS: usize = 3;
const NC_XZ_LEN: usize = 3;
const NC_Y_LEN: usize = 3;
const DEF_MAX_K: usize = 4;
const DEF_PREFIX_LEN: usize = 3;
const CLOSURE_CHECK_LEN: usize = 6;
const SLICE_BOUND: usize = 10;
const STEP_SEED: u64 = 0x5eed_0006;
const STEP_SAMPLES: usize = 1000;
const STEP_WORD_BOUND: usize = 8;

const EC_IDS: [&str; 8] = [
    "ec:pre_o_suf",
    "ec:suf_o_pre",
    "ec:inf_o_nc",
    "ec:inf_o_sydef",
    "ec:inf_o_circ",
    "ec:comb_o_pre",
    "ec:nil_o_pre",
    "ec:inf_o_star",
];

const IC_IDS: [&str; 6] = [
    "ic:suf_o_pre",
    "ic:pre_o_suf",
    "ic:inf_o_nc",
    "ic:inf_o_sydef",
    "ic:inf_o_circ",
    "ic:inf_o_star",
];

type Outcome1 = Result<String, String>;

fn records(ids: &[&str]) -> Vec<LemmaRecord> {
    ids.iter().map(|id| harness::find(id).expect("registered")).collect()
}

fn failed_checks(report: &harness::VerificationReport) -> Vec<String> {
    let mut out = Vec::new();
    for l in &report.lemmas {
        if l.outcome != Outcome::Pass {
            out.push(format!("{} {}", l.id, l.outcome));
        }
        for c in &l.checks {
            if c.outcome != Outcome::Pass {
                out.push(format!("{} / {}: {}", l.id, c.name, c.detail));
            }
        }
    }
    out
}

fn verdict(spec: &LanguageSpec, family: Family) -> Verdict {
    let dfa = spec.compile().unwrap();
    Subject::new(&dfa, Some(&spec.alphabet().unwrap()), Limits::default())
        .and_then(|s| s.decide(family))
        .map(|v| v.verdict)
        .unwrap_or(Verdict::Unknown)
}

fn criterion_1() -> Outcome1 {
    let start = Instant::now();
    let expected: Vec<(&str, LanguageSpec, Vec<(Family, Verdict)>)> = vec![
        (
            "{ab,a,λ}",
            LanguageSpec::finite(&["ab", "a", ""]),
            vec![(Family::Pre, Verdict::Yes), (Family::Suf, Verdict::No), (Family::Fin, Verdict::Yes)],
        ),
        (
            "{ab,b,λ}",
            LanguageSpec::finite(&["ab", "b", ""]),
            vec![(Family::Suf, Verdict::Yes), (Family::Pre, Verdict::No)],
        ),
        (
            "{ab,a,b,λ}",
            LanguageSpec::finite(&["ab", "a", "b", ""]),
            vec![
                (Family::Inf, Verdict::Yes),
                (Family::Circ, Verdict::No),
                (Family::Uf, Verdict::No),
                (Family::Twocom, Verdict::No),
            ],
        ),
        (
            "Inf(a(bb)(bb)*a)",
            LanguageSpec::from_dfa(&ops::infix_closure(
                &LanguageSpec::regex("a(bb)(bb)*a").compile().unwrap(),
            )),
            vec![(Family::Inf, Verdict::Yes), (Family::Nc, Verdict::No)],
        ),
        (
            "(a|b)*b",
            LanguageSpec::regex("(a|b)*b"),
            vec![(Family::Comb, Verdict::Yes), (Family::Pre, Verdict::No)],
        ),
        (
            "{aa}*",
            LanguageSpec::regex("(aa)*"),
            vec![(Family::Star, Verdict::Yes), (Family::Comm, Verdict::Yes), (Family::Ps, Verdict::No)],
        ),
    ];
    let mut bad = Vec::new();
    let mut n = 0;
    for (label, spec, claims) in &expected {
        for &(f, want) in claims {
            n += 1;
            let got = verdict(spec, f);
            if got != want {
                bad.push(format!("{label} {}: {got:?} (want {want:?})", f.name()));
            }
        }
    }
    let srl: Vec<LemmaRecord> = harness::registry()
        .into_iter()
        .filter(|r| r.id.starts_with("srl:") || r.id.starts_with("lemma:"))
        .collect();
    let report = harness::verify_records(&srl, None);
    bad.extend(failed_checks(&report));
    let t = start.elapsed();
    if t > SRL_TIME_LIMIT {
        bad.push(format!("took {t:?}"));
    }
    if bad.is_empty() {
        Ok(format!("{n} verdicts exact, {} records pass, {t:.2?}", srl.len()))
    } else {
        Err(bad.join("; "))
    }
}

fn criterion_2() -> Outcome1 {
    let start = Instant::now();
    let report = harness::verify_records(&records(&EC_IDS), Some(EC_BOUND));
    let mut bad = failed_checks(&report);
    // make sure each record actually compared against its reference and classified its selections
    for l in &report.lemmas {
        if !l.checks.iter().any(|c| c.name.starts_with("generate(") && c.outcome == Outcome::Pass) {
            bad.push(format!("{}: no reference comparison", l.id));
        }
        let rec = harness::find(&l.id).unwrap();
        let g = rec.grammar.as_ref().unwrap();
        if g.selection_claims.len() != g.grammar.selections.len() {
            bad.push(format!("{}: not every selection classified", l.id));
        }
    }
    let t = start.elapsed();
    if t > EC_TIME_LIMIT {
        bad.push(format!("took {t:?}"));
    }
    if bad.is_empty() {
        Ok(format!("{} grammars match their references to length {EC_BOUND}, {t:.2?}", EC_IDS.len()))
    } else {
        Err(bad.join("; "))
    }
}

fn criterion_3() -> Outcome1 {
    let report = harness::verify_records(&records(&IC_IDS), Some(IC_BOUND));
    let mut bad = failed_checks(&report);
    let mut spots = 0;
    for l in &report.lemmas {
        if !l.checks.iter().any(|c| c.name.starts_with("engine = oracle")) {
            bad.push(format!("{}: no oracle comparison", l.id));
        }
        spots += l.checks.iter().filter(|c| c.name.contains(" in L")).count();
    }
    let direct = harness::find("ic:suf_o_pre").unwrap();
    let g = direct.grammar.unwrap().grammar.compile().unwrap();
    if !g.derives(Mode::Internal, &Word::from("aab"), &Word::from("acabd")) {
        bad.push("acabd not derived".into());
    }
    if bad.is_empty() {
        Ok(format!("{} grammars agree with the oracle to length {IC_BOUND}, {spots} spot checks hold", IC_IDS.len()))
    } else {
        Err(bad.join("; "))
    }
}

fn criterion_4() -> Outcome1 {
    let mut rng = ChaCha8Rng::seed_from_u64(CORPUS_SEED);
    let mut corpus = harness::witness_corpus();
    for i in 0..CORPUS_RANDOM {
        corpus.push(CorpusEntry {
            name: format!("random#{i}"),
            dfa: harness::random_dfa(&mut rng, CORPUS_MAX_STATES, CORPUS_MAX_LETTERS),
        });
    }
    let r = harness::implication_corpus_check(&corpus, &harness::EDGES);
    let mut bad = Vec::new();
    for e in &r.edges {
        if !e.violations.is_empty() {
            bad.push(format!("{}⇒{} violated by {:?}", e.from.name(), e.to.name(), e.violations));
        }
    }
    for (x, y) in r.unwitnessed() {
        bad.push(format!("{}⊂{} not witnessed", x.name(), y.name()));
    }
    bad.extend(r.errors.iter().cloned());
    if bad.is_empty() {
        Ok(format!(
            "{} languages, {} edges, 0 violations, every edge properly witnessed",
            r.corpus_size,
            r.edges.len()
        ))
    } else {
        Err(bad.join("; "))
    }
}

fn member(d: &Dfa, w: &[u8]) -> bool {
    d.accepts(w)
}

/// ∀ x, z (|x|, |z| ≤ 3), y (|y| ≤ 3): x y^k z ∈ L ⇔ x y^(k+1) z ∈ L, k = |monoid|.
fn brute_noncounting(d: &Dfa) -> bool {
    let k = TransitionMonoid::of(d, DEFAULT_MONOID_CAP).unwrap().len();
    let words = d.alphabet().words_up_to(NC_XZ_LEN);
    let ys = d.alphabet().words_up_to(NC_Y_LEN);
    ys.iter().all(|y| {
        let yk: Vec<u8> = y.as_bytes().repeat(k);
        let yk1: Vec<u8> = y.as_bytes().repeat(k + 1);
        words.iter().all(|x| {
            words.iter().all(|z| {
                let a = [x.as_bytes(), &yk, z.as_bytes()].concat();
                let b = [x.as_bytes(), &yk1, z.as_bytes()].concat();
                member(d, &a) == member(d, &b)
            })
        })
    })
}

/// ∃ k ≤ 4: for every w with |w| = k, all x w (|x| ≤ 3) agree on membership.
fn brute_definite(d: &Dfa) -> bool {
    let xs = d.alphabet().words_up_to(DEF_PREFIX_LEN);
    (0..=DEF_MAX_K).any(|k| {
        d.alphabet().words_of_length(k).iter().all(|w| {
            let first = member(d, &[xs[0].as_bytes(), w.as_bytes()].concat());
            xs.iter().all(|x| member(d, &[x.as_bytes(), w.as_bytes()].concat()) == first)
        })
    })
}

/// Closure-and-compare, with the closure itself checked against bounded enumeration.
fn closure_agrees(d: &Dfa, s: &Subject, f: Family, bad: &mut Vec<String>, name: &str) {
    let closed = match f {
        Family::Pre => ops::prefix_closure(d),
        Family::Suf => ops::suffix_closure(d),
        _ => ops::infix_closure(d),
    };
    let words = d.enumerate_words(CLOSURE_CHECK_LEN + 2);
    let mut expect: BTreeSet<Vec<u8>> = BTreeSet::new();
    for w in &words {
        let b = w.as_bytes();
        for i in 0..=b.len() {
            for j in i..=b.len() {
                let keep = match f {
                    Family::Pre => i == 0,
                    Family::Suf => j == b.len(),
                    _ => true,
                };
                if keep && j - i <= CLOSURE_CHECK_LEN {
                    expect.insert(b[i..j].to_vec());
                }
            }
        }
    }
    let got: BTreeSet<Vec<u8>> = closed
        .enumerate_words(CLOSURE_CHECK_LEN)
        .into_iter()
        .map(|w| w.into_bytes())
        .collect();
    // Words of L longer than the enumeration bound can still contribute short factors,
    // so only the inclusion expect ⊆ got is exact here.
    if !expect.is_subset(&got) {
        bad.push(format!("{name}: {} closure misses factors", f.name()));
    }
    let same = ops::equivalent(&closed, d).unwrap();
    let v = s.decide(f).unwrap().verdict;
    if v.as_bool() != Some(same) {
        bad.push(format!("{name}: {} decider {v:?}, closure-and-compare {same}", f.name()));
    }
}

fn criterion_5() -> Outcome1 {
    let mut rng = ChaCha8Rng::seed_from_u64(ORACLE_SEED);
    let mut bad = Vec::new();
    let (mut nc_yes, mut def_yes) = (0, 0);
    for i in 0..ORACLE_RANDOM {
        let d = harness::random_dfa(&mut rng, ORACLE_MAX_STATES, ORACLE_MAX_LETTERS).minimize();
        let name = format!("random#{i}");
        let s = Subject::new(&d, Some(d.alphabet()), Limits::default()).unwrap();
        for f in [Family::Pre, Family::Suf, Family::Inf] {
            closure_agrees(&d, &s, f, &mut bad, &name);
        }
        let nc = s.decide(Family::Nc).unwrap().verdict.as_bool().unwrap();
        nc_yes += nc as usize;
        if nc != brute_noncounting(&d) {
            bad.push(format!("{name}: NC decider {nc}"));
        }
        let def = s.decide(Family::Def).unwrap().verdict.as_bool().unwrap();
        def_yes += def as usize;
        if def != brute_definite(&d) {
            bad.push(format!("{name}: DEF decider {def}"));
        }
        let star = s.decide(Family::Star).unwrap().verdict.as_bool().unwrap();
        let fixed = ops::equivalent(&ops::star(&d), &d).unwrap();
        if star != fixed {
            bad.push(format!("{name}: STAR decider {star}, L = L* is {fixed}"));
        }
    }
    if bad.is_empty() {
        Ok(format!(
            "{ORACLE_RANDOM} automata ({nc_yes} NC, {def_yes} DEF), 0 mismatches on PRE, SUF, INF, NC, DEF, STAR"
        ))
    } else {
        Err(bad.join("; "))
    }
}

fn sorted(words: Vec<Word>) -> BTreeSet<Word> {
    words.into_iter().collect()
}

fn criterion_6() -> Outcome1 {
    let mut bad = Vec::new();
    let mut grammars = Vec::new();
    for r in harness::registry() {
        let Some(subject) = r.grammar else { continue };
        let g = subject.grammar.compile().unwrap();
        let full = sorted(g.generate(subject.mode, SLICE_BOUND).unwrap());
        for n in 0..=SLICE_BOUND {
            let slice = sorted(g.generate(subject.mode, n).unwrap());
            let filtered: BTreeSet<Word> = full.iter().filter(|w| w.len() <= n).cloned().collect();
            if slice != filtered {
                bad.push(format!("{} n={n}: slice differs from bound-{SLICE_BOUND} filter", r.id));
            }
            let naive = sorted(oracle::naive_generate(&subject.grammar, subject.mode, n).unwrap());
            if slice != naive {
                bad.push(format!("{} n={n}: engine differs from oracle", r.id));
            }
        }
        grammars.push((r.id, g));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(STEP_SEED);
    let pools: Vec<Vec<Word>> = grammars
        .iter()
        .map(|(_, g)| g.generate(Mode::Internal, STEP_WORD_BOUND).unwrap())
        .collect();
    for _ in 0..STEP_SAMPLES {
        let i = rng.gen_range(0..grammars.len());
        let (id, g) = &grammars[i];
        // half the samples come from the language, half are arbitrary words
        let w = if rng.gen_bool(0.5) && !pools[i].is_empty() {
            pools[i][rng.gen_range(0..pools[i].len())].clone()
        } else {
            random_word(&mut rng, g.alphabet(), STEP_WORD_BOUND)
        };
        let ex = sorted(g.step(Mode::External, &w).unwrap());
        let int = sorted(g.step(Mode::Internal, &w).unwrap());
        if !ex.is_subset(&int) {
            bad.push(format!("{id}: external successors of {w} not internal"));
        }
    }
    if bad.is_empty() {
        Ok(format!(
            "{} grammars × bounds 0..={SLICE_BOUND} exact, {STEP_SAMPLES} step pairs ⊆",
            grammars.len()
        ))
    } else {
        Err(bad.join("; "))
    }
}

fn random_word(rng: &mut ChaCha8Rng, alphabet: &Alphabet, max_len: usize) -> Word {
    let n = rng.gen_range(0..=max_len);
    let letters = alphabet.symbols();
    Word::from_bytes((0..n).map(|_| letters[rng.gen_range(0..letters.len())]).collect())
}

fn main() {
    let criteria: [(&str, fn() -> Outcome1); 6] = [
        ("1 witness verdicts", criterion_1),
        ("2 external generation", criterion_2),
        ("3 internal generation", criterion_3),
        ("4 hierarchy implications", criterion_4),
        ("5 deciders vs brute force", criterion_5),
        ("6 slice exactness", criterion_6),
    ];
    let mut failed = 0;
    for (name, run) in criteria {
        match run() {
            Ok(detail) => println!("PASS criterion {name}: {detail}"),
            Err(detail) => {
                failed += 1;
                println!("FAIL criterion {name}: {detail}");
            }
        }
    }
    if failed > 0 {
        std::process::exit(1);
    }
}
