use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use subreg::automata::ops;
use subreg::contextual::{ContextualGrammar, Mode, DEFAULT_FRONTIER_CAP, DEFAULT_MAX_LEN};
use subreg::harness::{self, corpus::CorpusEntry, LemmaRecord, Status};
use subreg::subregular::{self, Family, Verdict};
use subreg::{Error, LanguageSpec, Word};

const EXIT_FAIL: u8 = 1;
const EXIT_INPUT: u8 = 2;
const EXIT_RESOURCE: u8 = 3;

#[derive(Parser)]
#[command(name = "subreg", version, about = "Subregular families and contextual grammars")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, global = true, default_value_t = Format::Table)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Table,
}

#[derive(Clone, Copy, ValueEnum)]
enum ClosureOp {
    Pre,
    Suf,
    Inf,
    Shift,
}

#[derive(Subcommand)]
enum Command {
    /// Decide family membership of a language file.
    Classify {
        file: PathBuf,
        /// Comma-separated family names; all families when omitted.
        #[arg(long, value_delimiter = ',')]
        families: Vec<Family>,
        /// Expected verdicts such as `PRE=yes,SUF=no`; exit 1 on any mismatch.
        #[arg(long, value_delimiter = ',', value_parser = parse_expectation)]
        expect: Vec<(Family, Verdict)>,
    },
    /// Print the minimal automaton of a closure as a language file.
    Closure { op: ClosureOp, file: PathBuf },
    /// List the words of a grammar up to a length.
    Generate {
        file: PathBuf,
        #[arg(long, default_value = "ex")]
        mode: Mode,
        #[arg(long, default_value_t = DEFAULT_MAX_LEN)]
        max_len: usize,
    },
    /// Search a derivation from a word (or any axiom) to a target word.
    Derive {
        file: PathBuf,
        #[arg(long, default_value = "ex")]
        mode: Mode,
        /// Start word; every axiom is tried when omitted. `~` is λ.
        #[arg(long)]
        from: Option<String>,
        to: String,
    },
    /// Run the lemma checks.
    Verify {
        /// A lemma id or `all`.
        id: String,
        #[arg(long)]
        bound: Option<usize>,
        /// Include wall-clock figures.
        #[arg(long)]
        timings: bool,
    },
    /// Run the hierarchy implication check on the witness corpus plus random automata.
    Corpus {
        #[arg(long, default_value_t = 500)]
        random: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, default_value_t = 4)]
        max_states: usize,
        #[arg(long, default_value_t = 3)]
        max_letters: usize,
    },
    /// Write every registry language and grammar as JSON into a directory.
    ExportLemmas { dir: PathBuf },
}

enum Failure {
    Input(String),
    Resource(String),
    /// Checks ran and some failed; the report is already printed.
    Checks,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        if e.is_resource() {
            Failure::Resource(e.to_string())
        } else {
            Failure::Input(e.to_string())
        }
    }
}

type Run = Result<(), Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Classify { file, families, expect } => classify(&file, &families, &expect, cli.format),
        Command::Closure { op, file } => closure(op, &file),
        Command::Generate { file, mode, max_len } => generate(&file, mode, max_len, cli.format),
        Command::Derive { file, mode, from, to } => derive(&file, mode, from.as_deref(), &to, cli.format),
        Command::Verify { id, bound, timings } => verify(&id, bound, timings, cli.format),
        Command::Corpus {
            random,
            seed,
            max_states,
            max_letters,
        } => corpus(random, seed, max_states, max_letters, cli.format),
        Command::ExportLemmas { dir } => export(&dir),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Checks) => ExitCode::from(EXIT_FAIL),
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_INPUT)
        }
        Err(Failure::Resource(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_RESOURCE)
        }
    }
}

fn print_json(v: &Value) {
    println!("{}", serde_json::to_string_pretty(v).expect("json values serialize"));
}

fn verdict_name(v: Verdict) -> &'static str {
    match v {
        Verdict::Yes => "yes",
        Verdict::No => "no",
        Verdict::Unknown => "unknown",
    }
}

fn parse_expectation(s: &str) -> Result<(Family, Verdict), String> {
    let (f, v) = s.split_once('=').ok_or_else(|| format!("expected FAMILY=yes|no, got {s}"))?;
    let f: Family = f.parse().map_err(|e: Error| e.to_string())?;
    let v = match v.to_ascii_lowercase().as_str() {
        "yes" => Verdict::Yes,
        "no" => Verdict::No,
        "unknown" => Verdict::Unknown,
        _ => return Err(format!("verdict must be yes, no or unknown, got {v}")),
    };
    Ok((f, v))
}

fn classify(file: &Path, families: &[Family], expect: &[(Family, Verdict)], format: Format) -> Run {
    let spec = LanguageSpec::from_path(file)?;
    let alphabet = spec.alphabet()?;
    let dfa = spec.compile()?;
    let mut families = if families.is_empty() { Family::ALL.to_vec() } else { families.to_vec() };
    for (f, _) in expect {
        if !families.contains(f) {
            families.push(*f);
        }
    }
    let verdicts = subregular::classify(&dfa, Some(&alphabet), &families)?;
    match format {
        Format::Json => print_json(&json!({
            "language": file.display().to_string(),
            "alphabet": alphabet.chars().map(String::from).collect::<Vec<_>>(),
            "verdicts": verdicts,
        })),
        Format::Table => {
            println!("language {} over {{{}}}", file.display(), alphabet);
            for v in &verdicts {
                let method = serde_json::to_value(v.method).unwrap();
                println!(
                    "{:<6} {:<8} {:<13} {}",
                    v.family.name(),
                    verdict_name(v.verdict),
                    method.as_str().unwrap(),
                    v.evidence
                );
                if let Some(c) = &v.caveat {
                    println!("{:<29} caveat: {c}", "");
                }
            }
        }
    }
    let mut mismatch = false;
    for (f, want) in expect {
        let got = verdicts.iter().find(|v| v.family == *f).map(|v| v.verdict);
        if got != Some(*want) {
            let got = got.map_or("missing", verdict_name);
            eprintln!("expectation failed: {} is {got}, expected {}", f.name(), verdict_name(*want));
            mismatch = true;
        }
    }
    if mismatch {
        Err(Failure::Checks)
    } else {
        Ok(())
    }
}

fn closure(op: ClosureOp, file: &Path) -> Run {
    let dfa = LanguageSpec::from_path(file)?.compile()?;
    let out = match op {
        ClosureOp::Pre => ops::prefix_closure(&dfa),
        ClosureOp::Suf => ops::suffix_closure(&dfa),
        ClosureOp::Inf => ops::infix_closure(&dfa),
        ClosureOp::Shift => ops::cyclic_shift(&dfa),
    };
    println!("{}", LanguageSpec::from_dfa(&out).to_json());
    Ok(())
}

fn frontier_cap() -> Result<usize, Failure> {
    match std::env::var("SUBREG_FRONTIER_CAP") {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| Failure::Input(format!("SUBREG_FRONTIER_CAP is not a count: {v}"))),
        Err(_) => Ok(DEFAULT_FRONTIER_CAP),
    }
}

fn load_grammar(file: &Path) -> Result<subreg::contextual::Grammar, Failure> {
    Ok(ContextualGrammar::from_path(file)?.compile()?)
}

fn plain(w: &Word) -> String {
    w.as_plain()
}

fn generate(file: &Path, mode: Mode, max_len: usize, format: Format) -> Run {
    let g = load_grammar(file)?;
    let words = g.generate_capped(mode, max_len, frontier_cap()?)?;
    match format {
        Format::Json => print_json(&json!({
            "grammar": file.display().to_string(),
            "mode": mode,
            "max_len": max_len,
            "words": words.iter().map(plain).collect::<Vec<_>>(),
        })),
        Format::Table => {
            for w in &words {
                println!("{w}");
            }
        }
    }
    Ok(())
}

fn derive(file: &Path, mode: Mode, from: Option<&str>, to: &str, format: Format) -> Run {
    let g = load_grammar(file)?;
    let to = Word::parse(to);
    g.alphabet().check_word(&to)?;
    let starts: Vec<Word> = match from {
        Some(w) => {
            let w = Word::parse(w);
            g.alphabet().check_word(&w)?;
            vec![w]
        }
        None => g.axioms().to_vec(),
    };
    let path = starts.iter().find_map(|s| g.derivation(mode, s, &to));
    match format {
        Format::Json => print_json(&json!({
            "target": to.as_plain(),
            "derivable": path.is_some(),
            "derivation": path.as_ref().map(|p| p.iter().map(plain).collect::<Vec<_>>()),
        })),
        Format::Table => match &path {
            Some(p) => println!(
                "{}",
                p.iter().map(|w| w.to_string()).collect::<Vec<_>>().join(" => ")
            ),
            None => println!("no derivation of {to}"),
        },
    }
    Ok(())
}

fn verify(id: &str, bound: Option<usize>, timings: bool, format: Format) -> Run {
    let report = if id == "all" {
        harness::verify_all(bound)
    } else {
        let lemma = harness::verify_lemma(id, bound)?;
        harness::VerificationReport::new(vec![lemma])
    };
    let report = if timings { report } else { report.without_timings() };
    match format {
        Format::Json => print_json(&serde_json::to_value(&report).unwrap()),
        Format::Table => print!("{}", harness::render_table(&report)),
    }
    if report.all_passed() {
        Ok(())
    } else {
        Err(Failure::Checks)
    }
}

fn corpus(random: usize, seed: u64, max_states: usize, max_letters: usize, format: Format) -> Run {
    if max_states == 0 || max_letters == 0 || max_letters > 8 {
        return Err(Failure::Input("need 1..=8 letters and at least one state".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut entries = harness::witness_corpus();
    for i in 0..random {
        entries.push(CorpusEntry {
            name: format!("random#{i}"),
            dfa: harness::random_dfa(&mut rng, max_states, max_letters),
        });
    }
    let report = harness::implication_corpus_check(&entries, &harness::EDGES);
    match format {
        Format::Json => print_json(&serde_json::to_value(&report).unwrap()),
        Format::Table => {
            for e in &report.edges {
                println!(
                    "{:<6} => {:<6} violations {:<4} proper witness {}",
                    e.from.name(),
                    e.to.name(),
                    e.violations.len(),
                    e.proper_witness.as_deref().unwrap_or("none")
                );
            }
            for msg in &report.errors {
                println!("skipped (resource): {msg}");
            }
            println!(
                "summary: {} languages, {} violations, {} edges without a proper witness",
                report.corpus_size,
                report.violations(),
                report.unwitnessed().len()
            );
        }
    }
    if report.violations() == 0 && report.unwitnessed().is_empty() {
        Ok(())
    } else {
        Err(Failure::Checks)
    }
}

/// ASCII alphanumerics kept, every other run collapsed to one `_`.
fn file_stem(id: &str) -> String {
    let mut out = String::new();
    for c in id.chars() {
        if c.is_ascii_alphanumeric() {
            out.push(c);
        } else if !out.ends_with('_') {
            out.push('_');
        }
    }
    out.trim_matches('_').to_string()
}

fn write(dir: &Path, name: &str, text: &str) -> Result<(), Failure> {
    fs::write(dir.join(name), format!("{text}\n")).map_err(|e| Failure::Input(format!("{name}: {e}")))
}

fn record_index(r: &LemmaRecord, dir: &Path) -> Result<Value, Failure> {
    let stem = file_stem(&r.id);
    let mut languages = Vec::new();
    for l in &r.languages {
        let name = format!("{stem}_{}.json", file_stem(&l.label));
        write(dir, &name, &l.spec.to_json())?;
        languages.push(json!({
            "label": l.label,
            "file": name,
            "claims": l.claims.iter().map(|(f, b)| json!({"family": f, "expected": if *b { "yes" } else { "no" }})).collect::<Vec<_>>(),
        }));
    }
    let grammar = match &r.grammar {
        Some(g) => {
            let name = format!("{stem}.json");
            write(dir, &name, &g.grammar.to_json())?;
            json!({
                "file": name,
                "mode": g.mode,
                "reference": g.reference.map(|p| p.id),
                "selection_claims": g.selection_claims.iter().map(|(i, f, b)| json!({"selection": i + 1, "family": f, "expected": if *b { "yes" } else { "no" }})).collect::<Vec<_>>(),
                "spot_checks": g.spot_checks.iter().map(|(w, b)| json!({"word": w, "member": b})).collect::<Vec<_>>(),
            })
        }
        None => Value::Null,
    };
    Ok(json!({
        "id": r.id,
        "statement": r.statement,
        "status": r.status,
        "bound": r.bound,
        "languages": languages,
        "grammar": grammar,
        "implications": r.implications.iter().map(|(x, y)| format!("{}=>{}", x.name(), y.name())).collect::<Vec<_>>(),
        "notes": r.notes,
        "external_claims": r.external_claims,
    }))
}

fn export(dir: &Path) -> Run {
    fs::create_dir_all(dir).map_err(|e| Failure::Input(format!("{}: {e}", dir.display())))?;
    let mut index = Vec::new();
    let mut external = 0;
    for r in harness::registry() {
        if r.status == Status::ExternalProof {
            external += 1;
        }
        index.push(record_index(&r, dir)?);
    }
    write(dir, "index.json", &serde_json::to_string_pretty(&index).unwrap())?;
    println!("wrote {} records ({external} external-proof) to {}", index.len(), dir.display());
    Ok(())
}
