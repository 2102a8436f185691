use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;
use subreg::automata::ops;
use subreg::LanguageSpec;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_subreg"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn lemmas() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../lemmas")
}

fn lemma(name: &str) -> String {
    lemmas().join(name).display().to_string()
}

fn write(dir: &tempfile::TempDir, name: &str, text: &str) -> String {
    let p = dir.path().join(name);
    std::fs::write(&p, text).unwrap();
    p.display().to_string()
}

#[test]
fn classify_witness() {
    let o = run(&["--format", "json", "classify", &lemma("srl_pre_o_suf_L.json"), "--families", "PRE,SUF,FIN"]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["alphabet"], serde_json::json!(["a", "b"]));
    let got: Vec<(String, String)> = v["verdicts"]
        .as_array()
        .unwrap()
        .iter()
        .map(|x| (x["family"].as_str().unwrap().into(), x["verdict"].as_str().unwrap().into()))
        .collect();
    assert_eq!(
        got,
        [("PRE".into(), "yes".into()), ("SUF".into(), "no".into()), ("FIN".into(), "yes".into())]
    );
    assert_eq!(v["verdicts"][0]["method"], "decider");
}

#[test]
fn classify_edge_cases_and_errors() {
    let dir = tempfile::tempdir().unwrap();
    let empty = write(&dir, "empty.json", r#"{"alphabet":["a","b"],"kind":"finite","words":[]}"#);
    let o = run(&["classify", &empty]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    for line in ["FIN    yes", "NIL    yes", "PRE    yes", "INF    yes", "STAR   no", "MON    no", "2COM   unknown"] {
        assert!(text.contains(line), "{line} missing in\n{text}");
    }

    let broken = write(&dir, "broken.json", r#"{"kind":"regex","expr":"a(b"}"#);
    let o = run(&["classify", &broken]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("syntax"));

    let o = run(&["classify", &dir.path().join("missing.json").display().to_string()]);
    assert_eq!(o.status.code(), Some(2));
    let o = run(&["classify", &empty, "--families", "NOPE"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn classify_expectations() {
    let f = lemma("srl_pre_o_suf_L.json");
    assert_eq!(run(&["classify", &f, "--expect", "PRE=yes,SUF=no"]).status.code(), Some(0));
    let o = run(&["classify", &f, "--expect", "SUF=yes"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("SUF is no"));
}

fn closure_of(op: &str, file: &str) -> subreg::Dfa {
    let o = run(&["closure", op, file]);
    assert_eq!(o.status.code(), Some(0));
    LanguageSpec::from_json(&stdout(&o)).unwrap().compile().unwrap()
}

#[test]
fn closures() {
    let dir = tempfile::tempdir().unwrap();
    let ab = write(&dir, "ab.json", r#"{"alphabet":["a","b"],"kind":"finite","words":["ab"]}"#);
    let fin = |ws: &[&str]| LanguageSpec::finite(ws).with_alphabet("ab").compile().unwrap();
    assert_eq!(closure_of("pre", &ab), fin(&["", "a", "ab"]));
    assert_eq!(closure_of("suf", &ab), fin(&["", "b", "ab"]));
    assert_eq!(closure_of("shift", &ab), fin(&["ab", "ba"]));

    let abba = write(&dir, "abba.json", r#"{"alphabet":["a","b"],"kind":"regex","expr":"a(bb)(bb)*a"}"#);
    let inf = closure_of("inf", &abba);
    let witness = LanguageSpec::from_path(lemmas().join("srl_inf_o_nc_L.json")).unwrap().compile().unwrap();
    assert!(ops::equivalent(&inf, &witness).unwrap());

    let o = run(&["closure", "pre", &dir.path().join("nope.json").display().to_string()]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn generate_slices() {
    let o = run(&["generate", &lemma("ec_pre_o_suf.json"), "--mode", "ex", "--max-len", "4"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "b\nab\nbb\nbbb\naabb\nbbbb\n");

    let o = run(&["generate", &lemma("ic_suf_o_pre.json"), "--mode", "in", "--max-len", "5"]);
    assert_eq!(stdout(&o), "aab\naabcd\naacbd\naacdb\nacabd\nacdab\ncdaab\n");

    let o = run(&["generate", &lemma("ec_inf_o_sydef.json"), "--mode", "ex", "--max-len", "0"]);
    assert_eq!(stdout(&o), "~\n");

    let o = run(&["--format", "json", "generate", &lemma("ec_pre_o_suf.json"), "--max-len", "2"]);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["words"], serde_json::json!(["b", "ab", "bb"]));
    assert_eq!(v["mode"], "external");
}

#[test]
fn generate_errors() {
    let dir = tempfile::tempdir().unwrap();
    let bad = write(
        &dir,
        "bad.json",
        r#"{"alphabet":["a","b","c"],"axioms":["a"],"selections":[{"selection":{"kind":"finite","words":["ad"]},"contexts":[["",""]]}]}"#,
    );
    let o = run(&["generate", &bad, "--max-len", "3"]);
    assert_eq!(o.status.code(), Some(2));
    let err = String::from_utf8_lossy(&o.stderr);
    assert!(err.contains("empty context") && err.contains("selection alphabet"), "{err}");

    let o = bin()
        .args(["generate", &lemma("ec_inf_o_sydef.json"), "--max-len", "12"])
        .env("SUBREG_FRONTIER_CAP", "50")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&o.stderr).contains("resource"));

    let o = run(&["generate", &lemma("ec_pre_o_suf.json"), "--mode", "sideways"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn derive_paths() {
    let g = lemma("ic_suf_o_pre.json");
    let o = run(&["derive", &g, "--mode", "in", "accabdd"]);
    assert_eq!(stdout(&o), "aab => acabd => accabdd\n");
    let o = run(&["derive", &g, "--mode", "in", "acccadbdd"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "no derivation of acccadbdd\n");
    let o = run(&["derive", &lemma("ec_pre_o_suf.json"), "--from", "ab", "aabb"]);
    assert_eq!(stdout(&o), "ab => aabb\n");
    let o = run(&["derive", &g, "--mode", "in", "axz"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn verify_commands() {
    let o = run(&["verify", "all"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.ends_with(
        "summary: 27 machine-checked pass, 0 fail, 0 skipped (resource), 1 external-proof skipped\n"
    ));
    // byte-identical reruns
    assert_eq!(stdout(&run(&["verify", "all"])), text);

    let o = run(&["verify", "srl:inf_o_nc"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("NC=no: no (b permutes 2 states cyclically"));

    let o = run(&["--format", "json", "verify", "ec:pre_o_suf", "--bound", "8", "--timings"]);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["lemmas"][0]["outcome"], "pass");
    assert!(v["lemmas"][0]["millis"].is_number());

    assert_eq!(run(&["verify", "nosuch"]).status.code(), Some(2));
}

#[test]
fn corpus_run() {
    let o = run(&["corpus", "--random", "50", "--seed", "7"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("summary: 64 languages, 0 violations, 0 edges without a proper witness"));
    assert_eq!(run(&["corpus", "--max-letters", "0"]).status.code(), Some(2));
}

#[test]
fn bundled_lemmas_are_current() {
    let dir = tempfile::tempdir().unwrap();
    let o = run(&["export-lemmas", &dir.path().display().to_string()]);
    assert_eq!(o.status.code(), Some(0));
    let mut exported: Vec<_> = std::fs::read_dir(dir.path()).unwrap().map(|e| e.unwrap().file_name()).collect();
    let mut bundled: Vec<_> = std::fs::read_dir(lemmas()).unwrap().map(|e| e.unwrap().file_name()).collect();
    exported.sort();
    bundled.sort();
    assert_eq!(exported, bundled);
    for name in exported {
        let a = std::fs::read(dir.path().join(&name)).unwrap();
        let b = std::fs::read(lemmas().join(&name)).unwrap();
        assert!(a == b, "{name:?} differs; rerun export-lemmas");
    }
}
