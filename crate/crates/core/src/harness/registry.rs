//! The lemma inventory.

use crate::automata::LanguageSpec;
use crate::contextual::{Context, ContextualGrammar, Mode, SelectionPair};
use crate::subregular::Family::{self, *};

use super::reference;
use super::{
    Closure, GrammarSubject, LanguageClaim, LemmaRecord, SelectionIdentity, Status, DEFAULT_BOUND,
};

fn fin(words: &[&str], letters: &str) -> LanguageSpec {
    LanguageSpec::finite(words).with_alphabet(letters)
}

fn re(expr: &str, letters: &str) -> LanguageSpec {
    LanguageSpec::regex(expr).with_alphabet(letters)
}

/// Inf(a(bb)(bb)*a) written out.
fn inf_abba() -> LanguageSpec {
    re("b*|ab*|b*a|abb(bb)*a", "ab")
}

fn lang(label: &str, spec: LanguageSpec, claims: &[(Family, bool)]) -> LanguageClaim {
    LanguageClaim {
        label: label.into(),
        spec,
        claims: claims.to_vec(),
    }
}

fn grammar(alphabet: &str, axioms: &[&str], rules: Vec<(LanguageSpec, &[(&str, &str)])>) -> ContextualGrammar {
    ContextualGrammar {
        alphabet: alphabet.chars().map(String::from).collect(),
        axioms: axioms.iter().map(|a| a.to_string()).collect(),
        selections: rules
            .into_iter()
            .map(|(selection, ctx)| SelectionPair {
                selection,
                contexts: ctx.iter().map(|(u, v)| Context::new(u, v)).collect(),
            })
            .collect(),
    }
}

fn identity(index: usize, closure: Closure, base: LanguageSpec) -> SelectionIdentity {
    SelectionIdentity {
        index,
        closure: Some(closure),
        base,
    }
}

fn record(id: &str, statement: &str) -> LemmaRecord {
    LemmaRecord {
        id: id.into(),
        statement: statement.into(),
        status: Status::MachineChecked,
        bound: DEFAULT_BOUND,
        notes: Vec::new(),
        languages: Vec::new(),
        grammar: None,
        implications: Vec::new(),
        external_claims: Vec::new(),
    }
}

fn subject(g: ContextualGrammar, mode: Mode, reference: Option<&str>) -> GrammarSubject {
    GrammarSubject {
        grammar: g,
        mode,
        reference: reference.map(|id| reference::by_id(id).expect("known reference predicate")),
        selection_claims: Vec::new(),
        selection_identities: Vec::new(),
        spot_checks: Vec::new(),
        step_checks: Vec::new(),
    }
}

fn all_selections(g: &ContextualGrammar, family: Family) -> Vec<(usize, Family, bool)> {
    (0..g.selections.len()).map(|i| (i, family, true)).collect()
}

fn spots(items: &[(&str, bool)]) -> Vec<(String, bool)> {
    items.iter().map(|(w, b)| (w.to_string(), *b)).collect()
}

fn strings(items: &[&str]) -> Vec<String> {
    items.iter().map(|s| s.to_string()).collect()
}

fn subregular_records() -> Vec<LemmaRecord> {
    let pre_l = || fin(&["ab", "a", ""], "ab");
    let suf_l = || fin(&["ab", "b", ""], "ab");
    let inf_l = || fin(&["ab", "a", "b", ""], "ab");
    let comb_l = || re("(a|b)*b", "ab");
    let aa = || re("(aa)*", "a");

    let mut out = Vec::new();

    let mut r = record("srl:pre_o_suf", "{ab, a, λ} ∈ (FIN ∩ PRE) ∖ SUF");
    r.languages = vec![lang("L", pre_l(), &[(Fin, true), (Pre, true), (Suf, false)])];
    out.push(r);

    let mut r = record("srl:fin_suf_o_pre", "{ab, b, λ} ∈ (FIN ∩ SUF) ∖ PRE");
    r.languages = vec![lang("L", suf_l(), &[(Fin, true), (Suf, true), (Pre, false)])];
    out.push(r);

    let mut r = record("srl:inf_o_uf_circ_tcom", "{ab, a, b, λ} ∈ INF ∖ (UF ∪ CIRC ∪ 2COM)");
    r.languages = vec![lang(
        "L",
        inf_l(),
        &[(Inf, true), (Uf, false), (Circ, false), (Twocom, false)],
    )];
    out.push(r);

    let mut r = record("srl:inf_o_nc", "Inf({ab²ⁿa : n ≥ 1}) ∈ INF ∖ NC");
    r.languages = vec![lang("L", inf_abba(), &[(Inf, true), (Nc, false)])];
    out.push(r);

    let mut r = record("srl:comb_o_pre", "{a,b}*{b} ∈ COMB ∖ PRE");
    r.languages = vec![lang("L", comb_l(), &[(Comb, true), (Pre, false)])];
    out.push(r);

    let mut r = record("srl:subsets_pre_ps", "PRE ⊂ PS");
    r.languages = vec![lang("L", comb_l(), &[(Ps, true), (Pre, false)])];
    r.implications = vec![(Pre, Ps)];
    r.notes = strings(&["inclusion checked as a decider implication over the witness corpus"]);
    out.push(r);

    let mut r = record("srl:subsets", "MON ⊂ INF ⊂ PRE and INF ⊂ SUF");
    r.languages = vec![
        lang("Inf(a(bb)(bb)*a)", inf_abba(), &[(Inf, true), (Mon, false)]),
        lang("{ab,a,~}", pre_l(), &[(Pre, true), (Inf, false)]),
        lang("{ab,b,~}", suf_l(), &[(Suf, true), (Inf, false)]),
    ];
    r.implications = vec![(Mon, Inf), (Inf, Pre), (Inf, Suf)];
    r.notes = strings(&["inclusions checked as decider implications over the witness corpus"]);
    out.push(r);

    let mut r = record("lemma:pre_unvergleichbarzu_suf", "PRE and SUF are incomparable");
    r.languages = vec![
        lang("L1", pre_l(), &[(Pre, true), (Suf, false)]),
        lang("L2", suf_l(), &[(Suf, true), (Pre, false)]),
    ];
    out.push(r);

    let mut r = record(
        "lemma:pre_inf_unvergleichbarzu_comb_nc",
        "each of COMB, DEF, SYDEF, ORD, NC is incomparable to PRE and INF",
    );
    r.languages = vec![
        lang(
            "L1",
            inf_abba(),
            &[(Inf, true), (Pre, true), (Nc, false), (Ord, false), (Def, false), (Comb, false)],
        ),
        lang(
            "L2",
            comb_l(),
            &[(Comb, true), (Def, true), (Ord, true), (Nc, true), (Pre, false), (Inf, false)],
        ),
    ];
    r.external_claims = strings(&["SYDEF verdicts for L1 and L2 (no SYDEF decider)"]);
    out.push(r);

    let mut r = record(
        "lemma:pre_inf_unvergleichbarzu_fin_nil",
        "each of FIN, NIL is incomparable to PRE and INF",
    );
    r.languages = vec![
        lang("L1", suf_l(), &[(Fin, true), (Nil, true), (Pre, false), (Inf, false)]),
        lang("L2", inf_abba(), &[(Inf, true), (Pre, true), (Nil, false), (Fin, false), (Nc, false)]),
    ];
    out.push(r);

    let mut r = record(
        "lemma:pre_inf_unvergleichbarzu_sydef_2com",
        "each of SYDEF, RCOM, LCOM, 2COM is incomparable to PRE and INF",
    );
    r.languages = vec![
        lang(
            "L1",
            inf_l(),
            &[(Inf, true), (Pre, true), (Twocom, false), (Lcom, false), (Rcom, false)],
        ),
        lang("L2", comb_l(), &[(Comb, true), (Pre, false), (Inf, false)]),
    ];
    r.external_claims = strings(&[
        "L1 ∉ SYDEF and L2 ∈ SYDEF ⊆ LCOM, RCOM, 2COM (no SYDEF or comet decider)",
    ]);
    out.push(r);

    let mut r = record(
        "lemma:pre_inf_unvergleichbarzu_star_uf",
        "each of STAR, UF is incomparable to PRE and INF",
    );
    r.languages = vec![
        lang("L1", inf_l(), &[(Inf, true), (Pre, true), (Uf, false), (Star, false)]),
        lang("L2", aa(), &[(Star, true), (Ps, false), (Pre, false), (Inf, false)]),
    ];
    r.external_claims = strings(&["L2 ∈ UF (no UF decider)"]);
    out.push(r);

    let mut r = record(
        "lemma:pre_inf_unvergleichbarzu_comm_circ",
        "each of COMM, CIRC is incomparable to PRE and INF",
    );
    r.languages = vec![
        lang("L1", inf_l(), &[(Inf, true), (Pre, true), (Circ, false), (Comm, false)]),
        lang(
            "L2",
            aa(),
            &[(Comm, true), (Circ, true), (Ps, false), (Pre, false), (Inf, false)],
        ),
    ];
    out.push(r);

    out
}

fn external_records() -> Vec<LemmaRecord> {
    let mut out = Vec::new();
    let widened = "alphabet widened from {a,b} to {a,b,c}: the stated grammar uses the letter c";

    let mut r = record("ec:pre_o_suf", "{aⁿbⁿ : n ≥ 1} ∪ {bⁿ : n ≥ 1} ∈ EC(PRE) ∖ EC(SUF)");
    let g = grammar(
        "ab",
        &["ab", "b"],
        vec![(re("~|a+b*", "ab"), &[("a", "b")]), (re("b*", "ab"), &[("", "b")])],
    );
    let mut s = subject(g, Mode::External, Some("anbn_or_bn"));
    s.selection_claims = all_selections(&s.grammar, Pre);
    s.selection_identities = vec![identity(0, Closure::Pre, re("a+b+", "ab"))];
    s.step_checks = vec![("ab".into(), strings(&["aabb"]))];
    r.grammar = Some(s);
    r.external_claims = strings(&["L ∉ EC(SUF)"]);
    out.push(r);

    let mut r = record("ec:suf_o_pre", "{aⁿbⁿ : n ≥ 1} ∪ {aⁿ : n ≥ 1} ∈ EC(SUF) ∖ EC(PRE)");
    let g = grammar(
        "ab",
        &["ab", "a"],
        vec![(re("~|a*b+", "ab"), &[("a", "b")]), (re("a*", "ab"), &[("", "a")])],
    );
    let mut s = subject(g, Mode::External, Some("anbn_or_an"));
    s.selection_claims = all_selections(&s.grammar, Suf);
    s.selection_identities = vec![identity(0, Closure::Suf, re("a+b+", "ab"))];
    r.grammar = Some(s);
    r.notes = strings(&["reconstructed: grammar obtained from ec:pre_o_suf by symmetry"]);
    r.external_claims = strings(&["L ∉ EC(PRE)"]);
    out.push(r);

    let mut r = record(
        "ec:inf_o_star",
        "{a,b}*{aⁿbᵐ : n, m ≥ 1} ∪ {caⁿbᵐc : n, m ≥ 1} ∈ EC(INF) ∖ EC(STAR)",
    );
    let g = grammar(
        "abc",
        &["ab"],
        vec![
            (re("a*b*", "ab"), &[("c", "c")]),
            (re("(a|b)*", "ab"), &[("a", ""), ("b", ""), ("", "b")]),
        ],
    );
    let mut s = subject(g, Mode::External, Some("ab_star_apbp_or_capbpc"));
    s.selection_claims = all_selections(&s.grammar, Inf);
    s.selection_identities = vec![
        identity(0, Closure::Inf, re("a+b+", "ab")),
        identity(1, Closure::Inf, re("(a|b)*", "ab")),
    ];
    r.grammar = Some(s);
    r.notes = strings(&[widened]);
    r.external_claims = strings(&["L ∉ EC(STAR)"]);
    out.push(r);

    let mut r = record(
        "ec:inf_o_nc",
        "{aᵐbc²ⁿbaᵐ : n ≥ 1, m ≥ 0} ∪ {cⁿ : n ≥ 2} ∪ {bcⁿb : n ≥ 2} ∪ {acⁿa : n ≥ 2} ∈ EC(INF) ∖ EC(NC)",
    );
    let g = grammar(
        "abc",
        &["cc"],
        vec![
            (re("c*", "c"), &[("", "c"), ("b", "b")]),
            (re("a*|c*|a*bc*|c*ba*|a*b(cc)(cc)*ba*", "abc"), &[("a", "a")]),
        ],
    );
    let mut s = subject(g, Mode::External, Some("ambc2nbam_or_cn_or_bcnb_or_acna"));
    s.selection_claims = all_selections(&s.grammar, Inf);
    s.selection_identities = vec![identity(1, Closure::Inf, re("a*b(cc)(cc)*ba*", "abc"))];
    r.grammar = Some(s);
    r.notes = strings(&[widened]);
    r.external_claims = strings(&["L ∉ EC(NC)"]);
    out.push(r);

    let mut r = record(
        "ec:inf_o_sydef",
        "{a,b}* ∪ {c}{λ,b}{ab}*{λ,a}{c} ∈ EC(INF) ∖ EC(SYDEF)",
    );
    let g = grammar(
        "abc",
        &[""],
        vec![
            (re("(a|b)*", "ab"), &[("", "a"), ("", "b")]),
            (re("(~|b)(ab)*(~|a)", "ab"), &[("c", "c")]),
        ],
    );
    let mut s = subject(g, Mode::External, Some("ab_star_or_c_alternating_c"));
    s.selection_claims = all_selections(&s.grammar, Inf);
    s.selection_identities = vec![identity(1, Closure::Inf, re("(ab)*", "ab"))];
    r.grammar = Some(s);
    r.external_claims = strings(&["L ∉ EC(SYDEF)"]);
    out.push(r);

    let mut r = record("ec:inf_o_circ", "{aⁿbⁿ : n ≥ 1} ∪ {bⁿaⁿ : n ≥ 1} ∈ EC(INF) ∖ EC(CIRC)");
    let g = grammar(
        "ab",
        &["ab", "ba"],
        vec![(re("a*b*", "ab"), &[("a", "b")]), (re("b*a*", "ab"), &[("b", "a")])],
    );
    let mut s = subject(g, Mode::External, Some("anbn_or_bnan"));
    s.selection_claims = all_selections(&s.grammar, Inf);
    s.selection_identities = vec![
        identity(0, Closure::Inf, re("a*b*", "ab")),
        identity(1, Closure::Inf, re("b*a*", "ab")),
    ];
    r.grammar = Some(s);
    r.external_claims = strings(&["L ∉ EC(CIRC)"]);
    out.push(r);

    let mut r = record("ec:comb_o_pre", "{bⁿa : n ≥ 0} ∪ {λ} ∈ EC(COMB) ∖ EC(PRE)");
    let g = grammar("ab", &["", "a"], vec![(re("(a|b)*a", "ab"), &[("b", "")])]);
    let mut s = subject(g, Mode::External, Some("bna_or_lambda"));
    s.selection_claims = all_selections(&s.grammar, Comb);
    r.grammar = Some(s);
    r.external_claims = strings(&["L ∉ EC(PRE)"]);
    out.push(r);

    let mut r = record("ec:nil_o_pre", "{bbbaⁿ : n ≥ 1} ∪ {bb} ∈ EC(NIL) ∖ EC(PRE)");
    let g = grammar(
        "ab",
        &["bbba", "bb"],
        vec![(re("(a|b)(a|b)(a|b)(a|b)(a|b)*", "ab"), &[("", "a")])],
    );
    let mut s = subject(g, Mode::External, Some("bbban_or_bb"));
    s.selection_claims = all_selections(&s.grammar, Nil);
    r.grammar = Some(s);
    r.external_claims = strings(&["L ∉ EC(PRE)"]);
    out.push(r);

    out
}

fn internal_records() -> Vec<LemmaRecord> {
    let mut out = Vec::new();

    let mut r = record("ic:suf_o_pre", "L(G) ∈ IC(SUF) ∖ IC(PRE) for G = ({a,b,c,d}, {{ab,b,λ} → (c,d)}, {aab})");
    let g = grammar("abcd", &["aab"], vec![(fin(&["ab", "b", ""], "ab"), &[("c", "d")])]);
    let mut s = subject(g, Mode::Internal, None);
    s.selection_claims = all_selections(&s.grammar, Suf);
    s.step_checks = vec![(
        "aab".into(),
        strings(&["acabd", "aacbd", "cdaab", "acdab", "aacdb", "aabcd"]),
    )];
    s.spot_checks = spots(&[
        ("acabd", true),
        ("accabdd", true),
        ("acccabddd", true),
        ("acccadbdd", false),
    ]);
    r.grammar = Some(s);
    r.external_claims = strings(&["L ∉ IC(PRE)"]);
    out.push(r);

    let mut r = record("ic:pre_o_suf", "L(G) ∈ IC(PRE) ∖ IC(SUF) for G = ({a,b,c,d}, {{ab,a,λ} → (c,d)}, {abb})");
    let g = grammar("abcd", &["abb"], vec![(fin(&["ab", "a", ""], "ab"), &[("c", "d")])]);
    let mut s = subject(g, Mode::Internal, None);
    s.selection_claims = all_selections(&s.grammar, Pre);
    s.spot_checks = spots(&[
        ("cabdb", true),
        ("ccabddb", true),
        ("cccabdddb", true),
        ("ccacbdddb", false),
    ]);
    r.grammar = Some(s);
    r.external_claims = strings(&["L ∉ IC(SUF)"]);
    out.push(r);

    let mut r = record(
        "ic:inf_o_nc",
        "L(G) ∈ IC(INF) ∖ IC(NC) for G = ({a,…,h}, {Inf({a,b}*{cd}) → (aab,gh), Inf({a}{bb}⁺{c}) → (e,f)}, {cd})",
    );
    let g = grammar(
        "abcdefgh",
        &["cd"],
        vec![
            (re("(a|b)*(~|c|cd)|d", "abcd"), &[("aab", "gh")]),
            (re("b*|ab*|b*c|abb(bb)*c", "abc"), &[("e", "f")]),
        ],
    );
    let mut s = subject(g, Mode::Internal, None);
    s.selection_claims = all_selections(&s.grammar, Inf);
    s.selection_identities = vec![
        identity(0, Closure::Inf, re("(a|b)*cd", "abcd")),
        identity(1, Closure::Inf, re("abb(bb)*c", "abc")),
    ];
    s.spot_checks = spots(&[
        ("aabcdgh", true),
        ("aaaabbcdghgh", true),
        ("aaaeabbcfdghgh", true),
        ("aaaaaabbbcdghghgh", true),
        ("aaaaaeabbbcfdghghgh", false),
    ]);
    r.grammar = Some(s);
    r.external_claims = strings(&["L ∉ IC(NC)"]);
    out.push(r);

    let mut r = record(
        "ic:inf_o_sydef",
        "L(G) ∈ IC(INF) ∖ IC(SYDEF) for G = ({a,b,c}, {Inf({abca}) → (b,c)}, {abcaaabca})",
    );
    let g = grammar(
        "abc",
        &["abcaaabca"],
        vec![(
            fin(&["", "a", "b", "c", "ab", "bc", "ca", "abc", "bca", "abca"], "abc"),
            &[("b", "c")],
        )],
    );
    let mut s = subject(g, Mode::Internal, None);
    s.selection_claims = all_selections(&s.grammar, Inf);
    s.selection_identities = vec![identity(0, Closure::Inf, fin(&["abca"], "abc"))];
    s.spot_checks = spots(&[
        ("babcacaabca", true),
        ("bbabcaccaabca", true),
        ("babcacababcac", true),
        ("bbabcacababcacc", false),
    ]);
    r.grammar = Some(s);
    r.external_claims = strings(&["L ∉ IC(SYDEF)"]);
    out.push(r);

    let mut r = record(
        "ic:inf_o_circ",
        "L(G) ∈ IC(INF) ∖ IC(CIRC) for G = ({a,b,c,d}, {{ab,a,b,λ} → (c,d)}, {aab, ba})",
    );
    let g = grammar("abcd", &["aab", "ba"], vec![(fin(&["ab", "a", "b", ""], "ab"), &[("c", "d")])]);
    let mut s = subject(g, Mode::Internal, None);
    s.selection_claims = all_selections(&s.grammar, Inf);
    r.grammar = Some(s);
    r.external_claims = strings(&["L ∉ IC(CIRC)"]);
    out.push(r);

    let mut r = record(
        "ic:fin_comb_o_pre",
        "{cⁿacᵐbcⁿ⁺ᵐ : n, m ≥ 0} ∈ (IC(FIN) ∩ IC(COMB)) ∖ IC(PRE)",
    );
    r.status = Status::ExternalProof;
    r.notes = strings(&["the generating grammars are given in earlier work; nothing to run here"]);
    r.external_claims = strings(&["L ∈ IC(FIN)", "L ∈ IC(COMB)", "L ∉ IC(PRE)"]);
    out.push(r);

    let mut r = record(
        "ic:inf_o_star",
        "L(G) ∈ IC(INF) ∖ IC(STAR) for G = ({a,b,c,d}, {{a,λ} → (c,d), {b,λ} → (d,c)}, {baab})",
    );
    let g = grammar(
        "abcd",
        &["baab"],
        vec![(fin(&["a", ""], "a"), &[("c", "d")]), (fin(&["b", ""], "b"), &[("d", "c")])],
    );
    let mut s = subject(g, Mode::Internal, None);
    s.selection_claims = all_selections(&s.grammar, Inf);
    r.grammar = Some(s);
    r.notes = strings(&["only the selection classification and generation sanity are checked"]);
    r.external_claims = strings(&["L ∉ IC(STAR)"]);
    out.push(r);

    out
}

/// Every record, in inventory order.
pub fn registry() -> Vec<LemmaRecord> {
    let mut out = subregular_records();
    out.extend(external_records());
    out.extend(internal_records());
    out
}
