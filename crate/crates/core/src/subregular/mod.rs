//! Membership deciders for subregular families, relative to an alphabet.
//!
//! Every decider works on the minimal complete automaton of the language
//! over the given alphabet. When no alphabet is given, the minimal alphabet of
//! the language is used (or the automaton's own alphabet if the language has
//! no letters at all).
//!
//! Edge cases: `∅` is in FIN, NIL, COMB, DEF, PRE, SUF and INF and not in
//! MON or STAR; `{λ}` is in STAR and not in MON or COMB.

mod family;
pub mod monoid;
pub mod order;

use std::cell::OnceCell;

pub use family::{Family, FamilyVerdict, Method, Verdict};
pub use monoid::{TransitionMonoid, DEFAULT_MONOID_CAP};
pub use order::{monotone_order, DEFAULT_ORDER_STATE_CAP};

use crate::automata::{ops, Alphabet, Dfa, Word, WordCount};
use crate::error::{Error, Result};

/// Attached to every ORD verdict.
pub const ORD_CAVEAT: &str =
    "decided on the minimal automaton; assumes orderability of the minimal automaton characterizes ORD";

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    pub monoid_cap: usize,
    pub order_state_cap: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            monoid_cap: DEFAULT_MONOID_CAP,
            order_state_cap: DEFAULT_ORDER_STATE_CAP,
        }
    }
}

/// Re-expresses `lang` as a minimal automaton over `alphabet`.
pub fn relative_to(lang: &Dfa, alphabet: Option<&Alphabet>) -> Result<Dfa> {
    match alphabet {
        Some(v) => lang.over_alphabet(v),
        None => {
            let u = lang.minimal_alphabet();
            if u.is_empty() {
                Ok(lang.minimize())
            } else {
                lang.over_alphabet(&u)
            }
        }
    }
}

/// A language prepared for repeated decider calls.
pub struct Subject {
    dfa: Dfa,
    limits: Limits,
    access: Vec<Word>,
    monoid: OnceCell<std::result::Result<TransitionMonoid, Error>>,
}

impl Subject {
    pub fn new(lang: &Dfa, alphabet: Option<&Alphabet>, limits: Limits) -> Result<Subject> {
        let dfa = relative_to(lang, alphabet)?;
        let access = dfa
            .access_words()
            .into_iter()
            .map(|w| w.expect("minimal automata are reachable"))
            .collect();
        Ok(Subject {
            dfa,
            limits,
            access,
            monoid: OnceCell::new(),
        })
    }

    pub fn dfa(&self) -> &Dfa {
        &self.dfa
    }

    fn monoid(&self) -> Result<&TransitionMonoid> {
        self.monoid
            .get_or_init(|| TransitionMonoid::of(&self.dfa, self.limits.monoid_cap))
            .as_ref()
            .map_err(Clone::clone)
    }

    pub fn decide(&self, family: Family) -> Result<FamilyVerdict> {
        let mut v = match family {
            Family::Mon => self.monoidal(),
            Family::Fin => Ok(self.finite()),
            Family::Nil => Ok(self.nilpotent()),
            Family::Comb => self.combinational(),
            Family::Def => Ok(self.definite()),
            Family::Inf => self.infix_closed(),
            Family::Pre => Ok(self.prefix_closed()),
            Family::Suf => self.suffix_closed(),
            Family::Ord => self.ordered(),
            Family::Comm => Ok(self.commutative()),
            Family::Circ => self.circular(),
            Family::Nc | Family::Sf => self.noncounting(),
            Family::Ps => self.power_separating(),
            Family::Star => self.star(),
            Family::Sydef | Family::Uf | Family::Lcom | Family::Rcom | Family::Twocom => {
                Ok(self.partial_rule(family))
            }
        }?;
        v.family = family;
        Ok(v)
    }

    fn monoidal(&self) -> Result<FamilyVerdict> {
        let d = &self.dfa;
        let u = d.minimal_alphabet();
        if u.is_empty() {
            let why = if d.is_empty() {
                "L is empty"
            } else {
                "L = {~}, and U* needs a non-empty U"
            };
            return Ok(FamilyVerdict::decided(Family::Mon, false, why));
        }
        let target = Dfa::star_of_letters(d.alphabet(), |b| u.contains(b));
        Ok(match ops::distinguishing_word(d, &target)? {
            None => FamilyVerdict::decided(Family::Mon, true, format!("L = U* with U = {{{u}}}")),
            Some(w) => FamilyVerdict::decided(
                Family::Mon,
                false,
                format!("L and {{{u}}}* differ on {w}"),
            ),
        })
    }

    fn finite(&self) -> FamilyVerdict {
        let d = &self.dfa;
        if d.is_finite() {
            let count = match d.word_count() {
                Ok(WordCount::Finite(c)) => c.to_string(),
                _ => "many".into(),
            };
            FamilyVerdict::decided(Family::Fin, true, format!("finite, {count} words"))
        } else {
            let w = d.long_word(d.num_states()).expect("infinite language");
            FamilyVerdict::decided(
                Family::Fin,
                false,
                format!("infinite: {w} has a pumpable loop"),
            )
        }
    }

    fn nilpotent(&self) -> FamilyVerdict {
        let d = &self.dfa;
        if d.is_finite() {
            return FamilyVerdict::decided(Family::Nil, true, "L is finite");
        }
        let co = ops::complement(d);
        if co.is_finite() {
            return FamilyVerdict::decided(Family::Nil, true, "the complement of L is finite");
        }
        let n = d.num_states();
        let inside = d.long_word(n).expect("infinite language");
        let outside = co.long_word(n).expect("infinite complement");
        FamilyVerdict::decided(
            Family::Nil,
            false,
            format!("L and its complement are both infinite ({inside} in L, {outside} not in L)"),
        )
    }

    fn combinational(&self) -> Result<FamilyVerdict> {
        let d = &self.dfa;
        let k = d.alphabet().len();
        let mut in_x = vec![false; k];
        for q in 0..d.num_states() {
            for (a, x) in in_x.iter_mut().enumerate() {
                *x |= d.is_accepting(d.next(q, a));
            }
        }
        let x = d.alphabet().restrict(|b| in_x[d.alphabet().index_of(b).unwrap()]);
        let target = Dfa::ending_in_letters(d.alphabet(), |b| x.contains(b));
        Ok(match ops::distinguishing_word(d, &target)? {
            None => FamilyVerdict::decided(Family::Comb, true, format!("L = V*X with X = {{{x}}}")),
            Some(w) => FamilyVerdict::decided(
                Family::Comb,
                false,
                format!("L and V*{{{x}}} differ on {w}"),
            ),
        })
    }

    /// Pair graph over unordered pairs of distinct states; definite iff acyclic.
    fn definite(&self) -> FamilyVerdict {
        let d = &self.dfa;
        let n = d.num_states();
        let k = d.alphabet().len();
        let id = |p: usize, q: usize| if p < q { p * n + q } else { q * n + p };
        // 0 new, 1 on stack, 2 done
        let mut mark = vec![0u8; n * n];
        for p in 0..n {
            for q in p + 1..n {
                if mark[id(p, q)] != 0 {
                    continue;
                }
                // iterative DFS; stack of (pair, next letter, letter used to enter)
                let mut stack: Vec<((usize, usize), usize)> = vec![((p, q), 0)];
                let mut letters: Vec<u8> = Vec::new();
                mark[id(p, q)] = 1;
                while let Some(&mut ((x, y), ref mut a)) = stack.last_mut() {
                    if *a == k {
                        mark[id(x, y)] = 2;
                        stack.pop();
                        letters.pop();
                        continue;
                    }
                    let sym = d.alphabet().symbol(*a);
                    let (tx, ty) = (d.next(x, *a), d.next(y, *a));
                    *a += 1;
                    if tx == ty {
                        continue;
                    }
                    match mark[id(tx, ty)] {
                        0 => {
                            mark[id(tx, ty)] = 1;
                            letters.push(sym);
                            stack.push(((tx, ty), 0));
                        }
                        1 => {
                            letters.push(sym);
                            let start = stack
                                .iter()
                                .position(|&((u, v), _)| id(u, v) == id(tx, ty))
                                .unwrap();
                            let (u, v) = stack[start].0;
                            let w = Word::from_bytes(letters[start..].to_vec());
                            return FamilyVerdict::decided(
                                Family::Def,
                                false,
                                self.pair_cycle_evidence(u, v, &w),
                            );
                        }
                        _ => {}
                    }
                }
            }
        }
        FamilyVerdict::decided(
            Family::Def,
            true,
            "pair graph is acyclic: long enough suffixes determine membership",
        )
    }

    fn pair_cycle_evidence(&self, p: usize, q: usize, w: &Word) -> String {
        // w maps {p,q} to itself, so w·w fixes both states
        let s = self.dfa.separating_suffix(p, q).expect("minimal states differ");
        format!(
            "pair of states never merges under {w}: {}·({w})^2k·{s} and {}·({w})^2k·{s} differ in membership for every k",
            self.access[p], self.access[q]
        )
    }

    /// Structural test: every state from which acceptance is reachable accepts.
    fn prefix_closed(&self) -> FamilyVerdict {
        let d = &self.dfa;
        let co = d.coreachable();
        match (0..d.num_states()).find(|&q| co[q] && !d.is_accepting(q)) {
            None => FamilyVerdict::decided(Family::Pre, true, "every live state accepts"),
            Some(q) => {
                let x = &self.access[q];
                let y = d.shortest_path(q, |t| d.is_accepting(t)).unwrap();
                FamilyVerdict::decided(
                    Family::Pre,
                    false,
                    format!("{} in L but its prefix {x} is not", x.concat(&y)),
                )
            }
        }
    }

    /// Structural test: every residual is contained in the language itself.
    fn suffix_closed(&self) -> Result<FamilyVerdict> {
        let d = &self.dfa;
        for q in 0..d.num_states() {
            if q == d.initial() {
                continue;
            }
            if let Some(s) = ops::inclusion_counterexample(&d.with_initial(q), d)? {
                let u = &self.access[q];
                return Ok(FamilyVerdict::decided(
                    Family::Suf,
                    false,
                    format!("{} in L but its suffix {s} is not", u.concat(&s)),
                ));
            }
        }
        Ok(FamilyVerdict::decided(
            Family::Suf,
            true,
            "every residual language is contained in L",
        ))
    }

    fn infix_closed(&self) -> Result<FamilyVerdict> {
        let pre = self.prefix_closed();
        if pre.is_no() {
            return Ok(FamilyVerdict::decided(Family::Inf, false, pre.evidence));
        }
        let suf = self.suffix_closed()?;
        if suf.is_no() {
            return Ok(FamilyVerdict::decided(Family::Inf, false, suf.evidence));
        }
        Ok(FamilyVerdict::decided(
            Family::Inf,
            true,
            "prefix-closed and suffix-closed",
        ))
    }

    fn ordered(&self) -> Result<FamilyVerdict> {
        let d = &self.dfa;
        let n = d.num_states();
        if n > self.limits.order_state_cap {
            return Err(Error::Resource {
                what: format!("order search on a {n}-state automaton"),
                limit: self.limits.order_state_cap,
            });
        }
        let mut v = match monotone_order(d) {
            Some(order) => {
                let names: Vec<String> = order.iter().map(|&q| format!("[{}]", self.access[q])).collect();
                FamilyVerdict::decided(
                    Family::Ord,
                    true,
                    format!("monotone order on states (by access word): {}", names.join(" < ")),
                )
            }
            None => FamilyVerdict::decided(
                Family::Ord,
                false,
                format!("no total order on the {n} states is preserved by every letter"),
            ),
        };
        v.caveat = Some(ORD_CAVEAT.into());
        Ok(v)
    }

    fn commutative(&self) -> FamilyVerdict {
        let d = &self.dfa;
        let k = d.alphabet().len();
        for q in 0..d.num_states() {
            for a in 0..k {
                for b in a + 1..k {
                    let ab = d.next(d.next(q, a), b);
                    let ba = d.next(d.next(q, b), a);
                    if ab != ba {
                        let s = d.separating_suffix(ab, ba).unwrap();
                        let u = &self.access[q];
                        let (x, y) = (d.alphabet().symbol(a) as char, d.alphabet().symbol(b) as char);
                        let w1 = Word::parse(&format!("{}{x}{y}{}", u.as_plain(), s.as_plain()));
                        let w2 = Word::parse(&format!("{}{y}{x}{}", u.as_plain(), s.as_plain()));
                        let (inside, outside) = if d.contains(&w1) { (w1, w2) } else { (w2, w1) };
                        return FamilyVerdict::decided(
                            Family::Comm,
                            false,
                            format!("{inside} in L but its permutation {outside} is not"),
                        );
                    }
                }
            }
        }
        FamilyVerdict::decided(Family::Comm, true, "every pair of letters commutes in every state")
    }

    fn circular(&self) -> Result<FamilyVerdict> {
        let d = &self.dfa;
        let shift = ops::cyclic_shift(d);
        Ok(match ops::inclusion_counterexample(&shift, d)? {
            None => FamilyVerdict::decided(Family::Circ, true, "closed under rotation"),
            Some(w) => {
                let bytes = w.as_bytes();
                let source = (1..bytes.len())
                    .map(|i| Word::from_bytes([&bytes[i..], &bytes[..i]].concat()))
                    .find(|r| d.contains(r))
                    .expect("a rotation of a shifted word is in L");
                FamilyVerdict::decided(
                    Family::Circ,
                    false,
                    format!("{source} in L but its rotation {w} is not"),
                )
            }
        })
    }

    fn noncounting(&self) -> Result<FamilyVerdict> {
        let m = self.monoid()?;
        for (t, w) in m.iter() {
            if let Some(cycle) = monoid::nontrivial_cycle(t) {
                let states: Vec<String> = cycle.iter().map(|&q| format!("[{}]", self.access[q])).collect();
                return Ok(FamilyVerdict::decided(
                    Family::Nc,
                    false,
                    format!(
                        "{w} permutes {} states cyclically: {}",
                        cycle.len(),
                        states.join(" -> ")
                    ),
                ));
            }
        }
        Ok(FamilyVerdict::decided(
            Family::Nc,
            true,
            format!("counter-free, transition monoid has {} elements", m.len()),
        ))
    }

    fn power_separating(&self) -> Result<FamilyVerdict> {
        let d = &self.dfa;
        let m = self.monoid()?;
        let mut bound = 0;
        for (t, x) in m.iter() {
            let (pre, period) = monoid::orbit(t, d.initial());
            bound = bound.max(pre);
            let mut q = d.initial();
            for _ in 0..pre {
                q = t[q] as usize;
            }
            let first = d.is_accepting(q);
            for j in 1..period {
                q = t[q] as usize;
                if d.is_accepting(q) != first {
                    let (yes, no) = if first { (pre, pre + j) } else { (pre + j, pre) };
                    return Ok(FamilyVerdict::decided(
                        Family::Ps,
                        false,
                        format!(
                            "x = {x}: x^{yes} in L, x^{no} not in L, repeating with period {period}"
                        ),
                    ));
                }
            }
        }
        Ok(FamilyVerdict::decided(
            Family::Ps,
            true,
            format!("every power sequence is eventually constant from m = {bound}"),
        ))
    }

    fn star(&self) -> Result<FamilyVerdict> {
        let d = &self.dfa;
        if !d.is_accepting(d.initial()) {
            return Ok(FamilyVerdict::decided(Family::Star, false, "~ not in L"));
        }
        let square = ops::concat(d, d)?;
        Ok(match ops::inclusion_counterexample(&square, d)? {
            None => FamilyVerdict::decided(Family::Star, true, "~ in L and L·L ⊆ L, so L = L*"),
            Some(w) => {
                let b = w.as_bytes();
                let i = (0..=b.len())
                    .find(|&i| d.accepts(&b[..i]) && d.accepts(&b[i..]))
                    .expect("word of L·L splits");
                let (u, v) = (Word::from_bytes(b[..i].to_vec()), Word::from_bytes(b[i..].to_vec()));
                FamilyVerdict::decided(
                    Family::Star,
                    false,
                    format!("{u} and {v} in L but {w} is not"),
                )
            }
        })
    }

    fn partial_rule(&self, family: Family) -> FamilyVerdict {
        let d = &self.dfa;
        let finite = d.is_finite();
        let count = if finite {
            match d.word_count() {
                Ok(WordCount::Finite(c)) => c,
                _ => u128::MAX,
            }
        } else {
            0
        };
        match family {
            Family::Uf if finite && count >= 2 => FamilyVerdict::partial(
                family,
                Verdict::No,
                format!("finite with {count} words; union-free languages are infinite or have at most one word"),
            ),
            Family::Lcom | Family::Rcom | Family::Twocom if finite && count >= 1 => {
                FamilyVerdict::partial(
                    family,
                    Verdict::No,
                    "non-empty and finite; non-empty comets are infinite",
                )
            }
            Family::Sydef => FamilyVerdict::partial(
                family,
                Verdict::Unknown,
                "no decider; supply an (E, H) certificate",
            ),
            _ => FamilyVerdict::partial(family, Verdict::Unknown, "no partial rule applies"),
        }
    }
}

pub fn decide(lang: &Dfa, alphabet: &Alphabet, family: Family) -> Result<FamilyVerdict> {
    Subject::new(lang, Some(alphabet), Limits::default())?.decide(family)
}

/// Verdicts for `families`, in the given order.
pub fn classify(lang: &Dfa, alphabet: Option<&Alphabet>, families: &[Family]) -> Result<Vec<FamilyVerdict>> {
    classify_with(lang, alphabet, families, Limits::default())
}

pub fn classify_with(
    lang: &Dfa,
    alphabet: Option<&Alphabet>,
    families: &[Family],
    limits: Limits,
) -> Result<Vec<FamilyVerdict>> {
    let s = Subject::new(lang, alphabet, limits)?;
    families.iter().map(|&f| s.decide(f)).collect()
}

pub fn is_monoidal(lang: &Dfa, alphabet: &Alphabet) -> Result<FamilyVerdict> {
    decide(lang, alphabet, Family::Mon)
}

pub fn is_finite(lang: &Dfa, alphabet: &Alphabet) -> Result<FamilyVerdict> {
    decide(lang, alphabet, Family::Fin)
}

pub fn is_nilpotent(lang: &Dfa, alphabet: &Alphabet) -> Result<FamilyVerdict> {
    decide(lang, alphabet, Family::Nil)
}

pub fn is_combinational(lang: &Dfa, alphabet: &Alphabet) -> Result<FamilyVerdict> {
    decide(lang, alphabet, Family::Comb)
}

pub fn is_definite(lang: &Dfa, alphabet: &Alphabet) -> Result<FamilyVerdict> {
    decide(lang, alphabet, Family::Def)
}

pub fn is_prefix_closed(lang: &Dfa, alphabet: &Alphabet) -> Result<FamilyVerdict> {
    decide(lang, alphabet, Family::Pre)
}

pub fn is_suffix_closed(lang: &Dfa, alphabet: &Alphabet) -> Result<FamilyVerdict> {
    decide(lang, alphabet, Family::Suf)
}

pub fn is_infix_closed(lang: &Dfa, alphabet: &Alphabet) -> Result<FamilyVerdict> {
    decide(lang, alphabet, Family::Inf)
}

pub fn is_ordered(lang: &Dfa, alphabet: &Alphabet) -> Result<FamilyVerdict> {
    decide(lang, alphabet, Family::Ord)
}

pub fn is_commutative(lang: &Dfa, alphabet: &Alphabet) -> Result<FamilyVerdict> {
    decide(lang, alphabet, Family::Comm)
}

pub fn is_circular(lang: &Dfa, alphabet: &Alphabet) -> Result<FamilyVerdict> {
    decide(lang, alphabet, Family::Circ)
}

pub fn is_noncounting(lang: &Dfa, alphabet: &Alphabet) -> Result<FamilyVerdict> {
    decide(lang, alphabet, Family::Nc)
}

pub fn is_power_separating(lang: &Dfa, alphabet: &Alphabet) -> Result<FamilyVerdict> {
    decide(lang, alphabet, Family::Ps)
}

pub fn is_star(lang: &Dfa, alphabet: &Alphabet) -> Result<FamilyVerdict> {
    decide(lang, alphabet, Family::Star)
}

/// UF, LCOM, RCOM, 2COM and SYDEF verdicts from the partial rules.
pub fn partial_rules(lang: &Dfa, alphabet: &Alphabet) -> Result<Vec<FamilyVerdict>> {
    classify(
        lang,
        Some(alphabet),
        &[Family::Uf, Family::Lcom, Family::Rcom, Family::Twocom, Family::Sydef],
    )
}

/// Checks a user-supplied SYDEF certificate `L = E·V*·H`. A verified
/// certificate yields `yes`; a wrong one leaves the verdict `unknown`.
pub fn sydef_certificate(lang: &Dfa, alphabet: &Alphabet, e: &Dfa, h: &Dfa) -> Result<FamilyVerdict> {
    let d = lang.over_alphabet(alphabet)?;
    let e = e.over_alphabet(alphabet)?;
    let h = h.over_alphabet(alphabet)?;
    let form = ops::concat(&ops::concat(&e, &Dfa::universal(alphabet))?, &h)?;
    Ok(match ops::distinguishing_word(&d, &form)? {
        None => FamilyVerdict::partial(Family::Sydef, Verdict::Yes, "certificate verified: L = E V* H"),
        Some(w) => FamilyVerdict::partial(
            Family::Sydef,
            Verdict::Unknown,
            format!("certificate rejected: L and E V* H differ on {w}"),
        ),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::automata::LanguageSpec;

    fn re(expr: &str, letters: &str) -> (Dfa, Alphabet) {
        let d = LanguageSpec::regex(expr).with_alphabet(letters).compile().unwrap();
        (d, Alphabet::from_letters(letters).unwrap())
    }

    fn fin(words: &[&str], letters: &str) -> (Dfa, Alphabet) {
        let d = LanguageSpec::finite(words).with_alphabet(letters).compile().unwrap();
        (d, Alphabet::from_letters(letters).unwrap())
    }

    fn verdict(l: &(Dfa, Alphabet), f: Family) -> Verdict {
        decide(&l.0, &l.1, f).unwrap().verdict
    }

    use Verdict::{No, Unknown, Yes};

    #[test]
    fn monoidal_examples() {
        assert_eq!(verdict(&re("(a|b)*", "abc"), Family::Mon), Yes);
        assert_eq!(verdict(&fin(&[""], "ab"), Family::Mon), No);
        assert_eq!(verdict(&re("a*b", "ab"), Family::Mon), No);
    }

    #[test]
    fn nilpotent_examples() {
        assert_eq!(verdict(&re("(a|b)(a|b)(a|b)(a|b)(a|b)*", "ab"), Family::Nil), Yes);
        assert_eq!(verdict(&fin(&["ab"], "ab"), Family::Nil), Yes);
        assert_eq!(verdict(&re("(a|b)*", "ab"), Family::Nil), Yes);
        assert_eq!(verdict(&re("bbbaa*|bb", "ab"), Family::Nil), No);
    }

    #[test]
    fn combinational_examples() {
        let v = decide(&re("(a|b)*b", "ab").0, &re("(a|b)*b", "ab").1, Family::Comb).unwrap();
        assert!(v.is_yes());
        assert!(v.evidence.contains("{b}"));
        assert_eq!(verdict(&fin(&[""], "ab"), Family::Comb), No);
        assert_eq!(verdict(&re("(a|b)*a|(a|b)*b", "ab"), Family::Comb), Yes);
    }

    #[test]
    fn definite_examples() {
        assert_eq!(verdict(&re("(a|b)*b|~", "ab"), Family::Def), Yes);
        assert_eq!(verdict(&re("(aa)*", "a"), Family::Def), No);
        assert_eq!(verdict(&fin(&["ab", "a", ""], "ab"), Family::Def), Yes);
    }

    #[test]
    fn closure_examples() {
        let l = fin(&["ab", "a", ""], "ab");
        assert_eq!(verdict(&l, Family::Pre), Yes);
        assert_eq!(verdict(&l, Family::Suf), No);
        let l = fin(&["ab", "b", ""], "ab");
        assert_eq!(verdict(&l, Family::Suf), Yes);
        assert_eq!(verdict(&l, Family::Pre), No);
        assert_eq!(verdict(&fin(&["ab", "a", "b", ""], "ab"), Family::Inf), Yes);
    }

    #[test]
    fn ordered_examples() {
        let v = decide(&re("(a|b)*", "ab").0, &re("(a|b)*", "ab").1, Family::Ord).unwrap();
        assert!(v.is_yes());
        assert!(v.caveat.is_some());
        assert_eq!(verdict(&re("a*b", "ab"), Family::Ord), Yes);
        assert_eq!(verdict(&re("(aa)*", "a"), Family::Ord), No);
    }

    #[test]
    fn order_cap_is_a_resource_error() {
        let (d, v) = re("aaaaaaaaaaaaaa", "a");
        let limits = Limits {
            order_state_cap: 4,
            ..Limits::default()
        };
        let err = classify_with(&d, Some(&v), &[Family::Ord], limits).unwrap_err();
        assert!(err.is_resource());
    }

    #[test]
    fn commutative_and_circular_examples() {
        assert_eq!(verdict(&re("(aa)*", "a"), Family::Comm), Yes);
        assert_eq!(verdict(&fin(&["ab"], "ab"), Family::Comm), No);
        assert_eq!(verdict(&re("a*b*", "ab"), Family::Comm), No);
        assert_eq!(verdict(&fin(&["ab", "ba"], "ab"), Family::Circ), Yes);
        let v = decide(&fin(&["ab", "a", "b", ""], "ab").0, &Alphabet::from_letters("ab").unwrap(), Family::Circ).unwrap();
        assert!(v.is_no());
        assert!(v.evidence.contains("ba"));
        assert_eq!(verdict(&re("(aa)*", "a"), Family::Circ), Yes);
    }

    #[test]
    fn noncounting_and_power_separating_examples() {
        let inf = {
            let d = LanguageSpec::regex("a(bb)(bb)*a").compile().unwrap();
            (ops::infix_closure(&d), Alphabet::from_letters("ab").unwrap())
        };
        assert_eq!(verdict(&inf, Family::Nc), No);
        assert_eq!(verdict(&inf, Family::Sf), No);
        assert_eq!(verdict(&inf, Family::Ps), Yes);
        assert_eq!(verdict(&re("(a|b)*b", "ab"), Family::Nc), Yes);
        assert_eq!(verdict(&re("(aa)*", "a"), Family::Nc), No);
        assert_eq!(verdict(&re("(aa)*", "a"), Family::Ps), No);
        assert_eq!(verdict(&fin(&["ab", "aab", "b"], "ab"), Family::Ps), Yes);
    }

    #[test]
    fn monoid_cap_is_a_resource_error() {
        let (d, v) = re("(a|b)*a(a|b)(a|b)(a|b)", "ab");
        let limits = Limits {
            monoid_cap: 10,
            ..Limits::default()
        };
        let err = classify_with(&d, Some(&v), &[Family::Nc], limits).unwrap_err();
        assert!(err.is_resource());
    }

    #[test]
    fn star_examples() {
        assert_eq!(verdict(&fin(&[""], "a"), Family::Star), Yes);
        assert_eq!(verdict(&re("(aa)*", "a"), Family::Star), Yes);
        let v = decide(&fin(&["ab", "a", ""], "ab").0, &Alphabet::from_letters("ab").unwrap(), Family::Star).unwrap();
        assert!(v.is_no());
    }

    #[test]
    fn partial_rule_examples() {
        let l = fin(&["ab", "a", "b", ""], "ab");
        assert_eq!(verdict(&l, Family::Uf), No);
        assert_eq!(verdict(&l, Family::Twocom), No);
        assert_eq!(verdict(&re("a*", "a"), Family::Uf), Unknown);
        assert_eq!(verdict(&fin(&[], "a"), Family::Twocom), Unknown);
        assert_eq!(verdict(&l, Family::Sydef), Unknown);
        let ps = partial_rules(&l.0, &l.1).unwrap();
        assert!(ps.iter().all(|v| v.method == Method::PartialRule));
    }

    #[test]
    fn sydef_certificates() {
        let (l, v) = re("c(a|b|c)*c", "abc");
        let c = LanguageSpec::regex("c").with_alphabet("abc").compile().unwrap();
        assert!(sydef_certificate(&l, &v, &c, &c).unwrap().is_yes());
        let e = LanguageSpec::regex("a").with_alphabet("abc").compile().unwrap();
        assert_eq!(sydef_certificate(&l, &v, &e, &c).unwrap().verdict, Unknown);
    }

    #[test]
    fn edge_case_table() {
        let empty = fin(&[], "ab");
        for (f, want) in [
            (Family::Fin, Yes),
            (Family::Nil, Yes),
            (Family::Pre, Yes),
            (Family::Suf, Yes),
            (Family::Inf, Yes),
            (Family::Comb, Yes),
            (Family::Def, Yes),
            (Family::Star, No),
            (Family::Mon, No),
        ] {
            assert_eq!(verdict(&empty, f), want, "{f} on the empty language");
        }
        let lambda = fin(&[""], "ab");
        for (f, want) in [(Family::Star, Yes), (Family::Mon, No), (Family::Comb, No)] {
            assert_eq!(verdict(&lambda, f), want, "{f} on {{~}}");
        }
    }

    #[test]
    fn default_alphabet_is_minimal() {
        let d = LanguageSpec::regex("a*").with_alphabet("ab").compile().unwrap();
        let v = classify(&d, None, &[Family::Mon]).unwrap();
        assert!(v[0].is_yes());
        assert!(classify(&d, Some(&Alphabet::from_letters("b").unwrap()), &[Family::Mon]).is_err());
    }
}
