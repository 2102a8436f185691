//! Language operations: boolean combinations, concatenation, star, the
//! prefix/suffix/infix closures and the cyclic shift. Every result is a
//! minimized, canonical [`Dfa`].

use super::alphabet::Word;
use super::dfa::Dfa;
use super::nfa::Nfa;
use crate::error::Result;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BoolOp {
    Union,
    Intersection,
    Difference,
    SymmetricDifference,
}

impl BoolOp {
    fn apply(self, x: bool, y: bool) -> bool {
        match self {
            BoolOp::Union => x || y,
            BoolOp::Intersection => x && y,
            BoolOp::Difference => x && !y,
            BoolOp::SymmetricDifference => x != y,
        }
    }
}

/// Product construction over the reachable pairs, unminimized.
fn product_raw(a: &Dfa, b: &Dfa, op: BoolOp) -> Result<Dfa> {
    a.require_same_alphabet(b)?;
    let k = a.alphabet().len();
    let nb = b.num_states();
    let mut id = vec![usize::MAX; a.num_states() * nb];
    let mut pairs = vec![(a.initial(), b.initial())];
    id[a.initial() * nb + b.initial()] = 0;
    let mut delta = Vec::new();
    let mut i = 0;
    while i < pairs.len() {
        let (p, q) = pairs[i];
        i += 1;
        for s in 0..k {
            let t = (a.next(p, s), b.next(q, s));
            let slot = t.0 * nb + t.1;
            if id[slot] == usize::MAX {
                id[slot] = pairs.len();
                pairs.push(t);
            }
            delta.push(id[slot]);
        }
    }
    let accepting = pairs
        .iter()
        .map(|&(p, q)| op.apply(a.is_accepting(p), b.is_accepting(q)))
        .collect();
    Dfa::from_table(a.alphabet().clone(), delta, 0, accepting)
}

pub fn boolean_op(a: &Dfa, b: &Dfa, op: BoolOp) -> Result<Dfa> {
    Ok(product_raw(a, b, op)?.minimize())
}

pub fn union(a: &Dfa, b: &Dfa) -> Result<Dfa> {
    boolean_op(a, b, BoolOp::Union)
}

pub fn intersection(a: &Dfa, b: &Dfa) -> Result<Dfa> {
    boolean_op(a, b, BoolOp::Intersection)
}

pub fn difference(a: &Dfa, b: &Dfa) -> Result<Dfa> {
    boolean_op(a, b, BoolOp::Difference)
}

/// Complement with respect to the automaton's own alphabet.
pub fn complement(a: &Dfa) -> Dfa {
    let flipped: Vec<bool> = a.accepting().iter().map(|&x| !x).collect();
    let k = a.alphabet().len();
    let delta = (0..a.num_states())
        .flat_map(|q| (0..k).map(move |s| (q, s)))
        .map(|(q, s)| a.next(q, s))
        .collect();
    Dfa::from_table(a.alphabet().clone(), delta, a.initial(), flipped)
        .expect("complement keeps the table shape")
        .minimize()
}

/// Shortlex-least word in exactly one of the two languages, if any.
/// Explores the product on the fly without minimizing.
pub fn distinguishing_word(a: &Dfa, b: &Dfa) -> Result<Option<Word>> {
    Ok(product_raw(a, b, BoolOp::SymmetricDifference)?.shortest_word())
}

/// Language equality.
pub fn equivalent(a: &Dfa, b: &Dfa) -> Result<bool> {
    Ok(distinguishing_word(a, b)?.is_none())
}

/// Shortlex-least word of `L(a) ∖ L(b)`, if any.
pub fn inclusion_counterexample(a: &Dfa, b: &Dfa) -> Result<Option<Word>> {
    Ok(product_raw(a, b, BoolOp::Difference)?.shortest_word())
}

pub fn is_subset(a: &Dfa, b: &Dfa) -> Result<bool> {
    Ok(inclusion_counterexample(a, b)?.is_none())
}

/// `L(a)·L(b)`.
pub fn concat(a: &Dfa, b: &Dfa) -> Result<Dfa> {
    a.require_same_alphabet(b)?;
    let mut nfa = Nfa::new(a.alphabet().clone());
    let oa = nfa.embed_dfa(a);
    let ob = nfa.embed_dfa(b);
    nfa.add_initial(oa + a.initial());
    for q in (0..a.num_states()).filter(|&q| a.is_accepting(q)) {
        nfa.add_epsilon(oa + q, ob + b.initial());
    }
    for q in (0..b.num_states()).filter(|&q| b.is_accepting(q)) {
        nfa.set_accepting(ob + q, true);
    }
    Ok(nfa.determinize().minimize())
}

/// `L(a)*`.
pub fn star(a: &Dfa) -> Dfa {
    let mut nfa = Nfa::new(a.alphabet().clone());
    let start = nfa.add_state();
    let off = nfa.embed_dfa(a);
    nfa.add_initial(start);
    nfa.set_accepting(start, true);
    nfa.add_epsilon(start, off + a.initial());
    for q in (0..a.num_states()).filter(|&q| a.is_accepting(q)) {
        nfa.set_accepting(off + q, true);
        nfa.add_epsilon(off + q, off + a.initial());
    }
    nfa.determinize().minimize()
}

/// `Pre(L)`: every state that can still reach acceptance becomes accepting.
pub fn prefix_closure(a: &Dfa) -> Dfa {
    let co = a.coreachable();
    let k = a.alphabet().len();
    let delta = (0..a.num_states())
        .flat_map(|q| (0..k).map(move |s| (q, s)))
        .map(|(q, s)| a.next(q, s))
        .collect();
    Dfa::from_table(a.alphabet().clone(), delta, a.initial(), co)
        .expect("same table shape")
        .minimize()
}

/// `Suf(L)`: every useful state becomes an additional start state.
pub fn suffix_closure(a: &Dfa) -> Dfa {
    let useful = a.useful();
    let mut nfa = Nfa::new(a.alphabet().clone());
    let off = nfa.embed_dfa(a);
    for q in (0..a.num_states()).filter(|&q| useful[q]) {
        nfa.add_initial(off + q);
    }
    if !useful.iter().any(|&u| u) {
        // empty language: start somewhere harmless
        nfa.add_initial(off + a.initial());
    }
    for q in (0..a.num_states()).filter(|&q| a.is_accepting(q)) {
        nfa.set_accepting(off + q, true);
    }
    nfa.determinize().minimize()
}

/// `Inf(L) = Pre(Suf(L))`.
pub fn infix_closure(a: &Dfa) -> Dfa {
    prefix_closure(&suffix_closure(a))
}

/// One-rotation image `{vu : uv ∈ L}`, built as the union over states `q` of
/// `L(q → F) · L(initial → q)`.
pub fn cyclic_shift(a: &Dfa) -> Dfa {
    let useful = a.useful();
    let mut nfa = Nfa::new(a.alphabet().clone());
    let mut any = false;
    for q in (0..a.num_states()).filter(|&q| useful[q]) {
        any = true;
        // first half reads v from q to an accepting state, second half reads
        // u from the initial state back to q
        let first = nfa.embed_dfa(a);
        let second = nfa.embed_dfa(a);
        nfa.add_initial(first + q);
        for f in (0..a.num_states()).filter(|&f| a.is_accepting(f)) {
            nfa.add_epsilon(first + f, second + a.initial());
        }
        nfa.set_accepting(second + q, true);
    }
    if !any {
        return Dfa::empty(a.alphabet());
    }
    nfa.determinize().minimize()
}
