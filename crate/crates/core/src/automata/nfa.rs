//! ε-NFAs: Thompson construction and subset construction.

use std::collections::{HashMap, VecDeque};

use super::alphabet::Alphabet;
use super::dfa::Dfa;
use super::regex::Regex;

#[derive(Clone, Debug, Default)]
struct NfaState {
    eps: Vec<usize>,
    // (symbol index, target)
    moves: Vec<(usize, usize)>,
}

/// Nondeterministic automaton with ε-moves over a declared alphabet.
#[derive(Clone, Debug)]
pub struct Nfa {
    alphabet: Alphabet,
    states: Vec<NfaState>,
    initial: Vec<usize>,
    accepting: Vec<bool>,
}

impl Nfa {
    pub fn new(alphabet: Alphabet) -> Self {
        Nfa {
            alphabet,
            states: Vec::new(),
            initial: Vec::new(),
            accepting: Vec::new(),
        }
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn num_states(&self) -> usize {
        self.states.len()
    }

    pub fn add_state(&mut self) -> usize {
        self.states.push(NfaState::default());
        self.accepting.push(false);
        self.states.len() - 1
    }

    pub fn add_epsilon(&mut self, from: usize, to: usize) {
        self.states[from].eps.push(to);
    }

    /// Adds a move on the symbol with index `symbol` in the alphabet.
    pub fn add_move(&mut self, from: usize, symbol: usize, to: usize) {
        debug_assert!(symbol < self.alphabet.len());
        self.states[from].moves.push((symbol, to));
    }

    pub fn add_initial(&mut self, q: usize) {
        if !self.initial.contains(&q) {
            self.initial.push(q);
        }
    }

    pub fn set_accepting(&mut self, q: usize, yes: bool) {
        self.accepting[q] = yes;
    }

    /// Copies `dfa` into this NFA and returns the index offset of the copy.
    pub fn embed_dfa(&mut self, dfa: &Dfa) -> usize {
        assert_eq!(dfa.alphabet(), &self.alphabet, "embed_dfa: alphabet mismatch");
        let offset = self.states.len();
        for _ in 0..dfa.num_states() {
            self.add_state();
        }
        for q in 0..dfa.num_states() {
            for a in 0..self.alphabet.len() {
                self.add_move(offset + q, a, offset + dfa.next(q, a));
            }
        }
        offset
    }

    /// Thompson construction; the alphabet must contain every literal.
    pub fn from_regex(re: &Regex, alphabet: &Alphabet) -> Nfa {
        let mut nfa = Nfa::new(alphabet.clone());
        let (s, f) = nfa.thompson(re);
        nfa.add_initial(s);
        nfa.set_accepting(f, true);
        nfa
    }

    fn thompson(&mut self, re: &Regex) -> (usize, usize) {
        match re {
            Regex::Empty => (self.add_state(), self.add_state()),
            Regex::Epsilon => {
                let s = self.add_state();
                let f = self.add_state();
                self.add_epsilon(s, f);
                (s, f)
            }
            Regex::Literal(b) => {
                let s = self.add_state();
                let f = self.add_state();
                let a = self
                    .alphabet
                    .index_of(*b)
                    .expect("regex literal outside the NFA alphabet");
                self.add_move(s, a, f);
                (s, f)
            }
            Regex::Concat(xs) => {
                let mut parts = xs.iter().map(|x| self.thompson(x)).collect::<Vec<_>>().into_iter();
                let (s, mut f) = parts.next().expect("empty concatenation");
                for (ns, nf) in parts {
                    self.add_epsilon(f, ns);
                    f = nf;
                }
                (s, f)
            }
            Regex::Union(xs) => {
                let s = self.add_state();
                let f = self.add_state();
                for x in xs {
                    let (xs_, xf) = self.thompson(x);
                    self.add_epsilon(s, xs_);
                    self.add_epsilon(xf, f);
                }
                (s, f)
            }
            Regex::Star(x) | Regex::Plus(x) | Regex::Optional(x) => {
                let s = self.add_state();
                let f = self.add_state();
                let (xs_, xf) = self.thompson(x);
                self.add_epsilon(s, xs_);
                self.add_epsilon(xf, f);
                if !matches!(re, Regex::Plus(_)) {
                    self.add_epsilon(s, f);
                }
                if !matches!(re, Regex::Optional(_)) {
                    self.add_epsilon(xf, xs_);
                }
                (s, f)
            }
        }
    }

    fn closure(&self, set: &mut Vec<usize>, mark: &mut [bool]) {
        let mut stack: Vec<usize> = set.clone();
        while let Some(q) = stack.pop() {
            for &r in &self.states[q].eps {
                if !mark[r] {
                    mark[r] = true;
                    set.push(r);
                    stack.push(r);
                }
            }
        }
    }

    fn closed_set(&self, seeds: impl IntoIterator<Item = usize>) -> Vec<usize> {
        let mut mark = vec![false; self.states.len()];
        let mut set = Vec::new();
        for q in seeds {
            if !mark[q] {
                mark[q] = true;
                set.push(q);
            }
        }
        self.closure(&mut set, &mut mark);
        set.sort_unstable();
        set
    }

    /// Membership by direct set simulation.
    pub fn accepts(&self, word: &[u8]) -> bool {
        let mut current = self.closed_set(self.initial.iter().copied());
        for &b in word {
            let Some(a) = self.alphabet.index_of(b) else {
                return false;
            };
            let next = current
                .iter()
                .flat_map(|&q| self.states[q].moves.iter())
                .filter(|(s, _)| *s == a)
                .map(|&(_, t)| t);
            current = self.closed_set(next);
            if current.is_empty() {
                return false;
            }
        }
        current.iter().any(|&q| self.accepting[q])
    }

    /// Subset construction. The empty subset becomes the sink, so the
    /// result is complete. It is not minimized.
    pub fn determinize(&self) -> Dfa {
        let k = self.alphabet.len();
        let mut ids: HashMap<Vec<usize>, usize> = HashMap::new();
        let mut subsets: Vec<Vec<usize>> = Vec::new();
        let mut delta: Vec<usize> = Vec::new();
        let mut queue = VecDeque::new();

        let start = self.closed_set(self.initial.iter().copied());
        ids.insert(start.clone(), 0);
        subsets.push(start);
        queue.push_back(0);

        let mut buckets: Vec<Vec<usize>> = vec![Vec::new(); k];
        while let Some(id) = queue.pop_front() {
            for b in buckets.iter_mut() {
                b.clear();
            }
            for &q in &subsets[id] {
                for &(a, t) in &self.states[q].moves {
                    buckets[a].push(t);
                }
            }
            delta.resize((id + 1) * k, 0);
            for (a, bucket) in buckets.iter().enumerate() {
                let target = self.closed_set(bucket.iter().copied());
                let tid = match ids.get(&target) {
                    Some(&t) => t,
                    None => {
                        let t = subsets.len();
                        ids.insert(target.clone(), t);
                        subsets.push(target);
                        queue.push_back(t);
                        t
                    }
                };
                delta[id * k + a] = tid;
            }
        }
        delta.resize(subsets.len() * k, 0);
        let accepting = subsets
            .iter()
            .map(|s| s.iter().any(|&q| self.accepting[q]))
            .collect();
        Dfa::from_table(self.alphabet.clone(), delta, 0, accepting)
            .expect("subset construction yields a valid table")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn thompson_matches_simulation() {
        let ab = Alphabet::from_letters("ab").unwrap();
        let re = Regex::parse("a(bb)(bb)*a", &ab).unwrap();
        let nfa = Nfa::from_regex(&re, &ab);
        assert!(nfa.accepts(b"abba"));
        assert!(nfa.accepts(b"abbbba"));
        assert!(!nfa.accepts(b"aa"));
        assert!(!nfa.accepts(b"abbba"));
        let dfa = nfa.determinize();
        for w in ab.words_up_to(7) {
            assert_eq!(dfa.accepts(w.as_bytes()), nfa.accepts(w.as_bytes()), "{w}");
        }
    }

    #[test]
    fn empty_regex_node_accepts_nothing() {
        let a = Alphabet::from_letters("a").unwrap();
        let nfa = Nfa::from_regex(&Regex::Empty, &a);
        assert!(!nfa.accepts(b""));
        assert!(!nfa.accepts(b"a"));
    }
}
