//! Complete deterministic automata.
//!
//! After [`Dfa::minimize`] an automaton is in canonical form: every state is
//! reachable, no two states are equivalent, and states are numbered in BFS
//! order from the initial state (which is 0), visiting letters in alphabet
//! order. Two minimized automata over the same alphabet are structurally
//! equal exactly when their languages are equal.

use std::collections::VecDeque;
use std::fmt;

use super::alphabet::{Alphabet, Word};
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Dfa {
    alphabet: Alphabet,
    // row-major: delta[q * k + a]
    delta: Vec<usize>,
    initial: usize,
    accepting: Vec<bool>,
}

/// Result of counting the words of a language.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WordCount {
    Finite(u128),
    Infinite,
}

impl Dfa {
    /// Builds an automaton from a row-major transition table. The table must
    /// be total: `delta.len() == accepting.len() * alphabet.len()`.
    pub fn from_table(
        alphabet: Alphabet,
        delta: Vec<usize>,
        initial: usize,
        accepting: Vec<bool>,
    ) -> Result<Dfa> {
        let n = accepting.len();
        if n == 0 {
            return Err(Error::InvalidAutomaton("no states".into()));
        }
        if initial >= n {
            return Err(Error::InvalidAutomaton(format!(
                "initial state {initial} out of range"
            )));
        }
        if delta.len() != n * alphabet.len() {
            return Err(Error::InvalidAutomaton("transition table is not total".into()));
        }
        if let Some(&t) = delta.iter().find(|&&t| t >= n) {
            return Err(Error::InvalidAutomaton(format!("target state {t} out of range")));
        }
        Ok(Dfa {
            alphabet,
            delta,
            initial,
            accepting,
        })
    }

    /// The empty language: a single non-accepting sink.
    pub fn empty(alphabet: &Alphabet) -> Dfa {
        Dfa {
            delta: vec![0; alphabet.len()],
            alphabet: alphabet.clone(),
            initial: 0,
            accepting: vec![false],
        }
    }

    /// `V*` for the automaton's alphabet `V`.
    pub fn universal(alphabet: &Alphabet) -> Dfa {
        Dfa {
            delta: vec![0; alphabet.len()],
            alphabet: alphabet.clone(),
            initial: 0,
            accepting: vec![true],
        }
    }

    /// `U*` over `alphabet`, where `U` is the set of letters accepted by `in_u`.
    pub fn star_of_letters(alphabet: &Alphabet, in_u: impl Fn(u8) -> bool) -> Dfa {
        let k = alphabet.len();
        let mut delta = vec![1; 2 * k];
        for (a, &b) in alphabet.symbols().iter().enumerate() {
            if in_u(b) {
                delta[a] = 0;
            }
        }
        Dfa::from_table(alphabet.clone(), delta, 0, vec![true, false])
            .expect("two-state table")
            .minimize()
    }

    /// `V*X` where `X` is the set of letters accepted by `in_x`.
    pub fn ending_in_letters(alphabet: &Alphabet, in_x: impl Fn(u8) -> bool) -> Dfa {
        let k = alphabet.len();
        let mut delta = vec![0; 2 * k];
        for (a, &b) in alphabet.symbols().iter().enumerate() {
            let t = usize::from(in_x(b));
            delta[a] = t;
            delta[k + a] = t;
        }
        Dfa::from_table(alphabet.clone(), delta, 0, vec![false, true])
            .expect("two-state table")
            .minimize()
    }

    /// Minimal automaton of a finite word set. Every word must be over `alphabet`.
    pub fn from_words<'a, I>(alphabet: &Alphabet, words: I) -> Result<Dfa>
    where
        I: IntoIterator<Item = &'a Word>,
    {
        let k = alphabet.len();
        // state 0 is the sink, state 1 the trie root
        let mut delta = vec![0; 2 * k];
        let mut accepting = vec![false, false];
        for w in words {
            alphabet.check_word(w)?;
            let mut q = 1;
            for &b in w.as_bytes() {
                let a = alphabet.index_of(b).unwrap();
                if delta[q * k + a] == 0 {
                    let fresh = accepting.len();
                    accepting.push(false);
                    delta.extend(std::iter::repeat_n(0, k));
                    delta[q * k + a] = fresh;
                }
                q = delta[q * k + a];
            }
            accepting[q] = true;
        }
        Ok(Dfa::from_table(alphabet.clone(), delta, 1, accepting)?.minimize())
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn num_states(&self) -> usize {
        self.accepting.len()
    }

    pub fn initial(&self) -> usize {
        self.initial
    }

    #[inline]
    pub fn next(&self, q: usize, a: usize) -> usize {
        self.delta[q * self.alphabet.len() + a]
    }

    pub fn is_accepting(&self, q: usize) -> bool {
        self.accepting[q]
    }

    pub fn accepting(&self) -> &[bool] {
        &self.accepting
    }

    /// State reached from `q` on `word`; `None` if a symbol is foreign.
    pub fn run_from(&self, q: usize, word: &[u8]) -> Option<usize> {
        word.iter().try_fold(q, |q, &b| {
            self.alphabet.index_of(b).map(|a| self.next(q, a))
        })
    }

    /// Membership. Words containing symbols outside the alphabet are rejected.
    pub fn accepts(&self, word: &[u8]) -> bool {
        self.run_from(self.initial, word)
            .is_some_and(|q| self.accepting[q])
    }

    pub fn contains(&self, word: &Word) -> bool {
        self.accepts(word.as_bytes())
    }

    fn check_same_alphabet(&self, other: &Dfa) -> Result<()> {
        if self.alphabet != other.alphabet {
            return Err(Error::AlphabetMismatch {
                left: self.alphabet.to_string(),
                right: other.alphabet.to_string(),
            });
        }
        Ok(())
    }

    pub(crate) fn require_same_alphabet(&self, other: &Dfa) -> Result<()> {
        self.check_same_alphabet(other)
    }

    /// Reachability from the initial state.
    pub fn reachable(&self) -> Vec<bool> {
        let k = self.alphabet.len();
        let mut seen = vec![false; self.num_states()];
        let mut stack = vec![self.initial];
        seen[self.initial] = true;
        while let Some(q) = stack.pop() {
            for a in 0..k {
                let t = self.next(q, a);
                if !seen[t] {
                    seen[t] = true;
                    stack.push(t);
                }
            }
        }
        seen
    }

    /// States from which an accepting state is reachable.
    pub fn coreachable(&self) -> Vec<bool> {
        let n = self.num_states();
        let k = self.alphabet.len();
        let mut preds: Vec<Vec<usize>> = vec![Vec::new(); n];
        for q in 0..n {
            for a in 0..k {
                preds[self.next(q, a)].push(q);
            }
        }
        let mut seen = self.accepting.clone();
        let mut stack: Vec<usize> = (0..n).filter(|&q| seen[q]).collect();
        while let Some(q) = stack.pop() {
            for &p in &preds[q] {
                if !seen[p] {
                    seen[p] = true;
                    stack.push(p);
                }
            }
        }
        seen
    }

    /// Reachable and co-reachable states.
    pub fn useful(&self) -> Vec<bool> {
        let r = self.reachable();
        let c = self.coreachable();
        r.iter().zip(c).map(|(&x, y)| x && y).collect()
    }

    /// Shortlex-least word leading from the initial state to each state
    /// (`None` for unreachable states).
    pub fn access_words(&self) -> Vec<Option<Word>> {
        let k = self.alphabet.len();
        let mut out: Vec<Option<Word>> = vec![None; self.num_states()];
        out[self.initial] = Some(Word::empty());
        let mut queue = VecDeque::from([self.initial]);
        while let Some(q) = queue.pop_front() {
            for a in 0..k {
                let t = self.next(q, a);
                if out[t].is_none() {
                    let mut w = out[q].clone().unwrap().into_bytes();
                    w.push(self.alphabet.symbol(a));
                    out[t] = Some(Word::from_bytes(w));
                    queue.push_back(t);
                }
            }
        }
        out
    }

    /// Shortlex-least word leading from `from` into a state satisfying `goal`.
    pub fn shortest_path(&self, from: usize, goal: impl Fn(usize) -> bool) -> Option<Word> {
        let k = self.alphabet.len();
        let mut parent: Vec<Option<(usize, usize)>> = vec![None; self.num_states()];
        let mut seen = vec![false; self.num_states()];
        seen[from] = true;
        let mut queue = VecDeque::from([from]);
        while let Some(q) = queue.pop_front() {
            if goal(q) {
                let mut w = Vec::new();
                let mut cur = q;
                while let Some((p, a)) = parent[cur] {
                    w.push(self.alphabet.symbol(a));
                    cur = p;
                }
                w.reverse();
                return Some(Word::from_bytes(w));
            }
            for a in 0..k {
                let t = self.next(q, a);
                if !seen[t] {
                    seen[t] = true;
                    parent[t] = Some((q, a));
                    queue.push_back(t);
                }
            }
        }
        None
    }

    /// Shortlex-least accepted word.
    pub fn shortest_word(&self) -> Option<Word> {
        self.shortest_path(self.initial, |q| self.accepting[q])
    }

    pub fn is_empty(&self) -> bool {
        self.shortest_word().is_none()
    }

    /// Same table started from `q`: the residual language of `q`. Not minimized.
    pub fn with_initial(&self, q: usize) -> Dfa {
        assert!(q < self.num_states());
        Dfa {
            initial: q,
            ..self.clone()
        }
    }

    /// Shortlex-least word of length at least `min_len`, if any.
    pub fn long_word(&self, min_len: usize) -> Option<Word> {
        let k = self.alphabet.len();
        let n = self.num_states();
        let node = |q: usize, l: usize| q * (min_len + 1) + l;
        let mut parent: Vec<Option<(usize, usize)>> = vec![None; n * (min_len + 1)];
        let mut seen = vec![false; n * (min_len + 1)];
        let start = node(self.initial, 0);
        seen[start] = true;
        let mut queue = VecDeque::from([(self.initial, 0usize)]);
        while let Some((q, l)) = queue.pop_front() {
            if l == min_len && self.accepting[q] {
                let mut w = Vec::new();
                let mut cur = node(q, l);
                while let Some((p, a)) = parent[cur] {
                    w.push(self.alphabet.symbol(a));
                    cur = p;
                }
                w.reverse();
                return Some(Word::from_bytes(w));
            }
            for a in 0..k {
                let t = (self.next(q, a), (l + 1).min(min_len));
                let id = node(t.0, t.1);
                if !seen[id] {
                    seen[id] = true;
                    parent[id] = Some((node(q, l), a));
                    queue.push_back(t);
                }
            }
        }
        None
    }

    /// Shortest word whose acceptance differs when read from `p` and from `q`.
    pub fn separating_suffix(&self, p: usize, q: usize) -> Option<Word> {
        let k = self.alphabet.len();
        let n = self.num_states();
        let mut parent: Vec<Option<(usize, usize)>> = vec![None; n * n];
        let mut seen = vec![false; n * n];
        seen[p * n + q] = true;
        let mut queue = VecDeque::from([(p, q)]);
        while let Some((x, y)) = queue.pop_front() {
            if self.accepting[x] != self.accepting[y] {
                let mut w = Vec::new();
                let mut cur = x * n + y;
                while let Some((prev, a)) = parent[cur] {
                    w.push(self.alphabet.symbol(a));
                    cur = prev;
                }
                w.reverse();
                return Some(Word::from_bytes(w));
            }
            for a in 0..k {
                let (tx, ty) = (self.next(x, a), self.next(y, a));
                if !seen[tx * n + ty] {
                    seen[tx * n + ty] = true;
                    parent[tx * n + ty] = Some((x * n + y, a));
                    queue.push_back((tx, ty));
                }
            }
        }
        None
    }

    /// Letters occurring in some word of the language, in alphabet order.
    pub fn minimal_alphabet(&self) -> Alphabet {
        let useful = self.useful();
        let k = self.alphabet.len();
        let mut used = vec![false; k];
        for q in (0..self.num_states()).filter(|&q| useful[q]) {
            for (a, u) in used.iter_mut().enumerate() {
                if useful[self.next(q, a)] {
                    *u = true;
                }
            }
        }
        let syms = self.alphabet.symbols();
        self.alphabet
            .restrict(|b| used[syms.iter().position(|&x| x == b).unwrap()])
    }

    /// Re-expresses the language over `alphabet`, which must contain every
    /// letter occurring in the language. Dropped letters must be useless;
    /// new letters lead to the sink.
    pub fn over_alphabet(&self, alphabet: &Alphabet) -> Result<Dfa> {
        if &self.alphabet == alphabet {
            return Ok(self.minimize());
        }
        let needed = self.minimal_alphabet();
        if let Some(c) = needed.chars().find(|&c| !alphabet.contains(c as u8)) {
            return Err(Error::UnknownSymbol {
                symbol: c,
                alphabet: alphabet.to_string(),
            });
        }
        let n = self.num_states();
        let k = alphabet.len();
        let sink = n;
        let mut delta = vec![sink; (n + 1) * k];
        for q in 0..n {
            for (a, &b) in alphabet.symbols().iter().enumerate() {
                if let Some(old) = self.alphabet.index_of(b) {
                    delta[q * k + a] = self.next(q, old);
                }
            }
        }
        let mut accepting = self.accepting.clone();
        accepting.push(false);
        Ok(Dfa::from_table(alphabet.clone(), delta, self.initial, accepting)?.minimize())
    }

    /// Minimal complete automaton in canonical numbering.
    pub fn minimize(&self) -> Dfa {
        let trimmed = self.trim_unreachable();
        let blocks = trimmed.hopcroft();
        trimmed.quotient(&blocks).canonical()
    }

    fn trim_unreachable(&self) -> Dfa {
        let reach = self.reachable();
        if reach.iter().all(|&r| r) {
            return self.clone();
        }
        let mut map = vec![usize::MAX; self.num_states()];
        let mut next_id = 0;
        for (q, &r) in reach.iter().enumerate() {
            if r {
                map[q] = next_id;
                next_id += 1;
            }
        }
        let k = self.alphabet.len();
        let mut delta = Vec::with_capacity(next_id * k);
        let mut accepting = Vec::with_capacity(next_id);
        for q in (0..self.num_states()).filter(|&q| reach[q]) {
            accepting.push(self.accepting[q]);
            for a in 0..k {
                delta.push(map[self.next(q, a)]);
            }
        }
        Dfa {
            alphabet: self.alphabet.clone(),
            delta,
            initial: map[self.initial],
            accepting,
        }
    }

    /// Hopcroft partition refinement; returns the block index of each state.
    fn hopcroft(&self) -> Vec<usize> {
        let n = self.num_states();
        let k = self.alphabet.len();

        // inverse transitions: inv[a][q] = predecessors of q on a
        let mut inv: Vec<Vec<Vec<usize>>> = vec![vec![Vec::new(); n]; k];
        for q in 0..n {
            for (a, row) in inv.iter_mut().enumerate() {
                row[self.next(q, a)].push(q);
            }
        }

        let mut block_of = vec![0usize; n];
        let mut blocks: Vec<Vec<usize>> = Vec::new();
        let acc: Vec<usize> = (0..n).filter(|&q| self.accepting[q]).collect();
        let rej: Vec<usize> = (0..n).filter(|&q| !self.accepting[q]).collect();
        for part in [acc, rej] {
            if !part.is_empty() {
                let id = blocks.len();
                for &q in &part {
                    block_of[q] = id;
                }
                blocks.push(part);
            }
        }

        let mut in_work = vec![false; blocks.len()];
        let mut work: Vec<usize> = Vec::new();
        if blocks.len() == 2 {
            let smaller = if blocks[0].len() <= blocks[1].len() { 0 } else { 1 };
            work.push(smaller);
            in_work[smaller] = true;
        }

        let mut marked = vec![false; n];
        let mut touched_count: Vec<usize> = vec![0; blocks.len()];
        while let Some(splitter) = work.pop() {
            in_work[splitter] = false;
            let splitter_states = blocks[splitter].clone();
            for inv_a in &inv {
                let mut touched: Vec<usize> = Vec::new();
                let mut preimage: Vec<usize> = Vec::new();
                for &q in &splitter_states {
                    for &p in &inv_a[q] {
                        if !marked[p] {
                            marked[p] = true;
                            preimage.push(p);
                            let b = block_of[p];
                            if touched_count[b] == 0 {
                                touched.push(b);
                            }
                            touched_count[b] += 1;
                        }
                    }
                }
                for &b in &touched {
                    if touched_count[b] < blocks[b].len() {
                        let (inside, outside): (Vec<usize>, Vec<usize>) =
                            blocks[b].iter().partition(|&&q| marked[q]);
                        let new_id = blocks.len();
                        // keep the larger half in place
                        let (stay, moved) = if inside.len() >= outside.len() {
                            (inside, outside)
                        } else {
                            (outside, inside)
                        };
                        for &q in &moved {
                            block_of[q] = new_id;
                        }
                        blocks[b] = stay;
                        blocks.push(moved);
                        in_work.push(false);
                        touched_count.push(0);
                        // either `b` is still queued, or the smaller half suffices
                        work.push(new_id);
                        in_work[new_id] = true;
                    }
                }
                for &b in &touched {
                    touched_count[b] = 0;
                }
                for p in preimage {
                    marked[p] = false;
                }
            }
        }
        block_of
    }

    fn quotient(&self, block_of: &[usize]) -> Dfa {
        let nb = block_of.iter().copied().max().map_or(0, |m| m + 1);
        let k = self.alphabet.len();
        let mut delta = vec![0; nb * k];
        let mut accepting = vec![false; nb];
        for q in 0..self.num_states() {
            let b = block_of[q];
            accepting[b] = self.accepting[q];
            for a in 0..k {
                delta[b * k + a] = block_of[self.next(q, a)];
            }
        }
        Dfa {
            alphabet: self.alphabet.clone(),
            delta,
            initial: block_of[self.initial],
            accepting,
        }
    }

    /// BFS renumbering from the initial state in alphabet order.
    fn canonical(&self) -> Dfa {
        let n = self.num_states();
        let k = self.alphabet.len();
        let mut order = vec![usize::MAX; n];
        let mut seq = vec![self.initial];
        order[self.initial] = 0;
        let mut i = 0;
        while i < seq.len() {
            let q = seq[i];
            i += 1;
            for a in 0..k {
                let t = self.next(q, a);
                if order[t] == usize::MAX {
                    order[t] = seq.len();
                    seq.push(t);
                }
            }
        }
        let mut delta = Vec::with_capacity(seq.len() * k);
        let mut accepting = Vec::with_capacity(seq.len());
        for &q in &seq {
            accepting.push(self.accepting[q]);
            for a in 0..k {
                delta.push(order[self.next(q, a)]);
            }
        }
        Dfa {
            alphabet: self.alphabet.clone(),
            delta,
            initial: 0,
            accepting,
        }
    }

    /// The language's words of length at most `max_len`, shortlex ordered.
    pub fn enumerate_words(&self, max_len: usize) -> Vec<Word> {
        let n = self.num_states();
        let k = self.alphabet.len();
        // dist[q] = length of the shortest accepted continuation from q
        let mut dist = vec![usize::MAX; n];
        let mut frontier: Vec<usize> = (0..n).filter(|&q| self.accepting[q]).collect();
        for &q in &frontier {
            dist[q] = 0;
        }
        let mut d = 0;
        while !frontier.is_empty() {
            d += 1;
            let mut in_frontier = vec![false; n];
            for &q in &frontier {
                in_frontier[q] = true;
            }
            let next: Vec<usize> = (0..n)
                .filter(|&p| dist[p] == usize::MAX && (0..k).any(|a| in_frontier[self.next(p, a)]))
                .collect();
            for &p in &next {
                dist[p] = d;
            }
            frontier = next;
        }

        let mut out = Vec::new();
        let mut buf = Vec::new();
        for len in 0..=max_len {
            self.words_of_len(self.initial, len, &dist, &mut buf, &mut out);
        }
        out
    }

    fn words_of_len(
        &self,
        q: usize,
        remaining: usize,
        dist: &[usize],
        buf: &mut Vec<u8>,
        out: &mut Vec<Word>,
    ) {
        if dist[q] > remaining {
            return;
        }
        if remaining == 0 {
            if self.accepting[q] {
                out.push(Word::from_bytes(buf.clone()));
            }
            return;
        }
        for a in 0..self.alphabet.len() {
            buf.push(self.alphabet.symbol(a));
            self.words_of_len(self.next(q, a), remaining - 1, dist, buf, out);
            buf.pop();
        }
    }

    /// Finite iff no useful state lies on a cycle of useful states.
    pub fn is_finite(&self) -> bool {
        self.useful_topological_order().is_some()
    }

    fn useful_topological_order(&self) -> Option<Vec<usize>> {
        let useful = self.useful();
        let n = self.num_states();
        let k = self.alphabet.len();
        let mut indeg = vec![0usize; n];
        for q in (0..n).filter(|&q| useful[q]) {
            for a in 0..k {
                let t = self.next(q, a);
                if useful[t] {
                    indeg[t] += 1;
                }
            }
        }
        let mut order = Vec::new();
        let mut stack: Vec<usize> = (0..n).filter(|&q| useful[q] && indeg[q] == 0).collect();
        while let Some(q) = stack.pop() {
            order.push(q);
            for a in 0..k {
                let t = self.next(q, a);
                if useful[t] {
                    indeg[t] -= 1;
                    if indeg[t] == 0 {
                        stack.push(t);
                    }
                }
            }
        }
        let total = useful.iter().filter(|&&u| u).count();
        (order.len() == total).then_some(order)
    }

    /// Number of words, by path counting over the useful DAG.
    pub fn word_count(&self) -> Result<WordCount> {
        let Some(order) = self.useful_topological_order() else {
            return Ok(WordCount::Infinite);
        };
        let k = self.alphabet.len();
        let mut paths = vec![0u128; self.num_states()];
        if order.contains(&self.initial) {
            paths[self.initial] = 1;
        }
        let overflow = || Error::Resource {
            what: "word count exceeds u128".into(),
            limit: usize::MAX,
        };
        let mut total: u128 = 0;
        let useful = self.useful();
        for &q in &order {
            if self.accepting[q] {
                total = total.checked_add(paths[q]).ok_or_else(overflow)?;
            }
            for a in 0..k {
                let t = self.next(q, a);
                if useful[t] {
                    paths[t] = paths[t].checked_add(paths[q]).ok_or_else(overflow)?;
                }
            }
        }
        Ok(WordCount::Finite(total))
    }
}

impl fmt::Debug for Dfa {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "Dfa {{ alphabet: {{{}}}, initial: {}, states: {}",
            self.alphabet,
            self.initial,
            self.num_states()
        )?;
        for q in 0..self.num_states() {
            let row: Vec<String> = self
                .alphabet
                .chars()
                .enumerate()
                .map(|(a, c)| format!("{c}->{}", self.next(q, a)))
                .collect();
            writeln!(
                f,
                "  {}{q}: {}",
                if self.accepting[q] { "*" } else { " " },
                row.join(" ")
            )?;
        }
        write!(f, "}}")
    }
}
