//! Transition monoid of a complete DFA, enumerated breadth-first so each
//! element carries a shortlex-least representative word.

use std::collections::HashMap;

use crate::automata::{Dfa, Word};
use crate::error::{Error, Result};

pub const DEFAULT_MONOID_CAP: usize = 1_000_000;

#[derive(Debug)]
pub struct TransitionMonoid {
    n: usize,
    // element i occupies maps[i*n .. (i+1)*n]
    maps: Vec<u32>,
    words: Vec<Word>,
}

impl TransitionMonoid {
    /// Enumerates every transformation induced by a word, the identity
    /// included. Fails once more than `cap` elements have been found.
    pub fn of(dfa: &Dfa, cap: usize) -> Result<TransitionMonoid> {
        let n = dfa.num_states();
        let k = dfa.alphabet().len();
        let syms = dfa.alphabet().symbols();
        let identity: Vec<u32> = (0..n as u32).collect();
        let mut index: HashMap<Vec<u32>, usize> = HashMap::new();
        index.insert(identity.clone(), 0);
        let mut maps = identity;
        let mut words = vec![Word::empty()];
        let mut i = 0;
        while i < words.len() {
            for a in 0..k {
                let next: Vec<u32> = (0..n)
                    .map(|q| dfa.next(maps[i * n + q] as usize, a) as u32)
                    .collect();
                if index.contains_key(&next) {
                    continue;
                }
                if words.len() >= cap {
                    return Err(Error::Resource {
                        what: "transition monoid size".into(),
                        limit: cap,
                    });
                }
                index.insert(next.clone(), words.len());
                maps.extend_from_slice(&next);
                let mut w = words[i].as_bytes().to_vec();
                w.push(syms[a]);
                words.push(Word::from_bytes(w));
            }
            i += 1;
        }
        Ok(TransitionMonoid { n, maps, words })
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn element(&self, i: usize) -> &[u32] {
        &self.maps[i * self.n..(i + 1) * self.n]
    }

    pub fn word(&self, i: usize) -> &Word {
        &self.words[i]
    }

    pub fn iter(&self) -> impl Iterator<Item = (&[u32], &Word)> {
        (0..self.len()).map(move |i| (self.element(i), self.word(i)))
    }
}

/// A cycle of length at least two in the functional graph of `t`.
pub(crate) fn nontrivial_cycle(t: &[u32]) -> Option<Vec<usize>> {
    let n = t.len();
    // 0 unvisited, 1 on current path, 2 finished
    let mut mark = vec![0u8; n];
    for s in 0..n {
        if mark[s] != 0 {
            continue;
        }
        let mut path = Vec::new();
        let mut q = s;
        while mark[q] == 0 {
            mark[q] = 1;
            path.push(q);
            q = t[q] as usize;
        }
        if mark[q] == 1 {
            let start = path.iter().position(|&p| p == q).unwrap();
            let cycle = path[start..].to_vec();
            if cycle.len() >= 2 {
                return Some(cycle);
            }
        }
        for p in path {
            mark[p] = 2;
        }
    }
    None
}

/// Orbit of `q` under repeated application of `t`: (preperiod, period).
pub(crate) fn orbit(t: &[u32], q: usize) -> (usize, usize) {
    let mut seen = vec![usize::MAX; t.len()];
    let mut x = q;
    let mut step = 0;
    while seen[x] == usize::MAX {
        seen[x] = step;
        x = t[x] as usize;
        step += 1;
    }
    (seen[x], step - seen[x])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::automata::LanguageSpec;

    #[test]
    fn sizes() {
        let even = LanguageSpec::regex("(aa)*").compile().unwrap();
        assert_eq!(TransitionMonoid::of(&even, 100).unwrap().len(), 2);
        let d = LanguageSpec::regex("(a|b)*b").compile().unwrap();
        // identity, a, b
        assert_eq!(TransitionMonoid::of(&d, 100).unwrap().len(), 3);
        assert!(TransitionMonoid::of(&d, 2).unwrap_err().is_resource());
    }

    #[test]
    fn cycles_and_orbits() {
        assert_eq!(nontrivial_cycle(&[1, 0, 2]), Some(vec![0, 1]));
        assert_eq!(nontrivial_cycle(&[1, 1, 1]), None);
        assert_eq!(orbit(&[1, 2, 1], 0), (1, 2));
        assert_eq!(orbit(&[0], 0), (0, 1));
    }
}
