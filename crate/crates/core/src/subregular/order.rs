//! Search for a total order on DFA states that every letter preserves.

use crate::automata::Dfa;

pub const DEFAULT_ORDER_STATE_CAP: usize = 12;

struct Search<'a> {
    dfa: &'a Dfa,
    n: usize,
}

impl Search<'_> {
    /// Adds `p ≤ q` with its consequences under letters and transitivity.
    /// Returns false on a contradiction.
    fn assert_le(&self, le: &mut [bool], p: usize, q: usize) -> bool {
        let n = self.n;
        let k = self.dfa.alphabet().len();
        let mut work = vec![(p, q)];
        while let Some((x, y)) = work.pop() {
            if le[x * n + y] {
                continue;
            }
            if le[y * n + x] {
                return false;
            }
            le[x * n + y] = true;
            for a in 0..k {
                work.push((self.dfa.next(x, a), self.dfa.next(y, a)));
            }
            for u in 0..n {
                if le[u * n + x] && !le[u * n + y] {
                    work.push((u, y));
                }
                if le[y * n + u] && !le[x * n + u] {
                    work.push((x, u));
                }
            }
        }
        true
    }

    fn solve(&self, le: Vec<bool>) -> Option<Vec<bool>> {
        let n = self.n;
        let open = (0..n)
            .flat_map(|p| (p + 1..n).map(move |q| (p, q)))
            .find(|&(p, q)| !le[p * n + q] && !le[q * n + p]);
        let Some((p, q)) = open else {
            return Some(le);
        };
        for (x, y) in [(p, q), (q, p)] {
            let mut next = le.clone();
            if self.assert_le(&mut next, x, y) {
                if let Some(done) = self.solve(next) {
                    return Some(done);
                }
            }
        }
        None
    }
}

/// A monotone total order as a list of states from least to greatest, if one
/// exists.
pub fn monotone_order(dfa: &Dfa) -> Option<Vec<usize>> {
    let n = dfa.num_states();
    let mut le = vec![false; n * n];
    for q in 0..n {
        le[q * n + q] = true;
    }
    let le = Search { dfa, n }.solve(le)?;
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&q| (0..n).filter(|&p| le[p * n + q]).count());
    Some(order)
}
