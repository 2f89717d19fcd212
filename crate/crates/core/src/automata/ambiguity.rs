//! Ambiguity check via the self-product over state pairs.
//!
//! An automaton is ambiguous iff some pair `(p, q)` with `p != q` is reachable
//! from `I × I` and co-reachable to `F × F` in the self-product.

use std::collections::{BTreeSet, VecDeque};

use super::{Nfa, Symbol};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Ambiguity {
    Unambiguous,
    /// A word with at least two accepting runs.
    Ambiguous {
        witness: Vec<Symbol>,
    },
}

impl Ambiguity {
    pub fn is_unambiguous(&self) -> bool {
        matches!(self, Ambiguity::Unambiguous)
    }

    pub fn witness(&self) -> Option<&[Symbol]> {
        match self {
            Ambiguity::Unambiguous => None,
            Ambiguity::Ambiguous { witness } => Some(witness),
        }
    }
}

/// BFS over the self-product. `link[pair]` records the neighbouring pair and
/// symbol through which `pair` was first discovered.
struct PairSearch {
    order: Vec<usize>,
    link: Vec<Option<(usize, usize)>>,
    seen: Vec<bool>,
}

impl PairSearch {
    fn forward(nfa: &Nfa) -> Self {
        let n = nfa.state_count();
        let seeds = product(nfa.initial().iter(), nfa.initial().iter(), n);
        Self::run(nfa, seeds, |p, a| nfa.successors(p, a))
    }

    fn backward(nfa: &Nfa) -> Self {
        let n = nfa.state_count();
        let seeds = product(nfa.final_states().iter(), nfa.final_states().iter(), n);
        Self::run(nfa, seeds, |p, a| nfa.predecessors(p, a))
    }

    fn run<'n>(
        nfa: &'n Nfa,
        seeds: Vec<usize>,
        step: impl Fn(usize, usize) -> &'n crate::bitset::StateSet,
    ) -> Self {
        let n = nfa.state_count();
        let mut seen = vec![false; n * n];
        let mut link = vec![None; n * n];
        let mut order = Vec::new();
        let mut queue = VecDeque::new();
        for s in seeds {
            if !seen[s] {
                seen[s] = true;
                queue.push_back(s);
            }
        }
        while let Some(pair) = queue.pop_front() {
            order.push(pair);
            let (p, q) = (pair / n, pair % n);
            for a in 0..nfa.alphabet().len() {
                for p2 in step(p, a) {
                    for q2 in step(q, a) {
                        let next = p2 * n + q2;
                        if !seen[next] {
                            seen[next] = true;
                            link[next] = Some((pair, a));
                            queue.push_back(next);
                        }
                    }
                }
            }
        }
        PairSearch { order, link, seen }
    }

    /// Symbols along the discovery path, from the seed set to `pair`.
    fn path_to(&self, mut pair: usize) -> Vec<usize> {
        let mut word = Vec::new();
        while let Some((prev, a)) = self.link[pair] {
            word.push(a);
            pair = prev;
        }
        word.reverse();
        word
    }
}

fn product(
    left: impl Iterator<Item = usize>,
    right: impl Iterator<Item = usize> + Clone,
    n: usize,
) -> Vec<usize> {
    left.flat_map(|p| right.clone().map(move |q| p * n + q))
        .collect()
}

/// All pairs `(q, q')` such that some word leads from `I` to `q` and from `I`
/// to `q'` (including diagonal pairs).
pub fn reachable_pairs(nfa: &Nfa) -> BTreeSet<(usize, usize)> {
    let n = nfa.state_count();
    PairSearch::forward(nfa)
        .order
        .into_iter()
        .map(|pair| (pair / n, pair % n))
        .collect()
}

/// Decides unambiguity; an ambiguous automaton comes with a witness word of
/// length at most `2·n²`.
pub fn is_unambiguous(nfa: &Nfa) -> Ambiguity {
    let n = nfa.state_count();
    let fwd = PairSearch::forward(nfa);
    let bwd = PairSearch::backward(nfa);
    let Some(&pair) = fwd
        .order
        .iter()
        .find(|&&pair| pair / n != pair % n && bwd.seen[pair])
    else {
        return Ambiguity::Unambiguous;
    };
    let mut word = fwd.path_to(pair);
    // The backward search reached `pair` from F×F, so its path read in
    // reverse leads from `pair` to F×F.
    let mut tail = bwd.path_to(pair);
    tail.reverse();
    word.extend(tail);
    Ambiguity::Ambiguous {
        witness: nfa.decode_word(&word),
    }
}
