use std::collections::{HashMap, VecDeque};

use thiserror::Error;

use super::{Nfa, Symbol};
use crate::bitset::StateSet;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EquivalenceError {
    #[error("automata have different alphabets")]
    AlphabetMismatch,
    #[error("state limit exceeded: product exploration discovered {discovered} pairs (cap {cap})")]
    StateLimitExceeded { cap: usize, discovered: usize },
}

/// Language equivalence by BFS over the product of both subset constructions.
///
/// The empty subset plays the role of the sink on either side. Returns a
/// shortest distinguishing word when the languages differ. The alphabets must
/// contain the same labels; their order may differ.
pub fn equivalent(a: &Nfa, b: &Nfa, cap: usize) -> Result<Option<Vec<Symbol>>, EquivalenceError> {
    if a.alphabet().len() != b.alphabet().len() {
        return Err(EquivalenceError::AlphabetMismatch);
    }
    let to_b: Vec<usize> = a
        .alphabet()
        .iter()
        .map(|s| b.symbol_index(s.as_str()))
        .collect::<Result<_, _>>()
        .map_err(|_| EquivalenceError::AlphabetMismatch)?;

    let mut index: HashMap<(StateSet, StateSet), usize> = HashMap::new();
    let mut link: Vec<Option<(usize, usize)>> = Vec::new();
    let mut pairs: Vec<(StateSet, StateSet)> = Vec::new();
    let mut queue = VecDeque::new();

    let start = (a.initial().clone(), b.initial().clone());
    index.insert(start.clone(), 0);
    pairs.push(start);
    link.push(None);
    queue.push_back(0);

    while let Some(i) = queue.pop_front() {
        let (x, y) = &pairs[i];
        if x.intersects(a.final_states()) != y.intersects(b.final_states()) {
            let mut word = Vec::new();
            let mut cur = i;
            while let Some((prev, sym)) = link[cur] {
                word.push(sym);
                cur = prev;
            }
            word.reverse();
            return Ok(Some(a.decode_word(&word)));
        }
        let (x, y) = (x.clone(), y.clone());
        for (sym, &sym_b) in to_b.iter().enumerate() {
            let next = (
                a.step_forward_by_index(&x, sym),
                b.step_forward_by_index(&y, sym_b),
            );
            if index.contains_key(&next) {
                continue;
            }
            let id = pairs.len();
            if id >= cap {
                return Err(EquivalenceError::StateLimitExceeded {
                    cap,
                    discovered: id + 1,
                });
            }
            index.insert(next.clone(), id);
            pairs.push(next);
            link.push(Some((i, sym)));
            queue.push_back(id);
        }
    }
    Ok(None)
}
