use std::collections::hash_map::Entry;
use std::collections::{HashMap, VecDeque};
use std::fmt;

use thiserror::Error;

use super::Nfa;
use crate::bitset::{BitSet, StateSet};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Direction {
    Forward,
    Backward,
}

impl Direction {
    pub fn short_name(self) -> &'static str {
        match self {
            Direction::Forward => "fwd",
            Direction::Backward => "bwd",
        }
    }
}

impl fmt::Display for Direction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Direction::Forward => "forward",
            Direction::Backward => "backward",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error(
    "state limit exceeded: {direction} determinization discovered {discovered} subsets (cap {cap})"
)]
pub struct StateLimitExceeded {
    pub direction: Direction,
    pub cap: usize,
    pub discovered: usize,
}

/// The forward or backward determinization of an [`Nfa`].
///
/// Forward: states are the sets `δ(I, w)`, the entry state is `I` and a state
/// is marked (accepting) when it meets `F`.
///
/// Backward: states are the sets `δ⁻¹(w, F)`, the entry state is `F` (the
/// single accepting state) and a state is marked (initial) when it meets `I`.
/// The transition map sends `(S, a)` to `δ⁻¹(a, S)`; as an automaton the edge
/// runs from `δ⁻¹(a, S)` to `S`.
#[derive(Clone)]
pub struct SubsetAutomaton<'a> {
    base: &'a Nfa,
    direction: Direction,
    states: Vec<StateSet>,
    transition_map: Vec<Vec<usize>>,
    entry: usize,
    marked: BitSet,
}

impl<'a> SubsetAutomaton<'a> {
    pub fn base(&self) -> &'a Nfa {
        self.base
    }

    pub fn direction(&self) -> Direction {
        self.direction
    }

    pub fn len(&self) -> usize {
        self.states.len()
    }

    pub fn is_empty(&self) -> bool {
        self.states.is_empty()
    }

    /// Subsets in discovery (BFS) order; index 0 is the entry subset.
    pub fn states(&self) -> &[StateSet] {
        &self.states
    }

    pub fn entry(&self) -> usize {
        self.entry
    }

    pub fn marked(&self) -> &BitSet {
        &self.marked
    }

    pub fn target(&self, state: usize, symbol: usize) -> usize {
        self.transition_map[state][symbol]
    }

    pub fn index_of(&self, subset: &StateSet) -> Option<usize> {
        self.states.iter().position(|s| s == subset)
    }

    /// Membership test that follows the subset automaton itself, not the base.
    pub fn accepts_by_index(&self, word: &[usize]) -> bool {
        match self.direction {
            Direction::Forward => {
                let end = word.iter().fold(self.entry, |s, &a| self.target(s, a));
                self.marked.contains(end)
            }
            Direction::Backward => {
                let start = word
                    .iter()
                    .rev()
                    .fold(self.entry, |s, &a| self.target(s, a));
                self.marked.contains(start)
            }
        }
    }

    pub fn to_nfa(&self) -> Nfa {
        self.build_nfa(self.marked.clone())
    }

    /// The automaton with its marked set complemented: accepting and
    /// non-accepting swapped (forward), or initial and non-initial swapped
    /// (backward). Recognizes the complement of the base language.
    pub fn to_complement_nfa(&self) -> Nfa {
        self.build_nfa(BitSet::full(self.len()).difference(&self.marked))
    }

    fn build_nfa(&self, marked: BitSet) -> Nfa {
        let mut transitions = Vec::with_capacity(self.len() * self.base.alphabet().len());
        for (s, row) in self.transition_map.iter().enumerate() {
            for (a, &t) in row.iter().enumerate() {
                transitions.push(match self.direction {
                    Direction::Forward => (s, a, t),
                    Direction::Backward => (t, a, s),
                });
            }
        }
        let entry = BitSet::singleton(self.entry);
        let (initial, final_states) = match self.direction {
            Direction::Forward => (entry, marked),
            Direction::Backward => (marked, entry),
        };
        Nfa::new(
            self.len(),
            self.base.alphabet().to_vec(),
            transitions,
            initial,
            final_states,
        )
        .expect("subset automaton indices are in range")
    }
}

impl fmt::Debug for SubsetAutomaton<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("SubsetAutomaton")
            .field("direction", &self.direction)
            .field("states", &self.states)
            .field("entry", &self.entry)
            .field("marked", &self.marked)
            .finish()
    }
}

/// Standard subset construction from `I`, keeping only reachable subsets.
pub fn forward_determinize(
    nfa: &Nfa,
    cap: usize,
) -> Result<SubsetAutomaton<'_>, StateLimitExceeded> {
    explore(nfa, Direction::Forward, cap)
}

/// Subset construction over `δ⁻¹(w, F)`, starting from `F`.
pub fn backward_determinize(
    nfa: &Nfa,
    cap: usize,
) -> Result<SubsetAutomaton<'_>, StateLimitExceeded> {
    explore(nfa, Direction::Backward, cap)
}

fn explore(
    nfa: &Nfa,
    direction: Direction,
    cap: usize,
) -> Result<SubsetAutomaton<'_>, StateLimitExceeded> {
    let (start, test) = match direction {
        Direction::Forward => (nfa.initial(), nfa.final_states()),
        Direction::Backward => (nfa.final_states(), nfa.initial()),
    };
    let symbols = nfa.alphabet().len();
    let mut index: HashMap<StateSet, usize> = HashMap::new();
    let mut states = Vec::new();
    let mut transition_map: Vec<Vec<usize>> = Vec::new();
    let mut queue = VecDeque::new();

    let mut discover = |subset: StateSet,
                        states: &mut Vec<StateSet>,
                        queue: &mut VecDeque<usize>|
     -> Result<usize, StateLimitExceeded> {
        match index.entry(subset) {
            Entry::Occupied(e) => Ok(*e.get()),
            Entry::Vacant(e) => {
                let id = states.len();
                if id >= cap {
                    return Err(StateLimitExceeded {
                        direction,
                        cap,
                        discovered: id + 1,
                    });
                }
                states.push(e.key().clone());
                e.insert(id);
                queue.push_back(id);
                Ok(id)
            }
        }
    };

    let entry = discover(start.clone(), &mut states, &mut queue)?;
    while let Some(s) = queue.pop_front() {
        let mut row = Vec::with_capacity(symbols);
        for a in 0..symbols {
            let next = match direction {
                Direction::Forward => nfa.step_forward_by_index(&states[s], a),
                Direction::Backward => nfa.step_backward_by_index(a, &states[s]),
            };
            row.push(discover(next, &mut states, &mut queue)?);
        }
        debug_assert_eq!(transition_map.len(), s);
        transition_map.push(row);
    }

    let marked = states
        .iter()
        .enumerate()
        .filter(|(_, s)| s.intersects(test))
        .map(|(i, _)| i)
        .collect();
    Ok(SubsetAutomaton {
        base: nfa,
        direction,
        states,
        transition_map,
        entry,
        marked,
    })
}
