//! Nondeterministic finite automata without ε-moves.
//!
//! An [`Nfa`] has states `0..state_count`, an ordered alphabet of [`Symbol`]s,
//! a transition relation and sets of initial and final states. Symbols are
//! addressed either by label (the public, checked API) or by their index in
//! the alphabet (the `*_by_index` helpers used in hot loops).

mod ambiguity;
mod complement;
mod determinize;
mod equivalence;

pub use ambiguity::{is_unambiguous, reachable_pairs, Ambiguity};
pub use complement::{complement_ufa, BoundReport, ComplementError};
pub use determinize::{
    backward_determinize, forward_determinize, Direction, StateLimitExceeded, SubsetAutomaton,
};
pub use equivalence::{equivalent, EquivalenceError};

use std::borrow::Borrow;
use std::collections::{BTreeSet, HashMap};
use std::fmt;

use num_bigint::BigUint;
use thiserror::Error;

use crate::bitset::StateSet;

/// Default limit on discovered subsets during determinization.
pub const DEFAULT_CAP: usize = 1 << 20;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AutomatonError {
    #[error("symbol not in alphabet: {0}")]
    UnknownSymbol(String),
    #[error("invalid symbol label {0:?}: labels are nonempty and contain no whitespace")]
    InvalidSymbol(String),
    #[error("duplicate symbol in alphabet: {0}")]
    DuplicateSymbol(String),
    #[error("state {state} out of range for an automaton with {state_count} states")]
    StateOutOfRange { state: usize, state_count: usize },
    #[error("symbol index {index} out of range for an alphabet of {len} symbols")]
    SymbolIndexOutOfRange { index: usize, len: usize },
}

/// An alphabet letter: a nonempty whitespace-free label.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Symbol(String);

impl Symbol {
    pub fn new(label: impl Into<String>) -> Result<Self, AutomatonError> {
        let label = label.into();
        if label.is_empty() || label.chars().any(char::is_whitespace) {
            return Err(AutomatonError::InvalidSymbol(label));
        }
        Ok(Symbol(label))
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl AsRef<str> for Symbol {
    fn as_ref(&self) -> &str {
        &self.0
    }
}

impl Borrow<str> for Symbol {
    fn borrow(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl fmt::Debug for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

/// Renders a word as space-separated letters in brackets; `[]` is the empty word.
pub fn format_word<S: AsRef<str>>(word: &[S]) -> String {
    let letters: Vec<&str> = word.iter().map(AsRef::as_ref).collect();
    format!("[{}]", letters.join(" "))
}

#[derive(Clone)]
pub struct Nfa {
    state_count: usize,
    alphabet: Vec<Symbol>,
    symbol_index: HashMap<Symbol, usize>,
    /// `(source, symbol index, target)`, sorted.
    transitions: BTreeSet<(usize, usize, usize)>,
    initial: StateSet,
    final_states: StateSet,
    // [symbol][state] -> successors / predecessors
    post: Vec<Vec<StateSet>>,
    pre: Vec<Vec<StateSet>>,
}

impl Nfa {
    /// Builds an automaton from transitions given by symbol index.
    pub fn new(
        state_count: usize,
        alphabet: Vec<Symbol>,
        transitions: impl IntoIterator<Item = (usize, usize, usize)>,
        initial: StateSet,
        final_states: StateSet,
    ) -> Result<Self, AutomatonError> {
        let mut symbol_index = HashMap::with_capacity(alphabet.len());
        for (i, sym) in alphabet.iter().enumerate() {
            if symbol_index.insert(sym.clone(), i).is_some() {
                return Err(AutomatonError::DuplicateSymbol(sym.0.clone()));
            }
        }
        let check_state = |state: usize| {
            if state < state_count {
                Ok(())
            } else {
                Err(AutomatonError::StateOutOfRange { state, state_count })
            }
        };
        for q in initial.iter().chain(final_states.iter()) {
            check_state(q)?;
        }
        let mut post = vec![vec![StateSet::new(); state_count]; alphabet.len()];
        let mut pre = post.clone();
        let mut set = BTreeSet::new();
        for (src, a, dst) in transitions {
            check_state(src)?;
            check_state(dst)?;
            if a >= alphabet.len() {
                return Err(AutomatonError::SymbolIndexOutOfRange {
                    index: a,
                    len: alphabet.len(),
                });
            }
            if set.insert((src, a, dst)) {
                post[a][src].insert(dst);
                pre[a][dst].insert(src);
            }
        }
        Ok(Nfa {
            state_count,
            alphabet,
            symbol_index,
            transitions: set,
            initial,
            final_states,
            post,
            pre,
        })
    }

    /// Convenience constructor taking labels everywhere.
    pub fn from_labels<S: AsRef<str>>(
        state_count: usize,
        alphabet: &[S],
        transitions: &[(usize, S, usize)],
        initial: &[usize],
        final_states: &[usize],
    ) -> Result<Self, AutomatonError> {
        let alphabet = alphabet
            .iter()
            .map(|s| Symbol::new(s.as_ref()))
            .collect::<Result<Vec<_>, _>>()?;
        let index: HashMap<&str, usize> = alphabet
            .iter()
            .enumerate()
            .map(|(i, s)| (s.as_str(), i))
            .collect();
        let transitions = transitions
            .iter()
            .map(|(p, a, q)| {
                index
                    .get(a.as_ref())
                    .map(|&i| (*p, i, *q))
                    .ok_or_else(|| AutomatonError::UnknownSymbol(a.as_ref().to_owned()))
            })
            .collect::<Result<Vec<_>, _>>()?;
        Nfa::new(
            state_count,
            alphabet,
            transitions,
            initial.iter().copied().collect(),
            final_states.iter().copied().collect(),
        )
    }

    pub fn state_count(&self) -> usize {
        self.state_count
    }

    pub fn alphabet(&self) -> &[Symbol] {
        &self.alphabet
    }

    pub fn transitions(&self) -> impl Iterator<Item = (usize, usize, usize)> + '_ {
        self.transitions.iter().copied()
    }

    pub fn transition_count(&self) -> usize {
        self.transitions.len()
    }

    pub fn initial(&self) -> &StateSet {
        &self.initial
    }

    pub fn final_states(&self) -> &StateSet {
        &self.final_states
    }

    pub fn all_states(&self) -> StateSet {
        StateSet::full(self.state_count)
    }

    pub fn symbol_index(&self, label: &str) -> Result<usize, AutomatonError> {
        self.symbol_index
            .get(label)
            .copied()
            .ok_or_else(|| AutomatonError::UnknownSymbol(label.to_owned()))
    }

    pub fn encode_word<S: AsRef<str>>(&self, word: &[S]) -> Result<Vec<usize>, AutomatonError> {
        word.iter().map(|a| self.symbol_index(a.as_ref())).collect()
    }

    pub fn decode_word(&self, word: &[usize]) -> Vec<Symbol> {
        word.iter().map(|&a| self.alphabet[a].clone()).collect()
    }

    /// `{r | (q, a, r) ∈ δ for some q ∈ s}`.
    pub fn step_forward(&self, s: &StateSet, a: &str) -> Result<StateSet, AutomatonError> {
        Ok(self.step_forward_by_index(s, self.symbol_index(a)?))
    }

    /// `{r | (r, a, q) ∈ δ for some q ∈ s}`.
    pub fn step_backward(&self, a: &str, s: &StateSet) -> Result<StateSet, AutomatonError> {
        Ok(self.step_backward_by_index(self.symbol_index(a)?, s))
    }

    pub fn reach_forward<S: AsRef<str>>(
        &self,
        s: &StateSet,
        word: &[S],
    ) -> Result<StateSet, AutomatonError> {
        Ok(self.reach_forward_by_index(s, &self.encode_word(word)?))
    }

    /// The set of states from which `word` leads into `s`.
    pub fn reach_backward<S: AsRef<str>>(
        &self,
        word: &[S],
        s: &StateSet,
    ) -> Result<StateSet, AutomatonError> {
        Ok(self.reach_backward_by_index(&self.encode_word(word)?, s))
    }

    pub fn count_accepting_runs<S: AsRef<str>>(
        &self,
        word: &[S],
    ) -> Result<BigUint, AutomatonError> {
        Ok(self.count_accepting_runs_by_index(&self.encode_word(word)?))
    }

    pub fn accepts<S: AsRef<str>>(&self, word: &[S]) -> Result<bool, AutomatonError> {
        Ok(self.accepts_by_index(&self.encode_word(word)?))
    }

    pub fn step_forward_by_index(&self, s: &StateSet, a: usize) -> StateSet {
        let table = &self.post[a];
        let mut out = StateSet::new();
        for q in s {
            out.union_with(&table[q]);
        }
        out
    }

    pub fn step_backward_by_index(&self, a: usize, s: &StateSet) -> StateSet {
        let table = &self.pre[a];
        let mut out = StateSet::new();
        for q in s {
            out.union_with(&table[q]);
        }
        out
    }

    pub fn reach_forward_by_index(&self, s: &StateSet, word: &[usize]) -> StateSet {
        word.iter()
            .fold(s.clone(), |acc, &a| self.step_forward_by_index(&acc, a))
    }

    pub fn reach_backward_by_index(&self, word: &[usize], s: &StateSet) -> StateSet {
        word.iter()
            .rev()
            .fold(s.clone(), |acc, &a| self.step_backward_by_index(a, &acc))
    }

    pub fn accepts_by_index(&self, word: &[usize]) -> bool {
        self.reach_forward_by_index(&self.initial, word)
            .intersects(&self.final_states)
    }

    /// Successors of a single state.
    pub fn successors(&self, q: usize, a: usize) -> &StateSet {
        &self.post[a][q]
    }

    /// Predecessors of a single state.
    pub fn predecessors(&self, q: usize, a: usize) -> &StateSet {
        &self.pre[a][q]
    }

    /// Exact number of accepting runs on `word`, by dynamic programming over
    /// positions with per-state run counts.
    pub fn count_accepting_runs_by_index(&self, word: &[usize]) -> BigUint {
        match self.count_runs_u128(word) {
            Some(c) => BigUint::from(c),
            None => self.count_runs_big(word),
        }
    }

    fn count_runs_u128(&self, word: &[usize]) -> Option<u128> {
        let mut counts = vec![0u128; self.state_count];
        for q in &self.initial {
            counts[q] = 1;
        }
        for &a in word {
            let mut next = vec![0u128; self.state_count];
            for (q, &c) in counts.iter().enumerate() {
                if c == 0 {
                    continue;
                }
                for r in &self.post[a][q] {
                    next[r] = next[r].checked_add(c)?;
                }
            }
            counts = next;
        }
        self.final_states
            .iter()
            .try_fold(0u128, |acc, f| acc.checked_add(counts[f]))
    }

    fn count_runs_big(&self, word: &[usize]) -> BigUint {
        let zero = BigUint::from(0u8);
        let mut counts = vec![zero.clone(); self.state_count];
        for q in &self.initial {
            counts[q] = BigUint::from(1u8);
        }
        for &a in word {
            let mut next = vec![zero.clone(); self.state_count];
            for (q, c) in counts.iter().enumerate() {
                for r in &self.post[a][q] {
                    next[r] += c;
                }
            }
            counts = next;
        }
        self.final_states.iter().map(|f| &counts[f]).sum()
    }
}

impl PartialEq for Nfa {
    fn eq(&self, other: &Self) -> bool {
        self.state_count == other.state_count
            && self.alphabet == other.alphabet
            && self.transitions == other.transitions
            && self.initial == other.initial
            && self.final_states == other.final_states
    }
}

impl Eq for Nfa {}

impl fmt::Debug for Nfa {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let transitions: Vec<String> = self
            .transitions
            .iter()
            .map(|&(p, a, q)| format!("{p}-{}->{q}", self.alphabet[a]))
            .collect();
        f.debug_struct("Nfa")
            .field("state_count", &self.state_count)
            .field("alphabet", &self.alphabet)
            .field("transitions", &transitions)
            .field("initial", &self.initial)
            .field("final", &self.final_states)
            .finish()
    }
}
