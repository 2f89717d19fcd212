//! Translations between unambiguous automata and graphs.
//!
//! [`extract_graph`] turns a UFA into a graph on its states in which every
//! forward-determinization state is a clique and every backward-determinization
//! state is a coclique. [`graph_to_ufa`] goes the other way, producing a UFA
//! whose determinizations contain every clique resp. coclique of the graph.
//! Composing the latter with [`extremal_split_graph`] gives automata on which
//! both determinizations are large ([`witness_ufa`], [`verify_tightness`]).

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use thiserror::Error;

use crate::automata::{
    backward_determinize, forward_determinize, is_unambiguous, reachable_pairs, Ambiguity, Nfa,
    StateLimitExceeded, Symbol,
};
use crate::bitset::VertexSet;
use crate::bounds;
use crate::graph::{enumerate_cliques, enumerate_cocliques, extremal_split_graph, Graph};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Tag {
    Clique,
    Coclique,
}

/// A letter of [`graph_to_ufa`]'s alphabet: a clique (`c{..}`) or a coclique
/// (`i{..}`) of the source graph.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CompositeSymbol {
    pub tag: Tag,
    pub set: VertexSet,
}

impl CompositeSymbol {
    pub fn clique(set: VertexSet) -> Self {
        CompositeSymbol {
            tag: Tag::Clique,
            set,
        }
    }

    pub fn coclique(set: VertexSet) -> Self {
        CompositeSymbol {
            tag: Tag::Coclique,
            set,
        }
    }

    pub fn to_symbol(&self) -> Symbol {
        Symbol::new(self.to_string()).expect("composite labels contain no whitespace")
    }
}

impl fmt::Display for CompositeSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let prefix = match self.tag {
            Tag::Clique => 'c',
            Tag::Coclique => 'i',
        };
        write!(f, "{prefix}{}", self.set)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("malformed composite symbol {0:?}")]
pub struct CompositeSymbolParseError(pub String);

impl FromStr for CompositeSymbol {
    type Err = CompositeSymbolParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = || CompositeSymbolParseError(s.to_owned());
        let tag = match s.as_bytes().first() {
            Some(b'c') => Tag::Clique,
            Some(b'i') => Tag::Coclique,
            _ => return Err(err()),
        };
        let body = s[1..]
            .strip_prefix('{')
            .and_then(|b| b.strip_suffix('}'))
            .ok_or_else(err)?;
        let mut members = Vec::new();
        if !body.is_empty() {
            for part in body.split(',') {
                // Reject signs, leading zeros and anything else non-canonical.
                if part.is_empty()
                    || !part.bytes().all(|b| b.is_ascii_digit())
                    || (part.len() > 1 && part.starts_with('0'))
                {
                    return Err(err());
                }
                members.push(part.parse::<usize>().map_err(|_| err())?);
            }
        }
        if members.windows(2).any(|w| w[0] >= w[1]) {
            return Err(err());
        }
        Ok(CompositeSymbol {
            tag,
            set: members.into_iter().collect(),
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExtractError {
    #[error("input automaton is ambiguous: {} has at least two accepting runs", crate::automata::format_word(.witness))]
    Ambiguous { witness: Vec<Symbol> },
}

/// The graph on the states of `ufa` with an edge `{q, q'}` (`q != q'`) whenever
/// some word leads from initial states to both `q` and `q'`.
pub fn extract_graph(ufa: &Nfa) -> Result<Graph, ExtractError> {
    if let Ambiguity::Ambiguous { witness } = is_unambiguous(ufa) {
        return Err(ExtractError::Ambiguous { witness });
    }
    let pairs = reachable_pairs(ufa);
    let edges = pairs.into_iter().filter(|(p, q)| p < q);
    Ok(Graph::from_edges(ufa.state_count(), edges).expect("pairs are in range and off-diagonal"))
}

/// The UFA on the vertices of `g` with `I = F = {0}`, one letter `c{X}` per
/// clique `X` (moving from 0 to every member of `X`) and one letter `i{Y}` per
/// coclique `Y` (moving from every member of `Y` to 0).
///
/// The empty graph yields the 0-state automaton over `{c{}, i{}}`.
pub fn graph_to_ufa(g: &Graph) -> Nfa {
    let cliques: Vec<VertexSet> = enumerate_cliques(g).collect();
    let cocliques = enumerate_cocliques(g);
    let mut alphabet = Vec::with_capacity(cliques.len() + cocliques.len());
    let mut transitions = Vec::new();
    let origin = 0;
    for x in cliques {
        let a = alphabet.len();
        transitions.extend(x.iter().map(|v| (origin, a, v)));
        alphabet.push(CompositeSymbol::clique(x).to_symbol());
    }
    for y in cocliques {
        let a = alphabet.len();
        transitions.extend(y.iter().map(|v| (v, a, origin)));
        alphabet.push(CompositeSymbol::coclique(y).to_symbol());
    }
    let ends = if g.vertex_count() == 0 {
        VertexSet::new()
    } else {
        VertexSet::singleton(origin)
    };
    Nfa::new(g.vertex_count(), alphabet, transitions, ends.clone(), ends)
        .expect("graph_to_ufa builds a valid automaton")
}

/// An `n`-state UFA whose determinizations both have at least
/// `½·√(n+1)·2^(n/2)` states.
pub fn witness_ufa(n: usize) -> Nfa {
    graph_to_ufa(&extremal_split_graph(n))
}

#[derive(Debug, Clone, PartialEq)]
pub struct TightnessReport {
    pub n: usize,
    pub k: usize,
    pub l: usize,
    pub alphabet_size: usize,
    /// `½·√(n+1)·2^(n/2)`, display only.
    pub lower: f64,
    /// `√(n+1)·2^(n/2)`, display only.
    pub upper: f64,
    pub holds_lower: bool,
    pub holds_upper: bool,
}

impl TightnessReport {
    pub fn holds(&self) -> bool {
        self.holds_lower && self.holds_upper
    }

    /// `(n+1)·2ⁿ/4`, the square of the lower bound, as an integer or `p/4`.
    pub fn lower_sq(&self) -> String {
        let sq = bounds::bound_sq(self.n);
        let four = BigUint::from(4u8);
        if (&sq % &four) == BigUint::from(0u8) {
            (sq / four).to_string()
        } else {
            format!("{sq}/4")
        }
    }

    pub fn upper_sq(&self) -> BigUint {
        bounds::bound_sq(self.n)
    }
}

impl fmt::Display for TightnessReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "n={} k={} l={} lower_sq={} upper_sq={} holds={}",
            self.n,
            self.k,
            self.l,
            self.lower_sq(),
            self.upper_sq(),
            if self.holds() { "yes" } else { "no" }
        )
    }
}

/// Builds [`witness_ufa`]`(n)`, determinizes it both ways and checks both sizes
/// against the lower bound and the smaller one against the upper bound.
pub fn verify_tightness(n: usize, cap: usize) -> Result<TightnessReport, StateLimitExceeded> {
    let ufa = witness_ufa(n);
    let k = forward_determinize(&ufa, cap)?.len();
    let l = backward_determinize(&ufa, cap)?.len();
    Ok(TightnessReport {
        n,
        k,
        l,
        alphabet_size: ufa.alphabet().len(),
        lower: bounds::lower_bound(n),
        upper: bounds::bound(n),
        holds_lower: bounds::at_least_half_bound(k, n) && bounds::at_least_half_bound(l, n),
        holds_upper: bounds::square_at_most(k.min(l), n),
    })
}
