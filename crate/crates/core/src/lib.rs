//! Complementation of unambiguous finite automata through forward and
//! backward subset construction, together with the graph side of the story:
//! clique/coclique counting, the clique-coclique product bound, and the
//! reductions between automata and graphs.
//!
//! ```
//! use ufa_core::automata::{complement_ufa, Nfa, DEFAULT_CAP};
//!
//! // a⁺ over {a}
//! let nfa = Nfa::from_labels(2, &["a"], &[(0, "a", 1), (1, "a", 1)], &[0], &[1]).unwrap();
//! let (complement, report) = complement_ufa(&nfa, DEFAULT_CAP).unwrap();
//! assert!(complement.accepts::<&str>(&[]).unwrap());
//! assert!(!complement.accepts(&["a"]).unwrap());
//! assert!(report.within_bound());
//! ```

pub mod automata;
pub mod bitset;
pub mod bounds;
pub mod bridge;
pub mod format;
pub mod graph;

pub use automata::{Nfa, Symbol};
pub use bitset::{BitSet, StateSet, VertexSet};
pub use graph::Graph;
