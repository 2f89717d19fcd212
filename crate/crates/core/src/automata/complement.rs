use std::fmt;

use num_bigint::BigUint;
use thiserror::Error;

use super::{
    backward_determinize, format_word, forward_determinize, is_unambiguous, Ambiguity, Direction,
    Nfa, StateLimitExceeded, Symbol,
};
use crate::bounds;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ComplementError {
    #[error("input automaton is ambiguous: {} has at least two accepting runs", format_word(.witness))]
    Ambiguous { witness: Vec<Symbol> },
    #[error("state limit exceeded on both sides (forward: {forward}; backward: {backward})")]
    CapExceeded {
        forward: StateLimitExceeded,
        backward: StateLimitExceeded,
    },
}

/// Sizes of both determinizations and which one the complement was built from.
///
/// `k` and `l` are `None` when that side hit the state cap.
#[derive(Debug, Clone, PartialEq)]
pub struct BoundReport {
    pub n: usize,
    pub k: Option<usize>,
    pub l: Option<usize>,
    /// `√(n+1)·2^(n/2)`, for display only; checks use [`BoundReport::bound_sq`].
    pub bound: f64,
    pub chosen: Direction,
    pub result_states: usize,
}

impl BoundReport {
    /// `(n+1)·2ⁿ`, the square of the bound.
    pub fn bound_sq(&self) -> BigUint {
        bounds::bound_sq(self.n)
    }

    /// Exact check `result_states² ≤ (n+1)·2ⁿ`.
    pub fn within_bound(&self) -> bool {
        bounds::square_at_most(self.result_states, self.n)
    }
}

impl fmt::Display for BoundReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let side = |v: Option<usize>| v.map_or_else(|| "over-cap".to_owned(), |v| v.to_string());
        write!(
            f,
            "n={} k={} l={} chosen={} states={} bound_sq={}",
            self.n,
            side(self.k),
            side(self.l),
            self.chosen.short_name(),
            self.result_states,
            self.bound_sq()
        )
    }
}

/// Complements an unambiguous automaton into an unambiguous automaton by the
/// smaller of the two complemented determinizations (ties go forward).
///
/// If only one side exceeds `cap`, the other is used.
pub fn complement_ufa(nfa: &Nfa, cap: usize) -> Result<(Nfa, BoundReport), ComplementError> {
    if let Ambiguity::Ambiguous { witness } = is_unambiguous(nfa) {
        return Err(ComplementError::Ambiguous { witness });
    }
    let fwd = forward_determinize(nfa, cap);
    let bwd = backward_determinize(nfa, cap);
    let k = fwd.as_ref().ok().map(|d| d.len());
    let l = bwd.as_ref().ok().map(|d| d.len());
    let chosen = match (&fwd, &bwd) {
        (Ok(f), Ok(b)) if f.len() <= b.len() => f,
        (Ok(_), Ok(b)) => b,
        (Ok(f), Err(_)) => f,
        (Err(_), Ok(b)) => b,
        (Err(fe), Err(be)) => {
            return Err(ComplementError::CapExceeded {
                forward: fe.clone(),
                backward: be.clone(),
            })
        }
    };
    let report = BoundReport {
        n: nfa.state_count(),
        k,
        l,
        bound: bounds::bound(nfa.state_count()),
        chosen: chosen.direction(),
        result_states: chosen.len(),
    };
    Ok((chosen.to_complement_nfa(), report))
}
