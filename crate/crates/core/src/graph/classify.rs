//! Unambiguity classification against the exact oracle.

use serde::{Deserialize, Serialize};

use crate::graph::{count_paths_oracle, DirectedGraph, PathCount};

/// A pair whose count breaks a bound, together with the offending count.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Witness {
    pub i: usize,
    pub j: usize,
    pub count: PathCount,
}

/// Outcome of testing the three unambiguity predicates at bound `k`.
/// The predicates form a chain: strongly unambiguous implies
/// reach-unambiguous from `s`, which implies unambiguous for `(s, t)`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct UnambiguityReport {
    pub k: u64,
    pub s: usize,
    pub t: usize,
    pub unambiguous_st: bool,
    pub st_witness: Option<Witness>,
    pub reach_unambiguous_s: bool,
    pub reach_witness: Option<Witness>,
    pub strongly_unambiguous: bool,
    pub strong_witness: Option<Witness>,
}

/// Classifies `g` at bound `k` with respect to `s` and `t`. Counts come from
/// the oracle capped at `k + 1`, so any infinite or overflowing count
/// falsifies the corresponding predicate and is returned as its witness.
pub fn classify(g: &DirectedGraph, s: usize, t: usize, k: u64) -> UnambiguityReport {
    let n = g.node_count();
    assert!(s < n && t < n, "s and t must be nodes of g");
    assert!(k >= 1, "k must be positive");
    let counts = count_paths_oracle(g, k + 1);

    let witness_for = |i: usize, j: usize| -> Option<Witness> {
        let count = counts.get(i, j);
        (!count.is_at_most(k)).then(|| Witness {
            i,
            j,
            count: count.clone(),
        })
    };

    let st_witness = witness_for(s, t);
    let reach_witness = (0..n).find_map(|j| witness_for(s, j));
    let strong_witness = counts
        .first_violation(k)
        .and_then(|(i, j)| witness_for(i, j));

    UnambiguityReport {
        k,
        s,
        t,
        unambiguous_st: st_witness.is_none(),
        st_witness,
        reach_unambiguous_s: reach_witness.is_none(),
        reach_witness,
        strongly_unambiguous: strong_witness.is_none(),
        strong_witness,
    }
}
