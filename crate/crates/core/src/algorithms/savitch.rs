//! Midpoint-doubling reachability baseline.

use serde::{Deserialize, Serialize};

use crate::graph::DirectedGraph;

/// Reachability answer plus the number of halving levels used, the space
/// proxy of the midpoint-doubling scheme.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SavitchRun {
    pub reachable: bool,
    pub recursion_depth: usize,
}

/// Decides whether `t` is reachable from `s` by recursive midpoint
/// doubling: level `d` asks for a path of length at most `2^d` through some
/// midpoint, starting from `d = ceil(log2 n)`. Subproblems are memoized so
/// the desk-scale runtime stays polynomial; the recursion shape (and the
/// reported depth) is the classic one.
pub fn savitch_reachable(g: &DirectedGraph, s: usize, t: usize) -> SavitchRun {
    let n = g.node_count();
    assert!(s < n && t < n, "s and t must be nodes of g");
    let depth = n.next_power_of_two().trailing_zeros() as usize;

    let mut edge = vec![false; n * n];
    for (u, v) in g.edges() {
        edge[u * n + v] = true;
    }
    // memo[d][u][v]: Some(answer) once level-d reachability of (u, v) is known.
    let mut memo = vec![None::<bool>; (depth + 1) * n * n];

    fn go(
        u: usize,
        v: usize,
        d: usize,
        n: usize,
        edge: &[bool],
        memo: &mut [Option<bool>],
    ) -> bool {
        if u == v {
            return true;
        }
        if d == 0 {
            return edge[u * n + v];
        }
        let key = (d * n + u) * n + v;
        if let Some(answer) = memo[key] {
            return answer;
        }
        let mut answer = false;
        for mid in 0..n {
            if go(u, mid, d - 1, n, edge, memo) && go(mid, v, d - 1, n, edge, memo) {
                answer = true;
                break;
            }
        }
        memo[key] = Some(answer);
        answer
    }

    SavitchRun {
        reachable: go(s, t, depth, n, &edge, &mut memo),
        recursion_depth: depth,
    }
}
