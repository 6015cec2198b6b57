//! Seeded graph families used for benchmarks and stress corpora.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::graph::DirectedGraph;

/// The abort-chain on `2 * half` nodes: a spine of even nodes
/// `0 -> 2 -> 4 -> ...`, each spine node also pointing at the odd sink next
/// to it, ending in `2*(half-1) -> 2*half - 1`. Every pairwise path count is
/// at most one, yet a uniform random walk from node 0 reaches the final sink
/// with probability only `2^-(half-1)`.
pub fn gen_chain_figure1(half: usize) -> DirectedGraph {
    assert!(half >= 1, "half must be positive");
    let mut edges = Vec::with_capacity(2 * half - 1);
    for i in 0..half {
        edges.push((2 * i, 2 * i + 1));
        if i + 1 < half {
            edges.push((2 * i, 2 * (i + 1)));
        }
    }
    DirectedGraph::from_edges(2 * half, edges).expect("chain indices in range")
}

/// A chain of `m` two-path diamonds on `2m + 1` nodes: joints sit at even
/// indices, and each stage offers a direct joint-to-joint edge or a detour
/// through the odd node between them. The source 0 therefore has exactly
/// `2^m` paths to the sink `2m`, which makes the family ill-conditioned far
/// faster than it grows.
pub fn gen_diamond_chain(m: usize) -> DirectedGraph {
    assert!(m >= 1, "m must be positive");
    let mut edges = Vec::with_capacity(3 * m);
    for stage in 0..m {
        let joint = 2 * stage;
        let mid = 2 * stage + 1;
        let next = 2 * stage + 2;
        edges.push((joint, mid));
        edges.push((mid, next));
        edges.push((joint, next));
    }
    DirectedGraph::from_edges(2 * m + 1, edges).expect("diamond indices in range")
}

/// Seeded random DAG: each forward pair `(u, v)` with `u < v` becomes an
/// edge independently with probability `density`. Deterministic in
/// `(n, density, seed)`; density 1 yields the transitive tournament.
pub fn gen_random_dag(n: usize, density: f64, seed: u64) -> DirectedGraph {
    assert!(n >= 1, "n must be positive");
    assert!((0.0..=1.0).contains(&density), "density must be in [0, 1]");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in (u + 1)..n {
            if rng.random::<f64>() < density {
                edges.push((u, v));
            }
        }
    }
    DirectedGraph::from_edges(n, edges).expect("dag indices in range")
}

/// Disjoint union with `g2`'s nodes shifted past `g1`'s. No cross edges, so
/// all cross-pair path counts are zero.
pub fn disjoint_union(g1: &DirectedGraph, g2: &DirectedGraph) -> DirectedGraph {
    let n1 = g1.node_count();
    let edges = g1
        .edges()
        .chain(g2.edges().map(|(u, v)| (u + n1, v + n1)));
    DirectedGraph::from_edges(n1 + g2.node_count(), edges).expect("shifted indices in range")
}
