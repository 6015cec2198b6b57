//! Shared independent oracles for the integration suites.
//!
//! Nothing here touches the library's counting or spectral code paths: walk
//! counts come from explicit DFS enumeration or big-integer adjacency
//! powers, so they can serve as ground truth for both.

#![allow(dead_code)]

use num_bigint::BigUint;
use num_traits::{One, Zero};

use fewpaths::graph::DirectedGraph;
use fewpaths::linalg::DenseMatrix;

pub type BigMatrix = Vec<Vec<BigUint>>;

pub fn big_identity(n: usize) -> BigMatrix {
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { BigUint::one() } else { BigUint::zero() })
                .collect()
        })
        .collect()
}

pub fn big_adjacency(g: &DirectedGraph) -> BigMatrix {
    let n = g.node_count();
    let mut a = vec![vec![BigUint::zero(); n]; n];
    for (u, v) in g.edges() {
        a[u][v] = BigUint::one();
    }
    a
}

pub fn big_matmul(a: &BigMatrix, b: &BigMatrix) -> BigMatrix {
    let n = a.len();
    let mut out = vec![vec![BigUint::zero(); n]; n];
    for i in 0..n {
        for k in 0..n {
            if a[i][k].is_zero() {
                continue;
            }
            for j in 0..n {
                if !b[k][j].is_zero() {
                    out[i][j] += &a[i][k] * &b[k][j];
                }
            }
        }
    }
    out
}

pub fn big_add(a: &BigMatrix, b: &BigMatrix) -> BigMatrix {
    a.iter()
        .zip(b)
        .map(|(ra, rb)| ra.iter().zip(rb).map(|(x, y)| x + y).collect())
        .collect()
}

/// Sum of adjacency powers `A^0 + ... + A^max_len`: the number of walks of
/// length at most `max_len` between each pair.
pub fn walk_count_matrix(g: &DirectedGraph, max_len: usize) -> BigMatrix {
    let a = big_adjacency(g);
    let mut sum = big_identity(g.node_count());
    let mut power = big_identity(g.node_count());
    for _ in 0..max_len {
        power = big_matmul(&power, &a);
        sum = big_add(&sum, &power);
    }
    sum
}

/// Expected layered count from `(i, 0)` to `(j, n)`: walks of length below
/// `n` plus the walks of length exactly `n` whose last edge is not a
/// self-loop (those coincide with a jump edge and collapse).
pub fn layered_count_reference(g: &DirectedGraph) -> BigMatrix {
    let n = g.node_count();
    let below = walk_count_matrix(g, n - 1);
    let a = big_adjacency(g);
    let mut a_no_loops = a.clone();
    for (i, row) in a_no_loops.iter_mut().enumerate() {
        row[i] = BigUint::zero();
    }
    let mut power = big_identity(n);
    for _ in 0..n.saturating_sub(1) {
        power = big_matmul(&power, &a);
    }
    let exact_n = big_matmul(&power, &a_no_loops);
    big_add(&below, &exact_n)
}

/// Walks from `s` to `t` of length at most `max_len`, by explicit DFS
/// enumeration. Exponential; only for small graphs.
pub fn brute_force_walks(g: &DirectedGraph, s: usize, t: usize, max_len: usize) -> u64 {
    fn dfs(adj: &[Vec<usize>], u: usize, t: usize, remaining: usize, acc: &mut u64) {
        if u == t {
            *acc += 1;
        }
        if remaining == 0 {
            return;
        }
        for &v in &adj[u] {
            dfs(adj, v, t, remaining - 1, acc);
        }
    }
    let mut acc = 0;
    dfs(&g.out_adjacency(), s, t, max_len, &mut acc);
    acc
}

pub fn big_to_f64(x: &BigUint) -> f64 {
    let mut acc = 0f64;
    for digit in x.to_u64_digits().iter().rev() {
        acc = acc * 1.8446744073709552e19 + *digit as f64;
    }
    acc
}

pub fn max_abs_diff(a: &DenseMatrix, b: &DenseMatrix) -> f64 {
    a.sub(b).max_norm()
}

/// All digraphs on `n` labelled nodes (self-loops included), enumerated by
/// edge bitmask. 2^(n^2) graphs; keep `n` at 4 or below.
pub fn all_digraphs(n: usize) -> impl Iterator<Item = DirectedGraph> {
    let cells = n * n;
    assert!(cells <= 16, "exhaustive enumeration is for tiny n");
    (0u32..(1 << cells)).map(move |mask| {
        let edges = (0..cells)
            .filter(|bit| mask & (1 << bit) != 0)
            .map(|bit| (bit / n, bit % n));
        DirectedGraph::from_edges(n, edges).expect("enumerated edges in range")
    })
}

/// Deterministic digraph from an edge bitmask, for proptest inputs. Bit
/// `u * n + v` turns edge `(u, v)` on; the mask wraps for `n * n > 64`.
pub fn digraph_from_mask(n: usize, mask: u64, allow_self_loops: bool) -> DirectedGraph {
    let edges = (0..n * n).filter_map(|bit| {
        let (u, v) = (bit / n, bit % n);
        if !allow_self_loops && u == v {
            return None;
        }
        (mask >> (bit % 64) & 1 == 1).then_some((u, v))
    });
    DirectedGraph::from_edges(n, edges).expect("mask edges in range")
}
