//! Layered acyclic expansion of a directed graph.

use crate::graph::DirectedGraph;

/// Index of the copy of node `i` in layer `l`, for a base graph on `n` nodes.
pub fn layered_node(i: usize, l: usize, n: usize) -> usize {
    debug_assert!(i < n && l <= n);
    i + l * n
}

/// Layered expansion on `n * (n + 1)` nodes, layers `0..=n`.
///
/// Step edges `(i, l) -> (j, l + 1)` replay each original edge in every
/// layer, and jump edges `(i, l) -> (i, n)` collect walks of every length in
/// the final layer. The result is acyclic for every input, and for each pair
/// the count from `(i, 0)` to `(j, n)` sums the walks from `i` to `j` of
/// length at most `n`: a walk of length below `n` arrives through its jump
/// edge, a walk of length exactly `n` arrives through its last step edge.
/// A cycle through `i` therefore shows up as a count of at least two from
/// `(i, 0)` to `(i, n)` whenever `n >= 2`.
///
/// One boundary case: for a self-loop the layer-`n-1` step edge coincides
/// with the jump edge and the two collapse (the edge set is simple), so in
/// the single-node graph a self-loop is not visible in the layered counts.
pub fn layer_graph(g: &DirectedGraph) -> DirectedGraph {
    let n = g.node_count();
    let mut edges = Vec::with_capacity(g.edge_count() * n + n * n);
    for (u, v) in g.edges() {
        for l in 0..n {
            edges.push((layered_node(u, l, n), layered_node(v, l + 1, n)));
        }
    }
    for i in 0..n {
        for l in 0..n {
            edges.push((layered_node(i, l, n), layered_node(i, n, n)));
        }
    }
    DirectedGraph::from_edges(n * (n + 1), edges).expect("layered indices are in range")
}
