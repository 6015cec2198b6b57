//! The counting Laplacian and related matrix constructions.

use crate::graph::DirectedGraph;
use crate::linalg::DenseMatrix;

/// 0/1 adjacency matrix of `g`.
pub fn adjacency_matrix(g: &DirectedGraph) -> DenseMatrix {
    let n = g.node_count();
    let mut a = DenseMatrix::zeros(n, n);
    for (u, v) in g.edges() {
        a.set(u, v, 1.0);
    }
    a
}

/// Counting Laplacian `L = I - A`. For an acyclic graph its inverse entries
/// are exactly the pairwise path counts.
pub fn counting_laplacian(g: &DirectedGraph) -> DenseMatrix {
    let n = g.node_count();
    let mut l = adjacency_matrix(g).scale(-1.0);
    for i in 0..n {
        let d = l.get(i, i);
        l.set(i, i, 1.0 + d);
    }
    l
}

/// Hermitian embedding `[[0, M^T], [M, 0]]` of a real square matrix. Its
/// eigenvalues are the plus/minus pairs of the singular values of `M`, and
/// truncated inversion of the embedding reproduces the truncated
/// pseudoinverse of `M` in the off-diagonal block.
pub fn hermitian_embedding(m: &DenseMatrix) -> DenseMatrix {
    assert!(m.is_square(), "embedding expects a square matrix");
    let n = m.rows();
    let mut h = DenseMatrix::zeros(2 * n, 2 * n);
    for i in 0..n {
        for j in 0..n {
            let x = m.get(i, j);
            h.set(j, n + i, x); // top-right block: M^T
            h.set(n + i, j, x); // bottom-left block: M
        }
    }
    h
}

/// Certified two-sided bracket for the spectral norm from the max-norm:
/// `max_norm(m) <= sigma_1(m) <= n * max_norm(m)`.
pub fn max_norm_bounds(m: &DenseMatrix) -> (f64, f64) {
    assert!(m.is_square(), "bounds stated for square matrices");
    let max = m.max_norm();
    (max, m.rows() as f64 * max)
}
