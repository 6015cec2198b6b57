//! Deterministic dense SVD via one-sided Jacobi rotations.
//!
//! The sweep order is fixed (cyclic by rows of the upper triangle), every
//! operation is sequential, and ties in the final ordering break by column
//! index, so identical input bits produce identical output bits. Singular
//! vectors are sign-normalized: the first component of each right vector
//! larger than 1e-12 in magnitude is made positive.

use crate::error::{Error, Result};
use crate::linalg::DenseMatrix;

const MAX_SWEEPS: usize = 64;

/// Full SVD `m = U * diag(sigma) * V^T` with `sigma` nonincreasing and
/// orthogonal square factors.
#[derive(Debug, Clone)]
pub struct SvdDecomposition {
    pub sigma: Vec<f64>,
    pub u: DenseMatrix,
    pub v: DenseMatrix,
}

impl SvdDecomposition {
    pub fn n(&self) -> usize {
        self.sigma.len()
    }

    pub fn sigma_max(&self) -> f64 {
        self.sigma.first().copied().unwrap_or(0.0)
    }

    pub fn sigma_min(&self) -> f64 {
        self.sigma.last().copied().unwrap_or(0.0)
    }

    /// Reconstructs `U * diag(sigma) * V^T` (test and diagnostic use).
    pub fn reconstruct(&self) -> DenseMatrix {
        let n = self.n();
        let mut out = DenseMatrix::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                let mut acc = 0.0;
                for k in 0..n {
                    acc += self.u.get(i, k) * self.sigma[k] * self.v.get(j, k);
                }
                out.set(i, j, acc);
            }
        }
        out
    }
}

fn rotate_columns(cols: &mut [Vec<f64>], p: usize, q: usize, c: f64, s: f64) {
    debug_assert!(p < q);
    let (head, tail) = cols.split_at_mut(q);
    let cp = &mut head[p];
    let cq = &mut tail[0];
    for (xp, xq) in cp.iter_mut().zip(cq.iter_mut()) {
        let a = *xp;
        let b = *xq;
        *xp = c * a - s * b;
        *xq = s * a + c * b;
    }
}

/// One-sided Jacobi SVD of a square matrix.
///
/// Fails with `NumericalFailure` if the rotations have not converged after
/// the fixed sweep budget, which signals a pathological input.
pub fn svd(m: &DenseMatrix) -> Result<SvdDecomposition> {
    if !m.is_square() {
        return Err(Error::NotSquare {
            rows: m.rows(),
            cols: m.cols(),
        });
    }
    let n = m.rows();
    let mut w: Vec<Vec<f64>> = (0..n).map(|j| m.column(j)).collect();
    let mut v: Vec<Vec<f64>> = (0..n)
        .map(|j| {
            let mut e = vec![0.0; n];
            e[j] = 1.0;
            e
        })
        .collect();

    // Relative orthogonality target; dot products of length-n columns cannot
    // be resolved much below sqrt(n) * eps of their norms.
    let tol = 8.0 * (n as f64).sqrt() * f64::EPSILON;
    let mut converged = n < 2;
    for _ in 0..MAX_SWEEPS {
        let mut rotated = false;
        for p in 0..n - 1 {
            for q in (p + 1)..n {
                let mut alpha = 0.0;
                let mut beta = 0.0;
                let mut gamma = 0.0;
                for (a, b) in w[p].iter().zip(w[q].iter()) {
                    alpha += a * a;
                    beta += b * b;
                    gamma += a * b;
                }
                if gamma.abs() <= tol * (alpha * beta).sqrt() {
                    continue;
                }
                rotated = true;
                let zeta = (beta - alpha) / (2.0 * gamma);
                let t = zeta.signum() / (zeta.abs() + (1.0 + zeta * zeta).sqrt());
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = c * t;
                rotate_columns(&mut w, p, q, c, s);
                rotate_columns(&mut v, p, q, c, s);
            }
        }
        if !rotated {
            converged = true;
            break;
        }
    }
    if !converged {
        return Err(Error::NumericalFailure { sweeps: MAX_SWEEPS });
    }

    // Singular values are the column norms; sort nonincreasing, ties by
    // original column index.
    let norms: Vec<f64> = w
        .iter()
        .map(|col| col.iter().map(|x| x * x).sum::<f64>().sqrt())
        .collect();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| {
        norms[b]
            .partial_cmp(&norms[a])
            .expect("norms are finite")
            .then(a.cmp(&b))
    });

    let mut sigma = Vec::with_capacity(n);
    let mut u_cols: Vec<Vec<f64>> = Vec::with_capacity(n);
    let mut v_cols: Vec<Vec<f64>> = Vec::with_capacity(n);
    for &j in &order {
        sigma.push(norms[j]);
        let u_col = if norms[j] > 0.0 {
            w[j].iter().map(|x| x / norms[j]).collect()
        } else {
            Vec::new() // completed below
        };
        u_cols.push(u_col);
        v_cols.push(v[j].clone());
    }

    // Columns with zero norm carry no direction; complete U to an orthonormal
    // basis from standard vectors.
    for j in 0..n {
        if !u_cols[j].is_empty() {
            continue;
        }
        let mut completed = None;
        for k in 0..n {
            let mut cand = vec![0.0; n];
            cand[k] = 1.0;
            for col in u_cols.iter().filter(|c| !c.is_empty()) {
                let dot: f64 = col.iter().zip(&cand).map(|(a, b)| a * b).sum();
                for (c, a) in cand.iter_mut().zip(col.iter()) {
                    *c -= dot * a;
                }
            }
            let norm: f64 = cand.iter().map(|x| x * x).sum::<f64>().sqrt();
            if norm > 0.5 {
                for x in cand.iter_mut() {
                    *x /= norm;
                }
                completed = Some(cand);
                break;
            }
        }
        u_cols[j] = completed.expect("orthonormal completion exists");
    }

    // Sign convention on the right vectors.
    for j in 0..n {
        let lead = v_cols[j].iter().find(|x| x.abs() > 1e-12);
        if let Some(&lead) = lead {
            if lead < 0.0 {
                for x in v_cols[j].iter_mut() {
                    *x = -*x;
                }
                for x in u_cols[j].iter_mut() {
                    *x = -*x;
                }
            }
        }
    }

    Ok(SvdDecomposition {
        sigma,
        u: DenseMatrix::from_columns(&u_cols),
        v: DenseMatrix::from_columns(&v_cols),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn max_abs_diff(a: &DenseMatrix, b: &DenseMatrix) -> f64 {
        a.sub(b).max_norm()
    }

    fn orthogonality_defect(m: &DenseMatrix) -> f64 {
        max_abs_diff(&m.transpose().matmul(m), &DenseMatrix::identity(m.cols()))
    }

    #[test]
    fn identity_has_unit_spectrum() {
        let decomp = svd(&DenseMatrix::identity(3)).unwrap();
        assert_eq!(decomp.sigma, vec![1.0, 1.0, 1.0]);
        assert!(orthogonality_defect(&decomp.u) <= 1e-12);
    }

    #[test]
    fn single_edge_laplacian_has_golden_ratio_spectrum() {
        // [[1, -1], [0, 1]]: the squared singular values solve
        // x^2 - 3x + 1 = 0, so sigma = ((1 + sqrt 5)/2, (sqrt 5 - 1)/2).
        let m = DenseMatrix::from_rows(vec![vec![1.0, -1.0], vec![0.0, 1.0]]);
        let decomp = svd(&m).unwrap();
        let phi = (1.0 + 5f64.sqrt()) / 2.0;
        assert!((decomp.sigma[0] - phi).abs() <= 1e-12);
        assert!((decomp.sigma[1] - (phi - 1.0)).abs() <= 1e-12);
    }

    #[test]
    fn zero_matrix_decomposes_cleanly() {
        let decomp = svd(&DenseMatrix::zeros(3, 3)).unwrap();
        assert_eq!(decomp.sigma, vec![0.0, 0.0, 0.0]);
        assert!(orthogonality_defect(&decomp.u) <= 1e-12);
        assert!(orthogonality_defect(&decomp.v) <= 1e-12);
    }

    #[test]
    fn rank_deficient_still_orthogonal() {
        let m = DenseMatrix::from_rows(vec![vec![1.0, 1.0], vec![0.0, 0.0]]);
        let decomp = svd(&m).unwrap();
        assert!((decomp.sigma[0] - 2f64.sqrt()).abs() <= 1e-12);
        assert!(decomp.sigma[1].abs() <= 1e-12);
        assert!(orthogonality_defect(&decomp.u) <= 1e-10);
        assert!(max_abs_diff(&decomp.reconstruct(), &m) <= 1e-10);
    }

    #[test]
    fn diamond_chain_inverse_spectral_norm_grows_like_the_count() {
        // 2^10 source-to-sink paths make the largest inverse entry 1024, so
        // 1 / sigma_min = ||L^-1||_2 is at least 1024, and in particular at
        // least 2^10 / n.
        use crate::graph::gen_diamond_chain;
        use crate::linalg::counting_laplacian;
        let g = gen_diamond_chain(10);
        let n = g.node_count() as f64;
        let sigma = svd(&counting_laplacian(&g)).unwrap().sigma;
        let inv_sigma_min = 1.0 / sigma.last().unwrap();
        assert!(inv_sigma_min >= 1024.0 * (1.0 - 1e-9), "{inv_sigma_min}");
        assert!(inv_sigma_min >= f64::from(1 << 10) / n);
    }

    #[test]
    fn rejects_rectangular_input() {
        assert!(matches!(
            svd(&DenseMatrix::zeros(2, 3)),
            Err(Error::NotSquare { .. })
        ));
    }

    #[test]
    fn bitwise_deterministic() {
        let m = DenseMatrix::from_rows(vec![
            vec![0.3, -1.2, 0.0, 2.0],
            vec![1.0, 0.5, -0.25, 0.125],
            vec![0.0, 3.0, -0.7, 0.9],
            vec![-2.0, 0.0, 1.5, 0.1],
        ]);
        let a = svd(&m).unwrap();
        let b = svd(&m).unwrap();
        assert_eq!(a.sigma, b.sigma);
        assert_eq!(a.u, b.u);
        assert_eq!(a.v, b.v);
    }
}
