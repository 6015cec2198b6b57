//! Symmetric eigendecomposition via cyclic two-sided Jacobi.
//!
//! Kept deliberately separate from the one-sided SVD so the Hermitian
//! embedding identities can be checked through an independent code path.

use crate::error::{Error, Result};
use crate::linalg::DenseMatrix;

const MAX_SWEEPS: usize = 64;

/// Eigendecomposition `m = Q * diag(values) * Q^T` of a symmetric matrix,
/// eigenvalues sorted nonincreasing.
#[derive(Debug, Clone)]
pub struct SymmetricEigen {
    pub values: Vec<f64>,
    /// Orthonormal eigenvectors as columns, aligned with `values`.
    pub vectors: DenseMatrix,
}

/// Jacobi eigendecomposition. The input must be symmetric up to 1e-10
/// relative asymmetry.
pub fn symmetric_eigen(m: &DenseMatrix) -> Result<SymmetricEigen> {
    if !m.is_square() {
        return Err(Error::NotSquare {
            rows: m.rows(),
            cols: m.cols(),
        });
    }
    let n = m.rows();
    let scale = m.max_norm().max(1.0);
    let mut asymmetry = 0f64;
    for i in 0..n {
        for j in (i + 1)..n {
            asymmetry = asymmetry.max((m.get(i, j) - m.get(j, i)).abs());
        }
    }
    if asymmetry > 1e-10 * scale {
        return Err(Error::NotSymmetric { asymmetry });
    }

    let mut a = m.clone();
    let mut q: Vec<Vec<f64>> = (0..n)
        .map(|j| {
            let mut e = vec![0.0; n];
            e[j] = 1.0;
            e
        })
        .collect();

    let tol = 8.0 * (n as f64).sqrt() * f64::EPSILON;
    let mut converged = n < 2;
    for _ in 0..MAX_SWEEPS {
        let mut rotated = false;
        for p in 0..n - 1 {
            for qi in (p + 1)..n {
                let apq = a.get(p, qi);
                let app = a.get(p, p);
                let aqq = a.get(qi, qi);
                // Relative threshold; a zero diagonal with nonzero coupling
                // (as in a fresh Hermitian embedding) still rotates.
                if apq.abs() <= tol * 0.5 * (app.abs() + aqq.abs()) + f64::MIN_POSITIVE {
                    continue;
                }
                rotated = true;
                let tau = (aqq - app) / (2.0 * apq);
                let t = tau.signum() / (tau.abs() + (1.0 + tau * tau).sqrt());
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = c * t;
                // A <- J^T A J with J the rotation in the (p, q) plane.
                for k in 0..n {
                    let akp = a.get(k, p);
                    let akq = a.get(k, qi);
                    a.set(k, p, c * akp - s * akq);
                    a.set(k, qi, s * akp + c * akq);
                }
                for k in 0..n {
                    let apk = a.get(p, k);
                    let aqk = a.get(qi, k);
                    a.set(p, k, c * apk - s * aqk);
                    a.set(qi, k, s * apk + c * aqk);
                }
                let (head, tail) = q.split_at_mut(qi);
                for (xp, xq) in head[p].iter_mut().zip(tail[0].iter_mut()) {
                    let x = *xp;
                    let y = *xq;
                    *xp = c * x - s * y;
                    *xq = s * x + c * y;
                }
            }
        }
        if !rotated {
            converged = true;
            break;
        }
    }
    if !converged {
        return Err(Error::EigenFailure { sweeps: MAX_SWEEPS });
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&x, &y| {
        a.get(y, y)
            .partial_cmp(&a.get(x, x))
            .expect("finite diagonal")
            .then(x.cmp(&y))
    });
    let values: Vec<f64> = order.iter().map(|&j| a.get(j, j)).collect();
    let columns: Vec<Vec<f64>> = order.iter().map(|&j| q[j].clone()).collect();
    Ok(SymmetricEigen {
        values,
        vectors: DenseMatrix::from_columns(&columns),
    })
}
