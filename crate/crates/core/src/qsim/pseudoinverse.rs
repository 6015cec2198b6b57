//! Effective pseudoinversion with a randomized truncation threshold.

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{svd, DenseMatrix, SvdDecomposition};
use crate::qsim::{stream_rng, NoiseModel};

/// Thresholds closer than this to a singular value are considered collisions
/// and redrawn, so the kept set `{j : sigma_j >= threshold}` is stable.
pub const THRESHOLD_COLLISION_TOL: f64 = 1e-12;

const MAX_THRESHOLD_DRAWS: usize = 64;
const THRESHOLD_STREAM: u64 = 0x5448_5245; // "THRE"
const ENTRY_STREAM: u64 = 0x454e_5452; // "ENTR"

/// Truncated pseudoinverse: invert only the singular directions with
/// `sigma_j >= zeta`. Errors if `zeta` lies on a singular value (within
/// [`THRESHOLD_COLLISION_TOL`]), in which case the truncation is ill posed
/// and the caller should redraw the threshold.
pub fn effective_pseudoinverse(m: &DenseMatrix, zeta: f64) -> Result<DenseMatrix> {
    assert!(zeta > 0.0, "zeta must be positive");
    let decomposition = svd(m)?;
    if decomposition
        .sigma
        .iter()
        .any(|&s| (s - zeta).abs() <= THRESHOLD_COLLISION_TOL)
    {
        return Err(Error::ThresholdOnSingularValue { zeta });
    }
    Ok(truncated_pseudoinverse(&decomposition, zeta))
}

fn truncated_pseudoinverse(decomposition: &SvdDecomposition, threshold: f64) -> DenseMatrix {
    let n = decomposition.n();
    let mut out = DenseMatrix::zeros(n, n);
    for (k, &sigma) in decomposition.sigma.iter().enumerate() {
        if sigma < threshold {
            continue;
        }
        let inv = 1.0 / sigma;
        for i in 0..n {
            let vi = decomposition.v.get(i, k);
            if vi == 0.0 {
                continue;
            }
            for j in 0..n {
                let add = inv * vi * decomposition.u.get(j, k);
                out.set(i, j, out.get(i, j) + add);
            }
        }
    }
    out
}

/// Draws the realized threshold: uniform on `[zeta - delta, zeta + delta]`
/// clamped positive, redrawn until it clears every singular value by
/// [`THRESHOLD_COLLISION_TOL`]. With `delta = 0` the requested `zeta` is the
/// only candidate. Fails with `ThresholdUnresolvable` when every draw lands
/// on the spectrum.
pub fn draw_threshold(sigma: &[f64], zeta: f64, delta: f64, seed: u64) -> Result<f64> {
    assert!(zeta > 0.0, "zeta must be positive");
    assert!(delta >= 0.0, "delta must be nonnegative");
    let lo = (zeta - delta).max(0.0);
    let hi = zeta + delta;
    let mut rng = stream_rng(seed, THRESHOLD_STREAM);
    for _ in 0..MAX_THRESHOLD_DRAWS {
        let candidate = if delta == 0.0 {
            zeta
        } else {
            rng.random_range(lo..=hi)
        };
        let clear = candidate > 0.0
            && sigma
                .iter()
                .all(|&s| (s - candidate).abs() > THRESHOLD_COLLISION_TOL);
        if clear {
            return Ok(candidate);
        }
    }
    Err(Error::ThresholdUnresolvable {
        retries: MAX_THRESHOLD_DRAWS,
    })
}

/// One estimated entry of the effective pseudoinverse, with the realized
/// threshold and the rank that survived truncation.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PseudoinverseEstimate {
    pub value: f64,
    pub zeta_realized: f64,
    pub zeta_requested: f64,
    pub delta: f64,
    pub kept_rank: usize,
    /// Whether the readout was a seeded failure event (garbage value).
    pub failed: bool,
}

/// Reusable entry estimator for one matrix: the SVD is computed once and
/// every entry readout reuses it.
///
/// Semantically this follows the Hermitian-embedding route: the spectrum of
/// `[[0, M^T/Z], [M/Z, 0]]` is the plus/minus singular values of `M/Z` with
/// eigenvectors built from the singular vector pairs, truncation keeps
/// `|lambda| >= zeta_realized`, and the `(s, t + n)` block entry of the
/// truncated inverse embedding equals the `(s, t)` entry of the truncated
/// pseudoinverse of `M`. All of that collapses to reading the SVD of `M`
/// directly, with thresholds quoted in the unscaled spectrum; `Z` remains
/// the promised spectral-norm bound and is enforced on construction.
pub struct PseudoinverseEstimator {
    decomposition: SvdDecomposition,
    z: f64,
}

impl PseudoinverseEstimator {
    pub fn new(m: &DenseMatrix, z: f64) -> Result<Self> {
        Self::from_decomposition(svd(m)?, z)
    }

    /// Wraps a precomputed decomposition, still enforcing the `Z` bound.
    pub fn from_decomposition(decomposition: SvdDecomposition, z: f64) -> Result<Self> {
        assert!(z >= 0.0, "Z must be nonnegative");
        let sigma1 = decomposition.sigma_max();
        if sigma1 > z * (1.0 + 1e-9) {
            return Err(Error::SpectralBoundViolated { sigma1, z });
        }
        Ok(Self { decomposition, z })
    }

    pub fn n(&self) -> usize {
        self.decomposition.n()
    }

    pub fn z(&self) -> f64 {
        self.z
    }

    pub fn decomposition(&self) -> &SvdDecomposition {
        &self.decomposition
    }

    pub fn kept_rank(&self, threshold: f64) -> usize {
        self.decomposition
            .sigma
            .iter()
            .filter(|&&s| s >= threshold)
            .count()
    }

    /// Exact `(s, t)` entry of the pseudoinverse truncated at `threshold`.
    pub fn truncated_entry(&self, s: usize, t: usize, threshold: f64) -> f64 {
        let d = &self.decomposition;
        let n = d.n();
        assert!(s < n && t < n, "indices out of range");
        let mut acc = 0.0;
        for (k, &sigma) in d.sigma.iter().enumerate() {
            if sigma >= threshold {
                acc += d.v.get(s, k) * d.u.get(t, k) / sigma;
            }
        }
        acc
    }

    /// Draws the realized threshold from `seed`, reads the entry, applies
    /// readout noise. In exact mode the value equals the true truncated
    /// entry up to SVD tolerance.
    pub fn estimate_entry(
        &self,
        s: usize,
        t: usize,
        zeta: f64,
        delta: f64,
        noise: &NoiseModel,
        seed: u64,
    ) -> Result<PseudoinverseEstimate> {
        let zeta_realized = draw_threshold(&self.decomposition.sigma, zeta, delta, seed)?;
        let true_value = self.truncated_entry(s, t, zeta_realized);
        let mut rng = stream_rng(noise.seed, ENTRY_STREAM ^ seed);
        let (value, failed) = noise.apply_to_value(true_value, &mut rng);
        Ok(PseudoinverseEstimate {
            value,
            zeta_realized,
            zeta_requested: zeta,
            delta,
            kept_rank: self.kept_rank(zeta_realized),
            failed,
        })
    }
}

/// One-shot entry estimate of the effective pseudoinverse of `m`.
///
/// `z` must upper-bound the spectral norm (`SpectralBoundViolated`
/// otherwise); the realized threshold is drawn delta-close to `zeta` from
/// `seed`, symmetric across the embedded plus/minus spectrum by
/// construction.
#[allow(clippy::too_many_arguments)]
pub fn estimate_pseudoinverse_entry(
    m: &DenseMatrix,
    s: usize,
    t: usize,
    zeta: f64,
    delta: f64,
    noise: &NoiseModel,
    z: f64,
    seed: u64,
) -> Result<PseudoinverseEstimate> {
    PseudoinverseEstimator::new(m, z)?.estimate_entry(s, t, zeta, delta, noise, seed)
}

/// Success probability of the well outcome: `zeta^2 * ||M+_{zr} e_t||^2`,
/// computed from the exact SVD with the truncation taken at the realized
/// threshold `zeta_realized`.
pub fn well_outcome_probability(
    m: &DenseMatrix,
    t: usize,
    zeta: f64,
    zeta_realized: f64,
) -> Result<f64> {
    assert!(zeta > 0.0 && zeta_realized > 0.0, "thresholds must be positive");
    let decomposition = svd(m)?;
    let n = decomposition.n();
    assert!(t < n, "column index out of range");
    let mut norm_sq = 0.0;
    for (k, &sigma) in decomposition.sigma.iter().enumerate() {
        if sigma >= zeta_realized {
            let coeff = decomposition.u.get(t, k) / sigma;
            norm_sq += coeff * coeff;
        }
    }
    Ok(zeta * zeta * norm_sq)
}
