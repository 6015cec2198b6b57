//! Path counting through the counting Laplacian.
//!
//! Both counters read one inverse entry to additive accuracy below 1/2 and
//! round. The strongly-few counter assumes `N(i, j) <= P` for all pairs, so
//! the Laplacian is provably well conditioned and the threshold can sit
//! below the certified smallest singular value (no truncation at all). The
//! few-endpoints counter only assumes `N(s, j) <= P` and `N(j, t) <= P`; it
//! truncates at `1 / (10 n^2 P^2)`, where the endpoint bounds cap the
//! overlap of `s` and `t` with the discarded singular directions.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{layer_graph, layered_node, DirectedGraph};
use crate::linalg::counting_laplacian;
use crate::qsim::{split_seed, NoiseModel, PseudoinverseEstimator};

/// Rounding budget for the strongly-few counter (entry accuracy).
const STRONGLY_FEW_BUDGET: f64 = 1.0 / 3.0;
/// Rounding budget for the few-endpoints counter (truncation + readout).
const FEW_ENDPOINTS_BUDGET: f64 = 2.0 / 5.0;
/// Floating-point slack on the budget comparisons.
const BUDGET_SLACK: f64 = 1e-9;

/// Parameter record persisted with every count.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CountParams {
    pub p_bound: u64,
    pub zeta: f64,
    pub delta: f64,
    /// Requested additive readout accuracy (the noise model's budget).
    pub accuracy: f64,
    pub z: f64,
    pub zeta_realized: f64,
    pub seed: u64,
    /// Whether the graph was replaced by its layered expansion first.
    pub layered: bool,
}

/// A rounded path count with its pre-rounding value and rounding margin.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CountResult {
    pub count: u64,
    pub raw_value: f64,
    /// Distance from `raw_value` to the nearest half-integer boundary.
    pub margin: f64,
    pub params: CountParams,
}

fn finish(raw: f64, budget: f64, params: CountParams) -> Result<CountResult> {
    let rounded = raw.round(); // half-away-from-zero
    if raw < -(budget + BUDGET_SLACK) || (raw - rounded).abs() > budget + BUDGET_SLACK {
        return Err(Error::PromiseViolationSuspected { raw, budget });
    }
    Ok(CountResult {
        count: rounded as u64,
        raw_value: raw,
        margin: 0.5 - (raw - rounded).abs(),
        params,
    })
}

/// Prepared strongly-few counter: the SVD of the counting Laplacian is
/// computed once, after which entries for any pair read in O(n).
pub struct StronglyFewCounter {
    estimator: PseudoinverseEstimator,
    n: usize,
    p_bound: u64,
    zeta: f64,
    delta: f64,
}

impl StronglyFewCounter {
    /// `p_bound` is the promised bound on every pairwise count. The promise
    /// is not checked; on graphs that break it the result is unspecified
    /// (usually a `PromiseViolationSuspected` error).
    pub fn new(g: &DirectedGraph, p_bound: u64) -> Result<Self> {
        assert!(p_bound >= 1, "path bound must be positive");
        let n = g.node_count();
        let l = counting_laplacian(g);
        let z = n as f64 * l.max_norm();
        let estimator = PseudoinverseEstimator::new(&l, z)?;
        // The promise certifies sigma_min >= 1 / (n P); park the threshold
        // and its jitter strictly below that so nothing is truncated.
        let zeta = 1.0 / (2.0 * n as f64 * p_bound as f64);
        let delta = zeta / 2.0;
        Ok(Self {
            estimator,
            n,
            p_bound,
            zeta,
            delta,
        })
    }

    pub fn count(&self, s: usize, t: usize, noise: &NoiseModel) -> Result<CountResult> {
        assert!(s < self.n && t < self.n, "s and t must be nodes of g");
        let seed = split_seed(noise.seed, (s * self.n + t) as u64);
        let est = self
            .estimator
            .estimate_entry(s, t, self.zeta, self.delta, noise, seed)?;
        let params = CountParams {
            p_bound: self.p_bound,
            zeta: self.zeta,
            delta: self.delta,
            accuracy: noise.accuracy,
            z: self.estimator.z(),
            zeta_realized: est.zeta_realized,
            seed,
            layered: false,
        };
        finish(est.value, STRONGLY_FEW_BUDGET, params)
    }
}

/// Counts `s -> t` paths under the promise that all pairwise counts are at
/// most `p_bound`. The graph must be acyclic for the count to mean anything;
/// acyclicity follows from the promise itself.
pub fn count_paths_strongly_few(
    g: &DirectedGraph,
    s: usize,
    t: usize,
    p_bound: u64,
    noise: &NoiseModel,
) -> Result<CountResult> {
    StronglyFewCounter::new(g, p_bound)?.count(s, t, noise)
}

/// Prepared few-endpoints counter. Graphs that fail a topological sort are
/// replaced by their layered expansion (with `s`, `t` re-mapped to the first
/// and last layer), which is acyclic regardless of the input.
pub struct FewEndpointsCounter {
    estimator: PseudoinverseEstimator,
    base_n: usize,
    eff_n: usize,
    layered: bool,
    p_bound: u64,
    zeta: f64,
}

impl FewEndpointsCounter {
    pub fn new(g: &DirectedGraph, p_bound: u64) -> Result<Self> {
        assert!(p_bound >= 1, "path bound must be positive");
        let base_n = g.node_count();
        let (matrix_graph, layered) = if g.is_acyclic() {
            (g.clone(), false)
        } else {
            (layer_graph(g), true)
        };
        let eff_n = matrix_graph.node_count();
        let l = counting_laplacian(&matrix_graph);
        // Z = n: the Laplacian's entries are 0 or +-1.
        let z = eff_n as f64;
        let estimator = PseudoinverseEstimator::new(&l, z)?;
        let nf = eff_n as f64;
        let pf = p_bound as f64;
        let zeta = 1.0 / (10.0 * nf * nf * pf * pf);
        Ok(Self {
            estimator,
            base_n,
            eff_n,
            layered,
            p_bound,
            zeta,
        })
    }

    pub fn is_layered(&self) -> bool {
        self.layered
    }

    pub fn estimator(&self) -> &PseudoinverseEstimator {
        &self.estimator
    }

    fn map_source(&self, s: usize) -> usize {
        if self.layered {
            layered_node(s, 0, self.base_n)
        } else {
            s
        }
    }

    fn map_target(&self, t: usize) -> usize {
        if self.layered {
            layered_node(t, self.base_n, self.base_n)
        } else {
            t
        }
    }

    /// Exact truncation error `|L^-1(s, t) - L+_threshold(s, t)|` at a given
    /// realized threshold, from the stored SVD.
    pub fn truncation_error(&self, s: usize, t: usize, threshold: f64) -> f64 {
        let (a, b) = (self.map_source(s), self.map_target(t));
        let full = self.estimator.truncated_entry(a, b, 0.0);
        let truncated = self.estimator.truncated_entry(a, b, threshold);
        (full - truncated).abs()
    }

    pub fn count(&self, s: usize, t: usize, noise: &NoiseModel) -> Result<CountResult> {
        assert!(s < self.base_n && t < self.base_n, "s and t must be nodes of g");
        let seed = split_seed(noise.seed, (s * self.base_n + t) as u64);
        let est = self.estimator.estimate_entry(
            self.map_source(s),
            self.map_target(t),
            self.zeta,
            self.zeta, // delta = zeta
            noise,
            seed,
        )?;
        let params = CountParams {
            p_bound: self.p_bound,
            zeta: self.zeta,
            delta: self.zeta,
            accuracy: noise.accuracy,
            z: self.eff_n as f64,
            zeta_realized: est.zeta_realized,
            seed,
            layered: self.layered,
        };
        finish(est.value, FEW_ENDPOINTS_BUDGET, params)
    }
}

/// Counts `s -> t` paths under the weaker promise that only the counts
/// leaving `s` and the counts entering `t` are bounded by `p_bound`. Other
/// pairs may have exponentially many paths; the truncated pseudoinversion
/// ignores them at a cost below 1/5, and the readout adds at most 1/5 more,
/// so rounding still recovers the exact count.
pub fn count_paths_few_endpoints(
    g: &DirectedGraph,
    s: usize,
    t: usize,
    p_bound: u64,
    noise: &NoiseModel,
) -> Result<CountResult> {
    FewEndpointsCounter::new(g, p_bound)?.count(s, t, noise)
}
