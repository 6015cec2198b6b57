//! Exact path-counting ground truth, independent of the spectral machinery.

use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::graph::DirectedGraph;

/// Number of directed paths between a pair of nodes. The empty path makes
/// every diagonal count at least one. `Infinite` marks pairs whose walks can
/// run through a cycle; `Overflow` marks finite counts above the caller's cap.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PathCount {
    Finite(BigUint),
    Infinite,
    Overflow { cap: u64 },
}

impl PathCount {
    pub fn finite(value: u64) -> Self {
        PathCount::Finite(BigUint::from(value))
    }

    /// True when the count is finite and at most `bound`.
    pub fn is_at_most(&self, bound: u64) -> bool {
        match self {
            PathCount::Finite(c) => *c <= BigUint::from(bound),
            _ => false,
        }
    }

    pub fn as_finite(&self) -> Option<&BigUint> {
        match self {
            PathCount::Finite(c) => Some(c),
            _ => None,
        }
    }

    /// Finite value as f64 (for comparisons against spectral estimates).
    pub fn to_f64(&self) -> Option<f64> {
        self.as_finite().map(|c| {
            let mut acc = 0f64;
            for digit in c.to_u64_digits().iter().rev() {
                acc = acc * 1.8446744073709552e19 + *digit as f64;
            }
            acc
        })
    }
}

impl fmt::Display for PathCount {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PathCount::Finite(c) => write!(f, "{c}"),
            PathCount::Infinite => write!(f, "inf"),
            PathCount::Overflow { cap } => write!(f, ">{cap}"),
        }
    }
}

// Serialized as a tagged string: a decimal count, "inf", or ">cap".
impl Serialize for PathCount {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for PathCount {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        if s == "inf" {
            return Ok(PathCount::Infinite);
        }
        if let Some(cap) = s.strip_prefix('>') {
            let cap = cap.parse().map_err(D::Error::custom)?;
            return Ok(PathCount::Overflow { cap });
        }
        let value = s.parse::<BigUint>().map_err(D::Error::custom)?;
        Ok(PathCount::Finite(value))
    }
}

/// All-pairs path counts `N(i, j)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PathCountMatrix {
    n: usize,
    entries: Vec<PathCount>,
}

impl PathCountMatrix {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &PathCount {
        assert!(i < self.n && j < self.n, "index out of range");
        &self.entries[i * self.n + j]
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, usize, &PathCount)> + '_ {
        self.entries
            .iter()
            .enumerate()
            .map(move |(k, c)| (k / self.n, k % self.n, c))
    }

    /// Largest finite entry, if every entry is finite.
    pub fn max_finite(&self) -> Option<&BigUint> {
        let mut best: Option<&BigUint> = None;
        for entry in &self.entries {
            match entry {
                PathCount::Finite(c) => {
                    if best.is_none_or(|b| c > b) {
                        best = Some(c);
                    }
                }
                _ => return None,
            }
        }
        best
    }

    /// First pair (row-major) whose count is not finite-and-within `bound`.
    pub fn first_violation(&self, bound: u64) -> Option<(usize, usize)> {
        self.iter()
            .find(|(_, _, c)| !c.is_at_most(bound))
            .map(|(i, j, _)| (i, j))
    }
}

/// Exact all-pairs path counts by dynamic programming over each source's
/// reachable acyclic region. Pairs whose walks can pass through a node on a
/// cycle come out `Infinite`; finite counts above `cap` come out `Overflow`.
///
/// This oracle never touches the layered construction or any linear algebra,
/// so it can serve as independent ground truth for both.
pub fn count_paths_oracle(g: &DirectedGraph, cap: u64) -> PathCountMatrix {
    assert!(cap >= 1, "cap must be positive");
    let n = g.node_count();
    let adj = g.out_adjacency();
    let on_cycle = g.cyclic_nodes();
    let cap_big = BigUint::from(cap);
    let saturated = &cap_big + BigUint::one();

    let mut entries = vec![PathCount::finite(0); n * n];
    for source in 0..n {
        let reach = g.reachable_from(source);
        // Nodes downstream of a cycle that is itself reachable from `source`
        // have infinitely many walks arriving.
        let mut tainted = vec![false; n];
        let mut stack: Vec<usize> = (0..n).filter(|&v| reach[v] && on_cycle[v]).collect();
        for &v in &stack {
            tainted[v] = true;
        }
        while let Some(u) = stack.pop() {
            for &v in &adj[u] {
                if !tainted[v] {
                    tainted[v] = true;
                    stack.push(v);
                }
            }
        }

        // The untainted reachable region is acyclic; count walks with a DP
        // over its topological order, saturating at cap + 1.
        let mut ways: Vec<BigUint> = vec![BigUint::zero(); n];
        let mut indegree = vec![0usize; n];
        let live = |v: usize| reach[v] && !tainted[v];
        for (u, v) in g.edges() {
            if live(u) && live(v) {
                indegree[v] += 1;
            }
        }
        let mut queue: Vec<usize> = (0..n).filter(|&v| live(v) && indegree[v] == 0).collect();
        if live(source) {
            ways[source] = BigUint::one();
        }
        while let Some(u) = queue.pop() {
            if ways[u] > cap_big {
                ways[u] = saturated.clone();
            }
            for &v in &adj[u] {
                if live(v) {
                    let add = ways[u].clone();
                    ways[v] += add;
                    indegree[v] -= 1;
                    if indegree[v] == 0 {
                        queue.push(v);
                    }
                }
            }
        }

        for target in 0..n {
            let entry = if !reach[target] {
                PathCount::finite(0)
            } else if tainted[target] {
                PathCount::Infinite
            } else if ways[target] > cap_big {
                PathCount::Overflow { cap }
            } else {
                PathCount::Finite(ways[target].clone())
            };
            entries[source * n + target] = entry;
        }
    }
    PathCountMatrix { n, entries }
}

/// Oracle-certified summary of a graph, as persisted in corpus manifests.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GraphCertificate {
    pub nodes: usize,
    pub edges: usize,
    pub acyclic: bool,
    /// Cap used when certifying; counts above it are reported as overflow.
    pub cap: u64,
    /// Largest pairwise count (`inf` or `>cap` when not finite).
    pub max_count: PathCount,
    /// Graph is k-strongly unambiguous for this k (None when some count is
    /// infinite or overflowed the cap).
    pub strongly_unambiguous_bound: Option<u64>,
}

impl GraphCertificate {
    pub fn certify(g: &DirectedGraph, cap: u64) -> Self {
        let counts = count_paths_oracle(g, cap);
        let max_count = counts
            .max_finite()
            .map(|c| PathCount::Finite(c.clone()))
            .unwrap_or_else(|| {
                counts
                    .iter()
                    .map(|(_, _, c)| c)
                    .find(|c| matches!(c, PathCount::Infinite))
                    .cloned()
                    .unwrap_or(PathCount::Overflow { cap })
            });
        let strongly_unambiguous_bound = match &max_count {
            PathCount::Finite(c) => c.try_into().ok(),
            _ => None,
        };
        GraphCertificate {
            nodes: g.node_count(),
            edges: g.edge_count(),
            acyclic: g.is_acyclic(),
            cap,
            max_count,
            strongly_unambiguous_bound,
        }
    }
}
