//! Monte Carlo random-walk baseline.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::graph::DirectedGraph;

/// Empirical probability that a uniform out-edge walk from `s` visits `t`
/// within `max_steps` steps. A walker at a node with no out-edges halts
/// there (it is absorbed). Deterministic in the seed; trials run on a single
/// ChaCha8 stream in order.
pub fn random_walk_hit_probability(
    g: &DirectedGraph,
    s: usize,
    t: usize,
    max_steps: usize,
    trials: u64,
    seed: u64,
) -> f64 {
    let n = g.node_count();
    assert!(s < n && t < n, "s and t must be nodes of g");
    assert!(trials >= 1, "trials must be positive");
    let adj = g.out_adjacency();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut hits = 0u64;
    for _ in 0..trials {
        let mut pos = s;
        if pos == t {
            hits += 1;
            continue;
        }
        for _ in 0..max_steps {
            let out = &adj[pos];
            if out.is_empty() {
                break;
            }
            pos = out[rng.random_range(0..out.len())];
            if pos == t {
                hits += 1;
                break;
            }
        }
    }
    hits as f64 / trials as f64
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::gen_chain_figure1;

    #[test]
    fn chain_walk_hits_with_probability_two_to_minus_half_minus_one() {
        // half = 4: the walk must win 3 coin flips, so p = 1/8.
        let g = gen_chain_figure1(4);
        let trials = 100_000;
        let p = random_walk_hit_probability(&g, 0, 7, 100, trials, 42);
        let expect = 0.125;
        let se = (expect * (1.0 - expect) / trials as f64).sqrt();
        assert!(
            (p - expect).abs() <= 3.0 * se,
            "p = {p}, expected {expect} +- {}",
            3.0 * se
        );
    }

    #[test]
    fn start_at_target_always_hits() {
        let g = gen_chain_figure1(3);
        assert_eq!(random_walk_hit_probability(&g, 2, 2, 10, 100, 1), 1.0);
    }

    #[test]
    fn unreachable_target_never_hits() {
        let g = DirectedGraph::from_edges(3, [(1, 2)]).unwrap();
        assert_eq!(random_walk_hit_probability(&g, 0, 2, 50, 100, 1), 0.0);
    }

    #[test]
    fn walk_is_deterministic_in_seed() {
        let g = gen_chain_figure1(6);
        let a = random_walk_hit_probability(&g, 0, 11, 64, 10_000, 9);
        let b = random_walk_hit_probability(&g, 0, 11, 64, 10_000, 9);
        assert_eq!(a, b);
    }
}
