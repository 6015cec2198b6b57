//! Graph sources for the CLI: files, generators and unions of generators.

use std::fs;

use fewpaths::graph::{
    disjoint_union, gen_chain_figure1, gen_diamond_chain, gen_random_dag, DirectedGraph,
};
use fewpaths::qsim::split_seed;

use crate::ConfigError;

const GENERATOR_SEED_TAG: u64 = 0x67656e; // "gen"

/// Generator parameters supplied next to `--graph`.
#[derive(Debug, Clone, clap::Args)]
pub struct GraphArgs {
    /// Graph source: `file:PATH`, `chain`, `diamond`, `dag`, or
    /// `union:PART+PART` with parts `chain=H`, `diamond=M`, `dag=N:DENSITY`.
    #[arg(long)]
    pub graph: String,

    /// Chain half-length (number of spine nodes) for `--graph chain`.
    #[arg(long)]
    pub half: Option<usize>,

    /// Diamond count for `--graph diamond`.
    #[arg(long)]
    pub m: Option<usize>,

    /// Node count for `--graph dag`.
    #[arg(long)]
    pub n: Option<usize>,

    /// Edge density in [0, 1] for `--graph dag`.
    #[arg(long)]
    pub density: Option<f64>,
}

impl GraphArgs {
    /// True when the source involves a seeded generator, which makes
    /// `--seed` mandatory.
    pub fn needs_seed(&self) -> bool {
        self.graph == "dag" || (self.graph.starts_with("union:") && self.graph.contains("dag="))
    }

    pub fn resolve(&self, seed: Option<u64>) -> Result<(DirectedGraph, String), ConfigError> {
        let gen_seed = |part: u64| split_seed(seed.unwrap_or(0), GENERATOR_SEED_TAG ^ part);
        match self.graph.as_str() {
            "chain" => {
                let half = self
                    .half
                    .ok_or_else(|| ConfigError::new("--graph chain requires --half"))?;
                require(half >= 1, "--half must be at least 1")?;
                Ok((gen_chain_figure1(half), format!("chain(half={half})")))
            }
            "diamond" => {
                let m = self
                    .m
                    .ok_or_else(|| ConfigError::new("--graph diamond requires --m"))?;
                require(m >= 1, "--m must be at least 1")?;
                Ok((gen_diamond_chain(m), format!("diamond(m={m})")))
            }
            "dag" => {
                let n = self
                    .n
                    .ok_or_else(|| ConfigError::new("--graph dag requires --n"))?;
                let density = self
                    .density
                    .ok_or_else(|| ConfigError::new("--graph dag requires --density"))?;
                require(n >= 1, "--n must be at least 1")?;
                require((0.0..=1.0).contains(&density), "--density must be in [0, 1]")?;
                let g = gen_random_dag(n, density, gen_seed(0));
                Ok((g, format!("dag(n={n}, density={density})")))
            }
            other => {
                if let Some(path) = other.strip_prefix("file:") {
                    let text = fs::read_to_string(path).map_err(|e| {
                        ConfigError::new(format!("cannot read graph file {path}: {e}"))
                    })?;
                    let g = DirectedGraph::parse_edge_list(&text)
                        .map_err(|e| ConfigError::new(format!("{path}: {e}")))?;
                    Ok((g, format!("file:{path}")))
                } else if let Some(spec) = other.strip_prefix("union:") {
                    resolve_union(spec, seed)
                } else {
                    Err(ConfigError::new(format!(
                        "unknown graph source {other:?} (expected file:PATH, chain, diamond, dag or union:SPEC)"
                    )))
                }
            }
        }
    }
}

fn resolve_union(spec: &str, seed: Option<u64>) -> Result<(DirectedGraph, String), ConfigError> {
    let mut graph: Option<DirectedGraph> = None;
    let mut labels = Vec::new();
    for (index, part) in spec.split('+').enumerate() {
        let (kind, params) = part
            .split_once('=')
            .ok_or_else(|| ConfigError::new(format!("union part {part:?} missing '='")))?;
        let component = match kind {
            "chain" => {
                let half: usize = parse_field(params, "chain half")?;
                require(half >= 1, "chain half must be at least 1")?;
                gen_chain_figure1(half)
            }
            "diamond" => {
                let m: usize = parse_field(params, "diamond m")?;
                require(m >= 1, "diamond m must be at least 1")?;
                gen_diamond_chain(m)
            }
            "dag" => {
                let (n_str, d_str) = params.split_once(':').ok_or_else(|| {
                    ConfigError::new(format!("dag part {params:?} must be N:DENSITY"))
                })?;
                let n: usize = parse_field(n_str, "dag n")?;
                let density: f64 = parse_field(d_str, "dag density")?;
                require(n >= 1, "dag n must be at least 1")?;
                require((0.0..=1.0).contains(&density), "dag density must be in [0, 1]")?;
                let part_seed = split_seed(seed.unwrap_or(0), GENERATOR_SEED_TAG ^ index as u64);
                gen_random_dag(n, density, part_seed)
            }
            other => {
                return Err(ConfigError::new(format!(
                    "unknown union part kind {other:?}"
                )))
            }
        };
        labels.push(part.to_string());
        graph = Some(match graph {
            None => component,
            Some(acc) => disjoint_union(&acc, &component),
        });
    }
    let graph = graph.ok_or_else(|| ConfigError::new("union spec is empty"))?;
    Ok((graph, format!("union:{}", labels.join("+"))))
}

fn parse_field<T: std::str::FromStr>(s: &str, what: &str) -> Result<T, ConfigError> {
    s.parse()
        .map_err(|_| ConfigError::new(format!("invalid {what}: {s:?}")))
}

fn require(ok: bool, msg: &str) -> Result<(), ConfigError> {
    if ok {
        Ok(())
    } else {
        Err(ConfigError::new(msg))
    }
}
