//! `fewpaths`: command-line harness for counting st-paths, recognizing
//! strongly-few inputs, classifying unambiguity and running baselines on
//! directed graphs. Reports are JSON with deterministic non-timing fields.

mod report;
mod source;

use std::collections::BTreeMap;
use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use fewpaths::algorithms::{
    count_paths_few_endpoints, count_paths_strongly_few, recognize_stcon_sf,
    recognize_stcon_sf_strict, savitch_reachable, stcon_sf_member, VerdictReason,
};
use fewpaths::graph::{
    classify, count_paths_oracle, gen_chain_figure1, gen_diamond_chain, gen_random_dag,
    random_walk_hit_probability, DirectedGraph, GraphCertificate, PathCount,
};
use fewpaths::linalg::counting_laplacian;
use fewpaths::qsim::{spectrum_estimate, NoiseMode, NoiseModel};

use report::{to_value, InstanceRecord, RunReport};
use source::GraphArgs;

pub struct ConfigError(String);

impl ConfigError {
    pub fn new(msg: impl Into<String>) -> Self {
        Self(msg.into())
    }
}

#[derive(Parser)]
#[command(
    name = "fewpaths",
    version,
    about = "Path counting and st-connectivity on directed graphs via the counting Laplacian"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate edge-list corpora with an oracle-certified manifest
    Gen(GenArgs),
    /// Count s->t paths with a spectral counter
    Count(CountArgs),
    /// Recognize inputs with all pairwise counts <= k and an s->t path
    Recognize(RecognizeArgs),
    /// Classify the unambiguity predicates against the exact oracle
    Classify(ClassifyArgs),
    /// Estimate the singular values of the counting Laplacian
    Spectrum(SpectrumArgs),
    /// Monte Carlo random-walk hitting probability
    Walk(WalkArgs),
    /// Midpoint-doubling reachability baseline
    Savitch(SavitchArgs),
    /// Time the counting pipelines and baselines on one instance
    Bench(BenchArgs),
}

#[derive(ValueEnum, Clone, Copy, PartialEq, Eq, Debug)]
enum NoiseKind {
    Exact,
    Uniform,
    Adversarial,
}

#[derive(Args, Clone)]
struct NoiseArgs {
    /// Readout noise mode
    #[arg(long, value_enum, default_value_t = NoiseKind::Exact)]
    noise: NoiseKind,

    /// Shorthand for `--noise exact`
    #[arg(long, conflicts_with = "noise")]
    exact: bool,

    /// Additive readout accuracy (required unless exact)
    #[arg(long)]
    accuracy: Option<f64>,

    /// Per-readout failure probability (uniform mode)
    #[arg(long = "failure-prob", default_value_t = 0.0)]
    failure_prob: f64,
}

impl NoiseArgs {
    fn kind(&self) -> NoiseKind {
        if self.exact {
            NoiseKind::Exact
        } else {
            self.noise
        }
    }

    fn resolve(&self, seed: Option<u64>) -> Result<NoiseModel, ConfigError> {
        match self.kind() {
            NoiseKind::Exact => Ok(NoiseModel::exact()),
            mode => {
                let accuracy = self
                    .accuracy
                    .ok_or_else(|| ConfigError::new("--accuracy is required for noisy modes"))?;
                if accuracy <= 0.0 {
                    return Err(ConfigError::new("--accuracy must be positive"));
                }
                if !(0.0..1.0).contains(&self.failure_prob) {
                    return Err(ConfigError::new("--failure-prob must lie in [0, 1)"));
                }
                let seed =
                    seed.ok_or_else(|| ConfigError::new("--seed is required for noisy modes"))?;
                Ok(NoiseModel {
                    mode: match mode {
                        NoiseKind::Uniform => NoiseMode::UniformPerturb,
                        NoiseKind::Adversarial => NoiseMode::AdversarialWorstCase,
                        NoiseKind::Exact => unreachable!(),
                    },
                    accuracy,
                    failure_prob: self.failure_prob,
                    seed,
                })
            }
        }
    }

    fn echo(&self) -> Value {
        json!({
            "mode": format!("{:?}", self.kind()),
            "accuracy": self.accuracy,
            "failure_prob": self.failure_prob,
        })
    }
}

fn node_in_range(node: usize, g: &DirectedGraph, what: &str) -> Result<(), ConfigError> {
    if node < g.node_count() {
        Ok(())
    } else {
        Err(ConfigError::new(format!(
            "{what} = {node} out of range for a graph on {} nodes",
            g.node_count()
        )))
    }
}

fn require_seed_for_generator(args: &GraphArgs, seed: Option<u64>) -> Result<(), ConfigError> {
    if args.needs_seed() && seed.is_none() {
        Err(ConfigError::new("--seed is required for seeded generators"))
    } else {
        Ok(())
    }
}

/// Documented batch rule: trial i runs with seed `base + i`.
fn trial_seed(base: Option<u64>, index: u64) -> u64 {
    base.unwrap_or(0).wrapping_add(index)
}

/// Progress line on stderr, at most ~10 updates per batch.
fn progress(done: u64, total: u64) {
    if total > 1 && (done == total || done % (total / 10).max(1) == 0) {
        eprintln!("progress: {done}/{total} instances");
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (outcome, out) = match cli.command {
        // gen's --out is the corpus directory; its report goes to stdout
        Command::Gen(args) => (run_gen(args), None),
        Command::Count(args) => {
            let out = args.out.clone();
            (run_count(args), out)
        }
        Command::Recognize(args) => {
            let out = args.out.clone();
            (run_recognize(args), out)
        }
        Command::Classify(args) => {
            let out = args.out.clone();
            (run_classify(args), out)
        }
        Command::Spectrum(args) => {
            let out = args.out.clone();
            (run_spectrum(args), out)
        }
        Command::Walk(args) => {
            let out = args.out.clone();
            (run_walk(args), out)
        }
        Command::Savitch(args) => {
            let out = args.out.clone();
            (run_savitch(args), out)
        }
        Command::Bench(args) => {
            let out = args.out.clone();
            (run_bench(args), out)
        }
    };
    match outcome {
        Ok(report) => {
            let errors = report.error_count();
            if let Err(e) = report.emit(out.as_ref()) {
                eprintln!("cannot write report: {e}");
                return ExitCode::from(2);
            }
            if errors > 0 {
                eprintln!("{errors} instance(s) failed");
                ExitCode::from(3)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(ConfigError(msg)) => {
            eprintln!("config error: {msg}");
            ExitCode::from(2)
        }
    }
}

// ---------------------------------------------------------------- count --

#[derive(ValueEnum, Clone, Copy, PartialEq, Eq, Debug)]
enum CountAlg {
    /// All pairwise counts promised <= P
    #[value(name = "strongly-few", alias = "theorem1")]
    StronglyFew,
    /// Only counts from s and into t promised <= P
    #[value(name = "few-endpoints", alias = "theorem2")]
    FewEndpoints,
}

#[derive(Args)]
struct CountArgs {
    #[command(flatten)]
    graph: GraphArgs,

    #[arg(long, value_enum)]
    alg: CountAlg,

    #[arg(long = "s")]
    s: usize,

    #[arg(long = "t")]
    t: usize,

    /// Promised path bound
    #[arg(long = "P")]
    p_bound: u64,

    #[command(flatten)]
    noise: NoiseArgs,

    #[arg(long)]
    seed: Option<u64>,

    /// Number of seeded repetitions
    #[arg(long, default_value_t = 1)]
    trials: u64,

    #[arg(long)]
    out: Option<PathBuf>,
}

fn run_count(args: CountArgs) -> Result<RunReport, ConfigError> {
    require_seed_for_generator(&args.graph, args.seed)?;
    let noise = args.noise.resolve(args.seed)?;
    let (g, label) = args.graph.resolve(args.seed)?;
    node_in_range(args.s, &g, "--s")?;
    node_in_range(args.t, &g, "--t")?;
    if args.p_bound < 1 {
        return Err(ConfigError::new("--P must be at least 1"));
    }
    if args.trials < 1 {
        return Err(ConfigError::new("--trials must be at least 1"));
    }

    let oracle_cap = args.p_bound.saturating_mul(4).max(1_000_000);
    let oracle = count_paths_oracle(&g, oracle_cap);
    let oracle_count = oracle.get(args.s, args.t).clone();

    let total = Instant::now();
    let mut instances = Vec::new();
    let mut matches = 0usize;
    let mut mismatches = 0usize;
    for i in 0..args.trials {
        let seed = trial_seed(args.seed, i);
        let run_noise = noise.with_seed(seed);
        let t0 = Instant::now();
        let outcome = match args.alg {
            CountAlg::StronglyFew => {
                count_paths_strongly_few(&g, args.s, args.t, args.p_bound, &run_noise)
            }
            CountAlg::FewEndpoints => {
                count_paths_few_endpoints(&g, args.s, args.t, args.p_bound, &run_noise)
            }
        };
        let timing_ms = t0.elapsed().as_secs_f64() * 1e3;
        let record = match outcome {
            Ok(result) => {
                let agrees = oracle_count
                    .as_finite()
                    .is_some_and(|c| *c == result.count.into());
                if agrees {
                    matches += 1;
                } else {
                    mismatches += 1;
                }
                InstanceRecord {
                    id: i as usize,
                    seed: Some(seed),
                    result: Some(json!({
                        "count": result.count,
                        "raw_value": result.raw_value,
                        "margin": result.margin,
                        "matches_oracle": agrees,
                        "params": to_value(&result.params),
                    })),
                    error: None,
                    timing_ms,
                }
            }
            Err(e) => InstanceRecord {
                id: i as usize,
                seed: Some(seed),
                result: None,
                error: Some(e.to_string()),
                timing_ms,
            },
        };
        instances.push(record);
        progress(i + 1, args.trials);
    }

    Ok(RunReport {
        command: "count".into(),
        graph: label,
        config: json!({
            "alg": format!("{:?}", args.alg),
            "s": args.s,
            "t": args.t,
            "P": args.p_bound,
            "noise": args.noise.echo(),
            "seed": args.seed,
            "trials": args.trials,
        }),
        aggregate: json!({
            "trials": args.trials,
            "errors": instances.iter().filter(|r| r.error.is_some()).count(),
            "oracle_count": oracle_count.to_string(),
            "oracle_matches": matches,
            "oracle_mismatches": mismatches,
        }),
        instances,
        timing_ms_total: total.elapsed().as_secs_f64() * 1e3,
    })
}

// ------------------------------------------------------------ recognize --

#[derive(Args)]
struct RecognizeArgs {
    #[command(flatten)]
    graph: GraphArgs,

    #[arg(long = "s")]
    s: usize,

    #[arg(long = "t")]
    t: usize,

    /// Pairwise count bound of the language
    #[arg(long = "k")]
    k: u64,

    #[command(flatten)]
    noise: NoiseArgs,

    #[arg(long)]
    seed: Option<u64>,

    #[arg(long, default_value_t = 1)]
    trials: u64,

    /// Sweep every layered inverse entry against k, not only the
    /// dominating block
    #[arg(long = "strict-entry-sweep")]
    strict_entry_sweep: bool,

    #[arg(long)]
    out: Option<PathBuf>,
}

fn reason_key(reason: &VerdictReason) -> &'static str {
    match reason {
        VerdictReason::Accepted => "accepted",
        VerdictReason::SmallSingularValue => "small-singular-value",
        VerdictReason::CycleDetected { .. } => "cycle-detected",
        VerdictReason::EntryExceedsK { .. } => "entry-exceeds-k",
        VerdictReason::NoSTPath => "no-st-path",
    }
}

fn run_recognize(args: RecognizeArgs) -> Result<RunReport, ConfigError> {
    require_seed_for_generator(&args.graph, args.seed)?;
    let noise = args.noise.resolve(args.seed)?;
    let (g, label) = args.graph.resolve(args.seed)?;
    node_in_range(args.s, &g, "--s")?;
    node_in_range(args.t, &g, "--t")?;
    if args.k < 1 {
        return Err(ConfigError::new("--k must be at least 1"));
    }

    let member = stcon_sf_member(&g, args.s, args.t, args.k);
    let total = Instant::now();
    let mut instances = Vec::new();
    let mut accepted = 0usize;
    let mut wrong = 0usize;
    let mut reasons: BTreeMap<&'static str, usize> = BTreeMap::new();
    for i in 0..args.trials {
        let seed = trial_seed(args.seed, i);
        let run_noise = noise.with_seed(seed);
        let t0 = Instant::now();
        let outcome = if args.strict_entry_sweep {
            recognize_stcon_sf_strict(&g, args.s, args.t, args.k, &run_noise)
        } else {
            recognize_stcon_sf(&g, args.s, args.t, args.k, &run_noise)
        };
        let timing_ms = t0.elapsed().as_secs_f64() * 1e3;
        let record = match outcome {
            Ok(verdict) => {
                if verdict.accepted {
                    accepted += 1;
                }
                if verdict.accepted != member {
                    wrong += 1;
                }
                *reasons.entry(reason_key(&verdict.reason)).or_default() += 1;
                InstanceRecord {
                    id: i as usize,
                    seed: Some(seed),
                    result: Some(to_value(&verdict)),
                    error: None,
                    timing_ms,
                }
            }
            Err(e) => InstanceRecord {
                id: i as usize,
                seed: Some(seed),
                result: None,
                error: Some(e.to_string()),
                timing_ms,
            },
        };
        instances.push(record);
        progress(i + 1, args.trials);
    }

    Ok(RunReport {
        command: "recognize".into(),
        graph: label,
        config: json!({
            "s": args.s,
            "t": args.t,
            "k": args.k,
            "noise": args.noise.echo(),
            "seed": args.seed,
            "trials": args.trials,
            "strict_entry_sweep": args.strict_entry_sweep,
        }),
        aggregate: json!({
            "trials": args.trials,
            "errors": instances.iter().filter(|r| r.error.is_some()).count(),
            "oracle_member": member,
            "accepted": accepted,
            "wrong_verdicts": wrong,
            "reasons": reasons,
        }),
        instances,
        timing_ms_total: total.elapsed().as_secs_f64() * 1e3,
    })
}

// ------------------------------------------------------------- classify --

#[derive(Args)]
struct ClassifyArgs {
    #[command(flatten)]
    graph: GraphArgs,

    #[arg(long = "s")]
    s: usize,

    #[arg(long = "t")]
    t: usize,

    #[arg(long = "k")]
    k: u64,

    #[arg(long)]
    seed: Option<u64>,

    #[arg(long)]
    out: Option<PathBuf>,
}

fn run_classify(args: ClassifyArgs) -> Result<RunReport, ConfigError> {
    require_seed_for_generator(&args.graph, args.seed)?;
    let (g, label) = args.graph.resolve(args.seed)?;
    node_in_range(args.s, &g, "--s")?;
    node_in_range(args.t, &g, "--t")?;
    if args.k < 1 {
        return Err(ConfigError::new("--k must be at least 1"));
    }
    let total = Instant::now();
    let t0 = Instant::now();
    let report = classify(&g, args.s, args.t, args.k);
    let timing_ms = t0.elapsed().as_secs_f64() * 1e3;
    Ok(RunReport {
        command: "classify".into(),
        graph: label,
        config: json!({"s": args.s, "t": args.t, "k": args.k, "seed": args.seed}),
        aggregate: json!({
            "unambiguous_st": report.unambiguous_st,
            "reach_unambiguous_s": report.reach_unambiguous_s,
            "strongly_unambiguous": report.strongly_unambiguous,
        }),
        instances: vec![InstanceRecord {
            id: 0,
            seed: args.seed,
            result: Some(to_value(&report)),
            error: None,
            timing_ms,
        }],
        timing_ms_total: total.elapsed().as_secs_f64() * 1e3,
    })
}

// ------------------------------------------------------------- spectrum --

#[derive(Args)]
struct SpectrumArgs {
    #[command(flatten)]
    graph: GraphArgs,

    #[command(flatten)]
    noise: NoiseArgs,

    #[arg(long)]
    seed: Option<u64>,

    #[arg(long)]
    out: Option<PathBuf>,
}

fn run_spectrum(args: SpectrumArgs) -> Result<RunReport, ConfigError> {
    require_seed_for_generator(&args.graph, args.seed)?;
    let noise = args.noise.resolve(args.seed)?;
    let (g, label) = args.graph.resolve(args.seed)?;
    let n = g.node_count();
    let laplacian = counting_laplacian(&g);

    let total = Instant::now();
    let t0 = Instant::now();
    let outcome = spectrum_estimate(&laplacian, &noise);
    let timing_ms = t0.elapsed().as_secs_f64() * 1e3;

    let (result, error, consistency) = match outcome {
        Ok(est) => {
            // For acyclic graphs with a finite certified max count the
            // smallest singular value must land in the bracket
            // [1/(n maxN), 1/maxN].
            let consistency = if g.is_acyclic() {
                let counts = count_paths_oracle(&g, 1u64 << 40);
                counts.max_finite().map(|max| {
                    let max_f = PathCount::Finite(max.clone()).to_f64().unwrap_or(f64::MAX);
                    let lower = 1.0 / (n as f64 * max_f);
                    let upper = 1.0 / max_f;
                    let sigma_min = est.min_value();
                    json!({
                        "max_count": max.to_string(),
                        "sigma_min_lower_bound": lower,
                        "sigma_min_upper_bound": upper,
                        "within": sigma_min >= lower * (1.0 - 1e-9)
                            && sigma_min <= upper * (1.0 + 1e-9),
                    })
                })
            } else {
                None
            };
            (
                Some(json!({
                    "sigma": est.values,
                    "sigma_min": est.min_value(),
                    "sigma_max": est.values.first().copied().unwrap_or(0.0),
                    "failed": est.failed,
                })),
                None,
                consistency,
            )
        }
        Err(e) => (None, Some(e.to_string()), None),
    };

    Ok(RunReport {
        command: "spectrum".into(),
        graph: label,
        config: json!({"noise": args.noise.echo(), "seed": args.seed, "n": n}),
        aggregate: json!({"consistency": consistency}),
        instances: vec![InstanceRecord {
            id: 0,
            seed: args.seed,
            result,
            error,
            timing_ms,
        }],
        timing_ms_total: total.elapsed().as_secs_f64() * 1e3,
    })
}

// ----------------------------------------------------------------- walk --

#[derive(Args)]
struct WalkArgs {
    #[command(flatten)]
    graph: GraphArgs,

    #[arg(long = "s")]
    s: usize,

    #[arg(long = "t")]
    t: usize,

    /// Step budget per trial (default: 4 n)
    #[arg(long = "max-steps")]
    max_steps: Option<usize>,

    #[arg(long, default_value_t = 100_000)]
    trials: u64,

    #[arg(long)]
    seed: Option<u64>,

    #[arg(long)]
    out: Option<PathBuf>,
}

fn run_walk(args: WalkArgs) -> Result<RunReport, ConfigError> {
    require_seed_for_generator(&args.graph, args.seed)?;
    let (g, label) = args.graph.resolve(args.seed)?;
    node_in_range(args.s, &g, "--s")?;
    node_in_range(args.t, &g, "--t")?;
    if args.trials < 1 {
        return Err(ConfigError::new("--trials must be at least 1"));
    }
    let max_steps = args.max_steps.unwrap_or(4 * g.node_count());
    let seed = args.seed.unwrap_or(0);

    let total = Instant::now();
    let estimate = random_walk_hit_probability(&g, args.s, args.t, max_steps, args.trials, seed);
    let std_error = (estimate * (1.0 - estimate) / args.trials as f64).sqrt();
    Ok(RunReport {
        command: "walk".into(),
        graph: label,
        config: json!({
            "s": args.s, "t": args.t, "max_steps": max_steps,
            "trials": args.trials, "seed": seed,
        }),
        aggregate: json!({"estimate": estimate, "std_error_binomial": std_error}),
        instances: vec![InstanceRecord {
            id: 0,
            seed: Some(seed),
            result: Some(json!({"estimate": estimate})),
            error: None,
            timing_ms: total.elapsed().as_secs_f64() * 1e3,
        }],
        timing_ms_total: total.elapsed().as_secs_f64() * 1e3,
    })
}

// -------------------------------------------------------------- savitch --

#[derive(Args)]
struct SavitchArgs {
    #[command(flatten)]
    graph: GraphArgs,

    #[arg(long = "s")]
    s: usize,

    #[arg(long = "t")]
    t: usize,

    #[arg(long)]
    seed: Option<u64>,

    #[arg(long)]
    out: Option<PathBuf>,
}

fn run_savitch(args: SavitchArgs) -> Result<RunReport, ConfigError> {
    require_seed_for_generator(&args.graph, args.seed)?;
    let (g, label) = args.graph.resolve(args.seed)?;
    node_in_range(args.s, &g, "--s")?;
    node_in_range(args.t, &g, "--t")?;
    let total = Instant::now();
    let run = savitch_reachable(&g, args.s, args.t);
    let agrees = g.reachable_from(args.s)[args.t] == run.reachable;
    Ok(RunReport {
        command: "savitch".into(),
        graph: label,
        config: json!({"s": args.s, "t": args.t, "seed": args.seed}),
        aggregate: json!({"reachable": run.reachable, "agrees_with_bfs": agrees}),
        instances: vec![InstanceRecord {
            id: 0,
            seed: None,
            result: Some(to_value(&run)),
            error: None,
            timing_ms: total.elapsed().as_secs_f64() * 1e3,
        }],
        timing_ms_total: total.elapsed().as_secs_f64() * 1e3,
    })
}

// ---------------------------------------------------------------- bench --

#[derive(Args)]
struct BenchArgs {
    #[command(flatten)]
    graph: GraphArgs,

    #[arg(long = "s")]
    s: usize,

    #[arg(long = "t")]
    t: usize,

    /// Path bound handed to the counters
    #[arg(long = "P", default_value_t = 1)]
    p_bound: u64,

    #[arg(long, default_value_t = 3)]
    trials: u64,

    #[arg(long)]
    seed: Option<u64>,

    #[arg(long)]
    out: Option<PathBuf>,
}

fn run_bench(args: BenchArgs) -> Result<RunReport, ConfigError> {
    require_seed_for_generator(&args.graph, args.seed)?;
    let (g, label) = args.graph.resolve(args.seed)?;
    node_in_range(args.s, &g, "--s")?;
    node_in_range(args.t, &g, "--t")?;
    if args.trials < 1 {
        return Err(ConfigError::new("--trials must be at least 1"));
    }
    let noise = NoiseModel::exact();
    let total = Instant::now();

    let mut timings: BTreeMap<&'static str, f64> = BTreeMap::new();
    let mut results: BTreeMap<&'static str, Value> = BTreeMap::new();
    {
        let t0 = Instant::now();
        let mut last = None;
        for _ in 0..args.trials {
            last = Some(count_paths_oracle(&g, 1_000_000));
        }
        timings.insert("oracle", t0.elapsed().as_secs_f64() * 1e3 / args.trials as f64);
        results.insert(
            "oracle_count",
            json!(last.unwrap().get(args.s, args.t).to_string()),
        );
    }
    {
        let t0 = Instant::now();
        let mut last = None;
        for _ in 0..args.trials {
            last = Some(count_paths_strongly_few(&g, args.s, args.t, args.p_bound, &noise));
        }
        timings.insert(
            "strongly_few",
            t0.elapsed().as_secs_f64() * 1e3 / args.trials as f64,
        );
        results.insert(
            "strongly_few_count",
            match last.unwrap() {
                Ok(r) => json!(r.count),
                Err(e) => json!(format!("error: {e}")),
            },
        );
    }
    {
        let t0 = Instant::now();
        let mut last = None;
        for _ in 0..args.trials {
            last = Some(count_paths_few_endpoints(&g, args.s, args.t, args.p_bound, &noise));
        }
        timings.insert(
            "few_endpoints",
            t0.elapsed().as_secs_f64() * 1e3 / args.trials as f64,
        );
        results.insert(
            "few_endpoints_count",
            match last.unwrap() {
                Ok(r) => json!(r.count),
                Err(e) => json!(format!("error: {e}")),
            },
        );
    }
    {
        let t0 = Instant::now();
        let mut last = None;
        for _ in 0..args.trials {
            last = Some(savitch_reachable(&g, args.s, args.t));
        }
        timings.insert("savitch", t0.elapsed().as_secs_f64() * 1e3 / args.trials as f64);
        results.insert("savitch_reachable", json!(last.unwrap().reachable));
    }

    Ok(RunReport {
        command: "bench".into(),
        graph: label,
        config: json!({
            "s": args.s, "t": args.t, "P": args.p_bound,
            "trials": args.trials, "seed": args.seed,
        }),
        aggregate: json!({
            "results": results,
            "timing_ms_mean": timings,
        }),
        instances: vec![],
        timing_ms_total: total.elapsed().as_secs_f64() * 1e3,
    })
}

// ------------------------------------------------------------------ gen --

#[derive(ValueEnum, Clone, Copy, PartialEq, Eq, Debug)]
enum Family {
    Chain,
    Diamond,
    Dag,
}

#[derive(Args)]
struct GenArgs {
    /// Graph family to generate
    #[arg(long, value_enum)]
    family: Family,

    /// Comma-separated parameter grid (half values, m values or n values)
    #[arg(long)]
    grid: String,

    /// Edge density for the dag family
    #[arg(long)]
    density: Option<f64>,

    #[arg(long)]
    seed: Option<u64>,

    /// Output directory (or $FEWPATHS_OUT_DIR)
    #[arg(long)]
    out: Option<PathBuf>,

    /// Cap used when certifying path counts for the manifest
    #[arg(long = "cert-cap", default_value_t = 1_000_000)]
    cert_cap: u64,
}

fn run_gen(args: GenArgs) -> Result<RunReport, ConfigError> {
    let grid: Vec<usize> = args
        .grid
        .split(',')
        .filter(|s| !s.trim().is_empty())
        .map(|s| {
            s.trim()
                .parse()
                .map_err(|_| ConfigError::new(format!("invalid grid value {s:?}")))
        })
        .collect::<Result<_, _>>()?;
    if grid.is_empty() {
        return Err(ConfigError::new("--grid must list at least one value"));
    }
    if args.family == Family::Dag {
        if args.density.is_none() {
            return Err(ConfigError::new("--family dag requires --density"));
        }
        if args.seed.is_none() {
            return Err(ConfigError::new("--family dag requires --seed"));
        }
    }
    let dir = match (&args.out, std::env::var_os(report::OUT_DIR_ENV)) {
        (Some(dir), _) => dir.clone(),
        (None, Some(dir)) => PathBuf::from(dir),
        (None, None) => {
            return Err(ConfigError::new(
                "gen requires --out or the FEWPATHS_OUT_DIR environment variable",
            ))
        }
    };
    fs::create_dir_all(&dir)
        .map_err(|e| ConfigError::new(format!("cannot create {}: {e}", dir.display())))?;

    let total = Instant::now();
    let mut instances = Vec::new();
    let mut manifest_entries = Vec::new();
    for (i, &param) in grid.iter().enumerate() {
        let t0 = Instant::now();
        let (g, file, params) = match args.family {
            Family::Chain => (
                gen_chain_figure1(param.max(1)),
                format!("chain_half{param:03}.txt"),
                json!({"half": param}),
            ),
            Family::Diamond => (
                gen_diamond_chain(param.max(1)),
                format!("diamond_m{param:03}.txt"),
                json!({"m": param}),
            ),
            Family::Dag => {
                let density = args.density.unwrap();
                let seed = trial_seed(args.seed, i as u64);
                (
                    gen_random_dag(param.max(1), density, seed),
                    format!("dag_n{param:03}_i{i}.txt"),
                    json!({"n": param, "density": density, "seed": seed}),
                )
            }
        };
        let path = dir.join(&file);
        let header = format!("# generated: {} {}\n", file.trim_end_matches(".txt"), params);
        let write_result = fs::write(&path, header + &g.to_edge_list());
        let certificate = GraphCertificate::certify(&g, args.cert_cap);
        let record = match write_result {
            Ok(()) => {
                manifest_entries.push(json!({
                    "file": file,
                    "params": params,
                    "certificate": to_value(&certificate),
                }));
                InstanceRecord {
                    id: i,
                    seed: args.seed,
                    result: Some(json!({
                        "file": path.display().to_string(),
                        "certificate": to_value(&certificate),
                    })),
                    error: None,
                    timing_ms: t0.elapsed().as_secs_f64() * 1e3,
                }
            }
            Err(e) => InstanceRecord {
                id: i,
                seed: args.seed,
                result: None,
                error: Some(format!("cannot write {}: {e}", path.display())),
                timing_ms: t0.elapsed().as_secs_f64() * 1e3,
            },
        };
        instances.push(record);
    }

    let manifest = json!({
        "generator": format!("{:?}", args.family),
        "seed": args.seed,
        "cert_cap": args.cert_cap,
        "entries": manifest_entries,
    });
    let manifest_path = dir.join("manifest.json");
    fs::write(
        &manifest_path,
        serde_json::to_string_pretty(&manifest).expect("manifest serializes") + "\n",
    )
    .map_err(|e| ConfigError::new(format!("cannot write manifest: {e}")))?;

    Ok(RunReport {
        command: "gen".into(),
        graph: format!("{:?} grid {:?}", args.family, grid),
        config: json!({
            "family": format!("{:?}", args.family),
            "grid": grid,
            "density": args.density,
            "seed": args.seed,
            "cert_cap": args.cert_cap,
            "dir": dir.display().to_string(),
        }),
        aggregate: json!({
            "files": instances.iter().filter(|r| r.error.is_none()).count(),
            "manifest": manifest_path.display().to_string(),
        }),
        instances,
        timing_ms_total: total.elapsed().as_secs_f64() * 1e3,
    })
}
