//! Timing sweeps over synthetic data. One variable sweeps, the others hold
//! at their defaults (200,000 rows, 15 attributes, a 2000-unit budget, a
//! 0.1 support threshold), and every (value, algorithm, repetition) becomes
//! one CSV row. Runs that hit the per-run deadline are marked, not hung.

use std::fmt::Write as _;
use std::fs;
use std::path::PathBuf;
use std::time::{Duration, Instant};

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, ValueEnum};
use gmfa_core::fbc::{
    fbc_apriori_deadline, fbc_with_stats, mine_maximal_frequents, FbcConfig, MaximalFrequentSet,
};
use gmfa_core::gain::FbcGain;
use gmfa_core::model::{AttrSet, Dataset, Money};
use gmfa_core::solver::{solve_baseline, solve_ggmfa, solve_igmfa, SolveError, SolveRequest};
use gmfa_core::synth::SynthSpec;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use crate::{Cli, EXIT_TIMEOUT};

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SweepVar {
    N,
    M,
    Budget,
    Tau,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum BenchAlgorithm {
    BGmfa,
    IGmfa,
    GGmfa,
    /// Per-query frequent count from the mined sets (mining excluded).
    Fbc,
    /// Per-query frequent count by levelwise dataset scans.
    AFbc,
}

impl BenchAlgorithm {
    fn label(self) -> &'static str {
        match self {
            BenchAlgorithm::BGmfa => "b-gmfa",
            BenchAlgorithm::IGmfa => "i-gmfa",
            BenchAlgorithm::GGmfa => "g-gmfa",
            BenchAlgorithm::Fbc => "fbc",
            BenchAlgorithm::AFbc => "a-fbc",
        }
    }

    fn is_solver(self) -> bool {
        !matches!(self, BenchAlgorithm::Fbc | BenchAlgorithm::AFbc)
    }
}

impl std::fmt::Display for BenchAlgorithm {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.label())
    }
}

#[derive(Args)]
pub struct BenchArgs {
    /// Variable to sweep.
    #[arg(long, value_enum)]
    sweep: SweepVar,

    /// Comma-separated sweep values (row counts, attribute counts, budget
    /// units, or thresholds, per --sweep).
    #[arg(long)]
    values: String,

    /// Comma-separated algorithms to run at each value.
    #[arg(long, value_delimiter = ',', default_values_t = [BenchAlgorithm::BGmfa, BenchAlgorithm::IGmfa, BenchAlgorithm::GGmfa])]
    algorithms: Vec<BenchAlgorithm>,

    /// Repetitions per (value, algorithm).
    #[arg(long, default_value_t = 3)]
    reps: u32,

    /// Fixed row count while another variable sweeps.
    #[arg(long, default_value_t = 200_000)]
    n: usize,

    /// Fixed attribute count while another variable sweeps.
    #[arg(long, default_value_t = 15)]
    m: usize,

    /// Fixed budget in currency units while another variable sweeps.
    #[arg(long, default_value = "2000")]
    budget: String,

    /// Fixed support threshold while another variable sweeps.
    #[arg(long, default_value = "0.1")]
    tau: String,

    /// Output CSV path; stdout when omitted.
    #[arg(long, value_name = "FILE")]
    out: Option<PathBuf>,
}

/// One fully resolved configuration: the swept value substituted into the
/// fixed defaults.
struct BenchConfig {
    value: String,
    n: usize,
    m: usize,
    budget: Money,
    tau: FbcConfig,
}

struct Plan {
    configs: Vec<BenchConfig>,
    algorithms: Vec<BenchAlgorithm>,
    reps: u32,
    timeout: Duration,
    seed: u64,
}

fn parse_plan(cli: &Cli, args: &BenchArgs) -> Result<Plan> {
    let base_budget = Money::parse(&args.budget)
        .ok_or_else(|| anyhow!("budget {:?} is not a non-negative amount", args.budget))?;
    let base_tau = FbcConfig::parse(&args.tau).map_err(|e| anyhow!("{e}"))?;
    if args.n == 0 || args.m == 0 || args.m > 64 {
        bail!("fixed n must be positive and fixed m in 1..=64");
    }
    if args.reps == 0 {
        bail!("--reps must be positive");
    }
    if args.algorithms.is_empty() {
        bail!("--algorithms must name at least one algorithm");
    }

    let raw: Vec<&str> =
        args.values.split(',').map(str::trim).filter(|s| !s.is_empty()).collect();
    if raw.is_empty() {
        bail!("--values must list at least one sweep value");
    }
    let mut configs = Vec::new();
    for v in raw {
        let mut c = BenchConfig {
            value: v.to_string(),
            n: args.n,
            m: args.m,
            budget: base_budget,
            tau: base_tau,
        };
        match args.sweep {
            SweepVar::N => {
                c.n = v.parse().with_context(|| format!("row count {v:?}"))?;
                if c.n == 0 {
                    bail!("swept row counts must be positive");
                }
            }
            SweepVar::M => {
                c.m = v.parse().with_context(|| format!("attribute count {v:?}"))?;
                if c.m == 0 || c.m > 64 {
                    bail!("swept attribute counts must be in 1..=64");
                }
            }
            SweepVar::Budget => {
                c.budget = Money::parse(v)
                    .ok_or_else(|| anyhow!("budget {v:?} is not a non-negative amount"))?;
            }
            SweepVar::Tau => {
                c.tau = FbcConfig::parse(v).map_err(|e| anyhow!("{e}"))?;
            }
        }
        configs.push(c);
    }
    // Keep the sweep ordered; rows come out sorted by plan order.
    let key = |c: &BenchConfig| (c.n, c.m, c.budget, c.tau.tau().to_bits());
    if !configs.windows(2).all(|w| key(&w[0]) <= key(&w[1])) {
        bail!("--values must be sorted ascending");
    }

    Ok(Plan {
        configs,
        algorithms: args.algorithms.clone(),
        reps: args.reps,
        timeout: Duration::from_secs(cli.timeout_s),
        seed: cli.seed,
    })
}

pub fn cmd_bench(cli: &Cli, args: &BenchArgs) -> Result<u8> {
    let plan = parse_plan(cli, args)?;
    let mut csv = String::from(
        "value,algorithm,rep,elapsed_ms,gain_evals,nodes_generated,gain,timed_out\n",
    );
    let mut any_timeout = false;

    for (idx, config) in plan.configs.iter().enumerate() {
        // Per-config instance, derived from the single CLI seed.
        let config_seed = plan.seed.wrapping_add((idx as u64).wrapping_mul(0x9e37_79b9));
        let d = bench_dataset(config, config_seed);
        let fv = mine_maximal_frequents(&d, &config.tau);
        let gain = FbcGain::new(fv.clone(), &d).map_err(|e| anyhow!("{e}"))?;

        // Query nodes are fixed per configuration so every counting
        // algorithm prices the same work.
        let mut query_rng = StdRng::seed_from_u64(config_seed ^ 0x5eed);
        let queries: Vec<AttrSet> =
            (0..plan.reps).map(|_| random_query(&mut query_rng, config.m)).collect();

        for &alg in &plan.algorithms {
            for rep in 0..plan.reps {
                let row = if alg.is_solver() {
                    run_solver(alg, config, &d, &gain, plan.timeout)
                } else {
                    run_counter(alg, config, &d, &fv, queries[rep as usize], plan.timeout)
                };
                any_timeout |= row.timed_out;
                writeln!(
                    csv,
                    "{},{},{},{:.3},{},{},{},{}",
                    config.value,
                    alg.label(),
                    rep,
                    row.elapsed.as_secs_f64() * 1e3,
                    row.gain_evals,
                    row.nodes_generated,
                    row.gain,
                    row.timed_out
                )
                .expect("string write");
            }
        }
    }

    match &args.out {
        Some(path) => fs::write(path, &csv)
            .with_context(|| format!("writing {}", path.display()))?,
        None => print!("{csv}"),
    }
    Ok(if any_timeout { EXIT_TIMEOUT } else { 0 })
}

struct BenchRow {
    elapsed: Duration,
    gain_evals: u64,
    nodes_generated: u64,
    gain: String,
    timed_out: bool,
}

fn bench_dataset(config: &BenchConfig, seed: u64) -> Dataset {
    // Two correlated blocks keep the frequent-set structure deep enough to
    // be worth counting; the rest is background noise.
    let block = (config.m / 3).max(2).min(config.m);
    let rest = config.m.saturating_sub(block).min(block);
    let mut sizes = vec![block];
    if rest >= 2 {
        sizes.push(rest);
    }
    SynthSpec::grouped(config.n, config.m, &sizes, 0.35, 0.9, 0.15, seed).generate()
}

fn random_query(rng: &mut StdRng, m: usize) -> AttrSet {
    // High-level nodes: the expensive counting cases live near the top.
    let mut node = AttrSet::full(m);
    for _ in 0..rng.gen_range(0..=2.min(m)) {
        node = node.without(rng.gen_range(0..m));
    }
    node
}

fn run_solver(
    alg: BenchAlgorithm,
    config: &BenchConfig,
    d: &Dataset,
    gain: &FbcGain,
    timeout: Duration,
) -> BenchRow {
    let req = SolveRequest::new(AttrSet::EMPTY, config.budget, gain).with_timeout(timeout);
    let solve = match alg {
        BenchAlgorithm::BGmfa => solve_baseline,
        BenchAlgorithm::IGmfa => solve_igmfa,
        BenchAlgorithm::GGmfa => solve_ggmfa,
        _ => unreachable!("counting algorithms take the other path"),
    };
    match solve(&req, d) {
        Ok(result) => BenchRow {
            elapsed: result.stats.elapsed,
            gain_evals: result.stats.gain_evals,
            nodes_generated: result.stats.nodes_generated,
            gain: format!("{}", result.gain_value),
            timed_out: false,
        },
        Err(SolveError::Timeout(stats)) => BenchRow {
            elapsed: stats.elapsed,
            gain_evals: stats.gain_evals,
            nodes_generated: stats.nodes_generated,
            gain: String::new(),
            timed_out: true,
        },
        Err(SolveError::Gain(e)) => panic!("gain failure on synthetic data: {e}"),
    }
}

fn run_counter(
    alg: BenchAlgorithm,
    config: &BenchConfig,
    d: &Dataset,
    fv: &MaximalFrequentSet,
    query: AttrSet,
    timeout: Duration,
) -> BenchRow {
    let t0 = Instant::now();
    match alg {
        BenchAlgorithm::Fbc => {
            let projected = fv.project(query);
            let (count, _) = fbc_with_stats(query, &projected);
            BenchRow {
                elapsed: t0.elapsed(),
                gain_evals: 0,
                nodes_generated: 0,
                gain: count.to_string(),
                timed_out: false,
            }
        }
        BenchAlgorithm::AFbc => {
            match fbc_apriori_deadline(query, d, &config.tau, Some(t0 + timeout)) {
                Ok(count) => BenchRow {
                    elapsed: t0.elapsed(),
                    gain_evals: 0,
                    nodes_generated: 0,
                    gain: count.to_string(),
                    timed_out: false,
                },
                Err(_) => BenchRow {
                    elapsed: t0.elapsed(),
                    gain_evals: 0,
                    nodes_generated: 0,
                    gain: String::new(),
                    timed_out: true,
                },
            }
        }
        _ => unreachable!("solvers take the other path"),
    }
}
