//! gmfa: plan budget-constrained attribute upgrades over a binary dataset.
//!
//! `gen` writes seeded synthetic data, `mine` persists the maximal frequent
//! attribute sets for a threshold, `solve` picks the best affordable upgrade
//! for a tuple, `fbc` prints the frequent-set count below one node, and
//! `bench` sweeps one variable and emits timing rows as CSV.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Duration;

use anyhow::{anyhow, bail, Context, Result};
use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};
use gmfa_core::fbc::{fbc_with_stats, mine_maximal_frequents, FbcConfig, MaximalFrequentSet};
use gmfa_core::gain::{FbcGain, FeedbackGain, GainFunction, WorkloadGain};
use gmfa_core::model::{parse_dataset, AttrSet, Dataset, Money};
use gmfa_core::solver::{solve_baseline, solve_ggmfa, solve_igmfa, SolveError, SolveRequest};
use gmfa_core::synth::{CostModel, SynthSpec};

mod bench;

const EXIT_INVALID: u8 = 2;
const EXIT_TIMEOUT: u8 = 3;

#[derive(Parser)]
#[command(name = "gmfa", version, about = "Budgeted attribute-upgrade planning")]
struct Cli {
    /// Attribute matrix CSV: a header of attribute names, then 0/1 rows.
    #[arg(long, global = true, value_name = "FILE")]
    dataset: Option<PathBuf>,

    /// Cost CSV: one `name,amount` line per attribute (whole units,{n}
    /// decimals allowed).
    #[arg(long, global = true, value_name = "FILE")]
    costs: Option<PathBuf>,

    /// Seed for everything randomized; equal seeds give equal output.
    #[arg(long, global = true, default_value_t = 7)]
    seed: u64,

    /// Wall-clock limit per run, in seconds (0 expires immediately).
    #[arg(long, global = true, default_value_t = 60)]
    timeout_s: u64,

    /// Emit machine-readable JSON where the command supports it.
    #[arg(long, global = true, conflicts_with = "csv")]
    json: bool,

    /// Emit CSV where the command supports it.
    #[arg(long, global = true)]
    csv: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Write a seeded synthetic dataset and its matching cost file.
    Gen(GenArgs),
    /// Mine the maximal frequent attribute sets and persist them.
    Mine(MineArgs),
    /// Choose the best affordable attribute upgrade for one tuple.
    Solve(SolveArgs),
    /// Print the frequent-set count below an explicit node.
    Fbc(FbcArgs),
    /// Sweep one variable over synthetic data and emit timing rows.
    Bench(bench::BenchArgs),
}

#[derive(Args)]
struct GenArgs {
    /// Rows to generate.
    #[arg(long, default_value_t = 1000)]
    n: usize,

    /// Attributes to generate.
    #[arg(long, default_value_t = 10)]
    m: usize,

    /// Per-cell probability outside any correlated group.
    #[arg(long, default_value_t = 0.25)]
    density: f64,

    /// Comma-separated sizes of correlated attribute groups, packed from
    /// attribute 0 upward; `none` for independent columns only.
    #[arg(long, default_value = "3,3")]
    groups: String,

    /// Probability that a row activates a group.
    #[arg(long, default_value_t = 0.35)]
    activation: f64,

    /// Probability that an active group sets each of its members.
    #[arg(long, default_value_t = 0.9)]
    within: f64,

    /// `brackets` (mostly mid-range with an expensive tail),
    /// `uniform:LO:HI`, or `fixed:UNITS`.
    #[arg(long, default_value = "brackets")]
    cost_model: String,

    /// Output path for the dataset CSV.
    #[arg(long, value_name = "FILE")]
    out_dataset: PathBuf,

    /// Output path for the cost CSV.
    #[arg(long, value_name = "FILE")]
    out_costs: PathBuf,
}

#[derive(Args)]
struct MineArgs {
    /// Support threshold: a decimal in (0,1] or a fraction like `3/10`.
    #[arg(long)]
    tau: String,

    /// Output path for the mined maximal-frequent-set file.
    #[arg(long, value_name = "FILE")]
    out: PathBuf,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Algorithm {
    /// Enumerate every affordable subset.
    BGmfa,
    /// Top-down lattice search with feasibility pruning.
    IGmfa,
    /// Cost-ordered tree that scores only maximal affordable nodes.
    GGmfa,
}

#[derive(Args)]
#[command(group = ArgGroup::new("gain").required(true).multiple(false))]
struct GainSpec {
    /// Frequent-count gain, mining at this threshold first.
    #[arg(long, group = "gain")]
    tau: Option<String>,

    /// Frequent-count gain from a previously mined file.
    #[arg(long, group = "gain", value_name = "FILE")]
    frequents_file: Option<PathBuf>,

    /// Additive feedback gain: one non-negative score per dataset row.
    #[arg(long, group = "gain", value_name = "FILE")]
    feedback_file: Option<PathBuf>,

    /// Workload gain: one comma-separated attribute list per line (a blank
    /// line is the empty query).
    #[arg(long, group = "gain", value_name = "FILE")]
    workload_file: Option<PathBuf>,
}

#[derive(Args)]
struct SolveArgs {
    #[arg(long, value_enum, default_value_t = Algorithm::GGmfa)]
    algorithm: Algorithm,

    /// The tuple to upgrade: `row:IDX` or `attrs:name,name,...`
    /// (`attrs:` alone for a tuple with nothing yet).
    #[arg(long)]
    tuple: String,

    /// Upgrade budget in currency units; decimals allowed.
    #[arg(long)]
    budget: String,

    #[command(flatten)]
    gain: GainSpec,

    /// Start the search at the deepest affordable level instead of the top.
    #[arg(long)]
    low_budget_jump: bool,
}

#[derive(Args)]
struct FbcArgs {
    /// Node spec: a 0/1 string over all attributes, `row:IDX`, or
    /// `attrs:name,...`.
    #[arg(long)]
    node: String,

    #[command(flatten)]
    gain: GainSpec,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(EXIT_INVALID)
        }
    }
}

fn run(cli: &Cli) -> Result<u8> {
    match &cli.command {
        Command::Gen(args) => cmd_gen(cli, args),
        Command::Mine(args) => cmd_mine(cli, args),
        Command::Solve(args) => cmd_solve(cli, args),
        Command::Fbc(args) => cmd_fbc(cli, args),
        Command::Bench(args) => bench::cmd_bench(cli, args),
    }
}

fn load_dataset(cli: &Cli) -> Result<Dataset> {
    let dataset = cli
        .dataset
        .as_ref()
        .ok_or_else(|| anyhow!("--dataset is required by this command"))?;
    let costs = cli
        .costs
        .as_ref()
        .ok_or_else(|| anyhow!("--costs is required by this command"))?;
    let data_text = fs::read_to_string(dataset)
        .with_context(|| format!("reading {}", dataset.display()))?;
    let costs_text =
        fs::read_to_string(costs).with_context(|| format!("reading {}", costs.display()))?;
    parse_dataset(&data_text, &costs_text).map_err(|e| anyhow!("{e}"))
}

fn parse_tuple_spec(spec: &str, d: &Dataset) -> Result<AttrSet> {
    if let Some(idx) = spec.strip_prefix("row:") {
        let r: usize = idx.trim().parse().context("row index must be an integer")?;
        if r >= d.n() {
            bail!("row {r} out of range; the dataset has {} rows", d.n());
        }
        Ok(d.row(r))
    } else if let Some(list) = spec.strip_prefix("attrs:") {
        let mut set = AttrSet::EMPTY;
        for name in list.split(',').map(str::trim).filter(|s| !s.is_empty()) {
            let k = d
                .catalog()
                .attr_index(name)
                .ok_or_else(|| anyhow!("unknown attribute {name:?}"))?;
            set = set.with(k);
        }
        Ok(set)
    } else {
        bail!("tuple spec must be `row:IDX` or `attrs:name,...`, got {spec:?}")
    }
}

fn parse_node_spec(spec: &str, d: &Dataset) -> Result<AttrSet> {
    if spec.chars().all(|c| c == '0' || c == '1') {
        match AttrSet::parse_bits(spec) {
            Some((set, width)) if width == d.m() => return Ok(set),
            _ => bail!("bit string {spec:?} does not have {} digits", d.m()),
        }
    }
    parse_tuple_spec(spec, d)
}

/// The mined set backing a frequent-count gain: either load a persisted file
/// (validated against the dataset) or mine right here.
fn load_frequents(
    spec: &GainSpec,
    d: &Dataset,
) -> Result<Option<(MaximalFrequentSet, Duration)>> {
    if let Some(path) = &spec.frequents_file {
        let text =
            fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
        let fv = MaximalFrequentSet::from_file_string(&text, d)
            .with_context(|| format!("validating {}", path.display()))?;
        return Ok(Some((fv, Duration::ZERO)));
    }
    if let Some(tau) = &spec.tau {
        let cfg = FbcConfig::parse(tau).map_err(|e| anyhow!("{e}"))?;
        let t0 = std::time::Instant::now();
        let fv = mine_maximal_frequents(d, &cfg);
        return Ok(Some((fv, t0.elapsed())));
    }
    Ok(None)
}

fn build_gain(spec: &GainSpec, d: &Dataset) -> Result<Box<dyn GainFunction>> {
    if let Some((fv, _)) = load_frequents(spec, d)? {
        return Ok(Box::new(FbcGain::new(fv, d).map_err(|e| anyhow!("{e}"))?));
    }
    if let Some(path) = &spec.feedback_file {
        let text =
            fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
        let scores: Vec<f64> = text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty())
            .map(|l| l.parse::<f64>().with_context(|| format!("feedback score {l:?}")))
            .collect::<Result<_>>()?;
        return Ok(Box::new(FeedbackGain::new(&scores, d).map_err(|e| anyhow!("{e}"))?));
    }
    if let Some(path) = &spec.workload_file {
        let text =
            fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
        let mut queries = Vec::new();
        for line in text.lines() {
            let mut q = AttrSet::EMPTY;
            for name in line.split(',').map(str::trim).filter(|s| !s.is_empty()) {
                let k = d
                    .catalog()
                    .attr_index(name)
                    .ok_or_else(|| anyhow!("unknown attribute {name:?} in workload"))?;
                q = q.with(k);
            }
            queries.push(q);
        }
        return Ok(Box::new(WorkloadGain::new(queries, true).map_err(|e| anyhow!("{e}"))?));
    }
    bail!("one of --tau, --frequents-file, --feedback-file, --workload-file is required")
}

fn cmd_gen(cli: &Cli, args: &GenArgs) -> Result<u8> {
    if args.m == 0 || args.m > 64 {
        bail!("--m must be between 1 and 64");
    }
    for (flag, p) in [
        ("--density", args.density),
        ("--activation", args.activation),
        ("--within", args.within),
    ] {
        if !(0.0..=1.0).contains(&p) {
            bail!("{flag} must be a probability in [0, 1]");
        }
    }
    let sizes: Vec<usize> = if args.groups.trim().eq_ignore_ascii_case("none") {
        Vec::new()
    } else {
        args.groups
            .split(',')
            .map(|s| s.trim().parse::<usize>().with_context(|| format!("group size {s:?}")))
            .collect::<Result<_>>()?
    };
    if sizes.iter().sum::<usize>() > args.m {
        bail!("group sizes add up past --m");
    }
    let mut spec = SynthSpec::grouped(
        args.n,
        args.m,
        &sizes,
        args.activation,
        args.within,
        args.density,
        cli.seed,
    );
    spec.costs = parse_cost_model(&args.cost_model)?;
    let d = spec.generate();

    fs::write(&args.out_dataset, dataset_csv(&d))
        .with_context(|| format!("writing {}", args.out_dataset.display()))?;
    fs::write(&args.out_costs, costs_csv(&d))
        .with_context(|| format!("writing {}", args.out_costs.display()))?;
    if cli.json {
        println!(
            "{}",
            serde_json::json!({
                "rows": d.n(),
                "attributes": d.m(),
                "dataset": args.out_dataset.display().to_string(),
                "costs": args.out_costs.display().to_string(),
            })
        );
    } else {
        println!(
            "wrote {} rows x {} attributes to {} (costs: {})",
            d.n(),
            d.m(),
            args.out_dataset.display(),
            args.out_costs.display()
        );
    }
    Ok(0)
}

fn parse_cost_model(text: &str) -> Result<CostModel> {
    let parts: Vec<&str> = text.split(':').collect();
    match parts.as_slice() {
        ["brackets"] => Ok(CostModel::Brackets),
        ["uniform", lo, hi] => {
            let lo: u64 = lo.parse().context("uniform lower bound")?;
            let hi: u64 = hi.parse().context("uniform upper bound")?;
            if lo == 0 || lo > hi {
                bail!("uniform bounds must satisfy 0 < LO <= HI");
            }
            Ok(CostModel::Uniform { lo, hi })
        }
        ["fixed", units] => {
            let units: u64 = units.parse().context("fixed cost")?;
            if units == 0 {
                bail!("fixed cost must be positive");
            }
            Ok(CostModel::Fixed(units))
        }
        _ => bail!("cost model must be `brackets`, `uniform:LO:HI`, or `fixed:UNITS`"),
    }
}

fn dataset_csv(d: &Dataset) -> String {
    let mut out = d.catalog().names().join(",");
    out.push('\n');
    for r in 0..d.n() {
        let row = d.row(r);
        let mut first = true;
        for k in 0..d.m() {
            if !first {
                out.push(',');
            }
            out.push(if row.contains(k) { '1' } else { '0' });
            first = false;
        }
        out.push('\n');
    }
    out
}

fn costs_csv(d: &Dataset) -> String {
    let mut out = String::from("name,cost\n");
    for k in 0..d.m() {
        out.push_str(&format!("{},{}\n", d.catalog().name(k), d.catalog().cost(k)));
    }
    out
}

fn cmd_mine(cli: &Cli, args: &MineArgs) -> Result<u8> {
    let d = load_dataset(cli)?;
    let cfg = FbcConfig::parse(&args.tau).map_err(|e| anyhow!("{e}"))?;
    let t0 = std::time::Instant::now();
    let fv = mine_maximal_frequents(&d, &cfg);
    let elapsed = t0.elapsed();
    fs::write(&args.out, fv.to_file_string())
        .with_context(|| format!("writing {}", args.out.display()))?;
    if cli.json {
        println!(
            "{}",
            serde_json::json!({
                "maximal_sets": fv.len(),
                "elapsed_ms": elapsed.as_secs_f64() * 1e3,
                "path": args.out.display().to_string(),
            })
        );
    } else {
        println!(
            "mined {} maximal frequent sets at tau={} in {:.3} ms -> {}",
            fv.len(),
            cfg,
            elapsed.as_secs_f64() * 1e3,
            args.out.display()
        );
    }
    Ok(0)
}

fn cmd_solve(cli: &Cli, args: &SolveArgs) -> Result<u8> {
    let d = load_dataset(cli)?;
    let tuple = parse_tuple_spec(&args.tuple, &d)?;
    let budget = Money::parse(&args.budget)
        .ok_or_else(|| anyhow!("budget {:?} is not a non-negative amount", args.budget))?;
    let gain = build_gain(&args.gain, &d)?;

    let mut req = SolveRequest::new(tuple, budget, gain.as_ref())
        .with_timeout(Duration::from_secs(cli.timeout_s));
    if args.low_budget_jump {
        req = req.with_low_budget_jump();
    }
    let solve = match args.algorithm {
        Algorithm::BGmfa => solve_baseline,
        Algorithm::IGmfa => solve_igmfa,
        Algorithm::GGmfa => solve_ggmfa,
    };
    match solve(&req, &d) {
        Ok(result) => {
            if cli.csv {
                println!("chosen,gain,nodes_generated,gain_evals,elapsed_ms");
                println!(
                    "{},{},{},{},{:.3}",
                    d.catalog().names_of(result.chosen).join(";"),
                    result.gain_value,
                    result.stats.nodes_generated,
                    result.stats.gain_evals,
                    result.stats.elapsed.as_secs_f64() * 1e3
                );
            } else {
                println!("{}", result.to_json(d.catalog()));
            }
            Ok(0)
        }
        Err(SolveError::Timeout(stats)) => {
            println!(
                "{}",
                serde_json::json!({
                    "timed_out": true,
                    "nodes_generated": stats.nodes_generated,
                    "gain_evals": stats.gain_evals,
                    "elapsed_ms": stats.elapsed.as_secs_f64() * 1e3,
                })
            );
            Ok(EXIT_TIMEOUT)
        }
        Err(SolveError::Gain(e)) => Err(anyhow!("{e}")),
    }
}

fn cmd_fbc(cli: &Cli, args: &FbcArgs) -> Result<u8> {
    let d = load_dataset(cli)?;
    let node = parse_node_spec(&args.node, &d)?;
    let (fv, _) = load_frequents(&args.gain, &d)?
        .ok_or_else(|| anyhow!("fbc needs --tau or --frequents-file"))?;
    let projected = fv.project(node);
    let (count, stats) = fbc_with_stats(node, &projected);
    if cli.json {
        // The count can exceed u64 at wide catalogs, so it rides as a string.
        println!(
            "{}",
            serde_json::json!({
                "node": node.bit_string(d.m()),
                "fbc": count.to_string(),
                "patterns": stats.patterns,
                "recursion_calls": stats.recursion_calls,
            })
        );
    } else {
        println!(
            "FBC({}) = {} ({} patterns, {} recursion calls)",
            node.bit_string(d.m()),
            count,
            stats.patterns,
            stats.recursion_calls
        );
    }
    Ok(0)
}
