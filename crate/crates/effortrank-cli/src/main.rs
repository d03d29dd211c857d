//! `effortrank` — effort-aware defect prediction benchmark CLI.
//!
//! Exit codes: 0 success, 1 configuration error (bad flags, unresolvable
//! settings), 2 runtime failure (IO, missing datasets). Diagnostics go to
//! stderr; results go to files and stdout.

use std::collections::BTreeMap;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use effortrank::dataset::{write_dataset, DatasetSchema, TruthyRule};
use effortrank::learners::{learner_from_tag, LearnerSpec};
use effortrank::runner::{
    self, minor_chaos, read_key_values, LearnerHandle, ResultTable, RunConfig, RunnerError,
    SynthSpec,
};
use effortrank::strategies::Strategy;

const SEED_ENV: &str = "EFFORTRANK_SEED";

#[derive(Parser)]
#[command(
    name = "effortrank",
    version,
    about = "Effort-aware defect prediction benchmark: ranking strategies, \
             cost-effectiveness metrics, and reproducible experiment matrices"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run the manifest x learner x strategy benchmark matrix
    Run(RunArgs),
    /// Run the matrix with EA-Z replicated over a zeta grid
    SweepZeta(SweepArgs),
    /// Generate a synthetic train/test dataset pair
    Synth(SynthArgs),
    /// Recompute summary statistics from an existing results file
    Stats(StatsArgs),
    /// Walk through the minor-chaos fixture: how a 0.01 probability wobble
    /// reorders prob_loc and costs recall, while ea_z holds steady
    MinorChaosDemo,
}

#[derive(Args)]
struct RunArgs {
    /// Manifest file: comma-delimited rows (source, train, test); `#`
    /// comments ignored. The literal value `builtin` selects the shipped
    /// 61-pair cross-project setup
    #[arg(long)]
    manifest: Option<PathBuf>,
    /// Directory holding `<source>/<name>.csv` or `<name>.csv` dataset files
    #[arg(long)]
    data_dir: Option<PathBuf>,
    /// Comma-separated learner tags: lr, nb, ibk (k=8), c50, cart,
    /// rf (200 trees; 50 when nested), ubag_c50, ubag_cart, ubag_rf,
    /// ubst_c50, ubst_cart, ubst_rf (ensembles: ir=1, 10 bags/rounds).
    /// svm, jrip, ubag_svm, ubst_svm need --external probabilities
    #[arg(long)]
    learners: Option<String>,
    /// Comma-separated strategies: prob, label_loc, cbs_plus, prob_loc,
    /// ea_z, manual_up [default: all six]
    #[arg(long)]
    strategies: Option<String>,
    /// EA-Z lower bound [default: 0.05]
    #[arg(long)]
    zeta: Option<f64>,
    /// Classification threshold for label_loc and cbs_plus [default: 0.5]
    #[arg(long)]
    threshold: Option<f64>,
    /// Master seed [default: $EFFORTRANK_SEED, else 42]
    #[arg(long)]
    seed: Option<u64>,
    /// Repetitions per (pair, learner) cell [default: 1]
    #[arg(long)]
    repetitions: Option<usize>,
    /// Worker threads [default: 1]
    #[arg(long)]
    jobs: Option<usize>,
    /// Output directory
    #[arg(long)]
    out: Option<PathBuf>,
    /// Flat key-value config file; command-line flags take precedence
    #[arg(long)]
    config: Option<PathBuf>,
    /// External probability source, repeatable: tag=dir with files
    /// `<dir>/<train>__<test>.csv` (two columns: record id, probability)
    #[arg(long)]
    external: Vec<String>,
    /// Skip the ln(1+x) transform of model input features
    #[arg(long)]
    no_log_transform: bool,
    /// Keep records with zero effort instead of dropping them
    #[arg(long)]
    keep_zero_effort: bool,
    /// Name of the effort (LOC/churn) column [default: loc]
    #[arg(long)]
    effort_column: Option<String>,
    /// Name of the defect label column [default: bug]
    #[arg(long)]
    label_column: Option<String>,
    /// Name of the record id column; row numbers when absent
    #[arg(long)]
    id_column: Option<String>,
    /// Dataset field delimiter [default: ,]
    #[arg(long)]
    delimiter: Option<char>,
    /// Also feed the effort column to learners as a feature
    #[arg(long)]
    effort_as_feature: bool,
}

#[derive(Args)]
struct SweepArgs {
    /// Comma-separated increasing zeta grid, e.g. 0.005,0.01,0.05,0.1
    #[arg(long)]
    grid: Option<String>,
    #[command(flatten)]
    run: RunArgs,
}

#[derive(Args)]
struct SynthArgs {
    /// Records per dataset (>= 20) [default: 200]
    #[arg(long)]
    n: Option<usize>,
    /// Defect rate in (0, 0.5] [default: 0.15]
    #[arg(long)]
    defect_rate: Option<f64>,
    /// Target effort skewness [default: 8.0]
    #[arg(long)]
    loc_skew: Option<f64>,
    /// Feature noise level [default: 1.0]
    #[arg(long)]
    noise: Option<f64>,
    /// Generator seed [default: $EFFORTRANK_SEED, else 42]
    #[arg(long)]
    seed: Option<u64>,
    /// Base name for the generated pair [default: synth]
    #[arg(long)]
    name: Option<String>,
    /// Output directory
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct StatsArgs {
    /// Existing results.csv produced by `run` or `sweep-zeta`
    #[arg(long)]
    results: Option<PathBuf>,
    /// EA-Z zeta to anchor comparisons at [default: 0.05]
    #[arg(long)]
    zeta: Option<f64>,
    /// Output directory
    #[arg(long)]
    out: Option<PathBuf>,
}

/// Configuration error (exit 1) or runtime error (exit 2).
enum CliError {
    Config(String),
    Runtime(String),
}

impl From<RunnerError> for CliError {
    fn from(e: RunnerError) -> Self {
        match e {
            RunnerError::Config(msg) => CliError::Config(msg),
            other => CliError::Runtime(other.to_string()),
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = e.print();
                return ExitCode::SUCCESS;
            }
            eprintln!("{e}");
            return ExitCode::from(1);
        }
    };

    let result = match cli.command {
        Command::Run(args) => cmd_run(args, None),
        Command::SweepZeta(args) => cmd_sweep(args),
        Command::Synth(args) => cmd_synth(args),
        Command::Stats(args) => cmd_stats(args),
        Command::MinorChaosDemo => {
            print!("{}", minor_chaos::demo_text());
            Ok(())
        }
    };

    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(CliError::Config(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(CliError::Runtime(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

/// Flag > config file > environment (seed only) > built-in default.
struct Resolver {
    file: BTreeMap<String, String>,
}

impl Resolver {
    fn new(config: Option<&PathBuf>) -> Result<Self, CliError> {
        let file = match config {
            Some(path) => read_key_values(path).map_err(CliError::from)?,
            None => BTreeMap::new(),
        };
        Ok(Self { file })
    }

    fn string(&self, flag: Option<&String>, key: &str) -> Option<String> {
        flag.cloned().or_else(|| self.file.get(key).cloned())
    }

    fn parsed<T: std::str::FromStr>(
        &self,
        flag: Option<T>,
        key: &str,
    ) -> Result<Option<T>, CliError> {
        if flag.is_some() {
            return Ok(flag);
        }
        match self.file.get(key) {
            None => Ok(None),
            Some(raw) => raw.parse::<T>().map(Some).map_err(|_| {
                CliError::Config(format!("config key {key} = {raw:?} cannot be parsed"))
            }),
        }
    }
}

fn seed_fallback() -> Result<u64, CliError> {
    match std::env::var(SEED_ENV) {
        Ok(raw) => raw
            .parse::<u64>()
            .map_err(|_| CliError::Config(format!("{SEED_ENV}={raw:?} is not a valid seed"))),
        Err(_) => Ok(42),
    }
}

fn parse_learners(
    spec: &str,
    external: &BTreeMap<String, PathBuf>,
) -> Result<Vec<LearnerHandle>, CliError> {
    let mut handles = Vec::new();
    for tag in spec.split(',').map(str::trim).filter(|t| !t.is_empty()) {
        if let Some(dir) = external.get(tag) {
            handles.push(LearnerHandle::new(
                tag,
                LearnerSpec::External { dir: dir.clone() },
            ));
            continue;
        }
        match learner_from_tag(tag) {
            Ok(spec) => handles.push(LearnerHandle::new(tag, spec)),
            Err(e) => return Err(CliError::Config(e.to_string())),
        }
    }
    if handles.is_empty() {
        return Err(CliError::Config("no learners configured".into()));
    }
    Ok(handles)
}

fn parse_strategies(spec: &str) -> Result<Vec<Strategy>, CliError> {
    let mut out = Vec::new();
    for name in spec.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        out.push(
            name.parse::<Strategy>()
                .map_err(|e| CliError::Config(e.to_string()))?,
        );
    }
    if out.is_empty() {
        return Err(CliError::Config("no strategies configured".into()));
    }
    Ok(out)
}

fn build_config(args: &RunArgs, grid: Option<Vec<f64>>) -> Result<RunConfig, CliError> {
    let r = Resolver::new(args.config.as_ref())?;

    let manifest = r
        .string(args.manifest.as_ref().map(|p| p.display().to_string()).as_ref(), "manifest")
        .ok_or_else(|| CliError::Config("missing --manifest (no manifest configured)".into()))?;
    let out = r
        .string(args.out.as_ref().map(|p| p.display().to_string()).as_ref(), "out")
        .ok_or_else(|| CliError::Config("missing --out (no output directory configured)".into()))?;

    let mut external: BTreeMap<String, PathBuf> = BTreeMap::new();
    for (key, value) in &r.file {
        if let Some(tag) = key.strip_prefix("external.") {
            external.insert(tag.to_string(), PathBuf::from(value));
        }
    }
    for spec in &args.external {
        let Some((tag, dir)) = spec.split_once('=') else {
            return Err(CliError::Config(format!(
                "--external expects tag=dir, got {spec:?}"
            )));
        };
        external.insert(tag.trim().to_string(), PathBuf::from(dir.trim()));
    }

    let learner_spec = r
        .string(args.learners.as_ref(), "learners")
        .ok_or_else(|| CliError::Config("missing --learners (no learners configured)".into()))?;
    let learners = parse_learners(&learner_spec, &external)?;

    let strategies = match r.string(args.strategies.as_ref(), "strategies") {
        Some(spec) => parse_strategies(&spec)?,
        None => Strategy::ALL.to_vec(),
    };

    let seed = match r.parsed(args.seed, "seed")? {
        Some(s) => s,
        None => seed_fallback()?,
    };

    let log_transform = if args.no_log_transform {
        false
    } else {
        r.parsed::<bool>(None, "log_transform")?.unwrap_or(true)
    };
    let drop_zero_effort = if args.keep_zero_effort {
        false
    } else {
        r.parsed::<bool>(None, "drop_zero_effort")?.unwrap_or(true)
    };

    let delimiter = match args.delimiter.or_else(|| {
        r.file
            .get("delimiter")
            .and_then(|s| s.chars().next())
    }) {
        Some(c) if c.is_ascii() => c as u8,
        Some(c) => {
            return Err(CliError::Config(format!(
                "delimiter {c:?} is not a single ASCII character"
            )))
        }
        None => b',',
    };

    let truthy = match r.string(None, "truthy").as_deref() {
        None | Some("nonzero_or_keyword") => TruthyRule::NonzeroOrKeyword,
        Some("nonzero_numeric") => TruthyRule::NonzeroNumeric,
        Some(other) => {
            return Err(CliError::Config(format!(
                "unknown truthy rule {other:?}"
            )))
        }
    };

    let schema = DatasetSchema {
        effort_column: r
            .string(args.effort_column.as_ref(), "effort_column")
            .unwrap_or_else(|| "loc".into()),
        label_column: r
            .string(args.label_column.as_ref(), "label_column")
            .unwrap_or_else(|| "bug".into()),
        id_column: r.string(args.id_column.as_ref(), "id_column"),
        delimiter,
        truthy,
        effort_as_feature: args.effort_as_feature
            || r.parsed::<bool>(None, "effort_as_feature")?.unwrap_or(false),
    };

    let cfg = RunConfig {
        manifest_path: PathBuf::from(manifest),
        data_dir: r
            .string(args.data_dir.as_ref().map(|p| p.display().to_string()).as_ref(), "data_dir")
            .map(PathBuf::from)
            .unwrap_or_else(|| PathBuf::from(".")),
        learners,
        strategies,
        zeta: r.parsed(args.zeta, "zeta")?.unwrap_or(0.05),
        zeta_grid: grid,
        threshold: r.parsed(args.threshold, "threshold")?.unwrap_or(0.5),
        seed,
        repetitions: r.parsed(args.repetitions, "repetitions")?.unwrap_or(1),
        jobs: r.parsed(args.jobs, "jobs")?.unwrap_or(1),
        out_dir: PathBuf::from(out),
        preprocess: effortrank::dataset::PreprocessOptions {
            log_transform,
            drop_zero_effort,
        },
        schema,
    };
    cfg.validate().map_err(CliError::from)?;
    Ok(cfg)
}

fn cmd_run(args: RunArgs, grid: Option<Vec<f64>>) -> Result<(), CliError> {
    let cfg = build_config(&args, grid)?;
    let (table, report) = runner::execute(&cfg)?;
    eprintln!(
        "wrote {} result rows ({} errored) to {}",
        table.rows.len(),
        table.errored_count(),
        cfg.out_dir.display()
    );
    print!("{}", runner::render_text(&report));
    Ok(())
}

fn cmd_sweep(args: SweepArgs) -> Result<(), CliError> {
    let r = Resolver::new(args.run.config.as_ref())?;
    let raw = r
        .string(args.grid.as_ref(), "zeta_grid")
        .ok_or_else(|| CliError::Config("missing --grid (no zeta grid configured)".into()))?;
    let mut grid = Vec::new();
    for field in raw.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        grid.push(
            field
                .parse::<f64>()
                .map_err(|_| CliError::Config(format!("bad zeta grid value {field:?}")))?,
        );
    }
    cmd_run(args.run, Some(grid))
}

fn cmd_synth(args: SynthArgs) -> Result<(), CliError> {
    let out_dir = args
        .out
        .ok_or_else(|| CliError::Config("missing --out (no output directory configured)".into()))?;
    let seed = match args.seed {
        Some(s) => s,
        None => seed_fallback()?,
    };
    let spec = SynthSpec {
        name: args.name.unwrap_or_else(|| "synth".into()),
        n: args.n.unwrap_or(200),
        defect_rate: args.defect_rate.unwrap_or(0.15),
        loc_skew: args.loc_skew.unwrap_or(8.0),
        noise: args.noise.unwrap_or(1.0),
        seed,
    };
    let (train, test) = runner::generate_synthetic_pair(&spec)?;
    std::fs::create_dir_all(&out_dir)
        .map_err(|e| CliError::Runtime(format!("cannot create {}: {e}", out_dir.display())))?;

    let train_path = out_dir.join(format!("{}.csv", train.name));
    let test_path = out_dir.join(format!("{}.csv", test.name));
    let manifest_path = out_dir.join(format!("{}-manifest.txt", spec.name));
    write_dataset(&train_path, &train).map_err(|e| CliError::Runtime(e.to_string()))?;
    write_dataset(&test_path, &test).map_err(|e| CliError::Runtime(e.to_string()))?;
    std::fs::write(
        &manifest_path,
        format!("SYNTH, {}, {}\n", train.name, test.name),
    )
    .map_err(|e| CliError::Runtime(format!("cannot write manifest: {e}")))?;

    println!("{}", train_path.display());
    println!("{}", test_path.display());
    println!("{}", manifest_path.display());
    eprintln!(
        "generated pair {:?}: {} records each, {}/{} defective, effort skew target {}",
        spec.name,
        spec.n,
        train.positives(),
        test.positives(),
        spec.loc_skew
    );
    Ok(())
}

fn cmd_stats(args: StatsArgs) -> Result<(), CliError> {
    let results = args
        .results
        .ok_or_else(|| CliError::Config("missing --results (no results file given)".into()))?;
    let out = args
        .out
        .ok_or_else(|| CliError::Config("missing --out (no output directory configured)".into()))?;
    let raw = std::fs::read_to_string(&results)
        .map_err(|e| CliError::Runtime(format!("cannot read {}: {e}", results.display())))?;
    let table = ResultTable::parse(&raw).map_err(CliError::from)?;
    let report = runner::summarize(&table, args.zeta.unwrap_or(0.05));
    runner::write_summary_outputs(&out, &table, &report)?;
    eprintln!(
        "summarized {} rows ({} errored) into {}",
        table.rows.len(),
        table.errored_count(),
        out.display()
    );
    print!("{}", runner::render_text(&report));
    Ok(())
}
