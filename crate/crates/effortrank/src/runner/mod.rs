//! Experiment orchestration: the manifest x learner x strategy matrix, the
//! zeta sweep, synthetic benchmarks, and result aggregation.
//!
//! The matrix is embarrassingly parallel over (pair, learner, repetition).
//! Each cell derives its training seed from the master seed and the cell
//! key, so results are independent of worker count and execution order;
//! rows merge by key, never by arrival. Learner failures (for instance a
//! single-class training set) mark their cells as errored and the run
//! continues; unresolvable datasets abort before any training starts.

pub mod config;
pub mod minor_chaos;
pub mod summary;
pub mod synth;
pub mod table;

use std::collections::BTreeMap;
use std::path::PathBuf;

use rayon::prelude::*;
use thiserror::Error;

use crate::dataset::{
    load_dataset, load_manifest, preprocess, Dataset, DatasetError, ExperimentManifest,
    ManifestPair,
};
use crate::learners::{predict_proba, train, LearnerError};
use crate::metrics::{ifa, popt, recall_at};
use crate::seed::cell_seed;
use crate::strategies::{
    rank, score_cbs_plus, score_ea_z, score_label_loc, score_manual_up, score_prob,
    score_prob_loc, ScoredModules, Strategy,
};

pub use config::{read_key_values, LearnerHandle, RunConfig};
pub use summary::{render_text, summarize, SummaryReport, REFERENCE_AVERAGES};
pub use synth::{generate_synthetic_pair, SynthSpec};
pub use table::{ResultRow, ResultTable, RowOutcome};

/// Effort budget for the headline recall metric.
pub const RECALL_BUDGET: f64 = 0.2;

#[derive(Debug, Error)]
pub enum RunnerError {
    #[error("configuration error: {0}")]
    Config(String),
    #[error(transparent)]
    Dataset(#[from] DatasetError),
    #[error("dataset {name:?} not found; tried {}", tried.iter().map(|p| p.display().to_string()).collect::<Vec<_>>().join(", "))]
    UnresolvableDataset { name: String, tried: Vec<PathBuf> },
    #[error("failed to write {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
}

/// Loads the manifest and every dataset it references, preprocessed and
/// ready for training. Fails fast: nothing trains unless every referenced
/// dataset resolves and parses. The manifest path `builtin` resolves to
/// the shipped 61-pair cross-project setup.
pub fn load_inputs(
    cfg: &RunConfig,
) -> Result<(ExperimentManifest, BTreeMap<String, Dataset>), RunnerError> {
    let manifest = if cfg.manifest_path.as_os_str() == "builtin" {
        crate::dataset::default_manifest()
    } else {
        load_manifest(&cfg.manifest_path)?
    };
    let mut source_of: BTreeMap<&str, &str> = BTreeMap::new();
    for pair in &manifest.pairs {
        source_of.entry(&pair.train).or_insert(&pair.source);
        source_of.entry(&pair.test).or_insert(&pair.source);
    }
    let mut datasets = BTreeMap::new();
    for name in manifest.dataset_names() {
        let source = source_of.get(name.as_str()).copied().unwrap_or("");
        let candidates = [
            cfg.data_dir.join(source).join(format!("{name}.csv")),
            cfg.data_dir.join(format!("{name}.csv")),
        ];
        let Some(path) = candidates.iter().find(|p| p.is_file()) else {
            return Err(RunnerError::UnresolvableDataset {
                name,
                tried: candidates.to_vec(),
            });
        };
        let raw = load_dataset(path, &cfg.schema)?;
        let ready = preprocess(&raw, cfg.preprocess)?;
        datasets.insert(name, ready);
    }
    Ok((manifest, datasets))
}

fn score_for(
    strategy: Strategy,
    probs: &[f64],
    labels: &[bool],
    efforts: &[f64],
    threshold: f64,
    zeta: f64,
) -> Result<ScoredModules, crate::strategies::StrategyError> {
    match strategy {
        Strategy::Prob => score_prob(probs, efforts),
        Strategy::LabelLoc => score_label_loc(labels, efforts),
        Strategy::CbsPlus => score_cbs_plus(probs, efforts, threshold),
        Strategy::ProbLoc => score_prob_loc(probs, efforts),
        Strategy::EaZ => score_ea_z(probs, efforts, zeta),
        Strategy::ManualUp => score_manual_up(efforts),
    }
}

fn evaluate_cell(
    cfg: &RunConfig,
    pair: &ManifestPair,
    learner: &LearnerHandle,
    repetition: usize,
    train_set: &Dataset,
    test_set: &Dataset,
) -> Vec<ResultRow> {
    let zetas: Vec<f64> = cfg.zeta_grid.clone().unwrap_or_else(|| vec![cfg.zeta]);
    let pair_tag = pair.tag();

    let row = |strategy: Strategy, zeta: Option<f64>, outcome: RowOutcome| ResultRow {
        pair: pair_tag.clone(),
        source: pair.source.clone(),
        learner: learner.tag.clone(),
        strategy,
        repetition,
        zeta,
        outcome,
    };
    let all_rows_with = |err: &LearnerError| -> Vec<ResultRow> {
        let msg = err.to_string();
        cfg.strategies
            .iter()
            .flat_map(|&s| {
                if s == Strategy::EaZ {
                    zetas
                        .iter()
                        .map(|&z| row(s, Some(z), RowOutcome::Error(msg.clone())))
                        .collect::<Vec<_>>()
                } else {
                    vec![row(s, None, RowOutcome::Error(msg.clone()))]
                }
            })
            .collect()
    };

    let seed = cell_seed(cfg.seed, &pair_tag, &learner.tag, repetition as u64);
    let model = match train(&learner.spec, train_set, seed) {
        Ok(m) => m,
        Err(e) => return all_rows_with(&e),
    };
    let probs = match predict_proba(&model, test_set) {
        Ok(p) => p,
        Err(e) => return all_rows_with(&e),
    };
    let labels: Vec<bool> = probs.iter().map(|&p| p >= cfg.threshold).collect();
    let efforts = test_set.efforts();
    let actuals = test_set.labels();

    let mut rows = Vec::new();
    for &strategy in &cfg.strategies {
        let variants: Vec<Option<f64>> = if strategy == Strategy::EaZ {
            zetas.iter().map(|&z| Some(z)).collect()
        } else {
            vec![None]
        };
        for zeta in variants {
            let outcome = (|| -> Result<RowOutcome, String> {
                let scored = score_for(
                    strategy,
                    &probs,
                    &labels,
                    &efforts,
                    cfg.threshold,
                    zeta.unwrap_or(cfg.zeta),
                )
                .map_err(|e| e.to_string())?;
                let ranking = rank(&scored).map_err(|e| e.to_string())?;
                let recall20 =
                    recall_at(&ranking, &actuals, &efforts, RECALL_BUDGET).map_err(|e| e.to_string())?;
                let popt_value = popt(&ranking, &actuals, &efforts).map_err(|e| e.to_string())?;
                Ok(RowOutcome::Ok {
                    recall20,
                    popt: popt_value,
                    ifa: ifa(&ranking, &actuals),
                })
            })()
            .unwrap_or_else(RowOutcome::Error);
            rows.push(row(strategy, zeta, outcome));
        }
    }
    rows
}

/// Runs the full matrix over in-memory datasets. Pure with respect to its
/// inputs; rows come back in (pair, learner, repetition, strategy, zeta)
/// order regardless of `cfg.jobs`.
pub fn run_matrix(
    cfg: &RunConfig,
    manifest: &ExperimentManifest,
    datasets: &BTreeMap<String, Dataset>,
) -> Result<ResultTable, RunnerError> {
    cfg.validate()?;
    for name in manifest.dataset_names() {
        if !datasets.contains_key(&name) {
            return Err(RunnerError::UnresolvableDataset {
                name,
                tried: Vec::new(),
            });
        }
    }

    let jobs: Vec<(usize, usize, usize)> = manifest
        .pairs
        .iter()
        .enumerate()
        .flat_map(|(pi, _)| {
            cfg.learners.iter().enumerate().flat_map(move |(li, _)| {
                (0..cfg.repetitions).map(move |rep| (pi, li, rep))
            })
        })
        .collect();

    let run_one = |&(pi, li, rep): &(usize, usize, usize)| -> Vec<ResultRow> {
        let pair = &manifest.pairs[pi];
        evaluate_cell(
            cfg,
            pair,
            &cfg.learners[li],
            rep,
            &datasets[&pair.train],
            &datasets[&pair.test],
        )
    };

    let per_job: Vec<Vec<ResultRow>> = if cfg.jobs > 1 {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(cfg.jobs)
            .build()
            .map_err(|e| RunnerError::Config(format!("cannot build thread pool: {e}")))?;
        pool.install(|| jobs.par_iter().map(run_one).collect())
    } else {
        jobs.iter().map(run_one).collect()
    };

    let table = ResultTable {
        rows: per_job.into_iter().flatten().collect(),
    };
    table.assert_unique_keys();
    Ok(table)
}

/// Executes the manifest from disk: load, preprocess, run.
pub fn run_experiment(cfg: &RunConfig) -> Result<ResultTable, RunnerError> {
    cfg.validate()?;
    let (manifest, datasets) = load_inputs(cfg)?;
    run_matrix(cfg, &manifest, &datasets)
}

/// Zeta sweep: identical to [`run_experiment`] but requires a grid; EA-Z
/// rows are replicated per grid value while every other strategy runs once.
pub fn sweep_zeta(cfg: &RunConfig) -> Result<ResultTable, RunnerError> {
    if cfg.zeta_grid.as_ref().is_none_or(Vec::is_empty) {
        return Err(RunnerError::Config(
            "sweep requires a non-empty zeta grid".into(),
        ));
    }
    run_experiment(cfg)
}

fn write_file(path: PathBuf, content: &str) -> Result<(), RunnerError> {
    std::fs::write(&path, content).map_err(|source| RunnerError::Io { path, source })
}

fn sanitize(component: &str) -> String {
    component
        .chars()
        .map(|c| {
            if c.is_ascii_alphanumeric() || matches!(c, '.' | '-' | '_') {
                c
            } else {
                '_'
            }
        })
        .collect()
}

/// Writes the result tree: the result table, the human-readable summary,
/// machine-readable summary tables, per-(indicator, source) box-plot feeds,
/// and the resolved configuration. File contents carry no timestamps, so
/// identical runs produce byte-identical trees.
pub fn write_outputs(
    cfg: &RunConfig,
    table: &ResultTable,
    report: &SummaryReport,
) -> Result<(), RunnerError> {
    write_summary_outputs(&cfg.out_dir, table, report)?;
    write_file(cfg.out_dir.join("config.txt"), &cfg.resolved_text())
}

/// The summary part of the output tree: everything derivable from a result
/// table alone. Also used to re-summarize an existing results file.
pub fn write_summary_outputs(
    out_dir: &std::path::Path,
    table: &ResultTable,
    report: &SummaryReport,
) -> Result<(), RunnerError> {
    std::fs::create_dir_all(out_dir).map_err(|source| RunnerError::Io {
        path: out_dir.to_path_buf(),
        source,
    })?;
    let out = |name: &str| out_dir.join(name);

    write_file(out("results.csv"), &table.to_delimited())?;
    write_file(out("summary.txt"), &render_text(report))?;

    let mut strategies = String::from("strategy,cells,mean_recall20,mean_popt,mean_ifa,ifa_le_10\n");
    for s in &report.strategies {
        strategies.push_str(&format!(
            "{},{},{:.6},{:.6},{:.6},{:.6}\n",
            s.strategy, s.cells, s.mean_recall20, s.mean_popt, s.mean_ifa, s.ifa_le_10
        ));
    }
    write_file(out("summary_strategies.csv"), &strategies)?;

    let mut per_learner =
        String::from("learner,strategy,cells,mean_recall20,mean_popt,mean_ifa\n");
    for s in &report.learner_strategy {
        per_learner.push_str(&format!(
            "{},{},{},{:.6},{:.6},{:.6}\n",
            s.learner, s.strategy, s.cells, s.mean_recall20, s.mean_popt, s.mean_ifa
        ));
    }
    write_file(out("summary_learner_strategy.csv"), &per_learner)?;

    let mut comparisons = String::from(
        "indicator,method_a,method_b,n,w,z,p,p_adjusted,effect_r,interpretation,wins,draws,losses\n",
    );
    for block in &report.comparisons {
        for r in &block.records {
            comparisons.push_str(&format!(
                "{},{},{},{},{:.6},{:.6},{:.6e},{:.6e},{:.6},{},{},{},{}\n",
                block.indicator.name(),
                r.method_a,
                r.method_b,
                r.n,
                r.w_statistic,
                r.z_value,
                r.p_value,
                r.p_adjusted,
                r.effect_r,
                r.interpretation,
                r.wins,
                r.draws,
                r.losses
            ));
        }
    }
    write_file(out("comparisons.csv"), &comparisons)?;

    let mut groups = String::from("indicator,method,group\n");
    for (indicator, grouping) in &report.sk_groupings {
        for (method, id) in grouping.methods.iter().zip(&grouping.group_ids) {
            groups.push_str(&format!("{},{},{}\n", indicator.name(), method, id));
        }
    }
    write_file(out("sk_groups.csv"), &groups)?;

    if !report.tradeoff.is_empty() {
        let mut tradeoff = String::from("method,mean_recall20,wins,draws,losses,mean_ifa\n");
        for t in &report.tradeoff {
            let (w, d, l) = t
                .wdl_vs_manual_up
                .map(|(w, d, l)| (w.to_string(), d.to_string(), l.to_string()))
                .unwrap_or_default();
            tradeoff.push_str(&format!(
                "{},{:.6},{},{},{},{:.6}\n",
                t.method, t.mean_recall20, w, d, l, t.mean_ifa
            ));
        }
        write_file(out("tradeoff.csv"), &tradeoff)?;
    }

    if report.zeta_sweep.len() > 1 {
        let mut sweep = String::from("zeta,cells,mean_recall20,mean_popt,mean_ifa\n");
        for z in &report.zeta_sweep {
            sweep.push_str(&format!(
                "{},{},{:.6},{:.6},{:.6}\n",
                z.zeta, z.cells, z.mean_recall20, z.mean_popt, z.mean_ifa
            ));
        }
        write_file(out("zeta_sweep.csv"), &sweep)?;
    }

    // Box-plot feeds: one file per (indicator, source), long format.
    let mut sources: Vec<&str> = table
        .rows
        .iter()
        .map(|r| r.source.as_str())
        .filter(|s| !s.is_empty())
        .collect();
    sources.sort_unstable();
    sources.dedup();
    let primary = report.primary_zeta;
    for indicator in summary::Indicator::ALL {
        for source in &sources {
            let mut feed = String::from("strategy,pair,learner,value\n");
            for r in table.rows.iter().filter(|r| {
                r.source == *source
                    && r.outcome.is_ok()
                    && (r.strategy != Strategy::EaZ || r.zeta == Some(primary))
            }) {
                if let RowOutcome::Ok {
                    recall20,
                    popt,
                    ifa,
                } = &r.outcome
                {
                    let value = match indicator {
                        summary::Indicator::Recall20 => *recall20,
                        summary::Indicator::Popt => *popt,
                        summary::Indicator::Ifa => *ifa as f64,
                    };
                    feed.push_str(&format!(
                        "{},{},{},{:.6}\n",
                        r.strategy, r.pair, r.learner, value
                    ));
                }
            }
            write_file(
                out(&format!(
                    "boxplot_{}_{}.csv",
                    indicator.name(),
                    sanitize(source)
                )),
                &feed,
            )?;
        }
    }
    Ok(())
}

/// Full pipeline: validate, load, run, summarize, write. Returns the table
/// and the report for further inspection or printing.
pub fn execute(cfg: &RunConfig) -> Result<(ResultTable, SummaryReport), RunnerError> {
    let table = run_experiment(cfg)?;
    let report = summarize(&table, cfg.primary_zeta());
    write_outputs(cfg, &table, &report)?;
    Ok((table, report))
}
