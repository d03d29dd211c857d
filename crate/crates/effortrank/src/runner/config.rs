//! Run configuration and the flat key-value config file format.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use crate::dataset::{DatasetSchema, PreprocessOptions, TruthyRule};
use crate::learners::LearnerSpec;
use crate::strategies::Strategy;

use super::RunnerError;

/// A learner as configured for a run: the report tag plus the resolved
/// specification.
#[derive(Debug, Clone)]
pub struct LearnerHandle {
    pub tag: String,
    pub spec: LearnerSpec,
}

impl LearnerHandle {
    pub fn new(tag: impl Into<String>, spec: LearnerSpec) -> Self {
        Self {
            tag: tag.into(),
            spec,
        }
    }
}

/// Everything a run needs; embeds its resolved form in the output directory
/// so any result tree is self-describing.
#[derive(Debug, Clone)]
pub struct RunConfig {
    pub manifest_path: PathBuf,
    pub data_dir: PathBuf,
    pub learners: Vec<LearnerHandle>,
    pub strategies: Vec<Strategy>,
    /// EA-Z lower bound; 0.05 unless swept.
    pub zeta: f64,
    /// When set, EA-Z rows are replicated per grid value.
    pub zeta_grid: Option<Vec<f64>>,
    /// Classification threshold for label-based strategies.
    pub threshold: f64,
    pub seed: u64,
    pub repetitions: usize,
    pub jobs: usize,
    pub out_dir: PathBuf,
    pub preprocess: PreprocessOptions,
    pub schema: DatasetSchema,
}

impl Default for RunConfig {
    fn default() -> Self {
        Self {
            manifest_path: PathBuf::new(),
            data_dir: PathBuf::from("."),
            learners: Vec::new(),
            strategies: Strategy::ALL.to_vec(),
            zeta: 0.05,
            zeta_grid: None,
            threshold: 0.5,
            seed: 42,
            repetitions: 1,
            jobs: 1,
            out_dir: PathBuf::from("out"),
            preprocess: PreprocessOptions::default(),
            schema: DatasetSchema::default(),
        }
    }
}

impl RunConfig {
    pub fn validate(&self) -> Result<(), RunnerError> {
        if self.learners.is_empty() {
            return Err(RunnerError::Config("no learners configured".into()));
        }
        if self.strategies.is_empty() {
            return Err(RunnerError::Config("no strategies configured".into()));
        }
        if !(self.zeta > 0.0 && self.zeta < 1.0) {
            return Err(RunnerError::Config(format!(
                "zeta {} outside (0, 1)",
                self.zeta
            )));
        }
        if !(self.threshold > 0.0 && self.threshold < 1.0) {
            return Err(RunnerError::Config(format!(
                "threshold {} outside (0, 1)",
                self.threshold
            )));
        }
        if self.repetitions < 1 {
            return Err(RunnerError::Config("repetitions must be >= 1".into()));
        }
        if self.jobs < 1 {
            return Err(RunnerError::Config("jobs must be >= 1".into()));
        }
        if let Some(grid) = &self.zeta_grid {
            if grid.is_empty() {
                return Err(RunnerError::Config("zeta grid is empty".into()));
            }
            for w in grid.windows(2) {
                if w[1] <= w[0] {
                    return Err(RunnerError::Config(
                        "zeta grid must be strictly increasing".into(),
                    ));
                }
            }
            if grid.iter().any(|z| !(*z > 0.0 && *z < 1.0)) {
                return Err(RunnerError::Config(
                    "zeta grid values must lie in (0, 1)".into(),
                ));
            }
        }
        let mut tags: Vec<&str> = self.learners.iter().map(|l| l.tag.as_str()).collect();
        tags.sort_unstable();
        tags.dedup();
        if tags.len() != self.learners.len() {
            return Err(RunnerError::Config("duplicate learner tags".into()));
        }
        Ok(())
    }

    /// The zeta value comparisons and summaries are anchored to: the
    /// configured zeta itself, or the nearest grid value when sweeping.
    pub fn primary_zeta(&self) -> f64 {
        match &self.zeta_grid {
            None => self.zeta,
            Some(grid) => grid
                .iter()
                .copied()
                .min_by(|a, b| {
                    (a - self.zeta)
                        .abs()
                        .partial_cmp(&(b - self.zeta).abs())
                        .unwrap()
                })
                .unwrap_or(self.zeta),
        }
    }

    /// Flat key=value rendering written to `config.txt` in the output
    /// directory.
    pub fn resolved_text(&self) -> String {
        let mut out = String::new();
        let mut kv: BTreeMap<String, String> = BTreeMap::new();
        kv.insert("manifest".into(), self.manifest_path.display().to_string());
        kv.insert("data_dir".into(), self.data_dir.display().to_string());
        kv.insert(
            "learners".into(),
            self.learners
                .iter()
                .map(|l| l.tag.clone())
                .collect::<Vec<_>>()
                .join(","),
        );
        for l in &self.learners {
            if let LearnerSpec::External { dir } = &l.spec {
                kv.insert(format!("external.{}", l.tag), dir.display().to_string());
            }
        }
        kv.insert(
            "strategies".into(),
            self.strategies
                .iter()
                .map(|s| s.name().to_string())
                .collect::<Vec<_>>()
                .join(","),
        );
        kv.insert("zeta".into(), format!("{}", self.zeta));
        if let Some(grid) = &self.zeta_grid {
            kv.insert(
                "zeta_grid".into(),
                grid.iter()
                    .map(|z| format!("{z}"))
                    .collect::<Vec<_>>()
                    .join(","),
            );
        }
        kv.insert("threshold".into(), format!("{}", self.threshold));
        kv.insert("seed".into(), format!("{}", self.seed));
        kv.insert("repetitions".into(), format!("{}", self.repetitions));
        kv.insert("jobs".into(), format!("{}", self.jobs));
        kv.insert("out".into(), self.out_dir.display().to_string());
        kv.insert(
            "log_transform".into(),
            format!("{}", self.preprocess.log_transform),
        );
        kv.insert(
            "drop_zero_effort".into(),
            format!("{}", self.preprocess.drop_zero_effort),
        );
        kv.insert("effort_column".into(), self.schema.effort_column.clone());
        kv.insert("label_column".into(), self.schema.label_column.clone());
        if let Some(id) = &self.schema.id_column {
            kv.insert("id_column".into(), id.clone());
        }
        kv.insert(
            "delimiter".into(),
            (self.schema.delimiter as char).to_string(),
        );
        kv.insert(
            "truthy".into(),
            match self.schema.truthy {
                TruthyRule::NonzeroOrKeyword => "nonzero_or_keyword".into(),
                TruthyRule::NonzeroNumeric => "nonzero_numeric".into(),
            },
        );
        kv.insert(
            "effort_as_feature".into(),
            format!("{}", self.schema.effort_as_feature),
        );
        for (k, v) in kv {
            let _ = writeln!(out, "{k} = {v}");
        }
        out
    }
}

/// Parses a flat key-value config file: `key = value` lines, `#` comments
/// and blank lines ignored. Later occurrences of a key win.
pub fn read_key_values(path: &Path) -> Result<BTreeMap<String, String>, RunnerError> {
    let raw = std::fs::read_to_string(path).map_err(|source| RunnerError::Io {
        path: path.to_path_buf(),
        source,
    })?;
    let mut out = BTreeMap::new();
    for (line_zero, line) in raw.lines().enumerate() {
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let Some((key, value)) = trimmed.split_once('=') else {
            return Err(RunnerError::Config(format!(
                "{}:{}: expected `key = value`, got {trimmed:?}",
                path.display(),
                line_zero + 1
            )));
        };
        out.insert(key.trim().to_string(), value.trim().to_string());
    }
    Ok(out)
}
