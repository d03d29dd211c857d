//! The result table: one row per configured experiment cell, either a
//! metric triple or an explicit error marker. No silent holes.

use std::fmt::Write as _;

use crate::strategies::Strategy;

use super::RunnerError;

#[derive(Debug, Clone, PartialEq)]
pub enum RowOutcome {
    Ok { recall20: f64, popt: f64, ifa: usize },
    Error(String),
}

impl RowOutcome {
    pub fn is_ok(&self) -> bool {
        matches!(self, RowOutcome::Ok { .. })
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ResultRow {
    /// `train->test`.
    pub pair: String,
    /// Data source tag from the manifest; empty when parsed back from a
    /// results file, which does not carry it.
    pub source: String,
    pub learner: String,
    pub strategy: Strategy,
    pub repetition: usize,
    /// EA-Z rows carry their zeta; other strategies none.
    pub zeta: Option<f64>,
    pub outcome: RowOutcome,
}

#[derive(Debug, Clone, Default, PartialEq)]
pub struct ResultTable {
    pub rows: Vec<ResultRow>,
}

impl ResultTable {
    pub fn ok_rows(&self) -> impl Iterator<Item = &ResultRow> {
        self.rows.iter().filter(|r| r.outcome.is_ok())
    }

    pub fn errored_count(&self) -> usize {
        self.rows.iter().filter(|r| !r.outcome.is_ok()).count()
    }

    /// Keys must be unique: (pair, learner, strategy, repetition, zeta).
    pub fn assert_unique_keys(&self) {
        let mut keys: Vec<(String, String, Strategy, usize, Option<u64>)> = self
            .rows
            .iter()
            .map(|r| {
                (
                    r.pair.clone(),
                    r.learner.clone(),
                    r.strategy,
                    r.repetition,
                    r.zeta.map(f64::to_bits),
                )
            })
            .collect();
        let before = keys.len();
        keys.sort();
        keys.dedup();
        assert_eq!(before, keys.len(), "duplicate result-table keys");
    }

    /// Delimited rendering with the canonical header. A `repetition` column
    /// is appended only for multi-repetition runs; the default single-run
    /// layout stays at the eight canonical columns.
    pub fn to_delimited(&self) -> String {
        let with_reps = self.rows.iter().any(|r| r.repetition > 0);
        let mut out = String::from("pair,learner,strategy,zeta,recall20,popt,ifa,status");
        if with_reps {
            out.push_str(",repetition");
        }
        out.push('\n');
        for r in &self.rows {
            let zeta = r.zeta.map(|z| format!("{z}")).unwrap_or_default();
            let (recall, popt, ifa, status) = match &r.outcome {
                RowOutcome::Ok {
                    recall20,
                    popt,
                    ifa,
                } => (
                    format!("{recall20:.6}"),
                    format!("{popt:.6}"),
                    format!("{ifa}"),
                    "ok".to_string(),
                ),
                RowOutcome::Error(reason) => (
                    String::new(),
                    String::new(),
                    String::new(),
                    format!("error: {}", reason.replace(',', ";").replace('\n', " ")),
                ),
            };
            let _ = write!(
                out,
                "{},{},{},{},{},{},{},{}",
                r.pair, r.learner, r.strategy, zeta, recall, popt, ifa, status
            );
            if with_reps {
                let _ = write!(out, ",{}", r.repetition);
            }
            out.push('\n');
        }
        out
    }

    /// Parses a delimited result table written by [`Self::to_delimited`].
    /// Source tags are not stored in the file and come back empty.
    pub fn parse(text: &str) -> Result<Self, RunnerError> {
        let mut lines = text.lines();
        let header = lines
            .next()
            .ok_or_else(|| RunnerError::Config("empty results file".into()))?;
        let columns: Vec<&str> = header.split(',').collect();
        let expected = ["pair", "learner", "strategy", "zeta", "recall20", "popt", "ifa", "status"];
        if columns.len() < expected.len() || columns[..expected.len()] != expected {
            return Err(RunnerError::Config(format!(
                "unexpected results header: {header:?}"
            )));
        }
        let rep_idx = columns.iter().position(|c| *c == "repetition");

        let mut rows = Vec::new();
        for (line_zero, line) in lines.enumerate() {
            if line.trim().is_empty() {
                continue;
            }
            let fields: Vec<&str> = line.split(',').collect();
            if fields.len() < expected.len() {
                return Err(RunnerError::Config(format!(
                    "results line {}: expected at least {} fields",
                    line_zero + 2,
                    expected.len()
                )));
            }
            let strategy: Strategy = fields[2]
                .parse()
                .map_err(|e| RunnerError::Config(format!("results line {}: {e}", line_zero + 2)))?;
            let zeta = if fields[3].is_empty() {
                None
            } else {
                Some(fields[3].parse::<f64>().map_err(|_| {
                    RunnerError::Config(format!("results line {}: bad zeta", line_zero + 2))
                })?)
            };
            let status = fields[7..].join(",");
            let outcome = if status == "ok" {
                let parse = |i: usize, what: &str| -> Result<f64, RunnerError> {
                    fields[i].parse::<f64>().map_err(|_| {
                        RunnerError::Config(format!(
                            "results line {}: bad {what}",
                            line_zero + 2
                        ))
                    })
                };
                RowOutcome::Ok {
                    recall20: parse(4, "recall20")?,
                    popt: parse(5, "popt")?,
                    ifa: fields[6].parse::<usize>().map_err(|_| {
                        RunnerError::Config(format!("results line {}: bad ifa", line_zero + 2))
                    })?,
                }
            } else {
                RowOutcome::Error(
                    status
                        .strip_prefix("error: ")
                        .unwrap_or(&status)
                        .to_string(),
                )
            };
            let repetition = match rep_idx {
                Some(i) if i < fields.len() => fields[i].parse().unwrap_or(0),
                _ => 0,
            };
            rows.push(ResultRow {
                pair: fields[0].to_string(),
                source: String::new(),
                learner: fields[1].to_string(),
                strategy,
                repetition,
                zeta,
                outcome,
            });
        }
        Ok(ResultTable { rows })
    }
}
