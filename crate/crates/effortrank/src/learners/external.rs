//! External-learner adapter: probabilities precomputed by outside tools.
//!
//! The file for a (train, test) pair lives at `<dir>/<train>__<test>.csv`
//! and holds two delimited columns (record id, probability). An optional
//! header and `#` comment lines are tolerated. The file must cover the
//! target dataset exactly: every record id once, no extras, probabilities
//! finite and in [0, 1].

use std::collections::HashMap;
use std::path::PathBuf;

use crate::dataset::Dataset;

use super::LearnerError;

#[derive(Debug, Clone)]
pub(crate) struct ExternalModel {
    pub(crate) dir: PathBuf,
    pub(crate) train_name: String,
}

impl ExternalModel {
    pub(crate) fn predict(&self, d: &Dataset) -> Result<Vec<f64>, LearnerError> {
        let path = self.dir.join(format!("{}__{}.csv", self.train_name, d.name));
        let raw = std::fs::read_to_string(&path).map_err(|source| LearnerError::ExternalIo {
            path: path.clone(),
            source,
        })?;

        let mut probs: HashMap<String, f64> = HashMap::new();
        for (line_zero, line) in raw.lines().enumerate() {
            let line_no = line_zero + 1;
            let trimmed = line.trim();
            if trimmed.is_empty() || trimmed.starts_with('#') {
                continue;
            }
            let mut fields = trimmed.split(',').map(str::trim);
            let (Some(id), Some(value), None) = (fields.next(), fields.next(), fields.next())
            else {
                return Err(LearnerError::ExternalParse {
                    path: path.clone(),
                    line: line_no,
                    reason: "expected exactly 2 fields (id, probability)".into(),
                });
            };
            let Ok(p) = value.parse::<f64>() else {
                // A non-numeric second field on the first data line is a
                // header; anywhere else it is malformed.
                if probs.is_empty() {
                    continue;
                }
                return Err(LearnerError::ExternalParse {
                    path: path.clone(),
                    line: line_no,
                    reason: format!("cannot parse probability {value:?}"),
                });
            };
            if !p.is_finite() || !(0.0..=1.0).contains(&p) {
                return Err(LearnerError::ExternalRecord {
                    path: path.clone(),
                    id: id.to_string(),
                    problem: format!("probability {p} outside [0, 1]"),
                });
            }
            if probs.insert(id.to_string(), p).is_some() {
                return Err(LearnerError::ExternalRecord {
                    path: path.clone(),
                    id: id.to_string(),
                    problem: "appears more than once".into(),
                });
            }
        }

        let mut out = Vec::with_capacity(d.len());
        for r in &d.records {
            let p = probs
                .remove(&r.id)
                .ok_or_else(|| LearnerError::ExternalRecord {
                    path: path.clone(),
                    id: r.id.clone(),
                    problem: "missing from the probability file".into(),
                })?;
            out.push(p);
        }
        if let Some(extra) = probs.keys().next() {
            return Err(LearnerError::ExternalRecord {
                path,
                id: extra.clone(),
                problem: "not present in the target dataset".into(),
            });
        }
        Ok(out)
    }
}
