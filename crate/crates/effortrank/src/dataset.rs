//! Dataset representation, ingestion, preprocessing, and manifests.
//!
//! Datasets are delimited text files (UTF-8, header row). One column holds
//! the inspection effort (LOC or churn), one holds the defect label, and the
//! remaining numeric columns are model features. Effort is kept in raw lines
//! at all times: the logarithmic transform applies to model input features
//! only, because the evaluation metrics are defined on proportions of raw
//! inspection cost.

use std::collections::HashSet;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use thiserror::Error;

/// Errors from ingestion, preprocessing, and manifest handling.
#[derive(Debug, Error)]
pub enum DatasetError {
    #[error("failed to read {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("{path}: file contains no data rows")]
    EmptyFile { path: PathBuf },
    #[error("missing column {column:?} (header has: {header})")]
    MissingColumn { column: String, header: String },
    #[error("row {row}, column {column:?}: cannot parse {value:?} as a number")]
    NonNumeric {
        row: usize,
        column: String,
        value: String,
    },
    #[error("row {row}, column {column:?}: cannot interpret {value:?} as a label")]
    BadLabel {
        row: usize,
        column: String,
        value: String,
    },
    #[error("row {row}: expected {expected} fields, found {found}")]
    RaggedRow {
        row: usize,
        expected: usize,
        found: usize,
    },
    #[error("duplicate record id {id:?} at row {row}")]
    DuplicateId { id: String, row: usize },
    #[error("dataset {name:?} has {count} records; at least 2 are required")]
    TooFewRecords { name: String, count: usize },
    #[error("dataset {name:?} has no feature columns")]
    NoFeatures { name: String },
    #[error("record {index} has {found} features; schema expects {expected}")]
    FeatureLengthMismatch {
        index: usize,
        expected: usize,
        found: usize,
    },
    #[error("record {index} ({id:?}): feature {column:?} is {value} but the log transform requires non-negative values")]
    NegativeFeature {
        index: usize,
        id: String,
        column: String,
        value: f64,
    },
    #[error("skewness needs at least 3 values, got {0}")]
    SkewnessTooShort(usize),
    #[error("zero variance")]
    ZeroVariance,
    #[error("manifest {path}: no pairs")]
    EmptyManifest { path: PathBuf },
    #[error("manifest line {line}: expected 3 fields (source, train, test), found {found}")]
    ManifestBadRow { line: usize, found: usize },
    #[error("manifest line {line}: train and test are both {name:?}")]
    ManifestSelfPair { line: usize, name: String },
    #[error("manifest line {line}: duplicate pair ({train}, {test})")]
    ManifestDuplicatePair {
        line: usize,
        train: String,
        test: String,
    },
}

/// One software module (a file, class, or commit) with its feature vector,
/// inspection effort in raw lines, and actual defect label.
#[derive(Debug, Clone, PartialEq)]
pub struct ModuleRecord {
    pub id: String,
    pub features: Vec<f64>,
    pub effort: f64,
    pub defective: bool,
}

impl ModuleRecord {
    pub fn new(id: impl Into<String>, features: Vec<f64>, effort: f64, defective: bool) -> Self {
        Self {
            id: id.into(),
            features,
            effort,
            defective,
        }
    }
}

/// A named, ordered collection of module records sharing one feature schema.
///
/// Record order is stable; indices are the join key everywhere downstream.
#[derive(Debug, Clone, PartialEq)]
pub struct Dataset {
    pub name: String,
    pub feature_names: Vec<String>,
    pub records: Vec<ModuleRecord>,
    pub source_tag: String,
}

impl Dataset {
    /// Builds a dataset, validating the structural invariants: at least two
    /// records, at least one feature, and uniform feature-vector length.
    pub fn new(
        name: impl Into<String>,
        feature_names: Vec<String>,
        records: Vec<ModuleRecord>,
        source_tag: impl Into<String>,
    ) -> Result<Self, DatasetError> {
        let name = name.into();
        if feature_names.is_empty() {
            return Err(DatasetError::NoFeatures { name });
        }
        if records.len() < 2 {
            return Err(DatasetError::TooFewRecords {
                name,
                count: records.len(),
            });
        }
        for (index, r) in records.iter().enumerate() {
            if r.features.len() != feature_names.len() {
                return Err(DatasetError::FeatureLengthMismatch {
                    index,
                    expected: feature_names.len(),
                    found: r.features.len(),
                });
            }
        }
        Ok(Self {
            name,
            feature_names,
            records,
            source_tag: source_tag.into(),
        })
    }

    pub fn len(&self) -> usize {
        self.records.len()
    }

    pub fn is_empty(&self) -> bool {
        self.records.is_empty()
    }

    pub fn efforts(&self) -> Vec<f64> {
        self.records.iter().map(|r| r.effort).collect()
    }

    pub fn labels(&self) -> Vec<bool> {
        self.records.iter().map(|r| r.defective).collect()
    }

    pub fn positives(&self) -> usize {
        self.records.iter().filter(|r| r.defective).count()
    }
}

/// How a raw label cell is coerced to a boolean.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum TruthyRule {
    /// Nonzero numeric is defective; otherwise the keywords
    /// true/yes/buggy/y (case-insensitive) are defective and
    /// false/no/clean/n are clean. The default.
    #[default]
    NonzeroOrKeyword,
    /// The cell must parse as a number; nonzero is defective.
    NonzeroNumeric,
}

impl TruthyRule {
    fn interpret(self, value: &str) -> Option<bool> {
        if let Ok(v) = value.trim().parse::<f64>() {
            return Some(v != 0.0);
        }
        if self == TruthyRule::NonzeroNumeric {
            return None;
        }
        match value.trim().to_ascii_lowercase().as_str() {
            "true" | "yes" | "buggy" | "y" => Some(true),
            "false" | "no" | "clean" | "n" => Some(false),
            _ => None,
        }
    }
}

/// Column mapping for a delimited dataset file.
#[derive(Debug, Clone)]
pub struct DatasetSchema {
    /// Name of the effort (LOC / churn) column.
    pub effort_column: String,
    /// Name of the defect label column.
    pub label_column: String,
    /// Optional record-id column; when absent ids are synthesized as `r1..rN`.
    pub id_column: Option<String>,
    /// Field delimiter, comma by default.
    pub delimiter: u8,
    pub truthy: TruthyRule,
    /// Also expose the effort column as a model feature. The feature copy is
    /// subject to preprocessing while `ModuleRecord::effort` stays raw.
    pub effort_as_feature: bool,
}

impl Default for DatasetSchema {
    fn default() -> Self {
        Self {
            effort_column: "loc".to_string(),
            label_column: "bug".to_string(),
            id_column: None,
            delimiter: b',',
            truthy: TruthyRule::default(),
            effort_as_feature: false,
        }
    }
}

/// Loads a delimited dataset file, preserving row order.
///
/// Row numbers in errors are 1-based data rows (the header is row 0).
pub fn load_dataset(path: &Path, schema: &DatasetSchema) -> Result<Dataset, DatasetError> {
    let raw = std::fs::read_to_string(path).map_err(|source| DatasetError::Io {
        path: path.to_path_buf(),
        source,
    })?;
    let name = path
        .file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| path.display().to_string());
    parse_dataset(&raw, &name, path, schema)
}

fn parse_dataset(
    raw: &str,
    name: &str,
    path: &Path,
    schema: &DatasetSchema,
) -> Result<Dataset, DatasetError> {
    let mut reader = csv::ReaderBuilder::new()
        .delimiter(schema.delimiter)
        .has_headers(true)
        .trim(csv::Trim::All)
        .flexible(true)
        .from_reader(raw.as_bytes());

    let headers: Vec<String> = match reader.headers() {
        Ok(h) if !h.is_empty() && !(h.len() == 1 && h[0].is_empty()) => {
            h.iter().map(|s| s.to_string()).collect()
        }
        _ => {
            return Err(DatasetError::EmptyFile {
                path: path.to_path_buf(),
            })
        }
    };
    let header_line = headers.join(",");
    let find = |column: &str| -> Result<usize, DatasetError> {
        headers
            .iter()
            .position(|h| h == column)
            .ok_or_else(|| DatasetError::MissingColumn {
                column: column.to_string(),
                header: header_line.clone(),
            })
    };

    let effort_idx = find(&schema.effort_column)?;
    let label_idx = find(&schema.label_column)?;
    let id_idx = match &schema.id_column {
        Some(c) => Some(find(c)?),
        None => None,
    };

    let feature_cols: Vec<usize> = (0..headers.len())
        .filter(|&i| {
            (i != effort_idx || schema.effort_as_feature) && i != label_idx && Some(i) != id_idx
        })
        .collect();
    if feature_cols.is_empty() {
        return Err(DatasetError::NoFeatures {
            name: name.to_string(),
        });
    }
    let feature_names: Vec<String> = feature_cols.iter().map(|&i| headers[i].clone()).collect();

    let mut records = Vec::new();
    let mut seen_ids = HashSet::new();
    for (row_zero, record) in reader.records().enumerate() {
        let row = row_zero + 1;
        let record = record.map_err(|_| DatasetError::RaggedRow {
            row,
            expected: headers.len(),
            found: 0,
        })?;
        if record.len() != headers.len() {
            return Err(DatasetError::RaggedRow {
                row,
                expected: headers.len(),
                found: record.len(),
            });
        }
        let numeric = |idx: usize| -> Result<f64, DatasetError> {
            let cell = &record[idx];
            cell.parse::<f64>().map_err(|_| DatasetError::NonNumeric {
                row,
                column: headers[idx].clone(),
                value: cell.to_string(),
            })
        };
        let features = feature_cols
            .iter()
            .map(|&i| numeric(i))
            .collect::<Result<Vec<f64>, _>>()?;
        let effort = numeric(effort_idx)?;
        let label_cell = &record[label_idx];
        let defective =
            schema
                .truthy
                .interpret(label_cell)
                .ok_or_else(|| DatasetError::BadLabel {
                    row,
                    column: headers[label_idx].clone(),
                    value: label_cell.to_string(),
                })?;
        let id = match id_idx {
            Some(i) => record[i].to_string(),
            None => format!("r{row}"),
        };
        if !seen_ids.insert(id.clone()) {
            return Err(DatasetError::DuplicateId { id, row });
        }
        records.push(ModuleRecord::new(id, features, effort, defective));
    }

    if records.is_empty() {
        return Err(DatasetError::EmptyFile {
            path: path.to_path_buf(),
        });
    }
    Dataset::new(name, feature_names, records, "")
}

/// Serializes a dataset back to delimited text. Efforts and feature values
/// use the shortest round-trip float representation, so a load / write /
/// load cycle preserves them exactly.
pub fn write_dataset(path: &Path, d: &Dataset) -> Result<(), DatasetError> {
    let mut out = String::new();
    out.push_str("id,");
    out.push_str(&d.feature_names.join(","));
    out.push_str(",loc,bug\n");
    for r in &d.records {
        out.push_str(&r.id);
        for f in &r.features {
            let _ = write!(out, ",{f}");
        }
        let _ = write!(out, ",{},{}\n", r.effort, u8::from(r.defective));
    }
    std::fs::write(path, out).map_err(|source| DatasetError::Io {
        path: path.to_path_buf(),
        source,
    })
}

/// Preprocessing switches. Both default to on, matching the usual
/// cross-project pipeline.
#[derive(Debug, Clone, Copy)]
pub struct PreprocessOptions {
    /// Replace every feature value x with ln(1+x). Effort is never
    /// transformed; metric budgets are proportions of raw LOC.
    pub log_transform: bool,
    /// Remove records with effort <= 0 (empty commits / empty files).
    pub drop_zero_effort: bool,
}

impl Default for PreprocessOptions {
    fn default() -> Self {
        Self {
            log_transform: true,
            drop_zero_effort: true,
        }
    }
}

/// Returns a preprocessed copy of the dataset; the input is untouched.
///
/// Negative feature values are rejected when the log transform is on:
/// ln(1+x) is only taken on the non-negative half-line here, so surprises
/// surface as errors instead of NaNs.
pub fn preprocess(d: &Dataset, opts: PreprocessOptions) -> Result<Dataset, DatasetError> {
    let mut records: Vec<ModuleRecord> = d
        .records
        .iter()
        .filter(|r| !opts.drop_zero_effort || r.effort > 0.0)
        .cloned()
        .collect();

    if opts.log_transform {
        for (index, r) in records.iter_mut().enumerate() {
            for (j, v) in r.features.iter_mut().enumerate() {
                if *v < 0.0 {
                    return Err(DatasetError::NegativeFeature {
                        index,
                        id: r.id.clone(),
                        column: d.feature_names[j].clone(),
                        value: *v,
                    });
                }
                *v = v.ln_1p();
            }
        }
    }

    Dataset::new(
        d.name.clone(),
        d.feature_names.clone(),
        records,
        d.source_tag.clone(),
    )
}

/// Third standardized moment with the population (divisor N) convention:
/// `(1/N) * sum(((x_i - mean) / sigma)^3)`.
pub fn skewness(values: &[f64]) -> Result<f64, DatasetError> {
    let n = values.len();
    if n < 3 {
        return Err(DatasetError::SkewnessTooShort(n));
    }
    let nf = n as f64;
    let mean = values.iter().sum::<f64>() / nf;
    let var = values.iter().map(|x| (x - mean).powi(2)).sum::<f64>() / nf;
    let sigma = var.sqrt();
    if sigma <= 1e-12 * mean.abs().max(1.0) {
        return Err(DatasetError::ZeroVariance);
    }
    let third = values.iter().map(|x| (x - mean).powi(3)).sum::<f64>() / nf;
    Ok(third / sigma.powi(3))
}

/// One cross-project prediction pair.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ManifestPair {
    pub source: String,
    pub train: String,
    pub test: String,
}

impl ManifestPair {
    /// Stable tag used as the pair key in result tables.
    pub fn tag(&self) -> String {
        format!("{}->{}", self.train, self.test)
    }
}

/// Ordered list of (train, test) dataset pairs to run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExperimentManifest {
    pub pairs: Vec<ManifestPair>,
}

impl ExperimentManifest {
    /// Every dataset name referenced by any pair, in first-use order.
    pub fn dataset_names(&self) -> Vec<String> {
        let mut seen = HashSet::new();
        let mut names = Vec::new();
        for p in &self.pairs {
            for n in [&p.train, &p.test] {
                if seen.insert(n.clone()) {
                    names.push(n.clone());
                }
            }
        }
        names
    }
}

/// Loads a manifest: three delimited columns (source, train, test), one pair
/// per line, `#` comment lines and blank lines ignored.
pub fn load_manifest(path: &Path) -> Result<ExperimentManifest, DatasetError> {
    let raw = std::fs::read_to_string(path).map_err(|source| DatasetError::Io {
        path: path.to_path_buf(),
        source,
    })?;
    parse_manifest(&raw, path)
}

fn parse_manifest(raw: &str, path: &Path) -> Result<ExperimentManifest, DatasetError> {
    let mut pairs = Vec::new();
    let mut seen = HashSet::new();
    for (line_zero, line) in raw.lines().enumerate() {
        let line_no = line_zero + 1;
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = trimmed.split(',').map(str::trim).collect();
        if fields.len() != 3 || fields.iter().any(|f| f.is_empty()) {
            return Err(DatasetError::ManifestBadRow {
                line: line_no,
                found: fields.len(),
            });
        }
        let (source, train, test) = (fields[0], fields[1], fields[2]);
        if train == test {
            return Err(DatasetError::ManifestSelfPair {
                line: line_no,
                name: train.to_string(),
            });
        }
        if !seen.insert((train.to_string(), test.to_string())) {
            return Err(DatasetError::ManifestDuplicatePair {
                line: line_no,
                train: train.to_string(),
                test: test.to_string(),
            });
        }
        pairs.push(ManifestPair {
            source: source.to_string(),
            train: train.to_string(),
            test: test.to_string(),
        });
    }
    if pairs.is_empty() {
        return Err(DatasetError::EmptyManifest {
            path: path.to_path_buf(),
        });
    }
    Ok(ExperimentManifest { pairs })
}

/// The 61-pair cross-project / cross-version setup shipped with the tool,
/// same format as any user manifest.
pub const DEFAULT_MANIFEST: &str = include_str!("data/cross_project_manifest.txt");

/// Parses [`DEFAULT_MANIFEST`].
pub fn default_manifest() -> ExperimentManifest {
    parse_manifest(DEFAULT_MANIFEST, Path::new("<builtin>"))
        .expect("builtin manifest must be valid")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn schema() -> DatasetSchema {
        DatasetSchema::default()
    }

    fn write_tmp(content: &str) -> tempfile::NamedTempFile {
        use std::io::Write;
        let mut f = tempfile::NamedTempFile::new().unwrap();
        f.write_all(content.as_bytes()).unwrap();
        f
    }

    #[test]
    fn load_maps_schema_directly() {
        let f = write_tmp("loc,churn,bug\n10,3,0\n20,5,1\n30,1,0\n");
        let d = load_dataset(f.path(), &schema()).unwrap();
        assert_eq!(d.len(), 3);
        assert_eq!(d.feature_names, vec!["churn"]);
        assert_eq!(d.efforts(), vec![10.0, 20.0, 30.0]);
        assert_eq!(d.labels(), vec![false, true, false]);
    }

    #[test]
    fn truthy_rule_accepts_nonzero_and_keywords() {
        let f = write_tmp("loc,churn,bug\n10,3,1\n20,5,0\n30,1,TRUE\n40,2,no\n");
        let d = load_dataset(f.path(), &schema()).unwrap();
        assert_eq!(d.labels(), vec![true, false, true, false]);
    }

    #[test]
    fn non_numeric_feature_cites_row() {
        let mut content = String::from("loc,churn,bug\n");
        for i in 1..=6 {
            content.push_str(&format!("{i},1,0\n"));
        }
        content.push_str("7,NA,1\n");
        let f = write_tmp(&content);
        let err = load_dataset(f.path(), &schema()).unwrap_err();
        match err {
            DatasetError::NonNumeric { row, column, value } => {
                assert_eq!(row, 7);
                assert_eq!(column, "churn");
                assert_eq!(value, "NA");
            }
            other => panic!("unexpected error: {other}"),
        }
    }

    #[test]
    fn empty_file_is_an_error() {
        let f = write_tmp("");
        assert!(matches!(
            load_dataset(f.path(), &schema()),
            Err(DatasetError::EmptyFile { .. })
        ));
        let header_only = write_tmp("loc,churn,bug\n");
        assert!(matches!(
            load_dataset(header_only.path(), &schema()),
            Err(DatasetError::EmptyFile { .. })
        ));
    }

    #[test]
    fn missing_column_names_it() {
        let f = write_tmp("size,churn,bug\n1,2,0\n3,4,1\n");
        let err = load_dataset(f.path(), &schema()).unwrap_err();
        match err {
            DatasetError::MissingColumn { column, .. } => assert_eq!(column, "loc"),
            other => panic!("unexpected error: {other}"),
        }
    }

    #[test]
    fn effort_as_feature_keeps_raw_copy() {
        let f = write_tmp("loc,churn,bug\n10,3,0\n20,5,1\n");
        let mut s = schema();
        s.effort_as_feature = true;
        let d = load_dataset(f.path(), &s).unwrap();
        assert_eq!(d.feature_names, vec!["loc", "churn"]);
        let p = preprocess(&d, PreprocessOptions::default()).unwrap();
        // Feature copy transformed, effort untouched.
        assert!((p.records[0].features[0] - 11f64.ln()).abs() < 1e-12);
        assert_eq!(p.records[0].effort, 10.0);
    }

    #[test]
    fn roundtrip_preserves_labels_and_efforts() {
        let f = write_tmp("loc,churn,bug\n10.25,3,0\n20,5.5,1\n0.1,1,1\n");
        let d = load_dataset(f.path(), &schema()).unwrap();
        let out = tempfile::NamedTempFile::new().unwrap();
        write_dataset(out.path(), &d).unwrap();
        let mut s2 = schema();
        s2.id_column = Some("id".to_string());
        let d2 = load_dataset(out.path(), &s2).unwrap();
        assert_eq!(d2.len(), d.len());
        assert_eq!(d2.labels(), d.labels());
        assert_eq!(d2.efforts(), d.efforts());
    }

    #[test]
    fn preprocess_drops_zero_effort() {
        let d = Dataset::new(
            "t",
            vec!["f".into()],
            vec![
                ModuleRecord::new("a", vec![1.0], 0.0, false),
                ModuleRecord::new("b", vec![2.0], 5.0, true),
                ModuleRecord::new("c", vec![3.0], 12.0, false),
            ],
            "",
        )
        .unwrap();
        let p = preprocess(
            &d,
            PreprocessOptions {
                log_transform: false,
                drop_zero_effort: true,
            },
        )
        .unwrap();
        assert_eq!(p.len(), 2);
        assert_eq!(p.records[0].id, "b");
        // Idempotent: a second pass changes nothing.
        let pp = preprocess(
            &p,
            PreprocessOptions {
                log_transform: false,
                drop_zero_effort: true,
            },
        )
        .unwrap();
        assert_eq!(pp, p);
    }

    #[test]
    fn log_transform_points() {
        let d = Dataset::new(
            "t",
            vec!["f".into()],
            vec![
                ModuleRecord::new("a", vec![0.0], 1.0, false),
                ModuleRecord::new("b", vec![std::f64::consts::E - 1.0], 2.0, true),
            ],
            "",
        )
        .unwrap();
        let p = preprocess(
            &d,
            PreprocessOptions {
                log_transform: true,
                drop_zero_effort: false,
            },
        )
        .unwrap();
        assert_eq!(p.records[0].features[0], 0.0);
        assert!((p.records[1].features[0] - 1.0).abs() < 1e-12);
        // Input untouched.
        assert_eq!(d.records[0].features[0], 0.0);
        assert!((d.records[1].features[0] - (std::f64::consts::E - 1.0)).abs() < 1e-15);
    }

    #[test]
    fn log_transform_rejects_negative_features() {
        let d = Dataset::new(
            "t",
            vec!["f".into()],
            vec![
                ModuleRecord::new("a", vec![-0.5], 1.0, false),
                ModuleRecord::new("b", vec![2.0], 2.0, true),
            ],
            "",
        )
        .unwrap();
        assert!(matches!(
            preprocess(&d, PreprocessOptions::default()),
            Err(DatasetError::NegativeFeature { .. })
        ));
    }

    #[test]
    fn skewness_symmetric_is_zero() {
        assert!(skewness(&[1.0, 2.0, 3.0]).unwrap().abs() < 1e-12);
    }

    #[test]
    fn skewness_hand_value() {
        // mean 3, population variance 12, third moment 48 => 48 / 12^1.5
        let s = skewness(&[1.0, 1.0, 1.0, 9.0]).unwrap();
        assert!((s - 1.1547).abs() < 1e-4);
    }

    #[test]
    fn skewness_errors() {
        assert!(matches!(
            skewness(&[1.0, 2.0]),
            Err(DatasetError::SkewnessTooShort(2))
        ));
        assert!(matches!(
            skewness(&[4.0, 4.0, 4.0, 4.0]),
            Err(DatasetError::ZeroVariance)
        ));
    }

    #[test]
    fn manifest_parses_in_order() {
        let f = write_tmp("# pairs\nPROMISE, ant-1.3, ant-1.4\nPROMISE, ant-1.4, ant-1.5\n");
        let m = load_manifest(f.path()).unwrap();
        assert_eq!(m.pairs.len(), 2);
        assert_eq!(m.pairs[0].train, "ant-1.3");
        assert_eq!(m.pairs[0].test, "ant-1.4");
        assert_eq!(m.pairs[0].tag(), "ant-1.3->ant-1.4");
    }

    #[test]
    fn manifest_rejects_self_pair_and_duplicates() {
        let f = write_tmp("K, a, a\n");
        assert!(matches!(
            load_manifest(f.path()),
            Err(DatasetError::ManifestSelfPair { .. })
        ));
        let f = write_tmp("K, a, b\nK, a, b\n");
        assert!(matches!(
            load_manifest(f.path()),
            Err(DatasetError::ManifestDuplicatePair { .. })
        ));
        let f = write_tmp("# only comments\n");
        assert!(matches!(
            load_manifest(f.path()),
            Err(DatasetError::EmptyManifest { .. })
        ));
    }

    #[test]
    fn builtin_manifest_has_61_pairs() {
        let m = default_manifest();
        assert_eq!(m.pairs.len(), 61);
        assert_eq!(m.pairs[0].source, "PROMISE");
        assert_eq!(m.pairs[0].train, "ant-1.3");
        assert_eq!(m.pairs[0].test, "ant-1.4");
        assert_eq!(m.pairs[60].train, "pdf.js");
        assert_eq!(m.pairs[60].test, "meteor");
        // 72 distinct datasets across the 61 pairs.
        assert_eq!(m.dataset_names().len(), 72);
    }
}
