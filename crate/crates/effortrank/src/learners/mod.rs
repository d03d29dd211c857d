//! In-repo probabilistic classifiers and imbalanced ensemble wrappers.
//!
//! Every learner consumes a [`Dataset`], standardizes features with
//! statistics fitted on the training data, and produces a [`TrainedModel`]
//! whose `predict_proba` emits a defect probability in [0, 1] per record.
//! Training is deterministic: the same (spec, data, seed) always yields a
//! model with bit-identical predictions. Randomized learners derive child
//! seeds through a fixed splitting rule, so member `i` is unaffected by how
//! many siblings train before it.
//!
//! The SVM and rule-induction learners of the usual benchmark zoo are not
//! reimplemented here; the [`LearnerSpec::External`] kind plugs their
//! precomputed probability files into the same pipeline instead.

mod ensemble;
mod external;
mod knn;
mod logistic;
mod naive_bayes;
mod tree;

use std::path::PathBuf;

use thiserror::Error;

use crate::dataset::{Dataset, DatasetError};
use crate::seed::child_seed;

pub use ensemble::make_under_bag_sample;
pub use tree::SplitCriterion;

#[derive(Debug, Error)]
pub enum LearnerError {
    #[error("training data contains a single class; supervised fitting needs both")]
    SingleClassTrainingData,
    #[error("k = {k} exceeds the {n} training records")]
    KExceedsRecords { k: usize, n: usize },
    #[error("invalid learner specification: {0}")]
    InvalidSpec(String),
    #[error("classification threshold {0} outside the open interval (0, 1)")]
    InvalidThreshold(f64),
    #[error("feature schema mismatch: model trained on [{expected}], dataset has [{found}]")]
    SchemaMismatch { expected: String, found: String },
    #[error("learner {tag:?} has no in-repo implementation; supply precomputed probabilities through an external learner")]
    UnsupportedLearner { tag: String },
    #[error("unknown learner tag {0:?}")]
    UnknownLearner(String),
    #[error("failed to read probability file {path}: {source}")]
    ExternalIo {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("probability file {path}, line {line}: {reason}")]
    ExternalParse {
        path: PathBuf,
        line: usize,
        reason: String,
    },
    #[error("probability file {path}: record {id:?} {problem}")]
    ExternalRecord {
        path: PathBuf,
        id: String,
        problem: String,
    },
    #[error(transparent)]
    Dataset(#[from] DatasetError),
}

/// Declarative learner description: algorithm plus parameters.
///
/// Defaults follow the usual benchmark settings: k = 8 for k-NN, 200 trees
/// for a standalone random forest and 50 when nested inside an ensemble,
/// and `ir = 1` (balanced classes) with 10 bags / boosting rounds for the
/// imbalanced ensembles.
#[derive(Debug, Clone, PartialEq)]
pub enum LearnerSpec {
    LogisticRegression {
        iterations: usize,
        learning_rate: f64,
        l2: f64,
    },
    NaiveBayes,
    Knn {
        k: usize,
    },
    DecisionTree {
        criterion: SplitCriterion,
        max_depth: Option<usize>,
    },
    RandomForest {
        trees: usize,
        max_depth: Option<usize>,
    },
    UnderBagging {
        bags: usize,
        ir: f64,
        base: Box<LearnerSpec>,
    },
    RusBoost {
        rounds: usize,
        ir: f64,
        base: Box<LearnerSpec>,
    },
    /// Probabilities read from `<dir>/<train>__<test>.csv` at prediction
    /// time; used to plug outside tools into the benchmark matrix.
    External {
        dir: PathBuf,
    },
}

impl LearnerSpec {
    pub fn logistic_regression() -> Self {
        LearnerSpec::LogisticRegression {
            iterations: 500,
            learning_rate: 0.1,
            l2: 1e-4,
        }
    }

    pub fn knn() -> Self {
        LearnerSpec::Knn { k: 8 }
    }

    pub fn c50() -> Self {
        LearnerSpec::DecisionTree {
            criterion: SplitCriterion::Entropy,
            max_depth: None,
        }
    }

    pub fn cart() -> Self {
        LearnerSpec::DecisionTree {
            criterion: SplitCriterion::Gini,
            max_depth: None,
        }
    }

    pub fn random_forest() -> Self {
        LearnerSpec::RandomForest {
            trees: 200,
            max_depth: None,
        }
    }

    /// Forest sized for use inside an ensemble.
    pub fn random_forest_nested() -> Self {
        LearnerSpec::RandomForest {
            trees: 50,
            max_depth: None,
        }
    }

    pub fn under_bagging(base: LearnerSpec) -> Self {
        LearnerSpec::UnderBagging {
            bags: 10,
            ir: 1.0,
            base: Box::new(base),
        }
    }

    pub fn rus_boost(base: LearnerSpec) -> Self {
        LearnerSpec::RusBoost {
            rounds: 10,
            ir: 1.0,
            base: Box::new(base),
        }
    }

    fn is_ensemble(&self) -> bool {
        matches!(
            self,
            LearnerSpec::UnderBagging { .. } | LearnerSpec::RusBoost { .. }
        )
    }

    fn validate(&self) -> Result<(), LearnerError> {
        match self {
            LearnerSpec::LogisticRegression {
                iterations,
                learning_rate,
                l2,
            } => {
                if *iterations == 0 || *learning_rate <= 0.0 || *l2 < 0.0 {
                    return Err(LearnerError::InvalidSpec(
                        "logistic regression needs iterations >= 1, learning_rate > 0, l2 >= 0"
                            .into(),
                    ));
                }
            }
            LearnerSpec::NaiveBayes | LearnerSpec::External { .. } => {}
            LearnerSpec::Knn { k } => {
                if *k < 1 {
                    return Err(LearnerError::InvalidSpec("k-NN needs k >= 1".into()));
                }
            }
            LearnerSpec::DecisionTree { .. } => {}
            LearnerSpec::RandomForest { trees, .. } => {
                if *trees < 1 {
                    return Err(LearnerError::InvalidSpec(
                        "random forest needs at least 1 tree".into(),
                    ));
                }
            }
            LearnerSpec::UnderBagging { bags, ir, base } => {
                if *bags < 1 || *ir <= 0.0 {
                    return Err(LearnerError::InvalidSpec(
                        "under-bagging needs bags >= 1 and ir > 0".into(),
                    ));
                }
                if base.is_ensemble() || matches!(**base, LearnerSpec::External { .. }) {
                    return Err(LearnerError::InvalidSpec(
                        "ensemble base learner must be a plain classifier".into(),
                    ));
                }
                base.validate()?;
            }
            LearnerSpec::RusBoost { rounds, ir, base } => {
                if *rounds < 1 || *ir <= 0.0 {
                    return Err(LearnerError::InvalidSpec(
                        "rusboost needs rounds >= 1 and ir > 0".into(),
                    ));
                }
                if base.is_ensemble() || matches!(**base, LearnerSpec::External { .. }) {
                    return Err(LearnerError::InvalidSpec(
                        "ensemble base learner must be a plain classifier".into(),
                    ));
                }
                base.validate()?;
            }
        }
        Ok(())
    }
}

/// Canonical tags with an in-repo implementation.
pub const BUILTIN_LEARNER_TAGS: [&str; 12] = [
    "lr", "nb", "ibk", "c50", "cart", "rf", "ubag_c50", "ubag_cart", "ubag_rf", "ubst_c50",
    "ubst_cart", "ubst_rf",
];

/// Tags from the usual benchmark zoo that require external probabilities.
pub const EXTERNAL_ONLY_TAGS: [&str; 4] = ["svm", "jrip", "ubag_svm", "ubst_svm"];

/// Resolves a learner tag to its specification with default parameters.
/// Tags without an in-repo implementation (`svm`, `jrip`, `ubag_svm`,
/// `ubst_svm`) report that they need an external probability source.
pub fn learner_from_tag(tag: &str) -> Result<LearnerSpec, LearnerError> {
    match tag {
        "lr" => Ok(LearnerSpec::logistic_regression()),
        "nb" => Ok(LearnerSpec::NaiveBayes),
        "ibk" | "knn" => Ok(LearnerSpec::knn()),
        "c50" => Ok(LearnerSpec::c50()),
        "cart" => Ok(LearnerSpec::cart()),
        "rf" => Ok(LearnerSpec::random_forest()),
        "ubag_c50" => Ok(LearnerSpec::under_bagging(LearnerSpec::c50())),
        "ubag_cart" => Ok(LearnerSpec::under_bagging(LearnerSpec::cart())),
        "ubag_rf" => Ok(LearnerSpec::under_bagging(LearnerSpec::random_forest_nested())),
        "ubst_c50" => Ok(LearnerSpec::rus_boost(LearnerSpec::c50())),
        "ubst_cart" => Ok(LearnerSpec::rus_boost(LearnerSpec::cart())),
        "ubst_rf" => Ok(LearnerSpec::rus_boost(LearnerSpec::random_forest_nested())),
        t if EXTERNAL_ONLY_TAGS.contains(&t) => Err(LearnerError::UnsupportedLearner {
            tag: t.to_string(),
        }),
        other => Err(LearnerError::UnknownLearner(other.to_string())),
    }
}

/// Per-feature standardization statistics fitted on training data.
#[derive(Debug, Clone, PartialEq)]
pub(crate) struct Standardizer {
    means: Vec<f64>,
    stds: Vec<f64>,
}

impl Standardizer {
    pub(crate) fn fit(d: &Dataset) -> Self {
        let n = d.records.len() as f64;
        let k = d.feature_names.len();
        let mut means = vec![0.0; k];
        for r in &d.records {
            for (m, v) in means.iter_mut().zip(&r.features) {
                *m += v;
            }
        }
        for m in &mut means {
            *m /= n;
        }
        let mut stds = vec![0.0; k];
        for r in &d.records {
            for ((s, m), v) in stds.iter_mut().zip(&means).zip(&r.features) {
                *s += (v - m).powi(2);
            }
        }
        for s in &mut stds {
            *s = (*s / n).sqrt();
            // Constant features map to zero instead of dividing by ~0.
            if *s < 1e-12 {
                *s = 1.0;
            }
        }
        Self { means, stds }
    }

    pub(crate) fn transform(&self, features: &[f64]) -> Vec<f64> {
        features
            .iter()
            .zip(&self.means)
            .zip(&self.stds)
            .map(|((v, m), s)| (v - m) / s)
            .collect()
    }

    pub(crate) fn matrix(&self, d: &Dataset) -> Vec<Vec<f64>> {
        d.records.iter().map(|r| self.transform(&r.features)).collect()
    }
}

/// An opaque trained probability predictor.
#[derive(Debug, Clone)]
pub struct TrainedModel {
    feature_names: Vec<String>,
    seed: u64,
    kind: ModelKind,
}

#[derive(Debug, Clone)]
enum ModelKind {
    Logistic(logistic::LogisticModel),
    NaiveBayes(naive_bayes::NaiveBayesModel),
    Knn(knn::KnnModel),
    Tree(tree::TreeModel),
    Forest(tree::ForestModel),
    /// Unweighted mean of member probabilities (under-bagging).
    Average { members: Vec<TrainedModel> },
    /// Convex combination of member probabilities (boosting); weights sum
    /// to 1.
    Weighted {
        members: Vec<TrainedModel>,
        weights: Vec<f64>,
    },
    External(external::ExternalModel),
}

impl TrainedModel {
    pub fn feature_names(&self) -> &[String] {
        &self.feature_names
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    /// Member models of an ensemble, if this is one.
    pub fn members(&self) -> Option<&[TrainedModel]> {
        match &self.kind {
            ModelKind::Average { members } | ModelKind::Weighted { members, .. } => Some(members),
            _ => None,
        }
    }

    /// Normalized member weights of a boosted ensemble.
    pub fn member_weights(&self) -> Option<&[f64]> {
        match &self.kind {
            ModelKind::Weighted { weights, .. } => Some(weights),
            _ => None,
        }
    }

    fn check_schema(&self, d: &Dataset) -> Result<(), LearnerError> {
        if matches!(self.kind, ModelKind::External(_)) {
            return Ok(());
        }
        if self.feature_names != d.feature_names {
            return Err(LearnerError::SchemaMismatch {
                expected: self.feature_names.join(","),
                found: d.feature_names.join(","),
            });
        }
        Ok(())
    }
}

/// Fits a model. Deterministic given (spec, data, seed).
pub fn train(spec: &LearnerSpec, d: &Dataset, seed: u64) -> Result<TrainedModel, LearnerError> {
    spec.validate()?;
    let positives = d.positives();
    if !matches!(spec, LearnerSpec::External { .. })
        && (positives == 0 || positives == d.len())
    {
        return Err(LearnerError::SingleClassTrainingData);
    }
    let kind = match spec {
        LearnerSpec::LogisticRegression {
            iterations,
            learning_rate,
            l2,
        } => ModelKind::Logistic(logistic::train(d, *iterations, *learning_rate, *l2)),
        LearnerSpec::NaiveBayes => ModelKind::NaiveBayes(naive_bayes::train(d)),
        LearnerSpec::Knn { k } => {
            if *k > d.len() {
                return Err(LearnerError::KExceedsRecords { k: *k, n: d.len() });
            }
            ModelKind::Knn(knn::train(d, *k))
        }
        LearnerSpec::DecisionTree {
            criterion,
            max_depth,
        } => ModelKind::Tree(tree::train_tree(d, *criterion, *max_depth)),
        LearnerSpec::RandomForest { trees, max_depth } => {
            ModelKind::Forest(tree::train_forest(d, *trees, *max_depth, seed))
        }
        LearnerSpec::UnderBagging { bags, ir, base } => {
            ensemble::train_under_bagging(d, *bags, *ir, base, seed)?
        }
        LearnerSpec::RusBoost { rounds, ir, base } => {
            ensemble::train_rus_boost(d, *rounds, *ir, base, seed)?
        }
        LearnerSpec::External { dir } => ModelKind::External(external::ExternalModel {
            dir: dir.clone(),
            train_name: d.name.clone(),
        }),
    };
    Ok(TrainedModel {
        feature_names: d.feature_names.clone(),
        seed,
        kind,
    })
}

/// One probability per record, in record order, each finite and in [0, 1].
pub fn predict_proba(m: &TrainedModel, d: &Dataset) -> Result<Vec<f64>, LearnerError> {
    m.check_schema(d)?;
    let probs = match &m.kind {
        ModelKind::Logistic(inner) => inner.predict(d),
        ModelKind::NaiveBayes(inner) => inner.predict(d),
        ModelKind::Knn(inner) => inner.predict(d),
        ModelKind::Tree(inner) => inner.predict(d),
        ModelKind::Forest(inner) => inner.predict(d),
        ModelKind::Average { members } => {
            let mut acc = vec![0.0; d.len()];
            for member in members {
                let p = predict_proba(member, d)?;
                for (a, v) in acc.iter_mut().zip(&p) {
                    *a += v;
                }
            }
            let k = members.len() as f64;
            acc.into_iter().map(|v| v / k).collect()
        }
        ModelKind::Weighted { members, weights } => {
            let mut acc = vec![0.0; d.len()];
            for (member, w) in members.iter().zip(weights) {
                let p = predict_proba(member, d)?;
                for (a, v) in acc.iter_mut().zip(&p) {
                    *a += w * v;
                }
            }
            acc
        }
        ModelKind::External(inner) => inner.predict(d)?,
    };
    debug_assert!(probs.iter().all(|p| p.is_finite() && (0.0..=1.0).contains(p)));
    Ok(probs)
}

/// Binary labels at the given threshold: defective when probability >=
/// threshold (the boundary is inclusive).
pub fn predict_label(
    m: &TrainedModel,
    d: &Dataset,
    threshold: f64,
) -> Result<Vec<bool>, LearnerError> {
    if !threshold.is_finite() || threshold <= 0.0 || threshold >= 1.0 {
        return Err(LearnerError::InvalidThreshold(threshold));
    }
    Ok(predict_proba(m, d)?
        .into_iter()
        .map(|p| p >= threshold)
        .collect())
}

pub(crate) fn ensemble_bag_seed(seed: u64, round: usize) -> u64 {
    child_seed(seed, "bag", round as u64)
}

pub(crate) fn ensemble_member_seed(seed: u64, round: usize) -> u64 {
    child_seed(seed, "member", round as u64)
}
