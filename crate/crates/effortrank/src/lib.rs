//! Effort-aware defect prediction benchmark toolkit.
//!
//! Effort-aware defect prediction treats inspection planning as a ranking
//! problem: order software modules so that as many actual defects as possible
//! are found within a limited inspection budget (measured in lines of code).
//! This crate provides the pieces needed to benchmark ranking-score
//! strategies end to end:
//!
//! - [`dataset`]: delimited-file ingestion, preprocessing (log transform,
//!   zero-effort removal), effort skewness, and experiment manifests.
//! - [`learners`]: deterministic in-repo probabilistic classifiers (logistic
//!   regression, naive Bayes, k-NN, decision trees, random forest) plus the
//!   imbalanced ensembles UnderBagging and RUSBoost, and an external-learner
//!   adapter for precomputed probability files.
//! - [`strategies`]: ranking-score calculation strategies — `prob`,
//!   `label_loc`, `cbs_plus`, `prob_loc`, `ea_z`, `manual_up` — and the total
//!   ordering they induce.
//! - [`metrics`]: cost-effectiveness curve, Popt, Recall@budget, and IFA.
//! - [`stats`]: Wilcoxon signed-rank test, Benjamini-Hochberg FDR correction,
//!   effect size r, Win/Draw/Loss records, and Scott-Knott ESD grouping.
//! - [`runner`]: the manifest x learner x strategy experiment matrix, the
//!   zeta sweep, synthetic dataset generation, and result summarization.
//!
//! Every run is deterministic: a master seed plus a stable splitting rule
//! derives each training seed, so results are byte-identical across runs
//! regardless of worker count.

pub mod dataset;
pub mod learners;
pub mod metrics;
pub mod runner;
pub mod stats;
pub mod strategies;

pub(crate) mod seed;
