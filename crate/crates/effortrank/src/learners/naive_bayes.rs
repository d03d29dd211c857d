//! Gaussian naive Bayes: per-class per-feature mean and variance with a
//! variance floor, class priors from the training fractions, posterior via
//! log-sum-exp.

use crate::dataset::Dataset;

use super::Standardizer;

const VARIANCE_FLOOR: f64 = 1e-9;

#[derive(Debug, Clone)]
struct ClassStats {
    log_prior: f64,
    means: Vec<f64>,
    variances: Vec<f64>,
}

#[derive(Debug, Clone)]
pub(crate) struct NaiveBayesModel {
    standardizer: Standardizer,
    positive: ClassStats,
    negative: ClassStats,
}

fn fit_class(rows: &[&Vec<f64>], k: usize, prior: f64) -> ClassStats {
    let n = rows.len() as f64;
    let mut means = vec![0.0; k];
    for row in rows {
        for (m, v) in means.iter_mut().zip(row.iter()) {
            *m += v;
        }
    }
    for m in &mut means {
        *m /= n;
    }
    let mut variances = vec![0.0; k];
    for row in rows {
        for ((s, m), v) in variances.iter_mut().zip(&means).zip(row.iter()) {
            *s += (v - m).powi(2);
        }
    }
    for s in &mut variances {
        *s = (*s / n).max(VARIANCE_FLOOR);
    }
    ClassStats {
        log_prior: prior.ln(),
        means,
        variances,
    }
}

pub(crate) fn train(d: &Dataset) -> NaiveBayesModel {
    let standardizer = Standardizer::fit(d);
    let x = standardizer.matrix(d);
    let k = d.feature_names.len();
    let pos_rows: Vec<&Vec<f64>> = x
        .iter()
        .zip(&d.records)
        .filter(|(_, r)| r.defective)
        .map(|(row, _)| row)
        .collect();
    let neg_rows: Vec<&Vec<f64>> = x
        .iter()
        .zip(&d.records)
        .filter(|(_, r)| !r.defective)
        .map(|(row, _)| row)
        .collect();
    let n = d.len() as f64;
    NaiveBayesModel {
        standardizer,
        positive: fit_class(&pos_rows, k, pos_rows.len() as f64 / n),
        negative: fit_class(&neg_rows, k, neg_rows.len() as f64 / n),
    }
}

impl ClassStats {
    fn log_likelihood(&self, row: &[f64]) -> f64 {
        let mut ll = self.log_prior;
        for ((v, m), var) in row.iter().zip(&self.means).zip(&self.variances) {
            ll += -0.5 * ((v - m).powi(2) / var + var.ln() + (2.0 * std::f64::consts::PI).ln());
        }
        ll
    }
}

impl NaiveBayesModel {
    pub(crate) fn predict(&self, d: &Dataset) -> Vec<f64> {
        d.records
            .iter()
            .map(|r| {
                let row = self.standardizer.transform(&r.features);
                let lp = self.positive.log_likelihood(&row);
                let ln = self.negative.log_likelihood(&row);
                let m = lp.max(ln);
                let num = (lp - m).exp();
                num / (num + (ln - m).exp())
            })
            .collect()
    }
}
