//! Logistic regression via full-batch gradient descent on standardized
//! features. Fixed iteration count, zero initialization, L2 on the weights
//! but not the intercept; no randomness anywhere, so retraining is
//! bit-reproducible.

use crate::dataset::Dataset;

use super::Standardizer;

#[derive(Debug, Clone)]
pub(crate) struct LogisticModel {
    standardizer: Standardizer,
    weights: Vec<f64>,
    bias: f64,
}

fn sigmoid(z: f64) -> f64 {
    if z >= 0.0 {
        1.0 / (1.0 + (-z).exp())
    } else {
        let e = z.exp();
        e / (1.0 + e)
    }
}

pub(crate) fn train(
    d: &Dataset,
    iterations: usize,
    learning_rate: f64,
    l2: f64,
) -> LogisticModel {
    let standardizer = Standardizer::fit(d);
    let x = standardizer.matrix(d);
    let y: Vec<f64> = d
        .records
        .iter()
        .map(|r| if r.defective { 1.0 } else { 0.0 })
        .collect();
    let n = x.len() as f64;
    let k = d.feature_names.len();

    let mut weights = vec![0.0; k];
    let mut bias = 0.0;
    for _ in 0..iterations {
        let mut grad_w = vec![0.0; k];
        let mut grad_b = 0.0;
        for (row, target) in x.iter().zip(&y) {
            let z = bias + row.iter().zip(&weights).map(|(v, w)| v * w).sum::<f64>();
            let err = sigmoid(z) - target;
            for (g, v) in grad_w.iter_mut().zip(row) {
                *g += err * v;
            }
            grad_b += err;
        }
        for (w, g) in weights.iter_mut().zip(&grad_w) {
            *w -= learning_rate * (g / n + l2 * *w);
        }
        bias -= learning_rate * grad_b / n;
    }

    LogisticModel {
        standardizer,
        weights,
        bias,
    }
}

impl LogisticModel {
    pub(crate) fn predict(&self, d: &Dataset) -> Vec<f64> {
        d.records
            .iter()
            .map(|r| {
                let z = self.standardizer.transform(&r.features);
                let s = self.bias
                    + z.iter().zip(&self.weights).map(|(v, w)| v * w).sum::<f64>();
                sigmoid(s)
            })
            .collect()
    }
}
