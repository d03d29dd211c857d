//! k-nearest-neighbour classifier on standardized features. Probability is
//! the defective fraction among the k closest training records (Euclidean
//! distance); distance ties break toward the lower training-record index.

use crate::dataset::Dataset;

use super::Standardizer;

#[derive(Debug, Clone)]
pub(crate) struct KnnModel {
    standardizer: Standardizer,
    points: Vec<Vec<f64>>,
    labels: Vec<bool>,
    k: usize,
}

pub(crate) fn train(d: &Dataset, k: usize) -> KnnModel {
    let standardizer = Standardizer::fit(d);
    KnnModel {
        points: standardizer.matrix(d),
        labels: d.labels(),
        standardizer,
        k,
    }
}

impl KnnModel {
    pub(crate) fn predict(&self, d: &Dataset) -> Vec<f64> {
        d.records
            .iter()
            .map(|r| {
                let q = self.standardizer.transform(&r.features);
                let mut dist: Vec<(f64, usize)> = self
                    .points
                    .iter()
                    .enumerate()
                    .map(|(i, p)| {
                        let d2: f64 = p.iter().zip(&q).map(|(a, b)| (a - b).powi(2)).sum();
                        (d2, i)
                    })
                    .collect();
                dist.sort_by(|a, b| a.0.partial_cmp(&b.0).unwrap().then_with(|| a.1.cmp(&b.1)));
                let hits = dist[..self.k]
                    .iter()
                    .filter(|(_, i)| self.labels[*i])
                    .count();
                hits as f64 / self.k as f64
            })
            .collect()
    }
}
