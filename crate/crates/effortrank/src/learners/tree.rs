//! Binary classification trees and the bootstrap forest built on them.
//!
//! One implementation covers both the entropy-split and gini-split roles;
//! exact third-party tree internals are not reproduced. Split-generated
//! leaves emit a Laplace-smoothed probability `(pos + 1) / (n + 2)`; a tree
//! that never splits (depth limit 0, or no split with positive gain) emits
//! the raw training-set positive fraction, which is already the full-sample
//! estimate.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::dataset::Dataset;
use crate::seed::child_seed;

use super::Standardizer;

/// Impurity measure used to pick splits.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SplitCriterion {
    Entropy,
    Gini,
}

impl SplitCriterion {
    fn impurity(self, pos: usize, n: usize) -> f64 {
        if n == 0 {
            return 0.0;
        }
        let p = pos as f64 / n as f64;
        match self {
            SplitCriterion::Entropy => {
                let mut h = 0.0;
                if p > 0.0 {
                    h -= p * p.log2();
                }
                if p < 1.0 {
                    h -= (1.0 - p) * (1.0 - p).log2();
                }
                h
            }
            SplitCriterion::Gini => 2.0 * p * (1.0 - p),
        }
    }
}

#[derive(Debug, Clone)]
enum Node {
    Leaf {
        probability: f64,
    },
    Split {
        feature: usize,
        threshold: f64,
        left: Box<Node>,
        right: Box<Node>,
    },
}

impl Node {
    fn probability_for(&self, row: &[f64]) -> f64 {
        match self {
            Node::Leaf { probability } => *probability,
            Node::Split {
                feature,
                threshold,
                left,
                right,
            } => {
                if row[*feature] <= *threshold {
                    left.probability_for(row)
                } else {
                    right.probability_for(row)
                }
            }
        }
    }
}

struct GrowContext<'a> {
    x: &'a [Vec<f64>],
    y: &'a [bool],
    criterion: SplitCriterion,
    max_depth: Option<usize>,
    min_samples_split: usize,
    /// Features considered per split; `None` scans all of them.
    features_per_split: Option<usize>,
    rng: Option<ChaCha8Rng>,
}

const MIN_GAIN: f64 = 1e-12;

fn grow(ctx: &mut GrowContext<'_>, indices: &[usize], depth: usize, is_root: bool) -> Node {
    let n = indices.len();
    let pos = indices.iter().filter(|&&i| ctx.y[i]).count();

    let make_leaf = || {
        let probability = if is_root {
            pos as f64 / n as f64
        } else {
            (pos + 1) as f64 / (n + 2) as f64
        };
        Node::Leaf { probability }
    };

    let depth_exhausted = ctx.max_depth.is_some_and(|d| depth >= d);
    if depth_exhausted || n < ctx.min_samples_split || pos == 0 || pos == n {
        return make_leaf();
    }

    let candidates = candidate_features(ctx);
    let Some((feature, threshold)) = best_split(ctx, indices, pos, &candidates) else {
        return make_leaf();
    };

    let (left_idx, right_idx): (Vec<usize>, Vec<usize>) = indices
        .iter()
        .partition(|&&i| ctx.x[i][feature] <= threshold);
    let left = grow(ctx, &left_idx, depth + 1, false);
    let right = grow(ctx, &right_idx, depth + 1, false);
    Node::Split {
        feature,
        threshold,
        left: Box::new(left),
        right: Box::new(right),
    }
}

fn candidate_features(ctx: &mut GrowContext<'_>) -> Vec<usize> {
    let total = ctx.x[0].len();
    match (ctx.features_per_split, ctx.rng.as_mut()) {
        (Some(m), Some(rng)) if m < total => {
            // Partial Fisher-Yates; sorted afterwards so feature order, not
            // draw order, breaks gain ties.
            let mut all: Vec<usize> = (0..total).collect();
            for i in 0..m {
                let j = rng.random_range(i..total);
                all.swap(i, j);
            }
            let mut chosen = all[..m].to_vec();
            chosen.sort_unstable();
            chosen
        }
        _ => (0..total).collect(),
    }
}

/// Best (feature, threshold) by impurity decrease; ties resolve to the
/// first candidate in (feature, threshold) order. Thresholds are midpoints
/// between consecutive distinct values.
fn best_split(
    ctx: &GrowContext<'_>,
    indices: &[usize],
    pos_total: usize,
    features: &[usize],
) -> Option<(usize, f64)> {
    let n = indices.len();
    let parent = ctx.criterion.impurity(pos_total, n);
    let mut best: Option<(f64, usize, f64)> = None;

    let mut sorted = indices.to_vec();
    for &feature in features {
        sorted.sort_by(|&a, &b| {
            ctx.x[a][feature]
                .partial_cmp(&ctx.x[b][feature])
                .unwrap()
                .then_with(|| a.cmp(&b))
        });
        let mut left_n = 0usize;
        let mut left_pos = 0usize;
        for w in 0..n - 1 {
            let i = sorted[w];
            left_n += 1;
            if ctx.y[i] {
                left_pos += 1;
            }
            let v = ctx.x[i][feature];
            let next = ctx.x[sorted[w + 1]][feature];
            if v == next {
                continue;
            }
            let right_n = n - left_n;
            let right_pos = pos_total - left_pos;
            let weighted = (left_n as f64 * ctx.criterion.impurity(left_pos, left_n)
                + right_n as f64 * ctx.criterion.impurity(right_pos, right_n))
                / n as f64;
            let gain = parent - weighted;
            if gain > MIN_GAIN && best.map_or(true, |(g, _, _)| gain > g + MIN_GAIN) {
                best = Some((gain, feature, v + (next - v) / 2.0));
            }
        }
    }
    best.map(|(_, f, t)| (f, t))
}

#[derive(Debug, Clone)]
pub(crate) struct TreeModel {
    standardizer: Standardizer,
    root: Node,
}

pub(crate) fn train_tree(
    d: &Dataset,
    criterion: SplitCriterion,
    max_depth: Option<usize>,
) -> TreeModel {
    let standardizer = Standardizer::fit(d);
    let x = standardizer.matrix(d);
    let y = d.labels();
    let mut ctx = GrowContext {
        x: &x,
        y: &y,
        criterion,
        max_depth,
        min_samples_split: 2,
        features_per_split: None,
        rng: None,
    };
    let indices: Vec<usize> = (0..d.len()).collect();
    let root = grow(&mut ctx, &indices, 0, true);
    TreeModel { standardizer, root }
}

impl TreeModel {
    pub(crate) fn predict(&self, d: &Dataset) -> Vec<f64> {
        d.records
            .iter()
            .map(|r| {
                self.root
                    .probability_for(&self.standardizer.transform(&r.features))
            })
            .collect()
    }
}

#[derive(Debug, Clone)]
pub(crate) struct ForestModel {
    standardizer: Standardizer,
    trees: Vec<Node>,
}

/// Bootstrap forest: each tree trains on an n-sized sample drawn with
/// replacement and considers ceil(sqrt(d)) features per split. Tree `t`
/// owns the rng stream derived for index `t`, so trees are independent of
/// each other's construction order.
pub(crate) fn train_forest(
    d: &Dataset,
    trees: usize,
    max_depth: Option<usize>,
    seed: u64,
) -> ForestModel {
    let standardizer = Standardizer::fit(d);
    let x = standardizer.matrix(d);
    let y = d.labels();
    let n = d.len();
    let m = (d.feature_names.len() as f64).sqrt().ceil() as usize;

    let grown = (0..trees)
        .map(|t| {
            let mut rng = ChaCha8Rng::seed_from_u64(child_seed(seed, "tree", t as u64));
            let indices: Vec<usize> = (0..n).map(|_| rng.random_range(0..n)).collect();
            let mut ctx = GrowContext {
                x: &x,
                y: &y,
                criterion: SplitCriterion::Gini,
                max_depth,
                min_samples_split: 2,
                features_per_split: Some(m),
                rng: Some(rng),
            };
            grow(&mut ctx, &indices, 0, true)
        })
        .collect();

    ForestModel {
        standardizer,
        trees: grown,
    }
}

impl ForestModel {
    pub(crate) fn predict(&self, d: &Dataset) -> Vec<f64> {
        let k = self.trees.len() as f64;
        d.records
            .iter()
            .map(|r| {
                let row = self.standardizer.transform(&r.features);
                self.trees
                    .iter()
                    .map(|t| t.probability_for(&row))
                    .sum::<f64>()
                    / k
            })
            .collect()
    }
}
