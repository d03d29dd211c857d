//! Imbalanced ensembles: under-sampling bagging and under-sampling
//! boosting (AdaBoost.M1 weight updates).
//!
//! Both rebalance each training bag to `ir = minority / majority-sample`
//! before fitting the base learner. UnderBagging averages member
//! probabilities; RUSBoost combines them as a convex mixture weighted by
//! the member's log-odds of its weighted training accuracy, so a 1-round
//! ensemble reduces exactly to its base learner.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::dataset::Dataset;

use super::{
    ensemble_bag_seed, ensemble_member_seed, predict_proba, train, LearnerError, LearnerSpec,
    ModelKind,
};

/// Under-samples the majority class: keeps every minority-class record plus
/// `ceil(minority / ir)` majority records drawn without replacement (capped
/// at the majority count). With `ir = 1` the classes come out balanced.
/// Record order follows the original dataset; the same seed reproduces the
/// same sample.
pub fn make_under_bag_sample(d: &Dataset, ir: f64, seed: u64) -> Result<Dataset, LearnerError> {
    if ir <= 0.0 {
        return Err(LearnerError::InvalidSpec("ir must be positive".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let uniform = vec![1.0; d.len()];
    weighted_under_sample(d, ir, &uniform, &mut rng)
}

/// Shared sampling core; `weights` bias the majority draw (boosting rounds
/// pass the current AdaBoost weights, plain bagging passes ones).
pub(super) fn weighted_under_sample(
    d: &Dataset,
    ir: f64,
    weights: &[f64],
    rng: &mut ChaCha8Rng,
) -> Result<Dataset, LearnerError> {
    let positives: Vec<usize> = (0..d.len()).filter(|&i| d.records[i].defective).collect();
    let negatives: Vec<usize> = (0..d.len()).filter(|&i| !d.records[i].defective).collect();
    if positives.is_empty() || negatives.is_empty() {
        return Err(LearnerError::SingleClassTrainingData);
    }
    // On equal counts the defective class counts as the minority.
    let (minority, majority) = if positives.len() <= negatives.len() {
        (&positives, &negatives)
    } else {
        (&negatives, &positives)
    };

    let target = ((minority.len() as f64 / ir).ceil() as usize)
        .max(1)
        .min(majority.len());

    let mut pool: Vec<usize> = majority.clone();
    let mut pool_w: Vec<f64> = pool.iter().map(|&i| weights[i].max(0.0)).collect();
    let mut chosen: Vec<usize> = Vec::with_capacity(target);
    for _ in 0..target {
        let total: f64 = pool_w.iter().sum();
        let pick = if total > 0.0 {
            let mut u = rng.random::<f64>() * total;
            let mut idx = pool.len() - 1;
            for (j, w) in pool_w.iter().enumerate() {
                if u < *w {
                    idx = j;
                    break;
                }
                u -= w;
            }
            idx
        } else {
            // All remaining weights zero: fall back to a uniform draw.
            rng.random_range(0..pool.len())
        };
        chosen.push(pool.swap_remove(pick));
        pool_w.swap_remove(pick);
    }

    let mut selected: Vec<usize> = minority.iter().copied().chain(chosen).collect();
    selected.sort_unstable();
    let records = selected.iter().map(|&i| d.records[i].clone()).collect();
    Ok(Dataset::new(
        d.name.clone(),
        d.feature_names.clone(),
        records,
        d.source_tag.clone(),
    )?)
}

pub(super) fn train_under_bagging(
    d: &Dataset,
    bags: usize,
    ir: f64,
    base: &LearnerSpec,
    seed: u64,
) -> Result<ModelKind, LearnerError> {
    let uniform = vec![1.0; d.len()];
    let mut members = Vec::with_capacity(bags);
    for b in 0..bags {
        let mut rng = ChaCha8Rng::seed_from_u64(ensemble_bag_seed(seed, b));
        let bag = weighted_under_sample(d, ir, &uniform, &mut rng)?;
        members.push(train(base, &bag, ensemble_member_seed(seed, b))?);
    }
    Ok(ModelKind::Average { members })
}

pub(super) fn train_rus_boost(
    d: &Dataset,
    rounds: usize,
    ir: f64,
    base: &LearnerSpec,
    seed: u64,
) -> Result<ModelKind, LearnerError> {
    let n = d.len();
    let labels = d.labels();
    let mut weights = vec![1.0 / n as f64; n];
    let mut members = Vec::with_capacity(rounds);
    let mut alphas = Vec::with_capacity(rounds);

    for t in 0..rounds {
        let mut rng = ChaCha8Rng::seed_from_u64(ensemble_bag_seed(seed, t));
        let bag = weighted_under_sample(d, ir, &weights, &mut rng)?;
        let member = train(base, &bag, ensemble_member_seed(seed, t))?;
        let probs = predict_proba(&member, d)?;

        let epsilon: f64 = probs
            .iter()
            .zip(&labels)
            .zip(&weights)
            .filter(|((p, y), _)| (**p >= 0.5) != **y)
            .map(|(_, w)| *w)
            .sum();
        let clamped = epsilon.clamp(1e-10, 1.0 - 1e-10);
        let beta = clamped / (1.0 - clamped);
        // Floor keeps degenerate rounds (epsilon ~ 0.5) from zeroing the
        // mixture entirely.
        let alpha = (1.0 / beta).ln().max(1e-6);
        members.push(member);
        alphas.push(alpha);

        if epsilon < 0.5 {
            for ((w, p), y) in weights.iter_mut().zip(&probs).zip(&labels) {
                if (*p >= 0.5) == *y {
                    *w *= beta;
                }
            }
            let total: f64 = weights.iter().sum();
            if total > 0.0 {
                for w in &mut weights {
                    *w /= total;
                }
            }
        }
    }

    let total: f64 = alphas.iter().sum();
    let normalized = alphas.into_iter().map(|a| a / total).collect();
    Ok(ModelKind::Weighted {
        members,
        weights: normalized,
    })
}
