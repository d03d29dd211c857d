//! Seeded synthetic dataset pairs: right-skewed efforts (log-normal with a
//! target sample skewness), labels drawn at a configured defect rate, and
//! multiplicative features whose signal-to-noise ratio is controllable.
//! Stands in for the public corpora at desk scale.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};

use crate::dataset::{Dataset, ModuleRecord};
use crate::seed::child_seed;

use super::RunnerError;

/// Controls one synthetic train/test pair.
#[derive(Debug, Clone)]
pub struct SynthSpec {
    pub name: String,
    /// Records per dataset; at least 20.
    pub n: usize,
    /// Probability a record is defective, in (0, 0.5].
    pub defect_rate: f64,
    /// Target skewness of the effort distribution (log-normal shape).
    pub loc_skew: f64,
    /// Standard deviation of the multiplicative feature noise; 0 means
    /// perfectly separable features.
    pub noise: f64,
    pub seed: u64,
}

impl Default for SynthSpec {
    fn default() -> Self {
        Self {
            name: "synth".into(),
            n: 200,
            defect_rate: 0.15,
            loc_skew: 8.0,
            noise: 1.0,
            seed: 42,
        }
    }
}

/// Feature loadings: how strongly each feature separates the classes.
const SIGNAL_LOADINGS: [f64; 4] = [1.2, 0.9, 0.6, 0.3];
/// Median effort in lines for the log-normal draw.
const EFFORT_MEDIAN: f64 = 50.0;

/// Log-normal sigma whose distribution skewness equals `target`:
/// solves (w + 2) * sqrt(w - 1) = target for w = exp(sigma^2) by bisection.
fn lognormal_sigma(target: f64) -> f64 {
    let skew_of = |s: f64| {
        let w = (s * s).exp();
        (w + 2.0) * (w - 1.0).sqrt()
    };
    let (mut lo, mut hi) = (1e-6, 4.0);
    for _ in 0..200 {
        let mid = (lo + hi) / 2.0;
        if skew_of(mid) < target {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    (lo + hi) / 2.0
}

fn generate_one(name: &str, spec: &SynthSpec, seed: u64) -> Dataset {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let sigma = lognormal_sigma(spec.loc_skew);
    let n_features = SIGNAL_LOADINGS.len() + 1;

    let draw_features = |rng: &mut ChaCha8Rng, defective: bool| -> Vec<f64> {
        let signal = if defective { 1.0 } else { 0.0 };
        let mut features = Vec::with_capacity(n_features);
        for loading in SIGNAL_LOADINGS {
            let z: f64 = StandardNormal.sample(rng);
            features.push((loading * signal + spec.noise * z).exp());
        }
        let z: f64 = StandardNormal.sample(rng);
        features.push((spec.noise * z).exp());
        features
    };

    let mut records = Vec::with_capacity(spec.n);
    for i in 0..spec.n {
        let z_effort: f64 = StandardNormal.sample(&mut rng);
        let effort = (sigma * z_effort).exp() * EFFORT_MEDIAN;
        let defective = rng.random::<f64>() < spec.defect_rate;
        let features = draw_features(&mut rng, defective);
        records.push(ModuleRecord::new(
            format!("{name}-{i}"),
            features,
            effort,
            defective,
        ));
    }

    // Learners need both classes; flip one record if a draw came out
    // single-class (possible at low rates and small n).
    let positives = records.iter().filter(|r| r.defective).count();
    if positives == 0 || positives == records.len() {
        let idx = rng.random_range(0..records.len());
        let flipped = positives == 0;
        records[idx].defective = flipped;
        records[idx].features = draw_features(&mut rng, flipped);
    }

    let feature_names = (1..=n_features).map(|i| format!("m{i}")).collect();
    Dataset::new(name, feature_names, records, "SYNTH").expect("n >= 20 checked by caller")
}

/// Generates a (train, test) pair drawn from the same distribution with
/// independent child seeds. Deterministic per spec and seed.
pub fn generate_synthetic_pair(spec: &SynthSpec) -> Result<(Dataset, Dataset), RunnerError> {
    if spec.n < 20 {
        return Err(RunnerError::Config(format!(
            "synthetic n = {} too small; need at least 20",
            spec.n
        )));
    }
    if !(spec.defect_rate > 0.0 && spec.defect_rate <= 0.5) {
        return Err(RunnerError::Config(format!(
            "defect_rate {} outside (0, 0.5]",
            spec.defect_rate
        )));
    }
    if !(spec.loc_skew.is_finite() && spec.loc_skew > 0.0) {
        return Err(RunnerError::Config(format!(
            "loc_skew {} must be positive",
            spec.loc_skew
        )));
    }
    if !(spec.noise.is_finite() && spec.noise >= 0.0) {
        return Err(RunnerError::Config(format!(
            "noise {} must be non-negative",
            spec.noise
        )));
    }
    let train = generate_one(
        &format!("{}-train", spec.name),
        spec,
        child_seed(spec.seed, "synth-train", 0),
    );
    let test = generate_one(
        &format!("{}-test", spec.name),
        spec,
        child_seed(spec.seed, "synth-test", 0),
    );
    Ok((train, test))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dataset::skewness;

    #[test]
    fn defect_count_tracks_rate() {
        let spec = SynthSpec {
            n: 200,
            defect_rate: 0.1,
            ..SynthSpec::default()
        };
        let (train, test) = generate_synthetic_pair(&spec).unwrap();
        for d in [&train, &test] {
            let positives = d.positives() as i64;
            assert!((positives - 20).abs() <= 8, "got {positives} defectives");
        }
    }

    #[test]
    fn higher_loc_skew_raises_sample_skewness() {
        let base = SynthSpec {
            n: 400,
            ..SynthSpec::default()
        };
        let low = SynthSpec {
            loc_skew: 2.0,
            ..base.clone()
        };
        let high = SynthSpec {
            loc_skew: 50.0,
            ..base
        };
        let (train_low, _) = generate_synthetic_pair(&low).unwrap();
        let (train_high, _) = generate_synthetic_pair(&high).unwrap();
        let s_low = skewness(&train_low.efforts()).unwrap();
        let s_high = skewness(&train_high.efforts()).unwrap();
        assert!(
            s_high > s_low,
            "skewness(high) = {s_high} <= skewness(low) = {s_low}"
        );
    }

    #[test]
    fn same_spec_and_seed_reproduce_exactly() {
        let spec = SynthSpec::default();
        let (a_train, a_test) = generate_synthetic_pair(&spec).unwrap();
        let (b_train, b_test) = generate_synthetic_pair(&spec).unwrap();
        assert_eq!(a_train, b_train);
        assert_eq!(a_test, b_test);
        // Train and test are distinct draws.
        assert_ne!(a_train.efforts(), a_test.efforts());
    }

    #[test]
    fn spec_bounds_are_enforced() {
        let bad_n = SynthSpec {
            n: 10,
            ..SynthSpec::default()
        };
        assert!(generate_synthetic_pair(&bad_n).is_err());
        let bad_rate = SynthSpec {
            defect_rate: 0.7,
            ..SynthSpec::default()
        };
        assert!(generate_synthetic_pair(&bad_rate).is_err());
    }

    #[test]
    fn both_classes_always_present() {
        let spec = SynthSpec {
            n: 20,
            defect_rate: 0.01,
            seed: 3,
            ..SynthSpec::default()
        };
        for seed in 0..20 {
            let (train, test) = generate_synthetic_pair(&SynthSpec { seed, ..spec.clone() }).unwrap();
            for d in [&train, &test] {
                assert!(d.positives() >= 1);
                assert!(d.positives() < d.len());
            }
        }
    }

    #[test]
    fn sigma_solver_hits_targets() {
        for target in [1.6, 2.0, 8.0, 50.0, 141.3] {
            let s = lognormal_sigma(target);
            let w = (s * s).exp();
            let skew = (w + 2.0) * (w - 1.0).sqrt();
            assert!(
                (skew - target).abs() / target < 1e-6,
                "target {target}: solved {skew}"
            );
        }
    }
}
