//! Scratch tuning harness for the directional synthetic benchmark
//! (temporary; not part of the deliverable).

use std::collections::BTreeMap;

use effortrank::dataset::{Dataset, ExperimentManifest, ManifestPair};
use effortrank::learners::learner_from_tag;
use effortrank::runner::{
    generate_synthetic_pair, run_matrix, summarize, LearnerHandle, RunConfig, SynthSpec,
};
use effortrank::strategies::Strategy;

fn bench_inputs(
    n: usize,
    defect_rate: f64,
    noise: f64,
    master: u64,
) -> (ExperimentManifest, BTreeMap<String, Dataset>) {
    let mut pairs = Vec::new();
    let mut datasets = BTreeMap::new();
    for i in 0..30 {
        let skew = 2.0 * (25.0f64).powf(i as f64 / 29.0); // geometric 2..50
        let spec = SynthSpec {
            name: format!("bench{i}"),
            n,
            defect_rate,
            loc_skew: skew,
            noise,
            seed: master + i as u64,
        };
        let (train, test) = generate_synthetic_pair(&spec).unwrap();
        pairs.push(ManifestPair {
            source: "SYNTH".into(),
            train: train.name.clone(),
            test: test.name.clone(),
        });
        datasets.insert(train.name.clone(), train);
        datasets.insert(test.name.clone(), test);
    }
    (ExperimentManifest { pairs }, datasets)
}

fn main() {
    for learner in ["ibk", "cart"] {
        for &(n, rate, noise) in &[(250usize, 0.15f64, 1.0f64), (250, 0.2, 1.2), (150, 0.2, 1.0)] {
            for master in [1000u64, 2000, 3000, 4000, 5000, 42, 7, 123] {
                let (manifest, datasets) = bench_inputs(n, rate, noise, master);
                let cfg = RunConfig {
                    learners: vec![LearnerHandle::new(
                        learner,
                        learner_from_tag(learner).unwrap(),
                    )],
                    strategies: vec![
                        Strategy::Prob,
                        Strategy::LabelLoc,
                        Strategy::CbsPlus,
                        Strategy::ProbLoc,
                        Strategy::EaZ,
                        Strategy::ManualUp,
                    ],
                    zeta_grid: Some(vec![0.005, 0.01, 0.02, 0.05, 0.1]),
                    ..RunConfig::default()
                };
                let table = run_matrix(&cfg, &manifest, &datasets).unwrap();
                let report = summarize(&table, 0.05);

                let mean = |s: Strategy| {
                    report
                        .strategies
                        .iter()
                        .find(|x| x.strategy == s)
                        .map(|x| x.mean_recall20)
                        .unwrap()
                };
                let (eaz, pl, cbs, ll, pr) = (
                    mean(Strategy::EaZ),
                    mean(Strategy::ProbLoc),
                    mean(Strategy::CbsPlus),
                    mean(Strategy::LabelLoc),
                    mean(Strategy::Prob),
                );
                let margins = [eaz - pl, pl - cbs, cbs - ll, ll - pr];
                let min_margin = margins.iter().cloned().fold(f64::MAX, f64::min);
                let p_vs_prob = report.comparisons[0]
                    .records
                    .iter()
                    .find(|r| r.method_b == "prob")
                    .map(|r| r.p_value)
                    .unwrap();
                let max_sweep = report
                    .zeta_sweep
                    .iter()
                    .map(|z| z.mean_recall20)
                    .fold(f64::MIN, f64::max);
                let at_05 = report
                    .zeta_sweep
                    .iter()
                    .find(|z| z.zeta == 0.05)
                    .map(|z| z.mean_recall20)
                    .unwrap();
                println!(
                    "{learner:<5} n={n:<4} rate={rate:<5} noise={noise:<4} master={master:<5} | chain {} min_margin {min_margin:+.4} | p {p_vs_prob:.1e} | sweep gap {:.4} {}",
                    if min_margin >= 0.0 { "OK " } else { "BAD" },
                    max_sweep - at_05,
                    if max_sweep - at_05 <= 0.02 { "OK" } else { "BAD" },
                );
            }
        }
    }
}
