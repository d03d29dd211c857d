//! Ranking-score calculation strategies.
//!
//! Each strategy maps classifier output (probabilities or labels) and module
//! efforts to a score vector; higher scores are inspected earlier. A single
//! total order realizes every strategy: score descending, then effort
//! ascending, then original index. The effort tie-break matches the
//! convention of appending predicted-clean modules in increasing size order,
//! and makes an all-equal score vector collapse to the ManualUp order.
//!
//! `ea_z` maps each probability p to `p * (1 - zeta) + zeta` before dividing
//! by effort, bounding every score away from zero. Near-zero probability
//! predictions on skewed-effort data otherwise turn negligible classifier
//! fitting errors into large rank errors; the lower bound is what prevents
//! that failure mode.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum StrategyError {
    #[error("length mismatch: {left} scores vs {right} efforts")]
    LengthMismatch { left: usize, right: usize },
    #[error("module {index}: effort {value} is not positive")]
    NonPositiveEffort { index: usize, value: f64 },
    #[error("module {index}: probability {value} outside [0, 1]")]
    ProbabilityOutOfRange { index: usize, value: f64 },
    #[error("zeta {0} outside the open interval (0, 1)")]
    InvalidZeta(f64),
    #[error("threshold {0} outside the open interval (0, 1)")]
    InvalidThreshold(f64),
    #[error("module {index}: score is not finite")]
    NonFiniteScore { index: usize },
    #[error("unknown strategy {0:?}")]
    UnknownStrategy(String),
}

/// Stable strategy identifiers used in CLI flags and reports.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Strategy {
    Prob,
    LabelLoc,
    CbsPlus,
    ProbLoc,
    EaZ,
    ManualUp,
}

impl Strategy {
    pub const ALL: [Strategy; 6] = [
        Strategy::Prob,
        Strategy::LabelLoc,
        Strategy::CbsPlus,
        Strategy::ProbLoc,
        Strategy::EaZ,
        Strategy::ManualUp,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Strategy::Prob => "prob",
            Strategy::LabelLoc => "label_loc",
            Strategy::CbsPlus => "cbs_plus",
            Strategy::ProbLoc => "prob_loc",
            Strategy::EaZ => "ea_z",
            Strategy::ManualUp => "manual_up",
        }
    }
}

impl fmt::Display for Strategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Strategy {
    type Err = StrategyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "prob" => Ok(Strategy::Prob),
            "label_loc" => Ok(Strategy::LabelLoc),
            "cbs_plus" => Ok(Strategy::CbsPlus),
            "prob_loc" => Ok(Strategy::ProbLoc),
            "ea_z" => Ok(Strategy::EaZ),
            "manual_up" => Ok(Strategy::ManualUp),
            other => Err(StrategyError::UnknownStrategy(other.to_string())),
        }
    }
}

/// Scores plus the efforts needed by the tie rule. Produced by one of the
/// `score_*` functions, consumed by [`rank`].
#[derive(Debug, Clone)]
pub struct ScoredModules {
    pub scores: Vec<f64>,
    pub efforts: Vec<f64>,
    pub strategy: Strategy,
    /// Present only for EA-Z.
    pub zeta: Option<f64>,
}

/// A total inspection order: a permutation of record indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RankedList {
    pub order: Vec<usize>,
}

fn check_efforts(efforts: &[f64]) -> Result<(), StrategyError> {
    for (index, &e) in efforts.iter().enumerate() {
        if !(e > 0.0) || !e.is_finite() {
            return Err(StrategyError::NonPositiveEffort { index, value: e });
        }
    }
    Ok(())
}

fn check_probs(probs: &[f64]) -> Result<(), StrategyError> {
    for (index, &p) in probs.iter().enumerate() {
        if !p.is_finite() || !(0.0..=1.0).contains(&p) {
            return Err(StrategyError::ProbabilityOutOfRange { index, value: p });
        }
    }
    Ok(())
}

fn check_lengths(left: usize, right: usize) -> Result<(), StrategyError> {
    if left != right {
        return Err(StrategyError::LengthMismatch { left, right });
    }
    Ok(())
}

/// Score = predicted defect probability, effort ignored.
pub fn score_prob(probs: &[f64], efforts: &[f64]) -> Result<ScoredModules, StrategyError> {
    check_lengths(probs.len(), efforts.len())?;
    check_probs(probs)?;
    check_efforts(efforts)?;
    Ok(ScoredModules {
        scores: probs.to_vec(),
        efforts: efforts.to_vec(),
        strategy: Strategy::Prob,
        zeta: None,
    })
}

/// Score = predicted binary label divided by effort. Predicted-defective
/// modules rank by ascending size; predicted-clean modules all score zero
/// and fall back to the ascending-size tie rule.
pub fn score_label_loc(labels: &[bool], efforts: &[f64]) -> Result<ScoredModules, StrategyError> {
    check_lengths(labels.len(), efforts.len())?;
    check_efforts(efforts)?;
    let scores = labels
        .iter()
        .zip(efforts)
        .map(|(&l, &e)| if l { 1.0 / e } else { 0.0 })
        .collect();
    Ok(ScoredModules {
        scores,
        efforts: efforts.to_vec(),
        strategy: Strategy::LabelLoc,
        zeta: None,
    })
}

/// Classify-before-sorting: modules with probability >= threshold form the
/// first tier, the rest the second; both tiers order by prob/effort
/// descending. Encoded as `tier_offset + ratio / (max_ratio + 1)` so the
/// offset strictly separates tiers while preserving within-tier order and
/// ties.
pub fn score_cbs_plus(
    probs: &[f64],
    efforts: &[f64],
    threshold: f64,
) -> Result<ScoredModules, StrategyError> {
    if !threshold.is_finite() || threshold <= 0.0 || threshold >= 1.0 {
        return Err(StrategyError::InvalidThreshold(threshold));
    }
    check_lengths(probs.len(), efforts.len())?;
    check_probs(probs)?;
    check_efforts(efforts)?;
    let ratios: Vec<f64> = probs.iter().zip(efforts).map(|(&p, &e)| p / e).collect();
    let max_ratio = ratios.iter().cloned().fold(0.0f64, f64::max);
    let denom = max_ratio + 1.0;
    let scores = probs
        .iter()
        .zip(&ratios)
        .map(|(&p, &r)| {
            let tier = if p >= threshold { 1.0 } else { 0.0 };
            tier + r / denom
        })
        .collect();
    Ok(ScoredModules {
        scores,
        efforts: efforts.to_vec(),
        strategy: Strategy::CbsPlus,
        zeta: None,
    })
}

/// Score = probability divided by effort.
pub fn score_prob_loc(probs: &[f64], efforts: &[f64]) -> Result<ScoredModules, StrategyError> {
    check_lengths(probs.len(), efforts.len())?;
    check_probs(probs)?;
    check_efforts(efforts)?;
    let scores = probs.iter().zip(efforts).map(|(&p, &e)| p / e).collect();
    Ok(ScoredModules {
        scores,
        efforts: efforts.to_vec(),
        strategy: Strategy::ProbLoc,
        zeta: None,
    })
}

/// Score = `(p * (1 - zeta) + zeta) / effort`. The affine map sends [0, 1]
/// onto [zeta, 1] exactly, so every score is at least `zeta / max_effort`.
pub fn score_ea_z(
    probs: &[f64],
    efforts: &[f64],
    zeta: f64,
) -> Result<ScoredModules, StrategyError> {
    if !zeta.is_finite() || zeta <= 0.0 || zeta >= 1.0 {
        return Err(StrategyError::InvalidZeta(zeta));
    }
    check_lengths(probs.len(), efforts.len())?;
    check_probs(probs)?;
    check_efforts(efforts)?;
    let scores = probs
        .iter()
        .zip(efforts)
        .map(|(&p, &e)| (p * (1.0 - zeta) + zeta) / e)
        .collect();
    Ok(ScoredModules {
        scores,
        efforts: efforts.to_vec(),
        strategy: Strategy::EaZ,
        zeta: Some(zeta),
    })
}

/// Unsupervised baseline: smallest modules first (score = 1 / effort).
pub fn score_manual_up(efforts: &[f64]) -> Result<ScoredModules, StrategyError> {
    check_efforts(efforts)?;
    let scores = efforts.iter().map(|&e| 1.0 / e).collect();
    Ok(ScoredModules {
        scores,
        efforts: efforts.to_vec(),
        strategy: Strategy::ManualUp,
        zeta: None,
    })
}

/// Realizes the total order: score descending, then effort ascending, then
/// original index ascending. Deterministic for any input.
pub fn rank(s: &ScoredModules) -> Result<RankedList, StrategyError> {
    for (index, &v) in s.scores.iter().enumerate() {
        if !v.is_finite() {
            return Err(StrategyError::NonFiniteScore { index });
        }
    }
    check_lengths(s.scores.len(), s.efforts.len())?;
    let mut order: Vec<usize> = (0..s.scores.len()).collect();
    order.sort_by(|&a, &b| {
        s.scores[b]
            .partial_cmp(&s.scores[a])
            .expect("scores checked finite")
            .then_with(|| {
                s.efforts[a]
                    .partial_cmp(&s.efforts[b])
                    .expect("efforts checked finite")
            })
            .then_with(|| a.cmp(&b))
    });
    Ok(RankedList { order })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    // proptest's prelude exports a `Strategy` trait; ours wins here.
    use super::Strategy;

    fn order_of(s: &ScoredModules) -> Vec<usize> {
        rank(s).unwrap().order
    }

    #[test]
    fn prob_is_identity() {
        let s = score_prob(&[0.9, 0.1], &[1.0, 1.0]).unwrap();
        assert_eq!(s.scores, vec![0.9, 0.1]);
    }

    #[test]
    fn prob_tie_breaks_by_effort() {
        let s = score_prob(&[0.5, 0.5], &[9.0, 2.0]).unwrap();
        assert_eq!(order_of(&s), vec![1, 0]);
    }

    #[test]
    fn prob_orders_by_probability() {
        let s = score_prob(&[0.02, 0.5], &[1.0, 1.0]).unwrap();
        assert_eq!(order_of(&s), vec![1, 0]);
    }

    #[test]
    fn label_loc_direct_formula() {
        let s = score_label_loc(&[true, false], &[10.0, 5.0]).unwrap();
        assert_eq!(s.scores, vec![0.1, 0.0]);
    }

    #[test]
    fn label_loc_all_clean_is_ascending_effort() {
        let s = score_label_loc(&[false, false, false], &[7.0, 2.0, 4.0]).unwrap();
        assert_eq!(order_of(&s), vec![1, 2, 0]);
    }

    #[test]
    fn label_loc_defectives_rank_small_first() {
        let s = score_label_loc(&[true, true], &[4.0, 2.0]).unwrap();
        assert_eq!(order_of(&s), vec![1, 0]);
    }

    #[test]
    fn label_loc_rejects_non_positive_effort() {
        assert!(matches!(
            score_label_loc(&[true], &[0.0]),
            Err(StrategyError::NonPositiveEffort { .. })
        ));
    }

    #[test]
    fn cbs_plus_two_tier_order() {
        // tier 1: modules 0 and 1 (p >= 0.5) ordered by p/e: 0.6/2 = 0.3
        // beats 0.9/10 = 0.09; module 2 has the largest ratio 0.4 but sits
        // in tier 2.
        let s = score_cbs_plus(&[0.9, 0.6, 0.4], &[10.0, 2.0, 1.0], 0.5).unwrap();
        assert_eq!(order_of(&s), vec![1, 0, 2]);
    }

    #[test]
    fn cbs_plus_single_tier_degenerates_to_prob_loc() {
        let probs = [0.9, 0.6, 0.55];
        let efforts = [10.0, 2.0, 1.0];
        let cbs = score_cbs_plus(&probs, &efforts, 0.5).unwrap();
        let pl = score_prob_loc(&probs, &efforts).unwrap();
        assert_eq!(order_of(&cbs), order_of(&pl));

        let probs = [0.2, 0.1, 0.45];
        let cbs = score_cbs_plus(&probs, &efforts, 0.5).unwrap();
        let pl = score_prob_loc(&probs, &efforts).unwrap();
        assert_eq!(order_of(&cbs), order_of(&pl));
    }

    #[test]
    fn cbs_plus_tier_property() {
        let probs = [0.1, 0.8, 0.3, 0.51, 0.0];
        let efforts = [5.0, 100.0, 1.0, 30.0, 2.0];
        let s = score_cbs_plus(&probs, &efforts, 0.5).unwrap();
        let order = order_of(&s);
        let first_clean = order.iter().position(|&i| probs[i] < 0.5).unwrap();
        assert!(order[..first_clean].iter().all(|&i| probs[i] >= 0.5));
        assert!(order[first_clean..].iter().all(|&i| probs[i] < 0.5));
    }

    #[test]
    fn prob_loc_known_ratios() {
        let s = score_prob_loc(&[0.02, 0.01], &[8.0, 8.0]).unwrap();
        assert!((s.scores[0] - 0.0025).abs() < 1e-15);
        assert!((s.scores[1] - 0.00125).abs() < 1e-15);
        // Zero probability scores zero regardless of effort.
        let z = score_prob_loc(&[0.0, 0.0], &[1.0, 1000.0]).unwrap();
        assert_eq!(z.scores, vec![0.0, 0.0]);
    }

    #[test]
    fn ea_z_bounds() {
        let s = score_ea_z(&[0.0], &[4.0], 0.05).unwrap();
        assert!((s.scores[0] - 0.0125).abs() < 1e-15);
        let s = score_ea_z(&[1.0], &[10.0], 0.05).unwrap();
        assert!((s.scores[0] - 0.1).abs() < 1e-15);
        let s = score_ea_z(&[0.02], &[8.0], 0.05).unwrap();
        assert!((s.scores[0] - 0.008625).abs() < 1e-15);
    }

    #[test]
    fn ea_z_rejects_bad_zeta() {
        assert!(matches!(
            score_ea_z(&[0.5], &[1.0], 0.0),
            Err(StrategyError::InvalidZeta(_))
        ));
        assert!(matches!(
            score_ea_z(&[0.5], &[1.0], 1.0),
            Err(StrategyError::InvalidZeta(_))
        ));
    }

    #[test]
    fn manual_up_ascending_effort() {
        let s = score_manual_up(&[3.0, 1.0, 2.0]).unwrap();
        assert_eq!(order_of(&s), vec![1, 2, 0]);
        let s = score_manual_up(&[2.0, 2.0, 2.0]).unwrap();
        assert_eq!(order_of(&s), vec![0, 1, 2]);
        let s = score_manual_up(&[5.0]).unwrap();
        assert_eq!(order_of(&s), vec![0]);
    }

    #[test]
    fn rank_cases() {
        let s = score_prob(&[0.1, 0.3, 0.2], &[1.0, 1.0, 1.0]).unwrap();
        assert_eq!(order_of(&s), vec![1, 2, 0]);
        let s = score_prob(&[0.5, 0.5], &[7.0, 3.0]).unwrap();
        assert_eq!(order_of(&s), vec![1, 0]);
        let s = score_prob(&[0.5, 0.5], &[3.0, 3.0]).unwrap();
        assert_eq!(order_of(&s), vec![0, 1]);
    }

    #[test]
    fn rank_rejects_nan() {
        let s = ScoredModules {
            scores: vec![0.1, f64::NAN],
            efforts: vec![1.0, 1.0],
            strategy: Strategy::Prob,
            zeta: None,
        };
        assert!(matches!(
            rank(&s),
            Err(StrategyError::NonFiniteScore { index: 1 })
        ));
    }

    #[test]
    fn strategy_names_round_trip() {
        for s in Strategy::ALL {
            assert_eq!(s.name().parse::<Strategy>().unwrap(), s);
        }
        assert!("eaz".parse::<Strategy>().is_err());
    }

    #[test]
    fn ea_z_all_zero_probs_equals_manual_up() {
        let efforts = [12.0, 3.0, 3.0, 40.0, 7.5];
        let probs = [0.0; 5];
        let ea = rank(&score_ea_z(&probs, &efforts, 0.05).unwrap()).unwrap();
        let mu = rank(&score_manual_up(&efforts).unwrap()).unwrap();
        assert_eq!(ea, mu);
    }

    #[test]
    fn ea_z_matches_prob_for_fixed_effort() {
        let probs = [0.3, 0.9, 0.01, 0.5, 0.0];
        let efforts = [6.0; 5];
        let ea = rank(&score_ea_z(&probs, &efforts, 0.05).unwrap()).unwrap();
        let pr = rank(&score_prob(&probs, &efforts).unwrap()).unwrap();
        assert_eq!(ea, pr);
    }

    #[test]
    fn ea_z_converges_to_prob_loc_for_bounded_probs() {
        let probs = [0.25, 0.9, 0.05, 0.5, 0.61];
        let efforts = [6.0, 140.0, 2.0, 33.0, 8.0];
        let pl = rank(&score_prob_loc(&probs, &efforts).unwrap()).unwrap();
        let ea = rank(&score_ea_z(&probs, &efforts, 1e-9).unwrap()).unwrap();
        assert_eq!(ea, pl);
    }

    proptest! {
        // Same argsort under a common positive rescaling of all efforts.
        #[test]
        fn effort_rescaling_invariance(
            probs in proptest::collection::vec(0.0f64..=1.0, 2..20),
            raw_efforts in proptest::collection::vec(0.01f64..1000.0, 2..20),
            scale in 0.001f64..1000.0,
        ) {
            let n = probs.len().min(raw_efforts.len());
            let probs = &probs[..n];
            let efforts = &raw_efforts[..n];
            let scaled: Vec<f64> = efforts.iter().map(|e| e * scale).collect();
            let labels: Vec<bool> = probs.iter().map(|&p| p >= 0.5).collect();

            let variants: Vec<(ScoredModules, ScoredModules)> = vec![
                (score_prob(probs, efforts).unwrap(), score_prob(probs, &scaled).unwrap()),
                (score_label_loc(&labels, efforts).unwrap(), score_label_loc(&labels, &scaled).unwrap()),
                (score_cbs_plus(probs, efforts, 0.5).unwrap(), score_cbs_plus(probs, &scaled, 0.5).unwrap()),
                (score_prob_loc(probs, efforts).unwrap(), score_prob_loc(probs, &scaled).unwrap()),
                (score_ea_z(probs, efforts, 0.05).unwrap(), score_ea_z(probs, &scaled, 0.05).unwrap()),
                (score_manual_up(efforts).unwrap(), score_manual_up(&scaled).unwrap()),
            ];
            for (orig, resc) in variants {
                prop_assert_eq!(rank(&orig).unwrap(), rank(&resc).unwrap());
            }
        }

        // EA-Z scores never fall below zeta / max_effort.
        #[test]
        fn ea_z_lower_bound(
            probs in proptest::collection::vec(0.0f64..=1.0, 1..30),
            efforts in proptest::collection::vec(0.01f64..1000.0, 1..30),
            zeta in 0.001f64..0.999,
        ) {
            let n = probs.len().min(efforts.len());
            let s = score_ea_z(&probs[..n], &efforts[..n], zeta).unwrap();
            let max_e = s.efforts.iter().cloned().fold(f64::MIN, f64::max);
            let bound = zeta / max_e;
            for &v in &s.scores {
                prop_assert!(v >= bound - 1e-15);
            }
        }

        // The EA-Z degeneracy: all-zero probabilities collapse to ManualUp.
        #[test]
        fn ea_z_degeneracy(
            efforts in proptest::collection::vec(0.01f64..1000.0, 2..30),
            zeta in 0.001f64..0.999,
        ) {
            let probs = vec![0.0; efforts.len()];
            let ea = rank(&score_ea_z(&probs, &efforts, zeta).unwrap()).unwrap();
            let mu = rank(&score_manual_up(&efforts).unwrap()).unwrap();
            prop_assert_eq!(ea, mu);
        }

        // rank always yields a valid permutation obeying the tie rule.
        #[test]
        fn rank_is_lawful_permutation(
            scores in proptest::collection::vec(-10.0f64..10.0, 1..40),
            efforts in proptest::collection::vec(0.01f64..100.0, 1..40),
        ) {
            let n = scores.len().min(efforts.len());
            let s = ScoredModules {
                scores: scores[..n].to_vec(),
                efforts: efforts[..n].to_vec(),
                strategy: Strategy::Prob,
                zeta: None,
            };
            let r = rank(&s).unwrap();
            let mut seen = vec![false; n];
            for &i in &r.order {
                prop_assert!(!seen[i]);
                seen[i] = true;
            }
            for w in r.order.windows(2) {
                let (a, b) = (w[0], w[1]);
                let ok = s.scores[a] > s.scores[b]
                    || (s.scores[a] == s.scores[b] && s.efforts[a] < s.efforts[b])
                    || (s.scores[a] == s.scores[b] && s.efforts[a] == s.efforts[b] && a < b);
                prop_assert!(ok);
            }
        }
    }
}
