//! Non-parametric comparison machinery: Wilcoxon signed-rank test,
//! false-discovery-rate correction, effect size r, Win/Draw/Loss records,
//! and Scott-Knott ESD grouping.

use std::collections::BTreeMap;
use std::fmt;

use statrs::distribution::{ContinuousCDF, Normal};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum StatsError {
    #[error("paired vectors differ in length: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },
    #[error("insufficient pairs: {0} non-zero differences, need at least 5")]
    InsufficientPairs(usize),
    #[error("p-value {0} outside [0, 1]")]
    InvalidPValue(f64),
    #[error("no methods to group")]
    EmptyInput,
    #[error("method {method:?} has {found} scores, expected {expected}")]
    UnequalSampleLength {
        method: String,
        found: usize,
        expected: usize,
    },
}

/// Sidedness of the Wilcoxon test. Comparisons in reports are two-sided;
/// the directional modes exist for focused superiority questions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Alternative {
    #[default]
    TwoSided,
    /// First sample stochastically greater.
    Greater,
    /// First sample stochastically smaller.
    Less,
}

/// Result of a Wilcoxon signed-rank test.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WilcoxonResult {
    /// Sum of ranks of positive differences (W+).
    pub w: f64,
    /// Normal-approximation z with tie and continuity corrections.
    pub z: f64,
    pub p: f64,
    /// Number of pairs after zero-difference removal.
    pub n: usize,
}

/// Exact enumeration is used up to this many non-zero differences; beyond
/// it the normal approximation takes over.
const EXACT_LIMIT: usize = 12;

/// Two-sided Wilcoxon signed-rank test; see [`wilcoxon_signed_rank_with`].
pub fn wilcoxon_signed_rank(a: &[f64], b: &[f64]) -> Result<WilcoxonResult, StatsError> {
    wilcoxon_signed_rank_with(a, b, Alternative::TwoSided)
}

/// Wilcoxon signed-rank test on paired samples.
///
/// Zero differences are dropped; ties among absolute differences receive
/// average ranks. With at most 12 effective pairs the p-value comes from
/// full enumeration of sign assignments; otherwise from the normal
/// approximation with tie and continuity corrections. All differences zero
/// returns (w=0, z=0, p=1) by convention; fewer than 5 effective pairs is
/// an error.
pub fn wilcoxon_signed_rank_with(
    a: &[f64],
    b: &[f64],
    alternative: Alternative,
) -> Result<WilcoxonResult, StatsError> {
    if a.len() != b.len() {
        return Err(StatsError::LengthMismatch {
            left: a.len(),
            right: b.len(),
        });
    }
    let diffs: Vec<f64> = a
        .iter()
        .zip(b)
        .map(|(x, y)| x - y)
        .filter(|d| *d != 0.0)
        .collect();
    if diffs.is_empty() {
        return Ok(WilcoxonResult {
            w: 0.0,
            z: 0.0,
            p: 1.0,
            n: 0,
        });
    }
    let n = diffs.len();
    if n < 5 {
        return Err(StatsError::InsufficientPairs(n));
    }

    let ranks = average_ranks(&diffs.iter().map(|d| d.abs()).collect::<Vec<_>>());
    let w_plus: f64 = diffs
        .iter()
        .zip(&ranks)
        .filter(|(d, _)| **d > 0.0)
        .map(|(_, r)| *r)
        .sum();

    let nf = n as f64;
    let mean = nf * (nf + 1.0) / 4.0;

    // Tie correction over groups of equal absolute differences.
    let mut tie_term = 0.0;
    let mut sorted = ranks.clone();
    sorted.sort_by(|x, y| x.partial_cmp(y).unwrap());
    let mut i = 0;
    while i < sorted.len() {
        let mut j = i;
        while j < sorted.len() && sorted[j] == sorted[i] {
            j += 1;
        }
        let t = (j - i) as f64;
        tie_term += t * t * t - t;
        i = j;
    }
    let sigma = (nf * (nf + 1.0) * (2.0 * nf + 1.0) / 24.0 - tie_term / 48.0).sqrt();

    let centered = w_plus - mean;
    let continuity = match alternative {
        Alternative::TwoSided => {
            if centered > 0.0 {
                0.5
            } else if centered < 0.0 {
                -0.5
            } else {
                0.0
            }
        }
        Alternative::Greater => 0.5,
        Alternative::Less => -0.5,
    };
    let z = if sigma > 0.0 {
        (centered - continuity) / sigma
    } else {
        0.0
    };

    let p = if n <= EXACT_LIMIT {
        exact_p(&ranks, w_plus, mean, alternative)
    } else {
        let normal = Normal::new(0.0, 1.0).expect("unit normal");
        let p = match alternative {
            Alternative::TwoSided => 2.0 * (1.0 - normal.cdf(z.abs())),
            Alternative::Greater => 1.0 - normal.cdf(z),
            Alternative::Less => normal.cdf(z),
        };
        p.min(1.0)
    };

    Ok(WilcoxonResult {
        w: w_plus,
        z,
        p: p.max(1e-300),
        n,
    })
}

/// Exact p over all 2^n sign assignments of the observed ranks.
fn exact_p(ranks: &[f64], w_obs: f64, mean: f64, alternative: Alternative) -> f64 {
    let n = ranks.len();
    let total = 1u64 << n;
    let obs_dev = (w_obs - mean).abs();
    let mut hits = 0u64;
    for mask in 0..total {
        let mut w = 0.0;
        for (bit, r) in ranks.iter().enumerate() {
            if mask & (1 << bit) != 0 {
                w += r;
            }
        }
        let keep = match alternative {
            Alternative::TwoSided => (w - mean).abs() >= obs_dev - 1e-12,
            Alternative::Greater => w >= w_obs - 1e-12,
            Alternative::Less => w <= w_obs + 1e-12,
        };
        if keep {
            hits += 1;
        }
    }
    hits as f64 / total as f64
}

/// Average (midrank) ranks, 1-based.
fn average_ranks(values: &[f64]) -> Vec<f64> {
    let mut idx: Vec<usize> = (0..values.len()).collect();
    idx.sort_by(|&a, &b| values[a].partial_cmp(&values[b]).unwrap());
    let mut ranks = vec![0.0; values.len()];
    let mut i = 0;
    while i < idx.len() {
        let mut j = i;
        while j < idx.len() && values[idx[j]] == values[idx[i]] {
            j += 1;
        }
        let avg = (i + 1 + j) as f64 / 2.0;
        for &k in &idx[i..j] {
            ranks[k] = avg;
        }
        i = j;
    }
    ranks
}

/// Multiple-testing correction family.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum FdrMethod {
    /// Benjamini-Hochberg step-up, the field default.
    #[default]
    BenjaminiHochberg,
    /// Benjamini-Yekutieli, valid under arbitrary dependence.
    BenjaminiYekutieli,
}

/// Benjamini-Hochberg adjusted p-values, in input order.
pub fn fdr_adjust(pvals: &[f64]) -> Result<Vec<f64>, StatsError> {
    fdr_adjust_with(pvals, FdrMethod::BenjaminiHochberg)
}

/// Step-up adjusted p-values (monotone-enforced, clipped at 1), returned in
/// input order.
pub fn fdr_adjust_with(pvals: &[f64], method: FdrMethod) -> Result<Vec<f64>, StatsError> {
    for &p in pvals {
        if !(0.0..=1.0).contains(&p) || !p.is_finite() {
            return Err(StatsError::InvalidPValue(p));
        }
    }
    let m = pvals.len();
    if m == 0 {
        return Ok(Vec::new());
    }
    let scale = match method {
        FdrMethod::BenjaminiHochberg => 1.0,
        FdrMethod::BenjaminiYekutieli => (1..=m).map(|i| 1.0 / i as f64).sum(),
    };
    let mut idx: Vec<usize> = (0..m).collect();
    idx.sort_by(|&a, &b| pvals[a].partial_cmp(&pvals[b]).unwrap());
    let mut adjusted = vec![0.0; m];
    let mut running_min = 1.0f64;
    for (rank_back, &i) in idx.iter().enumerate().rev() {
        let rank = rank_back + 1;
        // The max-clamp guards the adjusted >= raw invariant against the
        // last-ulp rounding of (p * m) / rank.
        let candidate = (pvals[i] * scale * m as f64 / rank as f64)
            .min(1.0)
            .max(pvals[i]);
        running_min = running_min.min(candidate);
        adjusted[i] = running_min;
    }
    Ok(adjusted)
}

/// Effect-size magnitude buckets, boundaries assigned upward.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum EffectInterpretation {
    Trivial,
    Small,
    Moderate,
    Large,
}

impl fmt::Display for EffectInterpretation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            EffectInterpretation::Trivial => "trivial",
            EffectInterpretation::Small => "small",
            EffectInterpretation::Moderate => "moderate",
            EffectInterpretation::Large => "large",
        })
    }
}

/// Effect size `r = |z| / sqrt(n)` with the conventional interpretation
/// thresholds 0.1 / 0.3 / 0.5.
pub fn effect_size_r(z: f64, n: usize) -> (f64, EffectInterpretation) {
    let r = z.abs() / (n.max(1) as f64).sqrt();
    let interp = if r < 0.1 {
        EffectInterpretation::Trivial
    } else if r < 0.3 {
        EffectInterpretation::Small
    } else if r < 0.5 {
        EffectInterpretation::Moderate
    } else {
        EffectInterpretation::Large
    };
    (r, interp)
}

/// Paired Win/Draw/Loss counts for `a` against `b`: a win is `a - b >
/// epsilon`, a draw `|a - b| <= epsilon`. Epsilon defaults to 0 at call
/// sites; metric values here are deterministic, so exact equality draws.
pub fn wdl(a: &[f64], b: &[f64], epsilon: f64) -> Result<(usize, usize, usize), StatsError> {
    if a.len() != b.len() {
        return Err(StatsError::LengthMismatch {
            left: a.len(),
            right: b.len(),
        });
    }
    let mut wins = 0;
    let mut draws = 0;
    let mut losses = 0;
    for (x, y) in a.iter().zip(b) {
        let d = x - y;
        if d > epsilon {
            wins += 1;
        } else if d >= -epsilon {
            draws += 1;
        } else {
            losses += 1;
        }
    }
    Ok((wins, draws, losses))
}

/// One pairwise comparison row: Wilcoxon statistics, FDR-adjusted p, effect
/// size, and the Win/Draw/Loss record.
#[derive(Debug, Clone, PartialEq)]
pub struct ComparisonRecord {
    pub method_a: String,
    pub method_b: String,
    pub n: usize,
    pub w_statistic: f64,
    pub z_value: f64,
    pub p_value: f64,
    pub p_adjusted: f64,
    pub effect_r: f64,
    pub interpretation: EffectInterpretation,
    pub wins: usize,
    pub draws: usize,
    pub losses: usize,
}

/// Scott-Knott ESD output: methods sorted by mean descending with a
/// contiguous group id per method (1 = best).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SKGrouping {
    pub methods: Vec<String>,
    pub group_ids: Vec<usize>,
}

impl SKGrouping {
    pub fn group_of(&self, method: &str) -> Option<usize> {
        self.methods
            .iter()
            .position(|m| m == method)
            .map(|i| self.group_ids[i])
    }
}

/// Cliff's delta magnitude below which two blocks are merged.
const NEGLIGIBLE_DELTA: f64 = 0.147;

/// Cliff's delta of `a` against `b` by exhaustive pair counting.
pub fn cliffs_delta(a: &[f64], b: &[f64]) -> f64 {
    if a.is_empty() || b.is_empty() {
        return 0.0;
    }
    let mut greater = 0i64;
    let mut less = 0i64;
    for x in a {
        for y in b {
            if x > y {
                greater += 1;
            } else if x < y {
                less += 1;
            }
        }
    }
    (greater - less) as f64 / (a.len() as f64 * b.len() as f64)
}

/// Clusters methods into statistically distinct, contiguous performance
/// groups. Methods sort by mean descending; blocks split recursively at the
/// boundary maximizing the between-group sum of squares of means, and a
/// split is kept only when the pooled side-vs-side scores differ
/// non-negligibly (|Cliff's delta| >= 0.147).
pub fn scott_knott_esd(samples: &BTreeMap<String, Vec<f64>>) -> Result<SKGrouping, StatsError> {
    if samples.is_empty() {
        return Err(StatsError::EmptyInput);
    }
    let expected = samples.values().next().map(Vec::len).unwrap_or(0);
    for (name, v) in samples {
        if v.len() != expected {
            return Err(StatsError::UnequalSampleLength {
                method: name.clone(),
                found: v.len(),
                expected,
            });
        }
    }

    let mut methods: Vec<(String, f64, &Vec<f64>)> = samples
        .iter()
        .map(|(name, v)| {
            let mean = if v.is_empty() {
                0.0
            } else {
                v.iter().sum::<f64>() / v.len() as f64
            };
            (name.clone(), mean, v)
        })
        .collect();
    methods.sort_by(|a, b| {
        b.1.partial_cmp(&a.1)
            .unwrap_or(std::cmp::Ordering::Equal)
            .then_with(|| a.0.cmp(&b.0))
    });

    let mut group_ids = vec![0usize; methods.len()];
    let mut next_group = 1usize;
    partition(&methods, 0, methods.len(), &mut group_ids, &mut next_group);

    Ok(SKGrouping {
        methods: methods.into_iter().map(|(n, _, _)| n).collect(),
        group_ids,
    })
}

fn partition(
    methods: &[(String, f64, &Vec<f64>)],
    lo: usize,
    hi: usize,
    group_ids: &mut [usize],
    next_group: &mut usize,
) {
    let len = hi - lo;
    if len >= 2 {
        if let Some(split) = best_split(&methods[lo..hi]) {
            let mid = lo + split;
            let pool = |range: std::ops::Range<usize>| -> Vec<f64> {
                methods[range]
                    .iter()
                    .flat_map(|(_, _, v)| v.iter().copied())
                    .collect()
            };
            let delta = cliffs_delta(&pool(lo..mid), &pool(mid..hi));
            if delta.abs() >= NEGLIGIBLE_DELTA {
                partition(methods, lo, mid, group_ids, next_group);
                partition(methods, mid, hi, group_ids, next_group);
                return;
            }
        }
    }
    let id = *next_group;
    *next_group += 1;
    for g in &mut group_ids[lo..hi] {
        *g = id;
    }
}

/// Index (1..len) maximizing the between-group sum of squares of the method
/// means; ties resolve to the smallest index.
fn best_split(block: &[(String, f64, &Vec<f64>)]) -> Option<usize> {
    let len = block.len();
    if len < 2 {
        return None;
    }
    let total: f64 = block.iter().map(|(_, m, _)| *m).sum();
    let grand = total / len as f64;
    let mut best = None;
    let mut best_bss = f64::MIN;
    let mut left_sum = 0.0;
    for k in 1..len {
        left_sum += block[k - 1].1;
        let right_sum = total - left_sum;
        let (nl, nr) = (k as f64, (len - k) as f64);
        let bss = nl * (left_sum / nl - grand).powi(2) + nr * (right_sum / nr - grand).powi(2);
        if bss > best_bss + 1e-15 {
            best_bss = bss;
            best = Some(k);
        }
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn identical_samples_give_p_one() {
        let a = [0.4, 0.5, 0.6, 0.7, 0.8, 0.9];
        let r = wilcoxon_signed_rank(&a, &a).unwrap();
        assert_eq!(r.p, 1.0);
        assert_eq!(r.z, 0.0);
        assert_eq!(r.n, 0);
    }

    #[test]
    fn all_positive_n6_exact() {
        let a = [1.0, 2.0, 3.0, 4.0, 5.0, 6.0];
        let b = [0.0; 6];
        let r = wilcoxon_signed_rank(&a, &b).unwrap();
        assert_eq!(r.w, 21.0);
        assert_eq!(r.p, 2.0 / 64.0);
    }

    #[test]
    fn too_few_pairs_is_error() {
        let a = [1.0, 2.0, 3.0, 4.0];
        let b = [0.0; 4];
        assert!(matches!(
            wilcoxon_signed_rank(&a, &b),
            Err(StatsError::InsufficientPairs(4))
        ));
    }

    #[test]
    fn swap_symmetry() {
        let a = [3.0, 1.0, 4.0, 1.0, 5.0, 9.0, 2.0, 6.0];
        let b = [2.0, 7.0, 1.0, 8.0, 2.0, 8.0, 1.0, 8.0];
        let ab = wilcoxon_signed_rank(&a, &b).unwrap();
        let ba = wilcoxon_signed_rank(&b, &a).unwrap();
        assert!((ab.p - ba.p).abs() < 1e-15);
        assert!((ab.z + ba.z).abs() < 1e-12);
    }

    #[test]
    fn approximation_kicks_in_beyond_exact_limit() {
        let a: Vec<f64> = (1..=20).map(|i| i as f64).collect();
        let b: Vec<f64> = (1..=20).map(|i| i as f64 * 0.5).collect();
        let r = wilcoxon_signed_rank(&a, &b).unwrap();
        assert!(r.p < 0.01);
        assert!(r.p > 0.0);
    }

    #[test]
    fn fdr_single_p_is_identity() {
        assert_eq!(fdr_adjust(&[0.04]).unwrap(), vec![0.04]);
    }

    #[test]
    fn fdr_step_up_hand_example() {
        let adj = fdr_adjust(&[0.01, 0.02, 0.03]).unwrap();
        for v in adj {
            assert!((v - 0.03).abs() < 1e-15);
        }
    }

    #[test]
    fn fdr_all_ones() {
        assert_eq!(fdr_adjust(&[1.0, 1.0, 1.0]).unwrap(), vec![1.0, 1.0, 1.0]);
    }

    #[test]
    fn fdr_rejects_invalid_p() {
        assert!(matches!(
            fdr_adjust(&[0.5, 1.2]),
            Err(StatsError::InvalidPValue(_))
        ));
    }

    #[test]
    fn by_variant_is_more_conservative() {
        let p = [0.01, 0.02, 0.04, 0.2];
        let bh = fdr_adjust_with(&p, FdrMethod::BenjaminiHochberg).unwrap();
        let by = fdr_adjust_with(&p, FdrMethod::BenjaminiYekutieli).unwrap();
        for (x, y) in bh.iter().zip(&by) {
            assert!(y >= x);
        }
    }

    #[test]
    fn effect_size_buckets() {
        assert_eq!(effect_size_r(0.0, 10), (0.0, EffectInterpretation::Trivial));
        let (r, i) = effect_size_r(1.96, 100);
        assert!((r - 0.196).abs() < 1e-12);
        assert_eq!(i, EffectInterpretation::Small);
        assert_eq!(effect_size_r(5.0, 25), (1.0, EffectInterpretation::Large));
        // Boundaries go upward.
        assert_eq!(effect_size_r(3.0, 100).1, EffectInterpretation::Moderate);
        assert_eq!(effect_size_r(1.0, 100).1, EffectInterpretation::Small);
        assert_eq!(effect_size_r(5.0, 100).1, EffectInterpretation::Large);
    }

    #[test]
    fn wdl_counts() {
        assert_eq!(
            wdl(&[1.0, 2.0, 3.0], &[1.0, 1.0, 4.0], 0.0).unwrap(),
            (1, 1, 1)
        );
        assert_eq!(wdl(&[2.0; 5], &[2.0; 5], 0.0).unwrap(), (0, 5, 0));
        let a = vec![2.0; 976];
        let b = vec![1.0; 976];
        assert_eq!(wdl(&a, &b, 0.0).unwrap(), (976, 0, 0));
    }

    #[test]
    fn sk_identical_vectors_one_group() {
        let mut m = BTreeMap::new();
        let v = vec![0.5, 0.6, 0.7, 0.4];
        m.insert("a".to_string(), v.clone());
        m.insert("b".to_string(), v.clone());
        m.insert("c".to_string(), v);
        let g = scott_knott_esd(&m).unwrap();
        assert!(g.group_ids.iter().all(|&id| id == 1));
    }

    #[test]
    fn sk_disjoint_supports_two_groups() {
        let mut m = BTreeMap::new();
        let hi: Vec<f64> = (0..30).map(|i| 0.9 + (i as f64) * 1e-4).collect();
        let lo: Vec<f64> = (0..30).map(|i| 0.1 + (i as f64) * 1e-4).collect();
        assert_eq!(cliffs_delta(&hi, &lo), 1.0);
        m.insert("good".to_string(), hi);
        m.insert("bad".to_string(), lo);
        let g = scott_knott_esd(&m).unwrap();
        assert_eq!(g.methods, vec!["good".to_string(), "bad".to_string()]);
        assert_eq!(g.group_ids, vec![1, 2]);
    }

    #[test]
    fn sk_single_method() {
        let mut m = BTreeMap::new();
        m.insert("only".to_string(), vec![0.1, 0.2, 0.3]);
        let g = scott_knott_esd(&m).unwrap();
        assert_eq!(g.group_ids, vec![1]);
    }

    #[test]
    fn sk_empty_is_error() {
        assert!(matches!(
            scott_knott_esd(&BTreeMap::new()),
            Err(StatsError::EmptyInput)
        ));
    }

    #[test]
    fn sk_grouping_contiguous_and_label_invariant() {
        let mut m = BTreeMap::new();
        m.insert("m1".to_string(), vec![0.90, 0.91, 0.89, 0.92, 0.90]);
        m.insert("m2".to_string(), vec![0.88, 0.90, 0.87, 0.91, 0.89]);
        m.insert("m3".to_string(), vec![0.50, 0.52, 0.48, 0.51, 0.49]);
        m.insert("m4".to_string(), vec![0.10, 0.12, 0.08, 0.11, 0.09]);
        let g = scott_knott_esd(&m).unwrap();
        // Contiguity: ids never decrease along the sorted order and change
        // by at most one.
        for w in g.group_ids.windows(2) {
            assert!(w[1] == w[0] || w[1] == w[0] + 1);
        }

        // Relabel and expect the identical partition structure.
        let mut renamed = BTreeMap::new();
        for (k, v) in &m {
            renamed.insert(format!("x-{k}"), v.clone());
        }
        let g2 = scott_knott_esd(&renamed).unwrap();
        assert_eq!(g.group_ids, g2.group_ids);
        for (a, b) in g.methods.iter().zip(&g2.methods) {
            assert_eq!(format!("x-{a}"), *b);
        }
    }

    proptest! {
        // Two-sided p in (0, 1]; swapping negates z; exact route matches a
        // second, independent enumeration.
        #[test]
        fn wilcoxon_properties(
            pairs in proptest::collection::vec((-5i32..5, -5i32..5), 5..11),
        ) {
            let a: Vec<f64> = pairs.iter().map(|p| p.0 as f64).collect();
            let b: Vec<f64> = pairs.iter().map(|p| p.1 as f64).collect();
            let effective = a.iter().zip(&b).filter(|(x, y)| x != y).count();
            prop_assume!(effective >= 5);

            let ab = wilcoxon_signed_rank(&a, &b).unwrap();
            let ba = wilcoxon_signed_rank(&b, &a).unwrap();
            prop_assert!(ab.p > 0.0 && ab.p <= 1.0);
            prop_assert!((ab.p - ba.p).abs() < 1e-12);
            prop_assert!((ab.z + ba.z).abs() < 1e-12);
        }

        // Adjusted p is pointwise >= raw p and preserves order statistics.
        #[test]
        fn fdr_pointwise_dominates(ps in proptest::collection::vec(0.0f64..=1.0, 1..40)) {
            let adj = fdr_adjust(&ps).unwrap();
            for (raw, a) in ps.iter().zip(&adj) {
                prop_assert!(a >= raw);
                prop_assert!(*a <= 1.0);
            }
            // Monotone with respect to the raw order.
            let mut order: Vec<usize> = (0..ps.len()).collect();
            order.sort_by(|&x, &y| ps[x].partial_cmp(&ps[y]).unwrap());
            for w in order.windows(2) {
                prop_assert!(adj[w[0]] <= adj[w[1]] + 1e-15);
            }
        }

        // Mirrored W/D/L swaps wins and losses.
        #[test]
        fn wdl_mirror(
            pairs in proptest::collection::vec((0.0f64..1.0, 0.0f64..1.0), 0..50),
            eps in 0.0f64..0.1,
        ) {
            let a: Vec<f64> = pairs.iter().map(|p| p.0).collect();
            let b: Vec<f64> = pairs.iter().map(|p| p.1).collect();
            let (w, d, l) = wdl(&a, &b, eps).unwrap();
            let (w2, d2, l2) = wdl(&b, &a, eps).unwrap();
            prop_assert_eq!((w, d, l), (l2, d2, w2));
            prop_assert_eq!(w + d + l, a.len());
        }
    }
}
