//! Aggregation of a result table into comparison statistics and
//! report-ready summaries: per-strategy means, pairwise tests of `ea_z`
//! against each rival, Scott-Knott ESD groups over (strategy, learner)
//! methods, and the recall-vs-IFA trade-off against `manual_up`.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;

use crate::stats::{
    effect_size_r, fdr_adjust, scott_knott_esd, wdl, wilcoxon_signed_rank, ComparisonRecord,
    SKGrouping,
};
use crate::strategies::Strategy;

use super::table::{ResultRow, ResultTable, RowOutcome};

/// Published reference averages (Recall@20%, Popt, IFA) for the five
/// strategies on the full 61-pair public-corpus benchmark with 16 learners.
/// Printed alongside fresh runs for orientation only: the learners here are
/// independent reimplementations, so no numeric parity is asserted.
pub const REFERENCE_AVERAGES: [(Strategy, f64, f64, f64); 5] = [
    (Strategy::EaZ, 0.605, 0.813, 14.198),
    (Strategy::Prob, 0.153, 0.389, 1.853),
    (Strategy::LabelLoc, 0.37, 0.549, 6.337),
    (Strategy::CbsPlus, 0.389, 0.602, 6.497),
    (Strategy::ProbLoc, 0.587, 0.791, 13.25),
];

pub fn reference_for(strategy: Strategy) -> Option<(f64, f64, f64)> {
    REFERENCE_AVERAGES
        .iter()
        .find(|(s, _, _, _)| *s == strategy)
        .map(|&(_, r, p, i)| (r, p, i))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Indicator {
    Recall20,
    Popt,
    Ifa,
}

impl Indicator {
    pub const ALL: [Indicator; 3] = [Indicator::Recall20, Indicator::Popt, Indicator::Ifa];

    pub fn name(self) -> &'static str {
        match self {
            Indicator::Recall20 => "recall20",
            Indicator::Popt => "popt",
            Indicator::Ifa => "ifa",
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            Indicator::Recall20 => "Recall@20%",
            Indicator::Popt => "Popt",
            Indicator::Ifa => "IFA",
        }
    }

    /// IFA is a cost; the other indicators are benefits.
    pub fn higher_is_better(self) -> bool {
        !matches!(self, Indicator::Ifa)
    }

    fn value(self, outcome: &RowOutcome) -> Option<f64> {
        match outcome {
            RowOutcome::Ok {
                recall20,
                popt,
                ifa,
            } => Some(match self {
                Indicator::Recall20 => *recall20,
                Indicator::Popt => *popt,
                Indicator::Ifa => *ifa as f64,
            }),
            RowOutcome::Error(_) => None,
        }
    }
}

#[derive(Debug, Clone)]
pub struct StrategySummary {
    pub strategy: Strategy,
    pub cells: usize,
    pub mean_recall20: f64,
    pub mean_popt: f64,
    pub mean_ifa: f64,
    /// Fraction of cells with IFA <= 10.
    pub ifa_le_10: f64,
}

#[derive(Debug, Clone)]
pub struct LearnerStrategySummary {
    pub learner: String,
    pub strategy: Strategy,
    pub cells: usize,
    pub mean_recall20: f64,
    pub mean_popt: f64,
    pub mean_ifa: f64,
}

#[derive(Debug, Clone)]
pub struct IndicatorComparisons {
    pub indicator: Indicator,
    pub records: Vec<ComparisonRecord>,
}

#[derive(Debug, Clone)]
pub struct TradeoffRow {
    pub method: String,
    pub mean_recall20: f64,
    /// Recall@20% W/D/L against manual_up; none for manual_up itself.
    pub wdl_vs_manual_up: Option<(usize, usize, usize)>,
    pub mean_ifa: f64,
}

#[derive(Debug, Clone)]
pub struct ZetaSummary {
    pub zeta: f64,
    pub cells: usize,
    pub mean_recall20: f64,
    pub mean_popt: f64,
    pub mean_ifa: f64,
}

#[derive(Debug, Clone)]
pub struct SummaryReport {
    pub primary_zeta: f64,
    pub total_cells: usize,
    pub errored_cells: usize,
    pub strategies: Vec<StrategySummary>,
    pub learner_strategy: Vec<LearnerStrategySummary>,
    pub comparisons: Vec<IndicatorComparisons>,
    pub sk_groupings: Vec<(Indicator, SKGrouping)>,
    pub tradeoff: Vec<TradeoffRow>,
    pub zeta_sweep: Vec<ZetaSummary>,
}

type CellKey = (String, String, usize);

/// A row participates in the primary view when it is not an EA-Z row or
/// carries the primary zeta (sweeps replicate EA-Z rows per grid value).
fn primary_rows<'t>(table: &'t ResultTable, primary: Option<f64>) -> Vec<&'t ResultRow> {
    table
        .rows
        .iter()
        .filter(|r| r.strategy != Strategy::EaZ || r.zeta == primary)
        .collect()
}

fn mean(values: &[f64]) -> f64 {
    if values.is_empty() {
        return f64::NAN;
    }
    values.iter().sum::<f64>() / values.len() as f64
}

/// Aggregates a result table. `requested_zeta` anchors which EA-Z rows feed
/// the comparison view; the closest zeta actually present is used.
pub fn summarize(table: &ResultTable, requested_zeta: f64) -> SummaryReport {
    let mut ea_zetas: Vec<f64> = table
        .rows
        .iter()
        .filter(|r| r.strategy == Strategy::EaZ)
        .filter_map(|r| r.zeta)
        .collect();
    ea_zetas.sort_by(|a, b| a.partial_cmp(b).unwrap());
    ea_zetas.dedup();
    let primary = ea_zetas
        .iter()
        .copied()
        .min_by(|a, b| {
            (a - requested_zeta)
                .abs()
                .partial_cmp(&(b - requested_zeta).abs())
                .unwrap()
        })
        .or(Some(requested_zeta));

    let rows = primary_rows(table, primary);

    // Per-strategy means over successful cells.
    let mut strategies_present: Vec<Strategy> = Vec::new();
    for r in &rows {
        if !strategies_present.contains(&r.strategy) {
            strategies_present.push(r.strategy);
        }
    }
    let strategy_summary = |s: Strategy| -> StrategySummary {
        let ok: Vec<&&ResultRow> = rows
            .iter()
            .filter(|r| r.strategy == s && r.outcome.is_ok())
            .collect();
        let collect = |ind: Indicator| -> Vec<f64> {
            ok.iter().filter_map(|r| ind.value(&r.outcome)).collect()
        };
        let ifas = collect(Indicator::Ifa);
        let le10 = if ifas.is_empty() {
            f64::NAN
        } else {
            ifas.iter().filter(|&&v| v <= 10.0).count() as f64 / ifas.len() as f64
        };
        StrategySummary {
            strategy: s,
            cells: ok.len(),
            mean_recall20: mean(&collect(Indicator::Recall20)),
            mean_popt: mean(&collect(Indicator::Popt)),
            mean_ifa: mean(&ifas),
            ifa_le_10: le10,
        }
    };
    let strategies: Vec<StrategySummary> = strategies_present
        .iter()
        .map(|&s| strategy_summary(s))
        .collect();

    // Per (learner, strategy) means.
    let mut ls_keys: Vec<(String, Strategy)> = Vec::new();
    for r in &rows {
        let key = (r.learner.clone(), r.strategy);
        if !ls_keys.contains(&key) {
            ls_keys.push(key);
        }
    }
    let learner_strategy = ls_keys
        .into_iter()
        .map(|(learner, strategy)| {
            let vals = |ind: Indicator| -> Vec<f64> {
                rows.iter()
                    .filter(|r| r.learner == learner && r.strategy == strategy)
                    .filter_map(|r| ind.value(&r.outcome))
                    .collect()
            };
            let r20 = vals(Indicator::Recall20);
            LearnerStrategySummary {
                cells: r20.len(),
                mean_recall20: mean(&r20),
                mean_popt: mean(&vals(Indicator::Popt)),
                mean_ifa: mean(&vals(Indicator::Ifa)),
                learner,
                strategy,
            }
        })
        .collect();

    // Keyed metric maps for pairing.
    let metric_map = |s: Strategy, ind: Indicator| -> BTreeMap<CellKey, f64> {
        rows.iter()
            .filter(|r| r.strategy == s)
            .filter_map(|r| {
                ind.value(&r.outcome)
                    .map(|v| ((r.pair.clone(), r.learner.clone(), r.repetition), v))
            })
            .collect()
    };

    // EA-Z against each rival, errored cells dropped pairwise.
    let mut comparisons = Vec::new();
    if strategies_present.contains(&Strategy::EaZ) {
        for indicator in Indicator::ALL {
            let eaz = metric_map(Strategy::EaZ, indicator);
            let mut records = Vec::new();
            for &rival in strategies_present.iter().filter(|&&s| s != Strategy::EaZ) {
                let other = metric_map(rival, indicator);
                let keys: Vec<&CellKey> = eaz.keys().filter(|k| other.contains_key(*k)).collect();
                if keys.is_empty() {
                    continue;
                }
                let a: Vec<f64> = keys.iter().map(|k| eaz[*k]).collect();
                let b: Vec<f64> = keys.iter().map(|k| other[*k]).collect();
                let (wins, draws, losses) = if indicator.higher_is_better() {
                    wdl(&a, &b, 0.0).expect("equal lengths")
                } else {
                    // For costs a win means the EA-Z value is smaller.
                    let (w, d, l) = wdl(&b, &a, 0.0).expect("equal lengths");
                    (w, d, l)
                };
                let (w_stat, z, p) = match wilcoxon_signed_rank(&a, &b) {
                    Ok(res) => (res.w, res.z, res.p),
                    Err(_) => (f64::NAN, f64::NAN, f64::NAN),
                };
                let (effect, interpretation) = effect_size_r(z, a.len());
                records.push(ComparisonRecord {
                    method_a: Strategy::EaZ.name().to_string(),
                    method_b: rival.name().to_string(),
                    n: a.len(),
                    w_statistic: w_stat,
                    z_value: z,
                    p_value: p,
                    p_adjusted: f64::NAN,
                    effect_r: effect,
                    interpretation,
                    wins,
                    draws,
                    losses,
                });
            }
            // FDR across the rival family; invalid p-values stay NaN.
            let valid: Vec<usize> = (0..records.len())
                .filter(|&i| records[i].p_value.is_finite())
                .collect();
            let raw: Vec<f64> = valid.iter().map(|&i| records[i].p_value).collect();
            if let Ok(adj) = fdr_adjust(&raw) {
                for (slot, value) in valid.iter().zip(adj) {
                    records[*slot].p_adjusted = value;
                }
            }
            comparisons.push(IndicatorComparisons { indicator, records });
        }
    }

    // Method series for Scott-Knott and the trade-off table: one method
    // per (strategy, learner), except manual_up, which is
    // learner-independent and participates once.
    let series_for = |ind: Indicator| -> BTreeMap<String, BTreeMap<(String, usize), f64>> {
        let mut map: BTreeMap<String, BTreeMap<(String, usize), f64>> = BTreeMap::new();
        for r in &rows {
            let Some(v) = ind.value(&r.outcome) else {
                continue;
            };
            let tag = if r.strategy == Strategy::ManualUp {
                "manual_up".to_string()
            } else {
                format!("{}({})", r.strategy, r.learner)
            };
            map.entry(tag)
                .or_default()
                .insert((r.pair.clone(), r.repetition), v);
        }
        map
    };

    let mut sk_groupings = Vec::new();
    for indicator in Indicator::ALL {
        let series = series_for(indicator);
        if series.is_empty() {
            continue;
        }
        // Complete-case alignment: only experiment units every method has.
        let mut common: Option<BTreeSet<(String, usize)>> = None;
        for units in series.values() {
            let set: BTreeSet<(String, usize)> = units.keys().cloned().collect();
            common = Some(match common {
                None => set,
                Some(prev) => prev.intersection(&set).cloned().collect(),
            });
        }
        let common = common.unwrap_or_default();
        if common.is_empty() {
            continue;
        }
        let aligned: BTreeMap<String, Vec<f64>> = series
            .iter()
            .map(|(tag, units)| {
                (
                    tag.clone(),
                    common.iter().map(|k| units[k]).collect::<Vec<f64>>(),
                )
            })
            .collect();
        if let Ok(grouping) = scott_knott_esd(&aligned) {
            sk_groupings.push((indicator, grouping));
        }
    }

    // Trade-off table against manual_up on recall@20%.
    let mut tradeoff = Vec::new();
    if strategies_present.contains(&Strategy::ManualUp) {
        let manual_recall: BTreeMap<(String, usize), f64> = rows
            .iter()
            .filter(|r| r.strategy == Strategy::ManualUp)
            .filter_map(|r| {
                Indicator::Recall20
                    .value(&r.outcome)
                    .map(|v| ((r.pair.clone(), r.repetition), v))
            })
            .collect();
        let series_r20 = series_for(Indicator::Recall20);
        let series_ifa = series_for(Indicator::Ifa);
        for (tag, units) in &series_r20 {
            let values: Vec<f64> = units.values().copied().collect();
            let ifa_values: Vec<f64> = series_ifa
                .get(tag)
                .map(|m| m.values().copied().collect())
                .unwrap_or_default();
            let wdl_row = if tag == "manual_up" {
                None
            } else {
                let keys: Vec<&(String, usize)> = units
                    .keys()
                    .filter(|k| manual_recall.contains_key(*k))
                    .collect();
                let a: Vec<f64> = keys.iter().map(|k| units[*k]).collect();
                let b: Vec<f64> = keys.iter().map(|k| manual_recall[*k]).collect();
                Some(wdl(&a, &b, 0.0).expect("equal lengths"))
            };
            tradeoff.push(TradeoffRow {
                method: tag.clone(),
                mean_recall20: mean(&values),
                wdl_vs_manual_up: wdl_row,
                mean_ifa: mean(&ifa_values),
            });
        }
        tradeoff.sort_by(|a, b| {
            b.mean_recall20
                .partial_cmp(&a.mean_recall20)
                .unwrap_or(std::cmp::Ordering::Equal)
                .then_with(|| a.method.cmp(&b.method))
        });
    }

    // Per-zeta means over all EA-Z rows (the sweep view).
    let mut zeta_sweep = Vec::new();
    for &z in &ea_zetas {
        let ok: Vec<&ResultRow> = table
            .rows
            .iter()
            .filter(|r| r.strategy == Strategy::EaZ && r.zeta == Some(z) && r.outcome.is_ok())
            .collect();
        let vals = |ind: Indicator| -> Vec<f64> {
            ok.iter().filter_map(|r| ind.value(&r.outcome)).collect()
        };
        zeta_sweep.push(ZetaSummary {
            zeta: z,
            cells: ok.len(),
            mean_recall20: mean(&vals(Indicator::Recall20)),
            mean_popt: mean(&vals(Indicator::Popt)),
            mean_ifa: mean(&vals(Indicator::Ifa)),
        });
    }

    SummaryReport {
        primary_zeta: primary.unwrap_or(requested_zeta),
        total_cells: table.rows.len(),
        errored_cells: table.errored_count(),
        strategies,
        learner_strategy,
        comparisons,
        sk_groupings,
        tradeoff,
        zeta_sweep,
    }
}

fn fmt_p(p: f64) -> String {
    if !p.is_finite() {
        "-".to_string()
    } else if p < 0.001 {
        "<0.001".to_string()
    } else {
        format!("{p:.4}")
    }
}

/// Human-readable report: per-indicator averages with the published
/// reference values alongside, the pairwise comparisons, IFA<=10
/// proportions, Scott-Knott groups, the trade-off table, and the zeta
/// sweep when one ran.
pub fn render_text(report: &SummaryReport) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "Effort-aware ranking benchmark summary");
    let _ = writeln!(out, "======================================");
    let _ = writeln!(
        out,
        "cells: {} total, {} errored; ea_z anchored at zeta = {}",
        report.total_cells, report.errored_cells, report.primary_zeta
    );

    for indicator in Indicator::ALL {
        let _ = writeln!(out);
        let _ = writeln!(
            out,
            "-- Average {} (published full-corpus reference in parentheses) --",
            indicator.label()
        );
        for s in &report.strategies {
            let value = match indicator {
                Indicator::Recall20 => s.mean_recall20,
                Indicator::Popt => s.mean_popt,
                Indicator::Ifa => s.mean_ifa,
            };
            let reference = reference_for(s.strategy)
                .map(|(r, p, i)| match indicator {
                    Indicator::Recall20 => r,
                    Indicator::Popt => p,
                    Indicator::Ifa => i,
                })
                .map(|v| format!("({v})"))
                .unwrap_or_default();
            let _ = writeln!(
                out,
                "  {:<10} {:>9.4}  n={:<5} {}",
                s.strategy.name(),
                value,
                s.cells,
                reference
            );
        }
        if let Some(cmp) = report
            .comparisons
            .iter()
            .find(|c| c.indicator == indicator && !c.records.is_empty())
        {
            let _ = writeln!(out, "  ea_z vs rivals:");
            let _ = writeln!(
                out,
                "    {:<10} {:>13} {:>9} {:>9} {:>9}  {}",
                "rival", "W/D/L", "p", "p(adj)", "effect r", "interpretation"
            );
            for r in &cmp.records {
                let (effect, interp) = if r.effect_r.is_finite() {
                    (format!("{:.3}", r.effect_r), r.interpretation.to_string())
                } else {
                    ("-".to_string(), "-".to_string())
                };
                let _ = writeln!(
                    out,
                    "    {:<10} {:>13} {:>9} {:>9} {:>9}  {}",
                    r.method_b,
                    format!("{}/{}/{}", r.wins, r.draws, r.losses),
                    fmt_p(r.p_value),
                    fmt_p(r.p_adjusted),
                    effect,
                    interp
                );
            }
        }
    }

    let _ = writeln!(out);
    let _ = writeln!(out, "-- Proportion of cells with IFA <= 10 --");
    for s in &report.strategies {
        let _ = writeln!(
            out,
            "  {:<10} {:>6.1}%",
            s.strategy.name(),
            s.ifa_le_10 * 100.0
        );
    }

    for (indicator, grouping) in &report.sk_groupings {
        let _ = writeln!(out);
        let note = if indicator.higher_is_better() {
            "group 1 = best"
        } else {
            "group 1 = most alarms"
        };
        let _ = writeln!(
            out,
            "-- Scott-Knott ESD groups: {} ({note}) --",
            indicator.label()
        );
        for (method, group) in grouping.methods.iter().zip(&grouping.group_ids) {
            let _ = writeln!(out, "  {group}  {method}");
        }
    }

    if !report.tradeoff.is_empty() {
        let _ = writeln!(out);
        let _ = writeln!(out, "-- Trade-off vs manual_up (Recall@20% W/D/L) --");
        let _ = writeln!(
            out,
            "  {:<22} {:>9} {:>13} {:>9}",
            "method", "recall20", "W/D/L", "ifa"
        );
        for row in &report.tradeoff {
            let wdl_text = row
                .wdl_vs_manual_up
                .map(|(w, d, l)| format!("{w}/{d}/{l}"))
                .unwrap_or_else(|| "-".into());
            let _ = writeln!(
                out,
                "  {:<22} {:>9.4} {:>13} {:>9.3}",
                row.method, row.mean_recall20, wdl_text, row.mean_ifa
            );
        }
    }

    if report.zeta_sweep.len() > 1 {
        let _ = writeln!(out);
        let _ = writeln!(out, "-- EA-Z zeta sweep --");
        let _ = writeln!(
            out,
            "  {:<8} {:>9} {:>9} {:>9} {:>6}",
            "zeta", "recall20", "popt", "ifa", "n"
        );
        for z in &report.zeta_sweep {
            let _ = writeln!(
                out,
                "  {:<8} {:>9.4} {:>9.4} {:>9.3} {:>6}",
                z.zeta, z.mean_recall20, z.mean_popt, z.mean_ifa, z.cells
            );
        }
    }

    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn row(
        pair: &str,
        learner: &str,
        strategy: Strategy,
        zeta: Option<f64>,
        recall20: f64,
        ifa: usize,
    ) -> ResultRow {
        ResultRow {
            pair: pair.into(),
            source: "SYNTH".into(),
            learner: learner.into(),
            strategy,
            repetition: 0,
            zeta,
            outcome: RowOutcome::Ok {
                recall20,
                popt: recall20 * 0.9,
                ifa,
            },
        }
    }

    #[test]
    fn single_strategy_has_no_comparisons_but_means() {
        let table = ResultTable {
            rows: vec![
                row("a->b", "rf", Strategy::ManualUp, None, 0.5, 2),
                row("c->d", "rf", Strategy::ManualUp, None, 0.7, 12),
            ],
        };
        let report = summarize(&table, 0.05);
        assert!(report.comparisons.is_empty());
        assert_eq!(report.strategies.len(), 1);
        assert!((report.strategies[0].mean_recall20 - 0.6).abs() < 1e-12);
        assert!((report.strategies[0].ifa_le_10 - 0.5).abs() < 1e-12);
    }

    #[test]
    fn identical_strategies_draw_with_p_one() {
        let mut rows = Vec::new();
        for i in 0..8 {
            let pair = format!("p{i}->q{i}");
            rows.push(row(&pair, "rf", Strategy::EaZ, Some(0.05), 0.5, 1));
            rows.push(row(&pair, "rf", Strategy::ProbLoc, None, 0.5, 1));
        }
        let report = summarize(&ResultTable { rows }, 0.05);
        let cmp = &report.comparisons[0].records[0];
        assert_eq!((cmp.wins, cmp.draws, cmp.losses), (0, 8, 0));
        assert_eq!(cmp.p_value, 1.0);
        assert_eq!(cmp.p_adjusted, 1.0);
    }

    #[test]
    fn dominant_eaz_wins_everywhere_with_small_p() {
        let mut rows = Vec::new();
        for i in 0..10 {
            let pair = format!("p{i}->q{i}");
            rows.push(row(
                &pair,
                "rf",
                Strategy::EaZ,
                Some(0.05),
                0.8 + (i as f64) * 0.01,
                1,
            ));
            rows.push(row(&pair, "rf", Strategy::Prob, None, 0.2, 1));
        }
        let report = summarize(&ResultTable { rows }, 0.05);
        let cmp = report.comparisons[0]
            .records
            .iter()
            .find(|r| r.method_b == "prob")
            .unwrap();
        assert_eq!((cmp.wins, cmp.draws, cmp.losses), (10, 0, 0));
        assert!(cmp.p_adjusted < 0.05);
    }

    #[test]
    fn errored_cells_drop_pairwise() {
        let mut rows = Vec::new();
        for i in 0..6 {
            let pair = format!("p{i}->q{i}");
            rows.push(row(&pair, "rf", Strategy::EaZ, Some(0.05), 0.9, 1));
            if i == 0 {
                rows.push(ResultRow {
                    outcome: RowOutcome::Error("single class".into()),
                    ..row(&pair, "rf", Strategy::Prob, None, 0.0, 0)
                });
            } else {
                rows.push(row(&pair, "rf", Strategy::Prob, None, 0.3, 1));
            }
        }
        let report = summarize(&ResultTable { rows }, 0.05);
        assert_eq!(report.errored_cells, 1);
        let cmp = &report.comparisons[0].records[0];
        assert_eq!(cmp.n, 5);
    }

    #[test]
    fn ifa_wins_mean_smaller() {
        let mut rows = Vec::new();
        for i in 0..6 {
            let pair = format!("p{i}->q{i}");
            rows.push(row(&pair, "rf", Strategy::EaZ, Some(0.05), 0.9, 2));
            rows.push(row(&pair, "rf", Strategy::Prob, None, 0.3, 9));
        }
        let report = summarize(&ResultTable { rows }, 0.05);
        let ifa_cmp = report
            .comparisons
            .iter()
            .find(|c| c.indicator == Indicator::Ifa)
            .unwrap();
        // EA-Z has strictly lower IFA in all six cells.
        assert_eq!(
            (
                ifa_cmp.records[0].wins,
                ifa_cmp.records[0].draws,
                ifa_cmp.records[0].losses
            ),
            (6, 0, 0)
        );
    }

    #[test]
    fn sweep_rows_anchor_to_requested_zeta() {
        let mut rows = Vec::new();
        for &z in &[0.005, 0.05, 0.1] {
            for i in 0..3 {
                let pair = format!("p{i}->q{i}");
                rows.push(row(&pair, "rf", Strategy::EaZ, Some(z), z * 10.0, 1));
            }
        }
        let report = summarize(&ResultTable { rows }, 0.05);
        assert_eq!(report.primary_zeta, 0.05);
        assert_eq!(report.zeta_sweep.len(), 3);
        let anchored = &report.strategies[0];
        assert!((anchored.mean_recall20 - 0.5).abs() < 1e-12);
    }

    #[test]
    fn manual_up_tradeoff_has_no_self_wdl() {
        let table = ResultTable {
            rows: vec![
                row("a->b", "rf", Strategy::ManualUp, None, 0.5, 3),
                row("a->b", "rf", Strategy::EaZ, Some(0.05), 0.6, 5),
            ],
        };
        let report = summarize(&table, 0.05);
        let manual = report
            .tradeoff
            .iter()
            .find(|t| t.method == "manual_up")
            .unwrap();
        assert!(manual.wdl_vs_manual_up.is_none());
        let eaz = report
            .tradeoff
            .iter()
            .find(|t| t.method == "ea_z(rf)")
            .unwrap();
        assert_eq!(eaz.wdl_vs_manual_up, Some((1, 0, 0)));
    }

    #[test]
    fn rendered_text_prints_reference_values() {
        let table = ResultTable {
            rows: vec![
                row("a->b", "rf", Strategy::EaZ, Some(0.05), 0.6, 5),
                row("a->b", "rf", Strategy::Prob, None, 0.2, 1),
            ],
        };
        let report = summarize(&table, 0.05);
        let text = render_text(&report);
        assert!(text.contains("0.605"));
        assert!(text.contains("0.813"));
        assert!(text.contains("14.198"));
        assert!(text.contains("IFA <= 10"));
    }
}
