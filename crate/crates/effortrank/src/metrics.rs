//! Effort-aware evaluation: cost-effectiveness curve, Popt, Recall@budget,
//! and initial false alarms.
//!
//! Every measure derives from the cost-effectiveness curve: walking a
//! ranking, plot the cumulative proportion of defective modules found
//! against the cumulative proportion of inspection effort spent. The y-axis
//! counts defective modules, not bug multiplicities; labels are binary.

use thiserror::Error;

use crate::strategies::RankedList;

#[derive(Debug, Error)]
pub enum MetricError {
    #[error("length mismatch: ranking covers {order} modules, vectors have {vector}")]
    LengthMismatch { order: usize, vector: usize },
    #[error("undefined recall denominator: no defective module")]
    NoDefectiveModules,
    #[error("module {index}: effort {value} is not positive")]
    NonPositiveEffort { index: usize, value: f64 },
    #[error("budget {0} outside (0, 1]")]
    InvalidBudget(f64),
    #[error("degenerate normalization: optimal and worst areas coincide")]
    DegenerateNormalization,
}

/// Cost-effectiveness curve: ordered (effort fraction, recall fraction)
/// points starting at (0, 0). Evaluation between points is piecewise-linear.
#[derive(Debug, Clone, PartialEq)]
pub struct CECurve {
    pub points: Vec<(f64, f64)>,
}

impl CECurve {
    /// Linear interpolation at effort fraction `x` in [0, 1].
    pub fn value_at(&self, x: f64) -> f64 {
        let pts = &self.points;
        if x <= pts[0].0 {
            return pts[0].1;
        }
        for w in pts.windows(2) {
            let ((x0, y0), (x1, y1)) = (w[0], w[1]);
            if x <= x1 {
                if x1 == x0 {
                    return y1;
                }
                return y0 + (y1 - y0) * (x - x0) / (x1 - x0);
            }
        }
        pts[pts.len() - 1].1
    }

    /// Exact integral of the piecewise-linear curve over effort fraction.
    pub fn area(&self) -> f64 {
        self.points
            .windows(2)
            .map(|w| (w[1].0 - w[0].0) * (w[0].1 + w[1].1) / 2.0)
            .sum()
    }
}

/// Metric triple for one (ranking, dataset) evaluation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EvalResult {
    pub recall20: f64,
    pub popt: f64,
    pub ifa: usize,
}

fn validate(
    r: &RankedList,
    actuals: &[bool],
    efforts: &[f64],
) -> Result<(f64, usize), MetricError> {
    if r.order.len() != actuals.len() || actuals.len() != efforts.len() {
        return Err(MetricError::LengthMismatch {
            order: r.order.len(),
            vector: actuals.len().min(efforts.len()),
        });
    }
    for (index, &e) in efforts.iter().enumerate() {
        if !(e > 0.0) || !e.is_finite() {
            return Err(MetricError::NonPositiveEffort { index, value: e });
        }
    }
    let defects = actuals.iter().filter(|&&d| d).count();
    if defects == 0 {
        return Err(MetricError::NoDefectiveModules);
    }
    // Total effort accumulated in ranked order, so the curve's final x is
    // exactly 1.0 without float drift.
    let total: f64 = r.order.iter().map(|&i| efforts[i]).sum();
    Ok((total, defects))
}

/// Walks the ranked order and emits the cost-effectiveness curve.
pub fn ce_curve(
    r: &RankedList,
    actuals: &[bool],
    efforts: &[f64],
) -> Result<CECurve, MetricError> {
    let (total, defects) = validate(r, actuals, efforts)?;
    let mut points = Vec::with_capacity(r.order.len() + 1);
    points.push((0.0, 0.0));
    let mut cum_effort = 0.0;
    let mut cum_defects = 0usize;
    for &i in &r.order {
        cum_effort += efforts[i];
        if actuals[i] {
            cum_defects += 1;
        }
        points.push((cum_effort / total, cum_defects as f64 / defects as f64));
    }
    Ok(CECurve { points })
}

/// Fraction of all defective modules found within `budget` of the total
/// effort. A module counts when its inclusive cumulative effort fits within
/// the budget (with 1e-12 slack); a module straddling the boundary earns no
/// partial credit.
pub fn recall_at(
    r: &RankedList,
    actuals: &[bool],
    efforts: &[f64],
    budget: f64,
) -> Result<f64, MetricError> {
    if !budget.is_finite() || budget <= 0.0 || budget > 1.0 {
        return Err(MetricError::InvalidBudget(budget));
    }
    let (total, defects) = validate(r, actuals, efforts)?;
    let limit = budget * total + 1e-12;
    let mut cum = 0.0;
    let mut found = 0usize;
    for &i in &r.order {
        cum += efforts[i];
        if cum > limit {
            break;
        }
        if actuals[i] {
            found += 1;
        }
    }
    Ok(found as f64 / defects as f64)
}

fn order_by<F>(n: usize, key: F) -> RankedList
where
    F: Fn(usize) -> (bool, f64),
{
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| {
        let (da, ea) = key(a);
        let (db, eb) = key(b);
        db.cmp(&da)
            .then_with(|| ea.partial_cmp(&eb).expect("finite efforts"))
            .then_with(|| a.cmp(&b))
    });
    RankedList { order }
}

/// Normalized area score: 1 means the ranking matches the optimal
/// defective-first order, 0 the worst. Areas are exact trapezoidal
/// integrals of the piecewise-linear curves.
///
/// The optimal order is defect density descending: all defectives first,
/// smallest effort first among them. The worst is its mirror: all clean
/// modules first, then defectives largest first. Ordering within a block
/// whose recall is flat cannot change the area.
pub fn popt(r: &RankedList, actuals: &[bool], efforts: &[f64]) -> Result<f64, MetricError> {
    let n = r.order.len();
    let model = ce_curve(r, actuals, efforts)?;
    let optimal = order_by(n, |i| (actuals[i], efforts[i]));
    let worst = order_by(n, |i| (!actuals[i], -efforts[i]));
    let area_opt = ce_curve(&optimal, actuals, efforts)?.area();
    let area_worst = ce_curve(&worst, actuals, efforts)?.area();
    let denom = area_opt - area_worst;
    if denom.abs() < 1e-15 {
        return Err(MetricError::DegenerateNormalization);
    }
    Ok(1.0 - (area_opt - model.area()) / denom)
}

/// Number of clean modules inspected before the first defective one. When
/// no module is defective, returns the module count as a sentinel; reports
/// flag that case separately.
pub fn ifa(r: &RankedList, actuals: &[bool]) -> usize {
    let mut alarms = 0;
    for &i in &r.order {
        if actuals[i] {
            return alarms;
        }
        alarms += 1;
    }
    alarms
}
