//! ARIMA(p, d, q) by conditional sum of squares.
//!
//! The series is differenced `d` times; for `d = 0` it is also centered on its
//! sample mean, which is restored in forecasts. No drift term is fitted for
//! `d >= 1`. Innovations follow
//!
//! ```text
//! e_t = w_t - sum_i phi_i * w_{t-i} - sum_j theta_j * e_{t-j}
//! ```
//!
//! with zero pre-sample values, and the objective sums `e_t^2` over every
//! differenced observation. Orders are ranked by the small-sample corrected
//! AIC.

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::optim::{minimize_from_starts, BoundedProblem};
use crate::series::{CalendarMonth, MonthlySeries, PartialMonthlySeries};

pub const MAX_P: usize = 5;
pub const MAX_D: usize = 2;
pub const MAX_Q: usize = 5;
/// Coefficients are searched in `[-COEF_BOUND, COEF_BOUND]`.
pub const COEF_BOUND: f64 = 0.99;
/// Shortest series accepted by [`auto_order`].
pub const MIN_AUTO_LEN: usize = 30;

const FIT_TOL: f64 = 1e-12;
const FIT_MAX_EVALS: usize = 4_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct ArimaOrder {
    pub p: usize,
    pub d: usize,
    pub q: usize,
}

impl ArimaOrder {
    pub fn new(p: usize, d: usize, q: usize) -> Result<Self> {
        if p > MAX_P || d > MAX_D || q > MAX_Q {
            return Err(Error::Argument(format!(
                "order ({p},{d},{q}) outside p <= {MAX_P}, d <= {MAX_D}, q <= {MAX_Q}"
            )));
        }
        Ok(Self { p, d, q })
    }

    /// Differenced observations needed to fit this order.
    pub fn min_fit_len(self) -> usize {
        10 + self.p + self.q
    }
}

impl std::fmt::Display for ArimaOrder {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({},{},{})", self.p, self.d, self.q)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ArimaModel {
    pub order: ArimaOrder,
    pub ar: Vec<f64>,
    pub ma: Vec<f64>,
    /// Sample mean removed before fitting; zero when `d >= 1`.
    pub mean: f64,
    /// `sse / n`. Zero only for a series the model reproduces exactly.
    pub sigma2: f64,
    pub sse: f64,
    /// Length of the differenced series.
    pub n: usize,
    pub aic: f64,
    /// `aic + 2k(k+1)/(n-k-1)` with `k = p + q + 1`.
    pub aicc: f64,
    /// Innovations on the original time axis, present from offset `d`.
    pub residuals: PartialMonthlySeries,
    pub training_span: (CalendarMonth, CalendarMonth),
    /// Trailing `d + max(p, q)` training observations.
    pub last_values: Vec<f64>,
}

/// Applies the first-difference operator `d` times.
pub fn difference(series: &MonthlySeries, d: usize) -> Result<MonthlySeries> {
    if series.len() <= d {
        return Err(Error::InsufficientData(format!(
            "cannot difference {} values {d} times",
            series.len()
        )));
    }
    let values = difference_values(series.values(), d);
    MonthlySeries::new(series.start().add_months(d as i64), values)
}

fn difference_values(values: &[f64], d: usize) -> Vec<f64> {
    let mut v = values.to_vec();
    for _ in 0..d {
        v = v.windows(2).map(|w| w[1] - w[0]).collect();
    }
    v
}

/// Undoes `d` rounds of differencing. `tail` holds the last `d` values of the
/// undifferenced series, oldest first.
pub fn integrate_forecasts(diff_forecasts: &[f64], tail: &[f64], d: usize) -> Result<Vec<f64>> {
    if tail.len() != d {
        return Err(Error::Argument(format!(
            "integration of order {d} needs {d} trailing values, got {}",
            tail.len()
        )));
    }
    // anchors[k]: last value of the k-times differenced tail
    let anchors: Vec<f64> = (0..d)
        .map(|k| {
            *difference_values(tail, k)
                .last()
                .expect("tail longer than k")
        })
        .collect();
    let mut out = diff_forecasts.to_vec();
    for &anchor in anchors.iter().rev() {
        let mut acc = anchor;
        for v in out.iter_mut() {
            acc += *v;
            *v = acc;
        }
    }
    Ok(out)
}

/// ARMA innovations with zero pre-sample values.
pub fn css_residuals(w: &[f64], ar: &[f64], ma: &[f64]) -> Vec<f64> {
    let mut e = vec![0.0; w.len()];
    for t in 0..w.len() {
        let mut v = w[t];
        for (i, phi) in ar.iter().enumerate().take(t) {
            v -= phi * w[t - 1 - i];
        }
        for (j, theta) in ma.iter().enumerate().take(t) {
            v -= theta * e[t - 1 - j];
        }
        e[t] = v;
    }
    e
}

/// Sum of squared innovations. `w` is the differenced (and, for `d = 0`,
/// centered) series.
pub fn css_objective(w: &[f64], ar: &[f64], ma: &[f64]) -> f64 {
    css_residuals(w, ar, ma).iter().map(|e| e * e).sum()
}

fn start_grid_points(k: usize) -> usize {
    match k {
        0..=2 => 5,
        3..=4 => 2,
        _ => 1,
    }
}

pub fn fit_arima(series: &MonthlySeries, order: ArimaOrder) -> Result<ArimaModel> {
    fit_arima_with_starts(series, order, &[])
}

/// Like [`fit_arima`] with additional optimizer start points
/// (`p` AR coefficients followed by `q` MA coefficients each).
pub fn fit_arima_with_starts(
    series: &MonthlySeries,
    order: ArimaOrder,
    extra_starts: &[Vec<f64>],
) -> Result<ArimaModel> {
    let ArimaOrder { p, d, q } = order;
    let k = p + q;
    if series.len() < d || series.len() - d < order.min_fit_len() {
        return Err(Error::InsufficientData(format!(
            "ARIMA{order} needs {} differenced values, series has {}",
            order.min_fit_len(),
            series.len()
        )));
    }
    if let Some(s) = extra_starts.iter().find(|s| s.len() != k) {
        return Err(Error::Argument(format!(
            "start {s:?} does not have {k} coefficients"
        )));
    }
    let diffed = difference(series, d)?;
    let mean = if d == 0 {
        diffed.values().iter().sum::<f64>() / diffed.len() as f64
    } else {
        0.0
    };
    let w: Vec<f64> = diffed.values().iter().map(|v| v - mean).collect();
    let n = w.len();

    let coefs = if k == 0 {
        Vec::new()
    } else {
        let energy: f64 = w.iter().map(|v| v * v).sum();
        let scale = if energy > 0.0 { energy } else { 1.0 };
        let problem =
            BoundedProblem::new(vec![-COEF_BOUND; k], vec![COEF_BOUND; k], |x: &[f64]| {
                css_objective(&w, &x[..p], &x[p..]) / scale
            })?;
        let mut starts = vec![vec![0.0; k]];
        starts.extend(problem.grid(start_grid_points(k)));
        starts.extend(extra_starts.iter().cloned());
        minimize_from_starts(&problem, &starts, FIT_TOL, FIT_MAX_EVALS)?.argmin
    };
    let (ar, ma) = coefs.split_at(p);

    let e = css_residuals(&w, ar, ma);
    let sse: f64 = e.iter().map(|v| v * v).sum();
    let sigma2 = sse / n as f64;
    let params = (k + 1) as f64;
    let aic = n as f64 * sigma2.ln() + 2.0 * params;
    let aicc = aic + 2.0 * params * (params + 1.0) / (n as f64 - params - 1.0);

    let mut residuals = vec![None; series.len()];
    for (t, r) in e.iter().enumerate() {
        residuals[d + t] = Some(*r);
    }
    let keep = (d + p.max(q)).min(series.len());
    Ok(ArimaModel {
        order,
        ar: ar.to_vec(),
        ma: ma.to_vec(),
        mean,
        sigma2,
        sse,
        n,
        aic,
        aicc,
        residuals: PartialMonthlySeries::new(series.start(), residuals)?,
        training_span: (series.start(), series.end()),
        last_values: series.values()[series.len() - keep..].to_vec(),
    })
}

#[derive(Debug, Clone, PartialEq)]
pub struct OrderCandidate {
    pub order: ArimaOrder,
    pub aic: f64,
    pub aicc: f64,
    pub sse: f64,
    pub coefficients: Vec<f64>,
}

/// Fits every feasible order in the search box, each `d` level walking `p`
/// then `q` and seeding each fit with the optima of its two nested
/// neighbours. Returned in grid order.
pub fn order_grid(series: &MonthlySeries) -> Result<Vec<OrderCandidate>> {
    let per_d: Vec<Result<Vec<OrderCandidate>>> = (0..=MAX_D)
        .into_par_iter()
        .map(|d| {
            let mut done: Vec<Vec<Option<Vec<f64>>>> = vec![vec![None; MAX_Q + 1]; MAX_P + 1];
            let mut out = Vec::new();
            for p in 0..=MAX_P {
                for q in 0..=MAX_Q {
                    let order = ArimaOrder { p, d, q };
                    if series.len() < d + order.min_fit_len() {
                        continue;
                    }
                    let mut extra = Vec::new();
                    if p > 0 {
                        if let Some(c) = &done[p - 1][q] {
                            let mut s = c.clone();
                            s.insert(p - 1, 0.0);
                            extra.push(s);
                        }
                    }
                    if q > 0 {
                        if let Some(c) = &done[p][q - 1] {
                            let mut s = c.clone();
                            s.push(0.0);
                            extra.push(s);
                        }
                    }
                    let m = fit_arima_with_starts(series, order, &extra)?;
                    let coefficients: Vec<f64> = m.ar.iter().chain(&m.ma).copied().collect();
                    done[p][q] = Some(coefficients.clone());
                    out.push(OrderCandidate {
                        order,
                        aic: m.aic,
                        aicc: m.aicc,
                        sse: m.sse,
                        coefficients,
                    });
                }
            }
            Ok(out)
        })
        .collect();
    let mut all = Vec::new();
    for r in per_d {
        all.extend(r?);
    }
    Ok(all)
}

/// Minimum-AICc order; ties go to smaller `p + q`, then smaller `d`, then smaller `p`.
pub fn auto_order(series: &MonthlySeries) -> Result<ArimaOrder> {
    if series.len() < MIN_AUTO_LEN {
        return Err(Error::InsufficientData(format!(
            "order search needs {MIN_AUTO_LEN} months, got {}",
            series.len()
        )));
    }
    order_grid(series)?
        .into_iter()
        .min_by(|a, b| {
            a.aicc
                .total_cmp(&b.aicc)
                .then((a.order.p + a.order.q).cmp(&(b.order.p + b.order.q)))
                .then(a.order.d.cmp(&b.order.d))
                .then(a.order.p.cmp(&b.order.p))
        })
        .map(|c| c.order)
        .ok_or_else(|| Error::InsufficientData("no feasible ARIMA order".into()))
}

pub fn arima_forecast(model: &ArimaModel, horizon: usize) -> Result<MonthlySeries> {
    if horizon == 0 {
        return Err(Error::Argument(
            "forecast horizon must be at least 1".into(),
        ));
    }
    let ArimaOrder { p, d, q } = model.order;
    let mut w: Vec<f64> = difference_values(&model.last_values, d)
        .into_iter()
        .map(|v| v - model.mean)
        .collect();
    let mut e: Vec<f64> = model
        .residuals
        .values()
        .iter()
        .rev()
        .take(q)
        .rev()
        .map(|r| r.unwrap_or(0.0))
        .collect();

    let mut diff_forecasts = Vec::with_capacity(horizon);
    for _ in 0..horizon {
        let ar_part: f64 = (0..p).map(|i| model.ar[i] * w[w.len() - 1 - i]).sum();
        let ma_part: f64 = (0..q).map(|j| model.ma[j] * e[e.len() - 1 - j]).sum();
        let next = ar_part + ma_part;
        w.push(next);
        e.push(0.0);
        diff_forecasts.push(next + model.mean);
    }
    let tail = &model.last_values[model.last_values.len() - d..];
    let values = integrate_forecasts(&diff_forecasts, tail, d)?;
    MonthlySeries::new(model.training_span.1.succ(), values)
}
