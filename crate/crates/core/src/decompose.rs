//! Classical additive decomposition: observed = trend + seasonal + random.
//!
//! Trend is the 2x12 centered moving average, so the first and last six
//! months carry no trend (and hence no random) value. Seasonal indices are
//! per-calendar-month means of the detrended series, centered to sum to zero.

use crate::error::{Error, Result};
use crate::series::{MonthlySeries, PartialMonthlySeries};

pub const PERIOD: usize = 12;

/// Minimum series length accepted by [`decompose_additive`].
pub const MIN_DECOMPOSE_LEN: usize = 2 * PERIOD;

#[derive(Debug, Clone, PartialEq)]
pub struct Decomposition {
    pub observed: MonthlySeries,
    pub trend: PartialMonthlySeries,
    /// Indexed by calendar month, January first.
    pub seasonal_indices: [f64; 12],
    pub seasonal: MonthlySeries,
    pub random: PartialMonthlySeries,
}

impl Decomposition {
    /// Trend plus seasonal at every month where trend is defined.
    pub fn trend_plus_seasonal(&self) -> PartialMonthlySeries {
        let values = self
            .trend
            .values()
            .iter()
            .zip(self.seasonal.values())
            .map(|(t, s)| t.map(|t| t + s))
            .collect();
        PartialMonthlySeries::new(self.trend.start(), values).expect("trend has present values")
    }
}

/// Centered moving average of even `period` with half weights on the two
/// outermost points.
pub fn centered_ma(series: &MonthlySeries, period: usize) -> Result<PartialMonthlySeries> {
    if period < 2 || period % 2 != 0 {
        return Err(Error::Argument(format!(
            "period {period} must be even and >= 2"
        )));
    }
    let n = series.len();
    if n < period + 1 {
        return Err(Error::InsufficientData(format!(
            "centered moving average of period {period} needs {} values, got {n}",
            period + 1
        )));
    }
    let y = series.values();
    let half = period / 2;
    let mut trend = vec![None; n];
    for (t, slot) in trend.iter_mut().enumerate().take(n - half).skip(half) {
        let inner: f64 = y[t + 1 - half..t + half].iter().sum();
        *slot = Some((0.5 * y[t - half] + inner + 0.5 * y[t + half]) / period as f64);
    }
    PartialMonthlySeries::new(series.start(), trend)
}

/// Centered per-calendar-month means of `observed - trend`.
pub fn seasonal_indices(
    observed: &MonthlySeries,
    trend: &PartialMonthlySeries,
) -> Result<[f64; 12]> {
    if observed.start() != trend.start() || observed.len() != trend.len() {
        return Err(Error::Argument(
            "trend is not aligned with the observed series".into(),
        ));
    }
    let mut sums = [0.0; 12];
    let mut counts = [0usize; 12];
    for ((month, y), t) in observed.iter().zip(trend.values()) {
        if let Some(t) = t {
            sums[month.month0()] += y - t;
            counts[month.month0()] += 1;
        }
    }
    let mut raw = [0.0; 12];
    for m in 0..12 {
        if counts[m] == 0 {
            return Err(Error::InsufficientData(format!(
                "no detrended observations for calendar month {}",
                m + 1
            )));
        }
        raw[m] = sums[m] / counts[m] as f64;
    }
    let mean = raw.iter().sum::<f64>() / 12.0;
    Ok(raw.map(|r| r - mean))
}

pub fn decompose_additive(series: &MonthlySeries) -> Result<Decomposition> {
    if series.len() < MIN_DECOMPOSE_LEN {
        return Err(Error::InsufficientData(format!(
            "decomposition needs at least {MIN_DECOMPOSE_LEN} months, got {}",
            series.len()
        )));
    }
    let trend = centered_ma(series, PERIOD)?;
    let indices = seasonal_indices(series, &trend)?;
    let seasonal = MonthlySeries::new(
        series.start(),
        series.iter().map(|(m, _)| indices[m.month0()]).collect(),
    )?;
    let random = series
        .values()
        .iter()
        .zip(trend.values())
        .zip(seasonal.values())
        .map(|((y, t), s)| t.map(|t| y - t - s))
        .collect();
    Ok(Decomposition {
        observed: series.clone(),
        trend,
        seasonal_indices: indices,
        seasonal,
        random: PartialMonthlySeries::new(series.start(), random)?,
    })
}
