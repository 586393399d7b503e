//! Forecast evaluation protocols over a six-year monthly series.
//!
//! Years are counted from the start of the series: years 1-5 train, year 6 is
//! held out. Methods 1-5 produce signed percentage errors per target month;
//! method 6 compares trend + seasonal between the windows years 1-5 and 2-6.
//!
//! | method | engine       | origin                         | horizon |
//! |--------|--------------|--------------------------------|---------|
//! | 1      | Holt-Winters | end of year 5                  | 12      |
//! | 2      | Holt-Winters | month before each target       | 1       |
//! | 3      | Holt-Winters on the trend component | mid year 5 | 7-12  |
//! | 4      | ARIMA, order by AIC | end of year 5           | 12      |
//! | 5      | ARIMA, order by AIC | month before each target | 1      |

use rayon::prelude::*;
use serde::Serialize;

use crate::arima::{arima_forecast, auto_order, fit_arima, ArimaOrder};
use crate::decompose::decompose_additive;
use crate::error::{Error, Result};
use crate::holtwinters::{hw_fit, hw_forecast};
use crate::series::{CalendarMonth, MonthlySeries};

const YEAR: usize = 12;
const TRAIN_LEN: usize = 5 * YEAR;
const FULL_LEN: usize = 6 * YEAR;
const TREND_TARGETS: usize = 6;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ForecastRecord {
    pub month: CalendarMonth,
    pub actual: f64,
    pub forecast: f64,
    pub signed_pct_error: f64,
}

impl ForecastRecord {
    pub fn new(month: CalendarMonth, actual: f64, forecast: f64) -> Result<Self> {
        Ok(Self {
            month,
            actual,
            forecast,
            signed_pct_error: pct_error(actual, forecast)?,
        })
    }
}

/// Statistics of `|signed_pct_error|`; the SD uses the `n - 1` denominator.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct MethodSummary {
    pub min_abs: f64,
    pub max_abs: f64,
    pub mean_abs: f64,
    pub sd_abs: f64,
}

/// One row of the trend-component forecast (method 3).
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct TrendForecastRow {
    pub month: CalendarMonth,
    pub actual_trend: f64,
    pub actual_seasonal: f64,
    pub forecast_trend: f64,
    pub past_seasonal: f64,
    /// `actual` = actual trend + seasonal, `forecast` = forecast trend + past seasonal.
    pub record: ForecastRecord,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct StructuralRow {
    pub month: CalendarMonth,
    pub trend_a: f64,
    pub seasonal_a: f64,
    pub sum_a: f64,
    pub trend_b: f64,
    pub seasonal_b: f64,
    pub sum_b: f64,
    pub pct_variation: f64,
}

pub fn pct_error(actual: f64, forecast: f64) -> Result<f64> {
    if actual == 0.0 {
        return Err(Error::DivisionByZero(
            "percentage error against a zero actual".into(),
        ));
    }
    Ok((forecast - actual) / actual * 100.0)
}

pub fn summarize(records: &[ForecastRecord]) -> Result<MethodSummary> {
    if records.len() < 2 {
        return Err(Error::Argument(format!(
            "summary needs at least 2 records, got {}",
            records.len()
        )));
    }
    let abs: Vec<f64> = records.iter().map(|r| r.signed_pct_error.abs()).collect();
    let n = abs.len() as f64;
    let mean = abs.iter().sum::<f64>() / n;
    let var = abs.iter().map(|a| (a - mean).powi(2)).sum::<f64>() / (n - 1.0);
    Ok(MethodSummary {
        min_abs: abs.iter().copied().fold(f64::INFINITY, f64::min),
        max_abs: abs.iter().copied().fold(f64::NEG_INFINITY, f64::max),
        mean_abs: mean,
        sd_abs: var.sqrt(),
    })
}

/// Years 1-5 and year 6 of `full`.
fn split(full: &MonthlySeries) -> Result<(MonthlySeries, MonthlySeries)> {
    if full.len() < FULL_LEN {
        return Err(Error::InsufficientData(format!(
            "evaluation needs {FULL_LEN} months (six years), got {}",
            full.len()
        )));
    }
    let train = full.head(TRAIN_LEN)?;
    let test = full.slice(full.month_at(TRAIN_LEN)?, full.month_at(FULL_LEN - 1)?)?;
    Ok((train, test))
}

fn pair(forecast: &MonthlySeries, actual: &MonthlySeries) -> Result<Vec<ForecastRecord>> {
    forecast
        .iter()
        .map(|(month, f)| {
            let a = actual
                .get(month)
                .ok_or_else(|| Error::Range(format!("no actual value for {month}")))?;
            ForecastRecord::new(month, a, f)
        })
        .collect()
}

/// Rolling origin: for each target month in year 6, fit on everything before
/// it and forecast one step.
fn rolling_one_step<F>(full: &MonthlySeries, forecast_next: F) -> Result<Vec<ForecastRecord>>
where
    F: Fn(&MonthlySeries) -> Result<f64> + Sync,
{
    let (_, test) = split(full)?;
    (0..YEAR)
        .into_par_iter()
        .map(|k| {
            let history = full.head(TRAIN_LEN + k)?;
            let f = forecast_next(&history)?;
            ForecastRecord::new(test.month_at(k)?, test.values()[k], f)
        })
        .collect()
}

pub fn run_method1(full: &MonthlySeries) -> Result<Vec<ForecastRecord>> {
    let (train, test) = split(full)?;
    let model = hw_fit(&train)?;
    pair(&hw_forecast(&model, YEAR)?, &test)
}

pub fn run_method2(full: &MonthlySeries) -> Result<Vec<ForecastRecord>> {
    rolling_one_step(full, |history| {
        Ok(hw_forecast(&hw_fit(history)?, 1)?.values()[0])
    })
}

pub fn run_method3(full: &MonthlySeries) -> Result<Vec<TrendForecastRow>> {
    let (train, test) = split(full)?;
    let past = decompose_additive(&train)?;
    let trend = past.trend.present_run()?;
    let model = hw_fit(&trend)?;

    let targets = test.head(TREND_TARGETS)?;
    let horizon = trend.end().months_until(targets.end()) as usize;
    let forecast = hw_forecast(&model, horizon)?;

    let actual = decompose_additive(&full.head(FULL_LEN)?)?;
    targets
        .iter()
        .map(|(month, _)| {
            let actual_trend = actual
                .trend
                .get(month)
                .ok_or_else(|| Error::InsufficientData(format!("no trend value at {month}")))?;
            let actual_seasonal = actual.seasonal_indices[month.month0()];
            let forecast_trend = forecast.get(month).expect("horizon reaches every target");
            let past_seasonal = past.seasonal_indices[month.month0()];
            Ok(TrendForecastRow {
                month,
                actual_trend,
                actual_seasonal,
                forecast_trend,
                past_seasonal,
                record: ForecastRecord::new(
                    month,
                    actual_trend + actual_seasonal,
                    forecast_trend + past_seasonal,
                )?,
            })
        })
        .collect()
}

/// Fixed origin ARIMA; also returns the selected order.
pub fn run_method4_with_order(full: &MonthlySeries) -> Result<(ArimaOrder, Vec<ForecastRecord>)> {
    let (train, test) = split(full)?;
    let order = auto_order(&train)?;
    let model = fit_arima(&train, order)?;
    Ok((order, pair(&arima_forecast(&model, YEAR)?, &test)?))
}

pub fn run_method4(full: &MonthlySeries) -> Result<Vec<ForecastRecord>> {
    run_method4_with_order(full).map(|(_, r)| r)
}

pub fn run_method5(full: &MonthlySeries) -> Result<Vec<ForecastRecord>> {
    rolling_one_step(full, |history| {
        let model = fit_arima(history, auto_order(history)?)?;
        Ok(arima_forecast(&model, 1)?.values()[0])
    })
}

/// Compares trend + seasonal of two decompositions on the months where both
/// have a trend value.
pub fn structural_comparison(
    window_a: &MonthlySeries,
    window_b: &MonthlySeries,
) -> Result<Vec<StructuralRow>> {
    let a = decompose_additive(window_a)?;
    let b = decompose_additive(window_b)?;
    let mut rows = Vec::new();
    for (month, trend_a) in a.trend.iter() {
        let (Some(trend_a), Some(trend_b)) = (trend_a, b.trend.get(month)) else {
            continue;
        };
        let seasonal_a = a.seasonal_indices[month.month0()];
        let seasonal_b = b.seasonal_indices[month.month0()];
        let sum_a = trend_a + seasonal_a;
        let sum_b = trend_b + seasonal_b;
        rows.push(StructuralRow {
            month,
            trend_a,
            seasonal_a,
            sum_a,
            trend_b,
            seasonal_b,
            sum_b,
            pct_variation: pct_error(sum_a, sum_b)?,
        });
    }
    if rows.is_empty() {
        return Err(Error::InsufficientData(
            "windows share no month with trend values".into(),
        ));
    }
    Ok(rows)
}

pub fn run_method6(full: &MonthlySeries) -> Result<Vec<StructuralRow>> {
    split(full)?;
    let first = full.head(TRAIN_LEN)?;
    let second = full.slice(full.month_at(YEAR)?, full.month_at(FULL_LEN - 1)?)?;
    structural_comparison(&first, &second)
}

/// Every protocol on one series.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FullEvaluation {
    pub method1: Vec<ForecastRecord>,
    pub method2: Vec<ForecastRecord>,
    pub method3: Vec<TrendForecastRow>,
    pub method4_order: ArimaOrder,
    pub method4: Vec<ForecastRecord>,
    pub method5: Vec<ForecastRecord>,
    pub method6: Vec<StructuralRow>,
}

impl FullEvaluation {
    pub fn run(full: &MonthlySeries) -> Result<Self> {
        let (method4_order, method4) = run_method4_with_order(full)?;
        Ok(Self {
            method1: run_method1(full)?,
            method2: run_method2(full)?,
            method3: run_method3(full)?,
            method4_order,
            method4,
            method5: run_method5(full)?,
            method6: run_method6(full)?,
        })
    }

    pub fn method3_records(&self) -> Vec<ForecastRecord> {
        self.method3.iter().map(|r| r.record).collect()
    }

    /// Summaries of methods 1-5 in method order.
    pub fn summaries(&self) -> Result<[MethodSummary; 5]> {
        Ok([
            summarize(&self.method1)?,
            summarize(&self.method2)?,
            summarize(&self.method3_records())?,
            summarize(&self.method4)?,
            summarize(&self.method5)?,
        ])
    }
}
