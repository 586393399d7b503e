//! Additive Holt-Winters: level, slope and a 12-month additive seasonal.
//!
//! The initial state comes from the first two seasonal cycles: seasonal terms
//! are the classical decomposition indices of those 24 months, and level and
//! slope come from a least-squares line through the 12 centered-moving-average
//! trend values, read off at the last month of the first cycle. Filtering (and
//! the SSE) then starts with the 13th observation.

use crate::decompose::{decompose_additive, PERIOD};
use crate::error::{Error, Result};
use crate::optim::{multistart_minimize, BoundedProblem};
use crate::series::{CalendarMonth, MonthlySeries, PartialMonthlySeries};

/// Months consumed by [`hw_initial_state`].
pub const INIT_WINDOW: usize = 2 * PERIOD;
/// Offset of the first filtered observation.
pub const FILTER_START: usize = PERIOD;
/// Shortest series accepted by [`hw_fit`].
pub const MIN_FIT_LEN: usize = INIT_WINDOW + PERIOD;

const GRID_POINTS: usize = 3;
const FIT_TOL: f64 = 1e-13;
const FIT_MAX_EVALS: usize = 3_000;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HwParams {
    pub alpha: f64,
    pub beta: f64,
    pub gamma: f64,
}

impl HwParams {
    pub fn new(alpha: f64, beta: f64, gamma: f64) -> Result<Self> {
        for (name, v) in [("alpha", alpha), ("beta", beta), ("gamma", gamma)] {
            if !(0.0..=1.0).contains(&v) {
                return Err(Error::Argument(format!("{name} = {v} outside [0, 1]")));
            }
        }
        Ok(Self { alpha, beta, gamma })
    }
}

/// Smoothing state after consuming observations up to `month`.
#[derive(Debug, Clone, PartialEq)]
pub struct HwState {
    pub level: f64,
    pub slope: f64,
    /// Seasonal terms indexed by calendar month, January first.
    pub seasonal: [f64; 12],
    /// Last month folded into this state.
    pub month: CalendarMonth,
}

#[derive(Debug, Clone, PartialEq)]
pub struct HwModel {
    pub params: HwParams,
    pub initial_state: HwState,
    pub final_state: HwState,
    /// One-step-ahead fits; absent over the first cycle.
    pub fitted: PartialMonthlySeries,
    pub sse: f64,
    pub training_span: (CalendarMonth, CalendarMonth),
}

#[derive(Debug, Clone, PartialEq)]
pub struct HwFilterOutput {
    pub fitted: PartialMonthlySeries,
    pub sse: f64,
    pub final_state: HwState,
}

pub fn hw_initial_state(series: &MonthlySeries) -> Result<HwState> {
    if series.len() < INIT_WINDOW {
        return Err(Error::InsufficientData(format!(
            "Holt-Winters initialization needs {INIT_WINDOW} months, got {}",
            series.len()
        )));
    }
    let window = series.head(INIT_WINDOW)?;
    let d = decompose_additive(&window)?;
    let points: Vec<(f64, f64)> = d
        .trend
        .values()
        .iter()
        .enumerate()
        .filter_map(|(k, t)| t.map(|t| (k as f64, t)))
        .collect();
    let (intercept, slope) = least_squares_line(&points);
    let anchor = FILTER_START - 1;
    Ok(HwState {
        level: intercept + slope * anchor as f64,
        slope,
        seasonal: d.seasonal_indices,
        month: series.month_at(anchor)?,
    })
}

fn least_squares_line(points: &[(f64, f64)]) -> (f64, f64) {
    let n = points.len() as f64;
    let mx = points.iter().map(|p| p.0).sum::<f64>() / n;
    let my = points.iter().map(|p| p.1).sum::<f64>() / n;
    let sxy: f64 = points.iter().map(|(x, y)| (x - mx) * (y - my)).sum();
    let sxx: f64 = points.iter().map(|(x, _)| (x - mx).powi(2)).sum();
    let slope = sxy / sxx;
    (my - slope * mx, slope)
}

/// Runs the additive recursions over offsets `FILTER_START..`.
///
/// `init` must describe the state after the observation at offset
/// `FILTER_START - 1`.
pub fn hw_filter(
    series: &MonthlySeries,
    params: HwParams,
    init: &HwState,
) -> Result<HwFilterOutput> {
    let n = series.len();
    if n <= FILTER_START {
        return Err(Error::InsufficientData(format!(
            "filtering needs more than {FILTER_START} months, got {n}"
        )));
    }
    let expected = series.month_at(FILTER_START - 1)?;
    if init.month != expected {
        return Err(Error::Argument(format!(
            "initial state is anchored at {}, expected {expected}",
            init.month
        )));
    }
    let HwParams { alpha, beta, gamma } = params;
    let mut level = init.level;
    let mut slope = init.slope;
    let mut seasonal = init.seasonal;
    let mut fitted = vec![None; n];
    let mut sse = 0.0;
    for (k, (month, y)) in series.iter().enumerate().skip(FILTER_START) {
        let m = month.month0();
        let s = seasonal[m];
        let forecast = level + slope + s;
        fitted[k] = Some(forecast);
        sse += (y - forecast).powi(2);

        let new_level = alpha * (y - s) + (1.0 - alpha) * (level + slope);
        slope = beta * (new_level - level) + (1.0 - beta) * slope;
        level = new_level;
        seasonal[m] = gamma * (y - level) + (1.0 - gamma) * s;
    }
    Ok(HwFilterOutput {
        fitted: PartialMonthlySeries::new(series.start(), fitted)?,
        sse,
        final_state: HwState {
            level,
            slope,
            seasonal,
            month: series.end(),
        },
    })
}

/// Chooses alpha, beta, gamma in `[0, 1]` minimizing the one-step SSE.
pub fn hw_fit(series: &MonthlySeries) -> Result<HwModel> {
    if series.len() < MIN_FIT_LEN {
        return Err(Error::InsufficientData(format!(
            "Holt-Winters fit needs {MIN_FIT_LEN} months, got {}",
            series.len()
        )));
    }
    let init = hw_initial_state(series)?;

    // SSE relative to the centered sum of squares, so the stopping rule does
    // not depend on the units of the series.
    let mean = series.values().iter().sum::<f64>() / series.len() as f64;
    let css: f64 = series.values().iter().map(|v| (v - mean).powi(2)).sum();
    let scale = if css > 0.0 { css } else { 1.0 };

    let objective = |x: &[f64]| {
        let params = HwParams {
            alpha: x[0],
            beta: x[1],
            gamma: x[2],
        };
        match hw_filter(series, params, &init) {
            Ok(out) => out.sse / scale,
            Err(_) => f64::NAN,
        }
    };
    let problem = BoundedProblem::new(vec![0.0; 3], vec![1.0; 3], objective)?;
    let best = multistart_minimize(&problem, GRID_POINTS, FIT_TOL, FIT_MAX_EVALS)?;
    let params = HwParams::new(best.argmin[0], best.argmin[1], best.argmin[2])?;
    let out = hw_filter(series, params, &init)?;
    Ok(HwModel {
        params,
        initial_state: init,
        final_state: out.final_state,
        fitted: out.fitted,
        sse: out.sse,
        training_span: (series.start(), series.end()),
    })
}

/// Extrapolates a state: `level + h * slope + seasonal[month]`.
pub fn hw_forecast_from(state: &HwState, horizon: usize) -> Result<MonthlySeries> {
    if horizon == 0 {
        return Err(Error::Argument(
            "forecast horizon must be at least 1".into(),
        ));
    }
    let values = (1..=horizon)
        .map(|h| {
            let month = state.month.add_months(h as i64);
            state.level + h as f64 * state.slope + state.seasonal[month.month0()]
        })
        .collect();
    MonthlySeries::new(state.month.succ(), values)
}

pub fn hw_forecast(model: &HwModel, horizon: usize) -> Result<MonthlySeries> {
    hw_forecast_from(&model.final_state, horizon)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ingest::golden_auto_series;

    fn m(y: i32, mo: u32) -> CalendarMonth {
        CalendarMonth::new(y, mo).unwrap()
    }

    fn series(values: Vec<f64>) -> MonthlySeries {
        MonthlySeries::new(m(2010, 1), values).unwrap()
    }

    const PATTERN: [f64; 12] = [
        64.0, -5.0, -23.0, 55.0, -65.0, -326.0, -294.0, -420.0, 35.0, 247.0, 429.0, 308.0,
    ];

    fn in_class(n: usize, level: f64, slope: f64) -> MonthlySeries {
        series(
            (0..n)
                .map(|k| level + slope * k as f64 + PATTERN[k % 12])
                .collect(),
        )
    }

    /// Independent straight-line transcription of the additive recursions,
    /// indexing the seasonal buffer by offset rather than calendar month.
    fn oracle_sse(
        y: &[f64],
        a: f64,
        b: f64,
        g: f64,
        level0: f64,
        slope0: f64,
        s0: &[f64; 12],
    ) -> f64 {
        let mut l = level0;
        let mut t = slope0;
        let mut s: Vec<f64> = s0.to_vec();
        let mut sse = 0.0;
        for i in 12..y.len() {
            let si = s[i - 12];
            let e = y[i] - (l + t + si);
            sse += e * e;
            let ln = a * (y[i] - si) + (1.0 - a) * (l + t);
            t = b * (ln - l) + (1.0 - b) * t;
            l = ln;
            s.push(g * (y[i] - l) + (1.0 - g) * si);
        }
        sse
    }

    #[test]
    fn initial_state_of_constant() {
        let st = hw_initial_state(&series(vec![100.0; 30])).unwrap();
        assert!((st.level - 100.0).abs() < 1e-9);
        assert!(st.slope.abs() < 1e-12);
        assert!(st.seasonal.iter().all(|s| s.abs() < 1e-12));
        assert_eq!(st.month, m(2010, 12));
    }

    #[test]
    fn initial_state_of_line() {
        let st = hw_initial_state(&series((0..30).map(|k| 10.0 * k as f64).collect())).unwrap();
        assert!((st.slope - 10.0).abs() < 1e-6);
        assert!((st.level - 110.0).abs() < 1e-6);
    }

    #[test]
    fn initial_state_needs_two_cycles() {
        assert!(matches!(
            hw_initial_state(&series(vec![1.0; 23])),
            Err(Error::InsufficientData(_))
        ));
    }

    #[test]
    fn zero_smoothing_freezes_state() {
        let s = golden_auto_series().head(60).unwrap();
        let init = hw_initial_state(&s).unwrap();
        let out = hw_filter(&s, HwParams::new(0.0, 0.0, 0.0).unwrap(), &init).unwrap();
        for (k, f) in out.fitted.values().iter().enumerate().skip(FILTER_START) {
            let month = s.month_at(k).unwrap();
            let h = (k - FILTER_START + 1) as f64;
            let want = init.level + h * init.slope + init.seasonal[month.month0()];
            assert!((f.unwrap() - want).abs() < 1e-9);
        }
        assert_eq!(out.final_state.seasonal, init.seasonal);
        assert_eq!(out.final_state.slope, init.slope);

        // forecasts continue the same line from the initial anchor
        let elapsed = (s.len() - FILTER_START) as f64;
        let fc = hw_forecast_from(&out.final_state, 24).unwrap();
        for (h, (month, v)) in fc.iter().enumerate() {
            let want = init.level
                + (elapsed + (h + 1) as f64) * init.slope
                + init.seasonal[month.month0()];
            assert!((v - want).abs() < 1e-6, "{v} vs {want}");
        }
    }

    #[test]
    fn full_level_tracking() {
        // deseasonalized series is constant
        let s = series((0..40).map(|k| 500.0 + PATTERN[k % 12]).collect());
        let mut init = hw_initial_state(&s).unwrap();
        init.level += 37.0; // first fit is off, later ones exact
        let out = hw_filter(&s, HwParams::new(1.0, 0.0, 0.0).unwrap(), &init).unwrap();
        let fitted = out.fitted.values();
        assert!((fitted[FILTER_START].unwrap() - s.values()[FILTER_START]).abs() > 1.0);
        for k in FILTER_START + 1..s.len() {
            assert!((fitted[k].unwrap() - s.values()[k]).abs() < 1e-9);
        }
    }

    #[test]
    fn sse_matches_oracle_on_golden_window() {
        let s = golden_auto_series().head(60).unwrap();
        let init = hw_initial_state(&s).unwrap();
        // series starts in January, so calendar index and offset index coincide
        let s0 = init.seasonal;
        for (a, b, g) in [(0.3, 0.1, 0.1), (0.9, 0.05, 1.0), (0.0, 1.0, 0.5)] {
            let out = hw_filter(&s, HwParams::new(a, b, g).unwrap(), &init).unwrap();
            let want = oracle_sse(s.values(), a, b, g, init.level, init.slope, &s0);
            assert!(
                (out.sse - want).abs() <= 1e-6 * want.max(1.0),
                "{} vs {}",
                out.sse,
                want
            );
        }
    }

    #[test]
    fn fit_recovers_noiseless_series() {
        let s = in_class(60, 5000.0, 40.0);
        let model = hw_fit(&s).unwrap();
        let mean = s.values().iter().sum::<f64>() / 60.0;
        let var = s.values().iter().map(|v| (v - mean).powi(2)).sum::<f64>() / 60.0;
        assert!(model.sse < 1e-4 * var, "sse {} var {}", model.sse, var);
        let fc = hw_forecast(&model, 12).unwrap();
        for (h, v) in fc.values().iter().enumerate() {
            let k = 60 + h;
            let truth = 5000.0 + 40.0 * k as f64 + PATTERN[k % 12];
            assert!((v - truth).abs() < 1e-3 * truth);
        }
    }

    #[test]
    fn fit_is_deterministic_and_beats_default_point() {
        let s = golden_auto_series().head(60).unwrap();
        let a = hw_fit(&s).unwrap();
        let b = hw_fit(&s).unwrap();
        assert_eq!(a, b);
        let init = hw_initial_state(&s).unwrap();
        let at_default = hw_filter(&s, HwParams::new(0.3, 0.1, 0.1).unwrap(), &init).unwrap();
        assert!(a.sse <= at_default.sse);
        for start in BoundedProblem::new(vec![0.0; 3], vec![1.0; 3], |_: &[f64]| 0.0)
            .unwrap()
            .grid(3)
        {
            let p = HwParams::new(start[0], start[1], start[2]).unwrap();
            assert!(a.sse <= hw_filter(&s, p, &init).unwrap().sse * (1.0 + 1e-12));
        }
    }

    #[test]
    fn fit_requires_three_cycles() {
        assert!(matches!(
            hw_fit(&series(vec![1.0; 35])),
            Err(Error::InsufficientData(_))
        ));
    }

    #[test]
    fn forecast_examples() {
        let flat = HwState {
            level: 250.0,
            slope: 0.0,
            seasonal: [0.0; 12],
            month: m(2014, 12),
        };
        let fc = hw_forecast_from(&flat, 5).unwrap();
        assert_eq!(fc.start(), m(2015, 1));
        assert!(fc.values().iter().all(|&v| v == 250.0));

        let ramp = HwState {
            level: 100.0,
            slope: 2.0,
            seasonal: [0.0; 12],
            month: m(2014, 12),
        };
        assert_eq!(
            hw_forecast_from(&ramp, 3).unwrap().values(),
            &[102.0, 104.0, 106.0]
        );
        assert!(hw_forecast_from(&ramp, 0).is_err());
    }

    #[test]
    fn forecasts_one_cycle_apart_differ_by_twelve_slopes() {
        let model = hw_fit(&golden_auto_series().head(60).unwrap()).unwrap();
        let fc = hw_forecast(&model, 36).unwrap();
        let twelve = 12.0 * model.final_state.slope;
        for h in 0..24 {
            let d = fc.values()[h + 12] - fc.values()[h];
            assert!((d - twelve).abs() < 1e-8 * fc.values()[h].abs());
        }
    }

    #[test]
    fn golden_january_forecast_near_published() {
        let model = hw_fit(&golden_auto_series().head(60).unwrap()).unwrap();
        let jan = hw_forecast(&model, 12).unwrap().values()[0];
        assert!((jan - 18507.0).abs() / 18507.0 < 0.03, "{jan}");
    }
}
