//! Decomposition and forecasting of monthly index series.
//!
//! The pipeline: daily levels are averaged per month ([`ingest`]), split into
//! trend, seasonal and random parts ([`decompose`]), and forecast with
//! additive Holt-Winters ([`holtwinters`]) or ARIMA ([`arima`]). The
//! [`evaluation`] module runs the fixed-origin and rolling-origin protocols
//! over a six-year series and summarizes their percentage errors.

pub mod arima;
pub mod cli;
pub mod decompose;
pub mod error;
pub mod evaluation;
pub mod holtwinters;
pub mod ingest;
pub mod optim;
pub mod series;

pub use error::{Error, Result};
pub use series::{CalendarMonth, MonthlySeries, PartialMonthlySeries};
