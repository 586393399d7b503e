//! Calendar-anchored monthly series.
//!
//! A [`MonthlySeries`] is a gap-free run of values starting at a
//! [`CalendarMonth`]; value `k` belongs to `start + k` months. A
//! [`PartialMonthlySeries`] has the same layout but allows absent slots,
//! which is how boundary-truncated components (trend, random) are carried.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct CalendarMonth {
    year: i32,
    month: u32,
}

impl CalendarMonth {
    pub fn new(year: i32, month: u32) -> Result<Self> {
        if !(1..=12).contains(&month) {
            return Err(Error::Argument(format!("month {month} not in 1..=12")));
        }
        Ok(Self { year, month })
    }

    pub fn year(self) -> i32 {
        self.year
    }

    pub fn month(self) -> u32 {
        self.month
    }

    /// Zero-based position within the year (January = 0).
    pub fn month0(self) -> usize {
        (self.month - 1) as usize
    }

    pub fn succ(self) -> Self {
        self.add_months(1)
    }

    pub fn add_months(self, n: i64) -> Self {
        let idx = self.ordinal() + n;
        Self {
            year: idx.div_euclid(12) as i32,
            month: idx.rem_euclid(12) as u32 + 1,
        }
    }

    /// Signed number of months from `self` to `other`.
    pub fn months_until(self, other: CalendarMonth) -> i64 {
        other.ordinal() - self.ordinal()
    }

    fn ordinal(self) -> i64 {
        self.year as i64 * 12 + (self.month as i64 - 1)
    }
}

impl fmt::Display for CalendarMonth {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:04}-{:02}", self.year, self.month)
    }
}

impl FromStr for CalendarMonth {
    type Err = Error;

    /// Parses `YYYY-MM`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Argument(format!("expected YYYY-MM, got {s:?}"));
        let (y, m) = s.trim().split_once('-').ok_or_else(bad)?;
        let year: i32 = y.parse().map_err(|_| bad())?;
        let month: u32 = m.parse().map_err(|_| bad())?;
        CalendarMonth::new(year, month)
    }
}

/// Gap-free monthly series of finite values.
#[derive(Debug, Clone, PartialEq)]
pub struct MonthlySeries {
    start: CalendarMonth,
    values: Vec<f64>,
}

impl MonthlySeries {
    pub fn new(start: CalendarMonth, values: Vec<f64>) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::Argument(
                "series must hold at least one value".into(),
            ));
        }
        if let Some(k) = values.iter().position(|v| !v.is_finite()) {
            return Err(Error::Argument(format!(
                "non-finite value at {}",
                start.add_months(k as i64)
            )));
        }
        Ok(Self { start, values })
    }

    pub fn start(&self) -> CalendarMonth {
        self.start
    }

    pub fn end(&self) -> CalendarMonth {
        self.start.add_months(self.values.len() as i64 - 1)
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    /// Always false; kept for API symmetry with collections.
    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn into_values(self) -> Vec<f64> {
        self.values
    }

    pub fn month_at(&self, offset: usize) -> Result<CalendarMonth> {
        if offset >= self.values.len() {
            return Err(Error::Range(format!(
                "offset {offset} outside series of length {}",
                self.values.len()
            )));
        }
        Ok(self.start.add_months(offset as i64))
    }

    pub fn offset_of(&self, month: CalendarMonth) -> Option<usize> {
        let k = self.start.months_until(month);
        (0..self.values.len() as i64)
            .contains(&k)
            .then_some(k as usize)
    }

    pub fn get(&self, month: CalendarMonth) -> Option<f64> {
        self.offset_of(month).map(|k| self.values[k])
    }

    pub fn iter(&self) -> impl Iterator<Item = (CalendarMonth, f64)> + '_ {
        self.values
            .iter()
            .enumerate()
            .map(move |(k, &v)| (self.start.add_months(k as i64), v))
    }

    /// Inclusive sub-series `from ..= to`.
    pub fn slice(&self, from: CalendarMonth, to: CalendarMonth) -> Result<Self> {
        if from > to {
            return Err(Error::Argument(format!(
                "slice start {from} after end {to}"
            )));
        }
        let a = self.offset_of(from).ok_or_else(|| {
            Error::Range(format!("{from} outside {}..{}", self.start, self.end()))
        })?;
        let b = self
            .offset_of(to)
            .ok_or_else(|| Error::Range(format!("{to} outside {}..{}", self.start, self.end())))?;
        Ok(Self {
            start: from,
            values: self.values[a..=b].to_vec(),
        })
    }

    /// Leading `n` values.
    pub fn head(&self, n: usize) -> Result<Self> {
        if n == 0 || n > self.len() {
            return Err(Error::Range(format!(
                "head({n}) of series of length {}",
                self.len()
            )));
        }
        Ok(Self {
            start: self.start,
            values: self.values[..n].to_vec(),
        })
    }

    pub fn map(&self, f: impl Fn(f64) -> f64) -> Result<Self> {
        Self::new(self.start, self.values.iter().map(|&v| f(v)).collect())
    }
}

/// Monthly series whose slots may be absent.
#[derive(Debug, Clone, PartialEq)]
pub struct PartialMonthlySeries {
    start: CalendarMonth,
    values: Vec<Option<f64>>,
}

impl PartialMonthlySeries {
    pub fn new(start: CalendarMonth, values: Vec<Option<f64>>) -> Result<Self> {
        if values.iter().all(Option::is_none) {
            return Err(Error::Argument(
                "partial series needs at least one present value".into(),
            ));
        }
        Ok(Self { start, values })
    }

    pub fn start(&self) -> CalendarMonth {
        self.start
    }

    pub fn end(&self) -> CalendarMonth {
        self.start.add_months(self.values.len() as i64 - 1)
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn values(&self) -> &[Option<f64>] {
        &self.values
    }

    pub fn get(&self, month: CalendarMonth) -> Option<f64> {
        let k = self.start.months_until(month);
        if (0..self.values.len() as i64).contains(&k) {
            self.values[k as usize]
        } else {
            None
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = (CalendarMonth, Option<f64>)> + '_ {
        self.values
            .iter()
            .enumerate()
            .map(move |(k, &v)| (self.start.add_months(k as i64), v))
    }

    /// The contiguous run of present values as a dense series.
    ///
    /// Fails if an absent slot sits between two present ones.
    pub fn present_run(&self) -> Result<MonthlySeries> {
        let first = self.values.iter().position(Option::is_some).unwrap_or(0);
        let last = self.values.iter().rposition(Option::is_some).unwrap_or(0);
        let run: Option<Vec<f64>> = self.values[first..=last].iter().copied().collect();
        let run = run.ok_or_else(|| {
            Error::Data(format!(
                "absent values inside present run starting {}",
                self.start.add_months(first as i64)
            ))
        })?;
        MonthlySeries::new(self.start.add_months(first as i64), run)
    }
}
