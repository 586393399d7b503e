//! Daily CSV loading, monthly aggregation and the embedded Auto sector dataset.

use std::collections::BTreeMap;
use std::io::{Read, Write};

use chrono::{Datelike, NaiveDate};

use crate::error::{Error, Result};
use crate::series::{CalendarMonth, MonthlySeries};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DailyObservation {
    pub date: NaiveDate,
    pub value: f64,
}

impl DailyObservation {
    pub fn month(&self) -> CalendarMonth {
        CalendarMonth::new(self.date.year(), self.date.month()).expect("chrono month in 1..=12")
    }
}

/// Reads a `date,value` CSV of daily index levels.
///
/// Rows may come in any order; the result is sorted by date. Duplicate dates
/// are rejected.
pub fn load_daily_csv<R: Read>(source: R) -> Result<Vec<DailyObservation>> {
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(true)
        .trim(csv::Trim::All)
        .from_reader(source);

    let headers = reader
        .headers()
        .map_err(|e| csv_parse_error(&e, 1))?
        .clone();
    if headers.len() == 0 || (headers.len() == 1 && headers[0].is_empty()) {
        return Err(Error::Data("empty file".into()));
    }
    if headers.len() != 2 || &headers[0] != "date" || &headers[1] != "value" {
        return Err(Error::Parse {
            line: 1,
            message: format!(
                "expected header `date,value`, got {:?}",
                headers.iter().collect::<Vec<_>>()
            ),
        });
    }

    let mut out = Vec::new();
    for record in reader.records() {
        let record = record.map_err(|e| csv_parse_error(&e, 0))?;
        let line = record.position().map_or(0, |p| p.line() as usize);
        if record.len() != 2 {
            return Err(Error::Parse {
                line,
                message: format!("expected 2 fields, found {}", record.len()),
            });
        }
        let date = NaiveDate::parse_from_str(&record[0], "%Y-%m-%d").map_err(|e| Error::Parse {
            line,
            message: format!("bad date {:?}: {e}", &record[0]),
        })?;
        let value: f64 = record[1].parse().map_err(|_| Error::Parse {
            line,
            message: format!("bad value {:?}", &record[1]),
        })?;
        if !value.is_finite() {
            return Err(Error::Parse {
                line,
                message: format!("non-finite value {:?}", &record[1]),
            });
        }
        out.push(DailyObservation { date, value });
    }

    if out.is_empty() {
        return Err(Error::Data("no observations".into()));
    }
    out.sort_by_key(|o| o.date);
    if let Some(w) = out.windows(2).find(|w| w[0].date == w[1].date) {
        return Err(Error::Data(format!("duplicate date {}", w[0].date)));
    }
    Ok(out)
}

fn csv_parse_error(e: &csv::Error, fallback_line: usize) -> Error {
    Error::Parse {
        line: e.position().map_or(fallback_line, |p| p.line() as usize),
        message: e.to_string(),
    }
}

/// Arithmetic mean of the daily values falling in each calendar month.
///
/// The span runs from the first to the last observed month; partial edge
/// months are kept. An interior month without observations is an error.
pub fn aggregate_monthly(obs: &[DailyObservation]) -> Result<MonthlySeries> {
    let mut buckets: BTreeMap<CalendarMonth, (f64, usize)> = BTreeMap::new();
    for o in obs {
        let slot = buckets.entry(o.month()).or_insert((0.0, 0));
        slot.0 += o.value;
        slot.1 += 1;
    }
    let (&first, _) = buckets
        .first_key_value()
        .ok_or_else(|| Error::Data("no observations to aggregate".into()))?;
    let (&last, _) = buckets.last_key_value().expect("non-empty");

    let span = first.months_until(last) as usize + 1;
    let mut values = Vec::with_capacity(span);
    for k in 0..span {
        let month = first.add_months(k as i64);
        let (sum, count) = buckets.get(&month).ok_or(Error::Gap(month))?;
        values.push(sum / *count as f64);
    }
    MonthlySeries::new(first, values)
}

/// Writes `year,month,value` rows.
pub fn write_monthly_csv<W: Write>(series: &MonthlySeries, mut out: W) -> Result<()> {
    writeln!(out, "year,month,value")?;
    for (month, v) in series.iter() {
        writeln!(out, "{},{},{}", month.year(), month.month(), v)?;
    }
    Ok(())
}

/// Reads `year,month,value` rows into a gap-free series.
pub fn read_monthly_csv<R: Read>(source: R) -> Result<MonthlySeries> {
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(true)
        .trim(csv::Trim::All)
        .from_reader(source);
    let headers = reader
        .headers()
        .map_err(|e| csv_parse_error(&e, 1))?
        .clone();
    if headers.iter().collect::<Vec<_>>() != ["year", "month", "value"] {
        return Err(Error::Parse {
            line: 1,
            message: "expected header `year,month,value`".into(),
        });
    }

    let mut start = None;
    let mut values = Vec::new();
    for record in reader.records() {
        let record = record.map_err(|e| csv_parse_error(&e, 0))?;
        let line = record.position().map_or(0, |p| p.line() as usize);
        let parse_err = |what: &str| Error::Parse {
            line,
            message: format!("bad {what}"),
        };
        if record.len() != 3 {
            return Err(parse_err("field count"));
        }
        let year: i32 = record[0].parse().map_err(|_| parse_err("year"))?;
        let month: u32 = record[1].parse().map_err(|_| parse_err("month"))?;
        let value: f64 = record[2].parse().map_err(|_| parse_err("value"))?;
        let month = CalendarMonth::new(year, month).map_err(|_| parse_err("month"))?;
        let start = *start.get_or_insert(month);
        let expected = start.add_months(values.len() as i64);
        if month != expected {
            return Err(Error::Data(format!(
                "line {line}: expected {expected}, found {month}"
            )));
        }
        values.push(value);
    }
    let start = start.ok_or_else(|| Error::Data("no monthly rows".into()))?;
    MonthlySeries::new(start, values)
}

const AUTO_INDEX_2010_2015: [f64; 72] = [
    7380.0, 6958.0, 7584.0, 7702.0, 7581.0, 8034.0, 8315.0, 8710.0, 9269.0, 9844.0, 10127.0,
    10100.0, 9426.0, 8547.0, 8806.0, 9515.0, 9061.0, 8626.0, 8902.0, 8390.0, 8656.0, 8866.0,
    8771.0, 8359.0, 8576.0, 9883.0, 9979.0, 10363.0, 9568.0, 9154.0, 9215.0, 9394.0, 9841.0,
    10299.0, 10620.0, 11139.0, 11379.0, 10809.0, 10499.0, 10164.0, 11091.0, 10731.0, 10672.0,
    10255.0, 10893.0, 11776.0, 12103.0, 12247.0, 11983.0, 11985.0, 12783.0, 13437.0, 14078.0,
    15118.0, 15688.0, 16418.0, 17798.0, 17700.0, 18712.0, 18752.0, 18907.0, 19565.0, 19397.0,
    19041.0, 18799.0, 18357.0, 18806.0, 18918.0, 17348.0, 17738.0, 18535.0, 18317.0,
];

/// Monthly averages of the Indian Auto sector index, Jan 2010 to Dec 2015.
pub fn golden_auto_series() -> MonthlySeries {
    MonthlySeries::new(
        CalendarMonth::new(2010, 1).expect("valid month"),
        AUTO_INDEX_2010_2015.to_vec(),
    )
    .expect("embedded dataset is finite and non-empty")
}
