//! Command-line front end.
//!
//! Every command renders its whole report into memory first, so a failure
//! never leaves partial output behind.

use std::path::{Path, PathBuf};
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::ser::{SerializeMap, SerializeSeq};
use serde::{Serialize, Serializer};

use crate::arima::{arima_forecast, auto_order, fit_arima};
use crate::decompose::decompose_additive;
use crate::error::{Error, Result};
use crate::evaluation::{
    run_method1, run_method2, run_method3, run_method4_with_order, run_method5, run_method6,
    ForecastRecord, FullEvaluation, StructuralRow, TrendForecastRow,
};
use crate::holtwinters::{hw_fit, hw_forecast};
use crate::ingest::{aggregate_monthly, golden_auto_series, load_daily_csv, read_monthly_csv};
use crate::series::{CalendarMonth, MonthlySeries};

#[derive(Debug, Parser)]
#[command(
    name = "sectorcast",
    version,
    about = "Decompose and forecast monthly index series"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Aggregate a daily `date,value` CSV into monthly means.
    Ingest {
        #[arg(long)]
        input: PathBuf,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Split a monthly series into trend, seasonal and random components.
    Decompose {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Fit a model up to `--train-end` and forecast `--horizon` months.
    Forecast {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, value_enum)]
        engine: Engine,
        /// Last training month, YYYY-MM. Defaults to the end of the input.
        #[arg(long)]
        train_end: Option<CalendarMonth>,
        #[arg(long, default_value_t = 12, value_parser = clap::value_parser!(u32).range(1..))]
        horizon: u32,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Run an evaluation method (1-6) or all of them over a six-year series.
    Evaluate {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long)]
        method: MethodSelector,
        #[command(flatten)]
        output: OutputArgs,
    },
}

#[derive(Debug, Clone, Args)]
#[group(required = true, multiple = false)]
pub struct InputArgs {
    /// Monthly `year,month,value` or daily `date,value` CSV.
    #[arg(long)]
    pub input: Option<PathBuf>,
    /// Use the embedded 2010-2015 auto index aggregates.
    #[arg(long)]
    pub golden: bool,
}

#[derive(Debug, Clone, Args)]
pub struct OutputArgs {
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
    /// Print levels as integers and percentages with two decimals.
    #[arg(long)]
    pub round: bool,
    /// Write to this file instead of standard output.
    #[arg(long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Engine {
    Hw,
    Arima,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MethodSelector {
    One(u8),
    All,
}

impl FromStr for MethodSelector {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "all" => Ok(Self::All),
            _ => match s.parse::<u8>() {
                Ok(n @ 1..=6) => Ok(Self::One(n)),
                _ => Err(format!("expected 1..6 or `all`, got `{s}`")),
            },
        }
    }
}

impl Command {
    pub fn output(&self) -> &OutputArgs {
        match self {
            Command::Ingest { output, .. }
            | Command::Decompose { output, .. }
            | Command::Forecast { output, .. }
            | Command::Evaluate { output, .. } => output,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Cell {
    Blank,
    Int(i64),
    Text(String),
    Level(f64),
    Pct(f64),
}

impl Cell {
    fn level(v: Option<f64>) -> Self {
        v.map_or(Cell::Blank, Cell::Level)
    }

    fn csv(&self, round: bool) -> String {
        match self {
            Cell::Blank => String::new(),
            Cell::Int(i) => i.to_string(),
            Cell::Text(s) => s.clone(),
            Cell::Level(v) if round => format!("{:.0}", v.round()),
            Cell::Pct(v) if round => format!("{v:.2}"),
            Cell::Level(v) | Cell::Pct(v) => format!("{v:.6}"),
        }
    }
}

/// A column-major view is used for JSON, a row-major one for CSV.
#[derive(Debug, Clone, PartialEq)]
pub struct Table {
    pub columns: Vec<&'static str>,
    pub rows: Vec<Vec<Cell>>,
}

impl Table {
    fn new(columns: &[&'static str]) -> Self {
        Self {
            columns: columns.to_vec(),
            rows: Vec::new(),
        }
    }

    fn push(&mut self, row: Vec<Cell>) {
        debug_assert_eq!(row.len(), self.columns.len());
        self.rows.push(row);
    }

    fn write_csv(&self, out: &mut Vec<u8>, round: bool) -> Result<()> {
        let mut w = csv::Writer::from_writer(out);
        let io = |e: csv::Error| Error::Io(e.to_string());
        w.write_record(&self.columns).map_err(io)?;
        for row in &self.rows {
            w.write_record(row.iter().map(|c| c.csv(round)))
                .map_err(io)?;
        }
        w.flush()?;
        Ok(())
    }
}

struct JsonTable<'a> {
    table: &'a Table,
    round: bool,
}

struct JsonColumn<'a> {
    table: &'a Table,
    index: usize,
    round: bool,
}

impl Serialize for JsonTable<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(Some(self.table.columns.len()))?;
        for (index, name) in self.table.columns.iter().enumerate() {
            map.serialize_entry(
                name,
                &JsonColumn {
                    table: self.table,
                    index,
                    round: self.round,
                },
            )?;
        }
        map.end()
    }
}

impl Serialize for JsonColumn<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(self.table.rows.len()))?;
        for row in &self.table.rows {
            match &row[self.index] {
                Cell::Blank => seq.serialize_element(&Option::<f64>::None)?,
                Cell::Int(i) => seq.serialize_element(i)?,
                Cell::Text(t) => seq.serialize_element(t)?,
                Cell::Level(v) if self.round => seq.serialize_element(&(v.round() as i64))?,
                Cell::Pct(v) if self.round => {
                    seq.serialize_element(&((v * 100.0).round() / 100.0))?
                }
                Cell::Level(v) | Cell::Pct(v) => seq.serialize_element(v)?,
            }
        }
        seq.end()
    }
}

struct JsonReport<'a> {
    report: &'a Report,
    round: bool,
}

impl Serialize for JsonReport<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(Some(self.report.sections.len()))?;
        for (name, table) in &self.report.sections {
            map.serialize_entry(
                name,
                &JsonTable {
                    table,
                    round: self.round,
                },
            )?;
        }
        map.end()
    }
}

/// One or more named tables.
#[derive(Debug, Clone, PartialEq)]
pub struct Report {
    pub sections: Vec<(String, Table)>,
}

impl Report {
    fn single(name: &str, table: Table) -> Self {
        Self {
            sections: vec![(name.to_string(), table)],
        }
    }

    /// A single-section report renders as a bare table. Multiple sections are
    /// introduced by `# name` lines in CSV and keyed by name in JSON.
    pub fn render(&self, format: Format, round: bool) -> Result<String> {
        let mut out = Vec::new();
        match format {
            Format::Csv => {
                let multi = self.sections.len() > 1;
                for (i, (name, table)) in self.sections.iter().enumerate() {
                    if multi {
                        if i > 0 {
                            out.push(b'\n');
                        }
                        out.extend_from_slice(format!("# {name}\n").as_bytes());
                    }
                    table.write_csv(&mut out, round)?;
                }
            }
            Format::Json => {
                let json = match self.sections.as_slice() {
                    [(_, table)] => serde_json::to_vec_pretty(&JsonTable { table, round }),
                    _ => serde_json::to_vec_pretty(&JsonReport {
                        report: self,
                        round,
                    }),
                };
                out = json.map_err(|e| Error::Io(e.to_string()))?;
                out.push(b'\n');
            }
        }
        String::from_utf8(out).map_err(|e| Error::Io(e.to_string()))
    }
}

fn month_cells(month: CalendarMonth) -> [Cell; 2] {
    [
        Cell::Int(month.year().into()),
        Cell::Int(month.month().into()),
    ]
}

/// Reads a monthly series, or a daily one (recognised by its `date` header)
/// which is then aggregated.
pub fn load_series(path: &Path) -> Result<MonthlySeries> {
    let text =
        std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    let header = text
        .lines()
        .next()
        .unwrap_or("")
        .trim_start_matches('\u{feff}');
    if header.split(',').next().map(str::trim) == Some("date") {
        aggregate_monthly(&load_daily_csv(text.as_bytes())?)
    } else {
        read_monthly_csv(text.as_bytes())
    }
}

fn input_series(input: &InputArgs) -> Result<MonthlySeries> {
    match (&input.input, input.golden) {
        (Some(path), false) => load_series(path),
        (None, true) => Ok(golden_auto_series()),
        _ => Err(Error::Argument(
            "exactly one of --input or --golden is required".into(),
        )),
    }
}

pub fn ingest_report(path: &Path) -> Result<Report> {
    let text =
        std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    let series = aggregate_monthly(&load_daily_csv(text.as_bytes())?)?;
    let mut table = Table::new(&["year", "month", "value"]);
    for (month, v) in series.iter() {
        let [y, m] = month_cells(month);
        table.push(vec![y, m, Cell::Level(v)]);
    }
    Ok(Report::single("monthly", table))
}

pub fn decompose_report(series: &MonthlySeries) -> Result<Report> {
    let d = decompose_additive(series)?;
    let mut table = Table::new(&["year", "month", "aggregate", "trend", "seasonal", "random"]);
    for (k, (month, y)) in series.iter().enumerate() {
        let [yr, m] = month_cells(month);
        table.push(vec![
            yr,
            m,
            Cell::Level(y),
            Cell::level(d.trend.values()[k]),
            Cell::Level(d.seasonal.values()[k]),
            Cell::level(d.random.values()[k]),
        ]);
    }
    Ok(Report::single("decomposition", table))
}

pub fn forecast_report(
    series: &MonthlySeries,
    engine: Engine,
    train_end: Option<CalendarMonth>,
    horizon: usize,
) -> Result<Report> {
    let train_end = train_end.unwrap_or_else(|| series.end());
    let training = series.slice(series.start(), train_end)?;
    let forecasts = match engine {
        Engine::Hw => hw_forecast(&hw_fit(&training)?, horizon)?,
        Engine::Arima => {
            let order = auto_order(&training)?;
            arima_forecast(&fit_arima(&training, order)?, horizon)?
        }
    };
    let with_actuals = forecasts.iter().any(|(m, _)| series.get(m).is_some());
    let columns: &[&str] = if with_actuals {
        &["year", "month", "forecast", "actual", "pct_error"]
    } else {
        &["year", "month", "forecast"]
    };
    let mut table = Table::new(columns);
    for (month, f) in forecasts.iter() {
        let [y, m] = month_cells(month);
        let mut row = vec![y, m, Cell::Level(f)];
        if with_actuals {
            match series.get(month) {
                Some(a) => {
                    let r = ForecastRecord::new(month, a, f)?;
                    row.extend([Cell::Level(a), Cell::Pct(r.signed_pct_error)]);
                }
                None => row.extend([Cell::Blank, Cell::Blank]),
            }
        }
        table.push(row);
    }
    Ok(Report::single("forecast", table))
}

fn records_table(records: &[ForecastRecord]) -> Table {
    let mut table = Table::new(&["year", "month", "actual", "forecast", "pct_error"]);
    for r in records {
        let [y, m] = month_cells(r.month);
        table.push(vec![
            y,
            m,
            Cell::Level(r.actual),
            Cell::Level(r.forecast),
            Cell::Pct(r.signed_pct_error),
        ]);
    }
    table
}

fn trend_table(rows: &[TrendForecastRow]) -> Table {
    let mut table = Table::new(&[
        "year",
        "month",
        "actual_trend",
        "actual_seasonal",
        "actual",
        "forecast_trend",
        "past_seasonal",
        "forecast",
        "pct_error",
    ]);
    for r in rows {
        let [y, m] = month_cells(r.month);
        table.push(vec![
            y,
            m,
            Cell::Level(r.actual_trend),
            Cell::Level(r.actual_seasonal),
            Cell::Level(r.record.actual),
            Cell::Level(r.forecast_trend),
            Cell::Level(r.past_seasonal),
            Cell::Level(r.record.forecast),
            Cell::Pct(r.record.signed_pct_error),
        ]);
    }
    table
}

fn structural_table(rows: &[StructuralRow]) -> Table {
    let mut table = Table::new(&[
        "year",
        "month",
        "trend_a",
        "seasonal_a",
        "sum_a",
        "trend_b",
        "seasonal_b",
        "sum_b",
        "pct_variation",
    ]);
    for r in rows {
        let [y, m] = month_cells(r.month);
        table.push(vec![
            y,
            m,
            Cell::Level(r.trend_a),
            Cell::Level(r.seasonal_a),
            Cell::Level(r.sum_a),
            Cell::Level(r.trend_b),
            Cell::Level(r.seasonal_b),
            Cell::Level(r.sum_b),
            Cell::Pct(r.pct_variation),
        ]);
    }
    table
}

pub fn evaluate_report(series: &MonthlySeries, method: MethodSelector) -> Result<Report> {
    let n = match method {
        MethodSelector::All => return full_report(series),
        MethodSelector::One(n) => n,
    };
    let table = match n {
        1 => records_table(&run_method1(series)?),
        2 => records_table(&run_method2(series)?),
        3 => trend_table(&run_method3(series)?),
        4 => records_table(&run_method4_with_order(series)?.1),
        5 => records_table(&run_method5(series)?),
        6 => structural_table(&run_method6(series)?),
        _ => return Err(Error::Argument(format!("no method {n}"))),
    };
    Ok(Report::single(&format!("method{n}"), table))
}

fn full_report(series: &MonthlySeries) -> Result<Report> {
    let e = FullEvaluation::run(series)?;
    let models = [
        "holt-winters".to_string(),
        "holt-winters one-step".to_string(),
        "holt-winters trend".to_string(),
        format!("arima{}", e.method4_order),
        "arima one-step".to_string(),
    ];
    let mut summary = Table::new(&[
        "method", "model", "min_abs", "max_abs", "mean_abs", "sd_abs",
    ]);
    for (i, (s, model)) in e.summaries()?.iter().zip(models).enumerate() {
        summary.push(vec![
            Cell::Int(i as i64 + 1),
            Cell::Text(model),
            Cell::Pct(s.min_abs),
            Cell::Pct(s.max_abs),
            Cell::Pct(s.mean_abs),
            Cell::Pct(s.sd_abs),
        ]);
    }
    Ok(Report {
        sections: vec![
            ("method1".into(), records_table(&e.method1)),
            ("method2".into(), records_table(&e.method2)),
            ("method3".into(), trend_table(&e.method3)),
            ("method4".into(), records_table(&e.method4)),
            ("method5".into(), records_table(&e.method5)),
            ("method6".into(), structural_table(&e.method6)),
            ("summary".into(), summary),
        ],
    })
}

/// Builds the report for a parsed command line.
pub fn build_report(command: &Command) -> Result<Report> {
    match command {
        Command::Ingest { input, .. } => ingest_report(input),
        Command::Decompose { input, .. } => decompose_report(&input_series(input)?),
        Command::Forecast {
            input,
            engine,
            train_end,
            horizon,
            ..
        } => forecast_report(
            &input_series(input)?,
            *engine,
            *train_end,
            *horizon as usize,
        ),
        Command::Evaluate { input, method, .. } => evaluate_report(&input_series(input)?, *method),
    }
}

/// Renders the report for `cli` and writes it to its destination.
pub fn run(cli: &Cli) -> Result<()> {
    let out = cli.command.output();
    let text = build_report(&cli.command)?.render(out.format, out.round)?;
    match &out.output {
        Some(path) => {
            std::fs::write(path, text).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
        }
        None => {
            use std::io::Write;
            let mut stdout = std::io::stdout().lock();
            stdout.write_all(text.as_bytes())?;
            stdout.flush()?;
            Ok(())
        }
    }
}
