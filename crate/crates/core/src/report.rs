//! Aggregated benchmark results and their text renderings.

use std::fmt::Write as _;
use std::str::FromStr;
use std::time::{SystemTime, UNIX_EPOCH};

use crate::dataset::Element;
use crate::error::{Error, Result};
use crate::harness::{Algorithm, OutcomeSummary};

/// Header of the CSV rendering. One row per algorithm follows.
pub const CSV_HEADER: &str = "algorithm,dataset_size,sorted,target,repetitions,median_ns,mean_ns,min_ns,probes,outcome";

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Report {
    pub environment: Environment,
    pub dataset: DatasetSummary,
    /// One row per configured algorithm, in configuration order.
    pub rows: Vec<AlgorithmRow>,
}

/// Best-effort description of the host a report was produced on.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Environment {
    pub os: String,
    pub memory: String,
    /// Seconds since the Unix epoch.
    pub timestamp: u64,
}

impl Environment {
    pub fn capture() -> Self {
        let os = std::fs::read_to_string("/etc/os-release")
            .ok()
            .and_then(|text| {
                text.lines().find_map(|l| l.strip_prefix("PRETTY_NAME=")).map(|v| v.trim_matches('"').to_owned())
            })
            .unwrap_or_else(|| std::env::consts::OS.to_owned());
        let memory = std::fs::read_to_string("/proc/meminfo")
            .ok()
            .and_then(|text| {
                let kb: u64 = text
                    .lines()
                    .find_map(|l| l.strip_prefix("MemTotal:"))?
                    .trim()
                    .strip_suffix("kB")?
                    .trim()
                    .parse()
                    .ok()?;
                Some(format!("{}GB", (kb + (1 << 19)) >> 20))
            })
            .unwrap_or_else(|| "unknown".to_owned());
        let timestamp = SystemTime::now().duration_since(UNIX_EPOCH).map(|d| d.as_secs()).unwrap_or(0);
        Environment { os: format!("{os} ({})", std::env::consts::ARCH), memory, timestamp }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DatasetSummary {
    pub size: usize,
    pub sorted: bool,
    pub target: Element,
    pub repetitions: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AlgorithmRow {
    pub algorithm: Algorithm,
    /// Absent when only probes were measured.
    pub timing: Option<TimingStats>,
    pub probes: u64,
    pub element_comparisons: u64,
    pub outcome: OutcomeSummary,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TimingStats {
    pub median_ns: u64,
    pub mean_ns: u64,
    pub min_ns: u64,
    pub max_ns: u64,
}

impl TimingStats {
    /// Sorts `samples` in place. The median of an even count is the floored
    /// mean of the two middle samples.
    pub fn from_samples(samples: &mut [u64]) -> Option<Self> {
        if samples.is_empty() {
            return None;
        }
        samples.sort_unstable();
        let n = samples.len();
        let median_ns = if n % 2 == 1 {
            samples[n / 2]
        } else {
            ((u128::from(samples[n / 2 - 1]) + u128::from(samples[n / 2])) / 2) as u64
        };
        let sum: u128 = samples.iter().map(|&s| u128::from(s)).sum();
        Some(TimingStats { median_ns, mean_ns: (sum / n as u128) as u64, min_ns: samples[0], max_ns: samples[n - 1] })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Table,
    Csv,
    Markdown,
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "table" => Ok(Format::Table),
            "csv" => Ok(Format::Csv),
            "markdown" | "md" => Ok(Format::Markdown),
            _ => Err(Error::Config(format!("unknown format {s:?}"))),
        }
    }
}

pub fn render_report(report: &Report, format: Format) -> String {
    match format {
        Format::Table => render_table(report),
        Format::Csv => render_csv(report),
        Format::Markdown => render_markdown(report),
    }
}

fn ms(ns: u64) -> String {
    format!("{:.2}", ns as f64 / 1e6)
}

fn opt(v: Option<u64>) -> String {
    v.map(|v| v.to_string()).unwrap_or_default()
}

fn dash(v: Option<String>) -> String {
    v.unwrap_or_else(|| "-".to_owned())
}

fn short_size(n: usize) -> String {
    match n {
        0 => "0".to_owned(),
        n if n % 1_000_000 == 0 => format!("{}M", n / 1_000_000),
        n if n % 1_000 == 0 => format!("{}K", n / 1_000),
        n => n.to_string(),
    }
}

fn sortedness(sorted: bool) -> &'static str {
    if sorted {
        "sorted"
    } else {
        "unsorted"
    }
}

/// Left-aligned columns separated by two spaces, trailing blanks trimmed.
fn aligned(rows: &[Vec<String>]) -> String {
    let cols = rows.iter().map(Vec::len).max().unwrap_or(0);
    let widths: Vec<usize> =
        (0..cols).map(|c| rows.iter().filter_map(|r| r.get(c)).map(|s| s.chars().count()).max().unwrap_or(0)).collect();
    let mut out = String::new();
    for row in rows {
        let mut line = String::new();
        for (c, cell) in row.iter().enumerate() {
            let _ = write!(line, "{cell:<w$}  ", w = widths[c]);
        }
        out.push_str(line.trim_end());
        out.push('\n');
    }
    out
}

fn render_table(report: &Report) -> String {
    let env = &report.environment;
    let ds = &report.dataset;
    let mut out = format!(
        "Dataset: {} items ({}), target {}, {} repetitions; timings are medians\n\n",
        ds.size,
        sortedness(ds.sorted),
        ds.target,
        ds.repetitions
    );

    let mut header: Vec<String> = ["OS", "RAM", "Data set", "Targeted value"].map(String::from).to_vec();
    let mut cells = vec![env.os.clone(), env.memory.clone(), short_size(ds.size), ds.target.to_string()];
    for row in &report.rows {
        header.push(row.algorithm.title().to_owned());
        cells.push(dash(row.timing.map(|t| format!("{} ms ({} ns)", ms(t.median_ns), t.median_ns))));
    }
    out.push_str(&aligned(&[header, cells]));
    out.push('\n');

    let mut detail = vec![[
        "algorithm",
        "median_ms",
        "median_ns",
        "mean_ns",
        "min_ns",
        "max_ns",
        "probes",
        "comparisons",
        "outcome",
    ]
    .map(String::from)
    .to_vec()];
    for row in &report.rows {
        let t = row.timing;
        detail.push(vec![
            row.algorithm.name().to_owned(),
            dash(t.map(|t| ms(t.median_ns))),
            dash(t.map(|t| t.median_ns.to_string())),
            dash(t.map(|t| t.mean_ns.to_string())),
            dash(t.map(|t| t.min_ns.to_string())),
            dash(t.map(|t| t.max_ns.to_string())),
            row.probes.to_string(),
            row.element_comparisons.to_string(),
            row.outcome.to_string(),
        ]);
    }
    out.push_str(&aligned(&detail));
    let _ = writeln!(out, "\nCaptured at unix time {}", env.timestamp);
    out
}

fn render_csv(report: &Report) -> String {
    let ds = &report.dataset;
    let mut out = String::from(CSV_HEADER);
    out.push('\n');
    for row in &report.rows {
        let t = row.timing;
        let _ = writeln!(
            out,
            "{},{},{},{},{},{},{},{},{},{}",
            row.algorithm.name(),
            ds.size,
            ds.sorted,
            ds.target,
            ds.repetitions,
            opt(t.map(|t| t.median_ns)),
            opt(t.map(|t| t.mean_ns)),
            opt(t.map(|t| t.min_ns)),
            row.probes,
            row.outcome
        );
    }
    out
}

fn render_markdown(report: &Report) -> String {
    let env = &report.environment;
    let ds = &report.dataset;
    let mut out = format!(
        "**Environment:** {}, RAM {}, unix time {}\n\n**Dataset:** {} items ({}), target {}, {} repetitions\n\n",
        env.os,
        env.memory,
        env.timestamp,
        ds.size,
        sortedness(ds.sorted),
        ds.target,
        ds.repetitions
    );
    out.push_str("| Algorithm | Median (ms) | Median (ns) | Mean (ns) | Min (ns) | Probes | Comparisons | Outcome |\n");
    out.push_str("|---|---:|---:|---:|---:|---:|---:|---|\n");
    for row in &report.rows {
        let t = row.timing;
        let _ = writeln!(
            out,
            "| {} | {} | {} | {} | {} | {} | {} | {} |",
            row.algorithm.title(),
            dash(t.map(|t| ms(t.median_ns))),
            dash(t.map(|t| t.median_ns.to_string())),
            dash(t.map(|t| t.mean_ns.to_string())),
            dash(t.map(|t| t.min_ns.to_string())),
            row.probes,
            row.element_comparisons,
            row.outcome
        );
    }
    out
}
