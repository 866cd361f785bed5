//! Timed, repeated search trials and their aggregation into a [`Report`].
//!
//! Trials run sequentially on the calling thread. Each measured run times one
//! search invocation with [`Instant`]; warmup runs execute the same call
//! without being recorded. The dataset is built once per suite and shared by
//! every algorithm, so generation and file I/O never fall inside a timed
//! region.

use std::fmt;
use std::hint::black_box;
use std::path::PathBuf;
use std::str::FromStr;
use std::time::Instant;

use crate::datagen::{generate, read_dataset, GenSpec};
use crate::dataset::{Dataset, Element};
use crate::error::{Error, Result};
use crate::report::{AlgorithmRow, DatasetSummary, Environment, Report, TimingStats};
use crate::search::{binary_search, linear_search, two_pointer_find_all, two_pointer_find_first, two_pointer_pair_sum};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Algorithm {
    Linear,
    Binary,
    TwoPointer,
    TwoPointerAll,
    PairSum,
}

impl Algorithm {
    pub const ALL: [Algorithm; 5] =
        [Algorithm::Linear, Algorithm::Binary, Algorithm::TwoPointer, Algorithm::TwoPointerAll, Algorithm::PairSum];

    /// The three element searches compared by default.
    pub const COMPARED: [Algorithm; 3] = [Algorithm::Linear, Algorithm::Binary, Algorithm::TwoPointer];

    pub fn name(self) -> &'static str {
        match self {
            Algorithm::Linear => "linear",
            Algorithm::Binary => "binary",
            Algorithm::TwoPointer => "two-pointer",
            Algorithm::TwoPointerAll => "two-pointer-all",
            Algorithm::PairSum => "pair-sum",
        }
    }

    /// Column title used by the table renderer.
    pub fn title(self) -> &'static str {
        match self {
            Algorithm::Linear => "Linear Search",
            Algorithm::Binary => "Binary Search",
            Algorithm::TwoPointer => "Two pointer linear Search",
            Algorithm::TwoPointerAll => "Two pointer find-all",
            Algorithm::PairSum => "Two pointer pair sum",
        }
    }

    pub fn requires_sorted(self) -> bool {
        matches!(self, Algorithm::Binary | Algorithm::PairSum)
    }

    /// Runs the algorithm once and summarises the outcome.
    pub fn run(self, data: &Dataset, target: Element) -> Result<Observation> {
        Ok(match self {
            Algorithm::Linear => Observation::single(linear_search(data, target)),
            Algorithm::Binary => Observation::single(binary_search(data, target)?),
            Algorithm::TwoPointer => Observation::single(two_pointer_find_first(data, target)),
            Algorithm::TwoPointerAll => {
                let out = two_pointer_find_all(data, target);
                Observation {
                    probes: out.probes,
                    element_comparisons: out.element_comparisons,
                    outcome: if out.indices.is_empty() {
                        OutcomeSummary::NotFound
                    } else {
                        OutcomeSummary::FoundAll { count: out.indices.len() }
                    },
                }
            }
            Algorithm::PairSum => {
                let out = two_pointer_pair_sum(data, target)?;
                Observation {
                    probes: out.probes,
                    element_comparisons: out.element_comparisons,
                    outcome: match out.pair {
                        Some((i, j)) => OutcomeSummary::FoundPair { i, j },
                        None => OutcomeSummary::NotFound,
                    },
                }
            }
        })
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Algorithm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let normalized = s.trim().replace('_', "-");
        Algorithm::ALL
            .into_iter()
            .find(|a| a.name() == normalized)
            .ok_or_else(|| Error::Config(format!("unknown algorithm {s:?}")))
    }
}

/// Compact, comma-free description of a search result.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutcomeSummary {
    Found { index: usize },
    FoundAll { count: usize },
    FoundPair { i: usize, j: usize },
    NotFound,
}

impl fmt::Display for OutcomeSummary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            OutcomeSummary::Found { index } => write!(f, "found:{index}"),
            OutcomeSummary::FoundAll { count } => write!(f, "found_all:{count}"),
            OutcomeSummary::FoundPair { i, j } => write!(f, "found_pair:{i};{j}"),
            OutcomeSummary::NotFound => f.write_str("not_found"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Observation {
    pub probes: u64,
    pub element_comparisons: u64,
    pub outcome: OutcomeSummary,
}

impl Observation {
    fn single(out: crate::search::SearchOutcome) -> Self {
        Observation {
            probes: out.probes,
            element_comparisons: out.element_comparisons,
            outcome: match out.index {
                Some(index) => OutcomeSummary::Found { index },
                None => OutcomeSummary::NotFound,
            },
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Measure {
    WallClock,
    Probes,
    #[default]
    Both,
}

impl Measure {
    fn timed(self) -> bool {
        self != Measure::Probes
    }
}

impl FromStr for Measure {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "wall-clock" | "wallclock" => Ok(Measure::WallClock),
            "probes" => Ok(Measure::Probes),
            "both" => Ok(Measure::Both),
            _ => Err(Error::Config(format!("unknown measure {s:?}"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DatasetSource {
    /// A `dataset.txt` file; `sorted` asserts (and verifies) ascending order.
    File {
        path: PathBuf,
        sorted: bool,
    },
    Generate(GenSpec),
}

impl DatasetSource {
    pub fn load(&self) -> Result<Dataset> {
        match self {
            DatasetSource::File { path, sorted } => read_dataset(path, *sorted),
            DatasetSource::Generate(spec) => generate(spec),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BenchConfig {
    pub source: DatasetSource,
    pub algorithms: Vec<Algorithm>,
    pub target: Element,
    pub repetitions: usize,
    pub warmup: usize,
    pub measure: Measure,
}

impl BenchConfig {
    pub const DEFAULT_REPETITIONS: usize = 30;
    pub const DEFAULT_WARMUP: usize = 3;

    /// Linear, binary and two-pointer with the default repetition counts.
    pub fn new(source: DatasetSource, target: Element) -> Self {
        BenchConfig {
            source,
            algorithms: Algorithm::COMPARED.to_vec(),
            target,
            repetitions: Self::DEFAULT_REPETITIONS,
            warmup: Self::DEFAULT_WARMUP,
            measure: Measure::default(),
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.repetitions == 0 {
            return Err(Error::Config("repetitions must be at least 1".into()));
        }
        if self.algorithms.is_empty() {
            return Err(Error::Config("no algorithms selected".into()));
        }
        for (k, a) in self.algorithms.iter().enumerate() {
            if self.algorithms[..k].contains(a) {
                return Err(Error::Config(format!("{a} listed more than once")));
            }
        }
        if let DatasetSource::Generate(spec) = &self.source {
            spec.validate()?;
        }
        Ok(())
    }

    fn check_dataset(&self, data: &Dataset) -> Result<()> {
        if let Some(a) = self.algorithms.iter().find(|a| a.requires_sorted() && !data.is_sorted()) {
            return Err(Error::Config(format!("{a} requires a sorted dataset")));
        }
        Ok(())
    }
}

/// One measured repetition.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TrialResult {
    pub algorithm: Algorithm,
    /// Elapsed nanoseconds, absent when only probes are measured.
    pub wall_time_ns: Option<u64>,
    pub probes: u64,
    pub element_comparisons: u64,
    pub outcome: OutcomeSummary,
}

/// Runs `config.warmup` unrecorded and `config.repetitions` recorded searches
/// of `algorithm` over `data`.
pub fn run_trial(config: &BenchConfig, data: &Dataset, algorithm: Algorithm) -> Result<Vec<TrialResult>> {
    if config.repetitions == 0 {
        return Err(Error::Config("repetitions must be at least 1".into()));
    }
    if algorithm.requires_sorted() && !data.is_sorted() {
        return Err(Error::Config(format!("{algorithm} requires a sorted dataset")));
    }
    for _ in 0..config.warmup {
        black_box(algorithm.run(black_box(data), black_box(config.target))?);
    }
    let mut trials = Vec::with_capacity(config.repetitions);
    for _ in 0..config.repetitions {
        let (obs, wall_time_ns) = if config.measure.timed() {
            let start = Instant::now();
            let obs = black_box(algorithm.run(black_box(data), black_box(config.target)));
            let elapsed = start.elapsed();
            (obs?, Some(u64::try_from(elapsed.as_nanos()).unwrap_or(u64::MAX)))
        } else {
            (algorithm.run(data, config.target)?, None)
        };
        if let Some(first) = trials.first().map(|t: &TrialResult| t.probes) {
            if first != obs.probes {
                return Err(Error::NondeterministicProbes { algorithm: algorithm.name(), first, other: obs.probes });
            }
        }
        trials.push(TrialResult {
            algorithm,
            wall_time_ns,
            probes: obs.probes,
            element_comparisons: obs.element_comparisons,
            outcome: obs.outcome,
        });
    }
    Ok(trials)
}

/// Loads the configured dataset once and benchmarks every algorithm on it.
pub fn run_suite(config: &BenchConfig) -> Result<Report> {
    config.validate()?;
    let data = config.source.load()?;
    run_suite_on(config, &data)
}

/// Like [`run_suite`] but over an already-built dataset; `config.source` is
/// only used for validation.
pub fn run_suite_on(config: &BenchConfig, data: &Dataset) -> Result<Report> {
    config.validate()?;
    config.check_dataset(data)?;
    let mut rows = Vec::with_capacity(config.algorithms.len());
    for &algorithm in &config.algorithms {
        let trials = run_trial(config, data, algorithm)?;
        rows.push(aggregate(algorithm, &trials));
    }
    Ok(Report {
        environment: Environment::capture(),
        dataset: DatasetSummary {
            size: data.len(),
            sorted: data.is_sorted(),
            target: config.target,
            repetitions: config.repetitions,
        },
        rows,
    })
}

fn aggregate(algorithm: Algorithm, trials: &[TrialResult]) -> AlgorithmRow {
    let first = trials[0];
    let mut times: Vec<u64> = trials.iter().filter_map(|t| t.wall_time_ns).collect();
    AlgorithmRow {
        algorithm,
        timing: TimingStats::from_samples(&mut times),
        probes: first.probes,
        element_comparisons: first.element_comparisons,
        outcome: first.outcome,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sorted_config(count: usize, target: Element) -> BenchConfig {
        BenchConfig::new(DatasetSource::Generate(GenSpec::sorted(count)), target)
    }

    #[test]
    fn algorithm_names_round_trip() {
        for a in Algorithm::ALL {
            assert_eq!(a.name().parse::<Algorithm>().unwrap(), a);
        }
        assert_eq!("two_pointer".parse::<Algorithm>().unwrap(), Algorithm::TwoPointer);
        assert!("ternary".parse::<Algorithm>().is_err());
    }

    #[test]
    fn single_repetition_without_warmup() {
        let mut cfg = sorted_config(100, 40);
        cfg.repetitions = 1;
        cfg.warmup = 0;
        let trials = run_trial(&cfg, &cfg.source.load().unwrap(), Algorithm::Linear).unwrap();
        assert_eq!(trials.len(), 1);
        assert_eq!(trials[0].outcome, OutcomeSummary::Found { index: 39 });
    }

    #[test]
    fn probes_only_skips_timing() {
        let mut cfg = sorted_config(100, 99);
        cfg.measure = Measure::Probes;
        let report = run_suite(&cfg).unwrap();
        assert!(report.rows.iter().all(|r| r.timing.is_none()));
        assert_eq!(report.rows[2].probes, 2);
    }

    #[test]
    fn config_validation() {
        let mut cfg = sorted_config(10, 1);
        cfg.repetitions = 0;
        assert!(matches!(run_suite(&cfg), Err(Error::Config(_))));

        let mut cfg = sorted_config(10, 1);
        cfg.algorithms = vec![];
        assert!(run_suite(&cfg).is_err());

        let mut cfg = sorted_config(10, 1);
        cfg.algorithms = vec![Algorithm::Linear, Algorithm::Linear];
        assert!(run_suite(&cfg).is_err());

        let cfg = BenchConfig::new(DatasetSource::Generate(GenSpec::random(10, 3)), 1);
        assert!(matches!(run_suite(&cfg), Err(Error::Config(msg)) if msg.contains("binary")));
    }

    #[test]
    fn unsorted_rejected_before_timing() {
        let cfg = sorted_config(10, 1);
        let unsorted = Dataset::new(vec![3, 2, 1]);
        assert!(run_trial(&cfg, &unsorted, Algorithm::Binary).is_err());
        assert!(run_trial(&cfg, &unsorted, Algorithm::PairSum).is_err());
        assert!(run_trial(&cfg, &unsorted, Algorithm::TwoPointer).is_ok());
    }

    #[test]
    fn every_algorithm_once_per_report() {
        let mut cfg = sorted_config(1000, 3);
        cfg.algorithms = Algorithm::ALL.to_vec();
        cfg.repetitions = 5;
        let report = run_suite(&cfg).unwrap();
        let names: Vec<_> = report.rows.iter().map(|r| r.algorithm).collect();
        assert_eq!(names, Algorithm::ALL.to_vec());
        assert_eq!(report.rows[3].outcome, OutcomeSummary::FoundAll { count: 1 });
        assert_eq!(report.rows[4].outcome, OutcomeSummary::FoundPair { i: 0, j: 1 });
        for row in &report.rows {
            let t = row.timing.unwrap();
            assert!(t.min_ns <= t.median_ns && t.median_ns <= t.max_ns);
        }
    }
}
