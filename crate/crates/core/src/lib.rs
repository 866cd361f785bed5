//! Array search algorithms with deterministic probe instrumentation.
//!
//! Three element searches are provided over a [`Dataset`]: a left-to-right
//! [`linear_search`], a midpoint [`binary_search`] for sorted data, and a
//! bidirectional [`two_pointer_find_first`] scan whose cursors start at both
//! ends and converge on the middle. [`two_pointer_find_all`] collects every
//! matching position with the same scan, and [`two_pointer_pair_sum`] finds two
//! positions of a sorted dataset whose values add up to a target.
//!
//! Every search reports a probe count: one loop iteration of the algorithm. For
//! the two-pointer scan one probe covers both cursor inspections, so finding
//! the 9th of ten elements takes two probes. Individual equality and ordering
//! tests are tracked separately as `element_comparisons`.
//!
//! The [`datagen`] module writes and reads the line-oriented `dataset.txt`
//! format, and [`harness`] / [`report`] run and render timed comparisons.
//!
//! ```
//! use tpsearch::{linear_search, two_pointer_find_first, Dataset};
//!
//! let data = Dataset::assert_sorted((1..=10).map(|v| v * 10).collect()).unwrap();
//! assert_eq!(linear_search(&data, 90).probes, 9);
//! assert_eq!(two_pointer_find_first(&data, 90).probes, 2);
//! ```

pub mod datagen;
mod dataset;
mod error;
pub mod harness;
pub mod report;
mod search;

pub use datagen::{generate, generate_random, generate_sorted, read_dataset, write_dataset, GenSpec};
pub use dataset::{Dataset, Element};
pub use error::{Error, Result};
pub use harness::{
    run_suite, run_suite_on, run_trial, Algorithm, BenchConfig, DatasetSource, Measure, Observation, OutcomeSummary,
    TrialResult,
};
pub use report::{render_report, AlgorithmRow, DatasetSummary, Environment, Format, Report, TimingStats, CSV_HEADER};
pub use search::{
    binary_search, linear_search, two_pointer_find_all, two_pointer_find_first, two_pointer_pair_sum, Cursor,
    MultiOutcome, PairSumOutcome, SearchOutcome, Status,
};
