//! Dataset generation and the `dataset.txt` file format.
//!
//! The format is one ASCII decimal integer per line (optional leading `-`),
//! every line terminated by a single LF. No header, no BOM, no blank lines.
//! An empty dataset is an empty file.
//!
//! Random datasets are drawn from a ChaCha8 stream seeded with the 64-bit seed
//! (`ChaCha8Rng::seed_from_u64`), sampling each value uniformly from the
//! inclusive range with `Rng::random_range`. Both are pinned to the
//! `rand 0.9` / `rand_chacha 0.9` releases; the same seed yields the same
//! sequence on every platform.

use std::fmt;
use std::fs::File;
use std::io::{BufRead, BufReader, BufWriter, Write};
use std::path::Path;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::dataset::{check_sorted, Dataset, Element};
use crate::error::{Error, Result};

/// Parameters for a generated dataset.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GenSpec {
    /// `1, 2, ..., count`.
    Sorted { count: usize },
    /// `count` values drawn uniformly from `lo..=hi`.
    Random { count: usize, seed: u64, lo: Element, hi: Element },
}

impl GenSpec {
    pub fn sorted(count: usize) -> Self {
        GenSpec::Sorted { count }
    }

    /// Random values over the default range `1..=count`.
    pub fn random(count: usize, seed: u64) -> Self {
        GenSpec::Random { count, seed, lo: 1, hi: count as Element }
    }

    pub fn with_range(self, lo: Element, hi: Element) -> Self {
        match self {
            GenSpec::Random { count, seed, .. } => GenSpec::Random { count, seed, lo, hi },
            sorted => sorted,
        }
    }

    pub fn count(&self) -> usize {
        match *self {
            GenSpec::Sorted { count } | GenSpec::Random { count, .. } => count,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.count() == 0 {
            return Err(Error::InvalidSpec("count must be at least 1".into()));
        }
        if let GenSpec::Random { lo, hi, .. } = *self {
            if lo > hi {
                return Err(Error::InvalidSpec(format!("empty value range {lo}..={hi}")));
            }
        }
        Ok(())
    }
}

/// Accepts `sorted:COUNT`, `random:COUNT:SEED` and `random:COUNT:SEED:LO:HI`.
impl FromStr for GenSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidSpec(format!("{s:?} (expected sorted:COUNT or random:COUNT:SEED[:LO:HI])"));
        let parts: Vec<&str> = s.split(':').collect();
        let count = parts.get(1).and_then(|c| c.parse::<usize>().ok()).ok_or_else(bad)?;
        let spec = match (parts[0], parts.len()) {
            ("sorted", 2) => GenSpec::sorted(count),
            ("random", 3) => GenSpec::random(count, parts[2].parse().map_err(|_| bad())?),
            ("random", 5) => {
                let seed = parts[2].parse().map_err(|_| bad())?;
                let lo = parts[3].parse().map_err(|_| bad())?;
                let hi = parts[4].parse().map_err(|_| bad())?;
                GenSpec::random(count, seed).with_range(lo, hi)
            }
            _ => return Err(bad()),
        };
        spec.validate()?;
        Ok(spec)
    }
}

impl fmt::Display for GenSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            GenSpec::Sorted { count } => write!(f, "sorted:{count}"),
            GenSpec::Random { count, seed, lo, hi } => write!(f, "random:{count}:{seed}:{lo}:{hi}"),
        }
    }
}

pub fn generate(spec: &GenSpec) -> Result<Dataset> {
    match *spec {
        GenSpec::Sorted { count } => generate_sorted(count),
        GenSpec::Random { count, seed, lo, hi } => generate_random(count, seed, lo, hi),
    }
}

/// `[1, 2, ..., count]`, flagged sorted.
pub fn generate_sorted(count: usize) -> Result<Dataset> {
    GenSpec::sorted(count).validate()?;
    Ok(Dataset::sorted_unchecked((1..=count as Element).collect()))
}

/// `count` uniform draws from `lo..=hi`; never flagged sorted.
pub fn generate_random(count: usize, seed: u64, lo: Element, hi: Element) -> Result<Dataset> {
    GenSpec::Random { count, seed, lo, hi }.validate()?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    Ok(Dataset::new((0..count).map(|_| rng.random_range(lo..=hi)).collect()))
}

pub fn write_dataset(data: &Dataset, path: impl AsRef<Path>) -> Result<()> {
    let path = path.as_ref();
    let io_err = |source| Error::Io { path: path.to_owned(), source };
    let mut out = BufWriter::new(File::create(path).map_err(io_err)?);
    for v in data.items() {
        writeln!(out, "{v}").map_err(io_err)?;
    }
    out.flush().map_err(io_err)
}

/// Reads a dataset file. With `assert_sorted` the values are checked for
/// non-decreasing order and the result is flagged sorted.
pub fn read_dataset(path: impl AsRef<Path>, assert_sorted: bool) -> Result<Dataset> {
    let path = path.as_ref();
    let io_err = |source| Error::Io { path: path.to_owned(), source };
    let reader = BufReader::new(File::open(path).map_err(io_err)?);
    let mut items = Vec::new();
    for (n, line) in reader.split(b'\n').enumerate() {
        let line = line.map_err(io_err)?;
        let parsed = std::str::from_utf8(&line).ok().and_then(|s| s.parse::<Element>().ok());
        match parsed {
            // `str::parse` also admits a leading '+', which the format does not.
            Some(v) if line.first() != Some(&b'+') => items.push(v),
            _ => {
                return Err(Error::Parse {
                    path: path.to_owned(),
                    line: n + 1,
                    content: String::from_utf8_lossy(&line).into_owned(),
                })
            }
        }
    }
    if assert_sorted {
        check_sorted(&items)?;
        Ok(Dataset::sorted_unchecked(items))
    } else {
        Ok(Dataset::new(items))
    }
}
