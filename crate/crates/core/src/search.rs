//! The search algorithms.
//!
//! All indices are 0-based. Probe counts follow one convention throughout:
//! a probe is one iteration of the algorithm's main loop.

use crate::dataset::{Dataset, Element};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Status {
    Found,
    NotFound,
}

/// Which two-pointer cursor made a match.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Cursor {
    /// Starts at index 0 and moves right.
    Left,
    /// Starts at index n - 1 and moves left.
    Right,
}

/// Result of a single-element search.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchOutcome {
    /// Matching position, present iff the target was found.
    pub index: Option<usize>,
    /// Loop iterations executed.
    pub probes: u64,
    /// Individual equality/ordering tests against dataset elements.
    pub element_comparisons: u64,
    /// Set only by the two-pointer scan when it finds the target.
    pub cursor: Option<Cursor>,
}

impl SearchOutcome {
    pub fn status(&self) -> Status {
        if self.index.is_some() {
            Status::Found
        } else {
            Status::NotFound
        }
    }

    pub fn is_found(&self) -> bool {
        self.index.is_some()
    }
}

/// Every position holding the target, in increasing order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiOutcome {
    pub indices: Vec<usize>,
    pub probes: u64,
    pub element_comparisons: u64,
}

impl MultiOutcome {
    pub fn status(&self) -> Status {
        if self.indices.is_empty() {
            Status::NotFound
        } else {
            Status::Found
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PairSumOutcome {
    /// `(i, j)` with `i < j` and `items[i] + items[j] == target_sum`.
    pub pair: Option<(usize, usize)>,
    /// Number of sums evaluated.
    pub probes: u64,
    pub element_comparisons: u64,
}

impl PairSumOutcome {
    pub fn status(&self) -> Status {
        if self.pair.is_some() {
            Status::Found
        } else {
            Status::NotFound
        }
    }
}

/// Scans left to right and stops at the first match.
///
/// Returns the smallest matching index. Probes equal `index + 1` on success
/// and `n` on failure.
pub fn linear_search(data: &Dataset, target: Element) -> SearchOutcome {
    let mut probes = 0;
    for (i, &v) in data.items().iter().enumerate() {
        probes += 1;
        if v == target {
            return SearchOutcome { index: Some(i), probes, element_comparisons: probes, cursor: None };
        }
    }
    SearchOutcome { index: None, probes, element_comparisons: probes, cursor: None }
}

/// Midpoint search over a dataset flagged as sorted.
///
/// The midpoint is `floor((beg + end) / 2)` on the closed interval
/// `[beg, end]`, evaluated without overflow. The loop stops at the first
/// midpoint holding the target, so with duplicates the returned index is not
/// necessarily the first occurrence. A probe is one midpoint inspection; it
/// costs one equality test, plus one ordering test when it misses.
pub fn binary_search(data: &Dataset, target: Element) -> Result<SearchOutcome> {
    if !data.is_sorted() {
        return Err(Error::RequiresSorted { algorithm: "binary search" });
    }
    let items = data.items();
    // Half-open [lo, hi) stands in for the closed [beg, end = hi - 1].
    let (mut lo, mut hi) = (0usize, items.len());
    let mut probes = 0;
    let mut element_comparisons = 0;
    while lo < hi {
        let mid = lo + (hi - 1 - lo) / 2;
        probes += 1;
        element_comparisons += 1;
        if items[mid] == target {
            return Ok(SearchOutcome { index: Some(mid), probes, element_comparisons, cursor: None });
        }
        element_comparisons += 1;
        if items[mid] > target {
            hi = mid;
        } else {
            lo = mid + 1;
        }
    }
    Ok(SearchOutcome { index: None, probes, element_comparisons, cursor: None })
}

/// Walks the two cursors towards each other, calling `visit` once per step
/// with the left index and, unless the cursors coincide, the right index.
/// `visit` returns `true` to stop early. Returns the number of steps taken.
#[inline]
fn converge<F>(n: usize, mut visit: F) -> u64
where
    F: FnMut(usize, Option<usize>) -> bool,
{
    if n == 0 {
        return 0;
    }
    let (mut i, mut j) = (0usize, n - 1);
    let mut steps = 0;
    loop {
        steps += 1;
        let right = (i != j).then_some(j);
        if visit(i, right) || i + 1 >= j {
            return steps;
        }
        i += 1;
        j -= 1;
    }
}

/// Bidirectional scan for one occurrence of `target`.
///
/// Each step inspects `items[i]` and then `items[j]`, so when both cursors see
/// the target in the same step the left (lower) index wins. The middle element
/// of an odd-length dataset is inspected once. Probes count steps, so the
/// result is at most `ceil(n / 2)` and exactly 1 when the target sits at either
/// end.
pub fn two_pointer_find_first(data: &Dataset, target: Element) -> SearchOutcome {
    let items = data.items();
    let mut found = None;
    let mut element_comparisons = 0;
    let probes = converge(items.len(), |i, j| {
        element_comparisons += 1;
        if items[i] == target {
            found = Some((i, Cursor::Left));
            return true;
        }
        if let Some(j) = j {
            element_comparisons += 1;
            if items[j] == target {
                found = Some((j, Cursor::Right));
                return true;
            }
        }
        false
    });
    SearchOutcome { index: found.map(|(k, _)| k), probes, element_comparisons, cursor: found.map(|(_, c)| c) }
}

/// Bidirectional scan that collects every occurrence of `target`.
///
/// The scan always runs to the middle, so probes are `ceil(n / 2)`. Left-cursor
/// matches are discovered in ascending order and right-cursor matches in
/// descending order, with every left index below every right index; the two
/// lists are joined into one ascending sequence.
pub fn two_pointer_find_all(data: &Dataset, target: Element) -> MultiOutcome {
    let items = data.items();
    let mut left = Vec::new();
    let mut right = Vec::new();
    let mut element_comparisons = 0;
    let probes = converge(items.len(), |i, j| {
        element_comparisons += 1;
        if items[i] == target {
            left.push(i);
        }
        if let Some(j) = j {
            element_comparisons += 1;
            if items[j] == target {
                right.push(j);
            }
        }
        false
    });
    left.extend(right.into_iter().rev());
    MultiOutcome { indices: left, probes, element_comparisons }
}

/// Converging-pointer search for `i < j` with `items[i] + items[j] == target_sum`
/// on a dataset flagged as sorted.
///
/// Each probe evaluates one sum: a small sum advances the left cursor, a large
/// one retreats the right cursor. Sums are computed in 128 bits and cannot
/// overflow.
pub fn two_pointer_pair_sum(data: &Dataset, target_sum: Element) -> Result<PairSumOutcome> {
    if !data.is_sorted() {
        return Err(Error::RequiresSorted { algorithm: "pair sum" });
    }
    let items = data.items();
    let target = i128::from(target_sum);
    let mut probes = 0;
    let mut element_comparisons = 0;
    if items.len() >= 2 {
        let (mut i, mut j) = (0usize, items.len() - 1);
        while i < j {
            probes += 1;
            element_comparisons += 1;
            let sum = i128::from(items[i]) + i128::from(items[j]);
            if sum == target {
                return Ok(PairSumOutcome { pair: Some((i, j)), probes, element_comparisons });
            }
            element_comparisons += 1;
            if sum < target {
                i += 1;
            } else {
                j -= 1;
            }
        }
    }
    Ok(PairSumOutcome { pair: None, probes, element_comparisons })
}
