//! Fixtures shared by the criterion benchmarks.

use tpsearch::{generate_sorted, Dataset, Element};

/// Size of the reference dataset: the integers `1..=1_000_000`.
pub const REFERENCE_SIZE: usize = 1_000_000;

/// Target in the first half of the reference dataset.
pub const NEAR_TARGET: Element = 31_220;

/// Mirror of [`NEAR_TARGET`]: as far from the right end as `NEAR_TARGET` is
/// from the left.
pub const MIRROR_TARGET: Element = REFERENCE_SIZE as Element - NEAR_TARGET;

pub fn reference_dataset() -> Dataset {
    generate_sorted(REFERENCE_SIZE).expect("non-empty")
}
