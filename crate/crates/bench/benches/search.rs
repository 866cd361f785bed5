use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use tpsearch::{binary_search, linear_search, two_pointer_find_all, two_pointer_find_first, two_pointer_pair_sum};
use tpsearch_bench::{reference_dataset, MIRROR_TARGET, NEAR_TARGET};

fn element_search(c: &mut Criterion) {
    let data = reference_dataset();
    let mut group = c.benchmark_group("element_search_1M");
    for target in [NEAR_TARGET, MIRROR_TARGET] {
        group.bench_with_input(BenchmarkId::new("linear", target), &target, |b, &t| {
            b.iter(|| linear_search(black_box(&data), black_box(t)))
        });
        group.bench_with_input(BenchmarkId::new("binary", target), &target, |b, &t| {
            b.iter(|| binary_search(black_box(&data), black_box(t)).unwrap())
        });
        group.bench_with_input(BenchmarkId::new("two-pointer", target), &target, |b, &t| {
            b.iter(|| two_pointer_find_first(black_box(&data), black_box(t)))
        });
    }
    group.finish();
}

fn full_scans(c: &mut Criterion) {
    let data = reference_dataset();
    let mut group = c.benchmark_group("full_scan_1M");
    group.bench_function("two-pointer-all", |b| {
        b.iter(|| two_pointer_find_all(black_box(&data), black_box(NEAR_TARGET)))
    });
    // Unreachable sum: the cursors meet after n - 1 probes.
    group
        .bench_function("pair-sum-miss", |b| b.iter(|| two_pointer_pair_sum(black_box(&data), black_box(-1)).unwrap()));
    group.finish();
}

criterion_group!(benches, element_search, full_scans);
criterion_main!(benches);
