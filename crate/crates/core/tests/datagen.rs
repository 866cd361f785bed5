use proptest::prelude::*;
use tpsearch::{generate_random, generate_sorted, read_dataset, write_dataset, Dataset};

#[test]
fn million_sorted_values_one_per_line() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("dataset.txt");
    let data = generate_sorted(1_000_000).unwrap();
    write_dataset(&data, &path).unwrap();

    let bytes = std::fs::read(&path).unwrap();
    assert_eq!(bytes.iter().filter(|&&b| b == b'\n').count(), 1_000_000);
    assert_eq!(bytes.last(), Some(&b'\n'));
    assert!(bytes.starts_with(b"1\n2\n3\n"));
    assert!(bytes.ends_with(b"999999\n1000000\n"));

    let back = read_dataset(&path, true).unwrap();
    assert_eq!(back.len(), 1_000_000);
    assert_eq!(back, data);
}

#[test]
fn million_random_values_stay_in_range() {
    let data = generate_random(1_000_000, 2024, 1, 1_000_000).unwrap();
    assert_eq!(data.len(), 1_000_000);
    assert!(data.items().iter().all(|&v| (1..=1_000_000).contains(&v)));
    // both ends of the range are reachable
    assert!(data.items().contains(&1) || data.items().contains(&1_000_000));
}

#[test]
fn seeded_round_trips() {
    let dir = tempfile::tempdir().unwrap();
    for (count, seed) in [(1, 3), (10, 4), (10_000, 5)] {
        let path = dir.path().join(format!("d{count}.txt"));
        let data = generate_random(count, seed, -1_000_000, 1_000_000).unwrap();
        write_dataset(&data, &path).unwrap();
        assert_eq!(read_dataset(&path, false).unwrap(), data);
    }
}

#[test]
fn empty_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("empty.txt");
    write_dataset(&Dataset::new(vec![]), &path).unwrap();
    assert_eq!(std::fs::metadata(&path).unwrap().len(), 0);
    assert!(read_dataset(&path, true).unwrap().is_empty());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn write_then_read_is_identity(items in prop::collection::vec(any::<i64>(), 0..200)) {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("d.txt");
        let data = Dataset::new(items);
        write_dataset(&data, &path).unwrap();
        prop_assert_eq!(read_dataset(&path, false).unwrap(), data);
    }

    #[test]
    fn generated_sorted_passes_check(count in 1usize..5000) {
        let data = generate_sorted(count).unwrap();
        prop_assert!(Dataset::assert_sorted(data.items().to_vec()).is_ok());
        prop_assert_eq!(data.items().last().copied(), Some(count as i64));
    }
}
