use std::path::Path;

use vizbound::harness::{sweep, SweepConfig, CSV_COLUMNS};

fn workspace() -> &'static Path {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .parent()
        .unwrap()
        .parent()
        .unwrap()
}

#[test]
fn mini_sweep_matches_golden_csv() {
    let cfg = SweepConfig::from_file(&workspace().join("configs/mini.conf")).unwrap();
    let out = sweep(&cfg).unwrap();
    assert_eq!(out.records.len(), 20);
    let golden = std::fs::read_to_string(
        Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden/mini_sweep.csv"),
    )
    .unwrap();
    assert_eq!(out.csv, golden);
    assert!(!out.falsified());
}

#[test]
fn header_is_documented_column_order() {
    let cfg = SweepConfig::default();
    let out = vizbound::harness::sweep_pairs(&[], &[], &cfg).unwrap();
    let header: Vec<&str> = out.csv.trim_end().split(',').collect();
    assert_eq!(header, CSV_COLUMNS[..CSV_COLUMNS.len() - 1]);
}

#[test]
fn timings_add_trailing_column() {
    let cfg = SweepConfig {
        timings: true,
        ..Default::default()
    };
    let g = vizbound::graph::parse_graph_token("P3").unwrap();
    let out =
        vizbound::harness::sweep_pairs(std::slice::from_ref(&g), std::slice::from_ref(&g), &cfg)
            .unwrap();
    let mut lines = out.csv.lines();
    assert!(lines.next().unwrap().ends_with(",note,wall_ms"));
    assert_eq!(lines.next().unwrap().split(',').count(), CSV_COLUMNS.len());
}
