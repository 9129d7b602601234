use codynamic::experiment::MeasureSeries;
use codynamic::landscape::{LandscapeSnapshot, MeasureTriple};
use codynamic::output::{measures_table, snapshot_table, Format, MEASURES_HEADER, SNAPSHOT_HEADER};

const SNAPSHOT_GOLDEN: &str = include_str!("golden/snapshot.csv");
const MEASURES_GOLDEN: &str = include_str!("golden/measures.csv");

fn snapshot() -> LandscapeSnapshot {
    LandscapeSnapshot {
        generation: 0,
        x: vec![-1.0, 0.0, 0.5, 1.0],
        f_obj: vec![0.5, 0.0, 0.5, 1.0],
        f_sub_p1: vec![0.0, 0.25, 0.5, 1.0],
        f_sub_p2: vec![1.0, 11.0 / 12.0, 0.1, 0.0],
    }
}

fn series() -> MeasureSeries {
    let run = vec![(
        MeasureTriple { dist: 0.25, kld: 0.125, bhatt: 0.5 },
        MeasureTriple { dist: 1.0, kld: 0.0, bhatt: 0.1 },
    )];
    MeasureSeries::aggregate(&[run]).unwrap()
}

#[test]
fn snapshot_csv_matches_golden() {
    assert_eq!(snapshot_table(&snapshot()).to_csv_string(), SNAPSHOT_GOLDEN);
}

#[test]
fn measures_csv_matches_golden() {
    assert_eq!(measures_table(&series()).to_csv_string(), MEASURES_GOLDEN);
}

#[test]
fn headers_are_pinned() {
    assert_eq!(SNAPSHOT_HEADER.join(","), "x,f_obj,f_sub_p1,f_sub_p2");
    assert_eq!(MEASURES_HEADER.join(","), "generation,population,measure,mean,ci_lo,ci_hi");
}

#[test]
fn floats_round_trip() {
    let text = snapshot_table(&snapshot()).to_csv_string();
    let mut reader = csv::Reader::from_reader(text.as_bytes());
    let rows: Vec<Vec<f64>> = reader
        .records()
        .map(|r| r.unwrap().iter().map(|c| c.parse().unwrap()).collect())
        .collect();
    assert_eq!(rows[1][3], 11.0 / 12.0);
}

#[test]
fn json_mirror_has_the_same_rows() {
    let dir = tempfile::tempdir().unwrap();
    let path = measures_table(&series()).save(dir.path(), "measures", Format::Json).unwrap();
    let v: serde_json::Value = serde_json::from_slice(&std::fs::read(path).unwrap()).unwrap();
    let rows = v.as_array().unwrap();
    assert_eq!(rows.len(), 6);
    assert_eq!(rows[3]["population"], "p2");
    assert_eq!(rows[3]["measure"], "dist");
    assert_eq!(rows[3]["mean"], 1.0);
    assert_eq!(rows[0]["generation"], 0);
}
