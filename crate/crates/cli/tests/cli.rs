use std::process::{Command, Output};
use std::time::Instant;

use braid_chow::export::{SchurTableRecord, StrataRecord};
use braid_chow::moduli::m_series;
use braid_chow::numeric::NumericRecord;
use braid_chow::solver::solve_b;
use braid_chow::symfunc::SymSeriesRecord;
use braid_chow::{homogeneous_h, SymSeries};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_braid-chow")).args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn p_basis_degree_two_is_h2() {
    let out = run(&["table", "--max-n", "2", "--basis", "p"]);
    assert_eq!(out.status.code(), Some(0));
    let recs: Vec<SymSeriesRecord> = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(recs.len(), 1);
    assert_eq!(SymSeries::from_record(&recs[0]).unwrap(), homogeneous_h(2, 2));
}

#[test]
fn json_round_trips_to_solver_output() {
    let out = run(&["table", "--max-n", "4", "--basis", "p", "--format", "json"]);
    let recs: Vec<SymSeriesRecord> = serde_json::from_slice(&out.stdout).unwrap();
    let b = solve_b(&m_series(4).unwrap(), 4).unwrap();
    for rec in &recs {
        let s = SymSeries::from_record(rec).unwrap();
        assert_eq!(s, b.component(rec.n).truncate(rec.n));
        assert_eq!(serde_json::to_string(&s.to_record()).unwrap(), serde_json::to_string(rec).unwrap());
    }
    let out = run(&["table", "--max-n", "4"]);
    let schur: Vec<SchurTableRecord> = serde_json::from_slice(&out.stdout).unwrap();
    for rec in &schur {
        assert_eq!(&SchurTableRecord::new(rec.n, &rec.to_table().unwrap()), rec);
    }
}

#[test]
fn output_is_deterministic() {
    let a = run(&["m-series", "--max-n", "6", "--format", "csv"]);
    let b = run(&["m-series", "--max-n", "6", "--format", "csv"]);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn latex_table_layout() {
    let out = run(&["table", "--max-n", "4", "--format", "latex"]);
    let text = stdout(&out);
    assert!(text.contains("$4$ & $s_4(1 + 3t + t^2) + s_{31}t + s_{22}t$"), "{text}");
}

#[test]
fn numeric_all_routes_agree() {
    let out = run(&["numeric", "--max-n", "5", "--method", "all"]);
    assert_eq!(out.status.code(), Some(0));
    let recs: Vec<NumericRecord> = serde_json::from_slice(&out.stdout).unwrap();
    let five = recs.iter().find(|r| r.n == 5).unwrap();
    assert_eq!(five.hnum, ["1/1", "41/1", "41/1", "1/1"]);
    assert_eq!(five.chi, 84);
}

#[test]
fn numeric_stirling_reaches_twelve() {
    let out = run(&["numeric", "--max-n", "12", "--method", "stirling", "--format", "csv"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).lines().any(|l| l.starts_with("12,")));
}

#[test]
fn strata_census() {
    let out = run(&["strata", "--n", "4"]);
    let rec: StrataRecord = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(rec.total, 32);
    assert_eq!(rec.epoly.unwrap(), ["1/1", "8/1", "1/1"]);
    let out = run(&["strata", "--n", "3", "--count-only"]);
    let rec: StrataRecord = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(rec.total, 4);
    assert!(rec.epoly.is_none());
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(run(&["table", "--max-n", "13"]).status.code(), Some(2));
    assert_eq!(run(&["table", "--max-n", "1"]).status.code(), Some(2));
    assert_eq!(run(&["numeric", "--max-n", "8", "--method", "strata"]).status.code(), Some(2));
    assert_eq!(run(&["strata", "--n", "8"]).status.code(), Some(2));
    assert_eq!(run(&["table", "--format", "xml"]).status.code(), Some(2));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn smallest_verify_is_fast() {
    let start = Instant::now();
    let out = run(&["verify", "--max-n", "2"]);
    assert!(start.elapsed().as_secs_f64() < 1.0);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn verify_six_passes() {
    let out = run(&["verify", "--max-n", "6"]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
    assert!(!stdout(&out).contains("FAIL"));
}

#[test]
fn injected_stirling_fault_is_reported() {
    let out = run(&["verify", "--max-n", "6", "--inject-fault", "stirling-sign"]);
    assert_eq!(out.status.code(), Some(1));
    let text = stdout(&out);
    assert!(text.contains("FAIL  stirling-bell identity"), "{text}");
    assert!(text.contains("first failure: stirling-bell identity"), "{text}");
}

#[test]
fn writes_to_output_file() {
    let path = std::env::temp_dir().join(format!("braid-chow-{}.csv", std::process::id()));
    let out = run(&["numeric", "--max-n", "4", "--format", "csv", "--output", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let text = std::fs::read_to_string(&path).unwrap();
    std::fs::remove_file(&path).unwrap();
    assert!(text.starts_with("n,hnum,chi\n"));
}
