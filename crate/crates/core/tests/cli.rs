use std::fs;
use std::process::{Command, Output};

use evolutes::report::EnumerativeReport;

fn evolutes(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_evolutes")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn twisted_cubic_text() {
    let o = evolutes(&["curve", "--n", "3", "--d", "3", "--g", "0", "--k0", "0"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    for row in [("envelope", "12"), ("cuspidal_edge", "15"), ("kappa", "16")] {
        let line = text.lines().find(|l| l.starts_with(row.0)).unwrap();
        assert!(line.split_whitespace().any(|w| w == row.1), "{line}");
    }
    assert!(text.contains("status: PASS"));
}

#[test]
fn json_round_trip_is_byte_identical() {
    let o = evolutes(&["hypersurface", "--n", "4", "--d", "2", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let report = EnumerativeReport::from_json(&text).unwrap();
    assert_eq!(report.results[0].engine_degree, 18.into());
    assert_eq!(report.to_json() + "\n", text);
}

#[test]
fn surface_sweep_csv_has_nine_rows() {
    let o = evolutes(&["sweep", "surface", "--n", "3", "--d", "2..10", "--format", "csv"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let mut rows = csv::Reader::from_reader(text.as_bytes());
    let header = rows.headers().unwrap().clone();
    let d = header.iter().position(|h| h == "d").unwrap();
    let env = header.iter().position(|h| h == "envelope_engine").unwrap();
    let records: Vec<csv::StringRecord> = rows.records().map(Result::unwrap).collect();
    assert_eq!(records.len(), 9);
    for r in &records {
        let d: i64 = r[d].parse().unwrap();
        assert_eq!(r[env].parse::<i64>().unwrap(), 2 * d * (d - 1) * (2 * d - 1));
    }
}

#[test]
fn input_errors_exit_two() {
    // Sigma^{1^5} has no Thom polynomial here
    let o = evolutes(&["curve", "--n", "7", "--d", "7"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("see:"));
    assert_eq!(evolutes(&["curve", "--n", "3", "--d", "0"]).status.code(), Some(2));
    assert_eq!(evolutes(&["oracle", "--curve", "x^2 +"]).status.code(), Some(2));
    assert_eq!(evolutes(&[]).status.code(), Some(2));
}

#[test]
fn circle_is_excluded_not_failed() {
    let o = evolutes(&["oracle", "--curve", "x^2 + y^2 - 1", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let r = EnumerativeReport::from_json(&stdout(&o)).unwrap();
    assert!(r.results[0].closed_form.is_none());
    assert!(r.flags.iter().any(|f| f.starts_with("excluded")));
}

#[test]
fn config_file_and_out_path() {
    let dir = tempfile::tempdir().unwrap();
    let config = dir.path().join("run.json");
    let out = dir.path().join("report.json");
    fs::write(&config, r#"{"subcommand": "salmon", "d": 2, "surface": true, "format": "json"}"#).unwrap();
    let o = evolutes(&["--config", config.to_str().unwrap(), "--out", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    let r = EnumerativeReport::from_json(&fs::read_to_string(&out).unwrap()).unwrap();
    for (k, v) in [("evolute_class", "4"), ("ed_degree", "6"), ("umbilics", "12")] {
        assert_eq!(r.values[k], v);
    }
}

#[test]
fn sweep_config_matches_flags() {
    let dir = tempfile::tempdir().unwrap();
    let config = dir.path().join("sweep.json");
    fs::write(
        &config,
        r#"{"subcommand": "sweep", "family": "hypersurface", "n": "2..4", "d": "2..3", "format": "csv"}"#,
    )
    .unwrap();
    let from_file = evolutes(&["--config", config.to_str().unwrap()]);
    let from_flags = evolutes(&["sweep", "hypersurface", "--n", "2..4", "--d", "2..3", "--format", "csv"]);
    assert_eq!(from_file.status.code(), Some(0));
    assert_eq!(stdout(&from_file), stdout(&from_flags));
    assert_eq!(stdout(&from_file).lines().count(), 7);
}

#[test]
fn selftest_passes() {
    let o = evolutes(&["selftest"]);
    let text = stdout(&o);
    assert_eq!(o.status.code(), Some(0), "{text}");
    assert!(text.contains("11/11 criteria passed"));
}
