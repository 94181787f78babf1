mod common;

use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use common::{ALARM, CHAIN};

fn qlbn(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qlbn"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let path = dir.join(name);
    fs::write(&path, text).unwrap();
    path.to_str().unwrap().to_string()
}

#[test]
fn infer_classical_prints_occurring_state_first() {
    let dir = tempfile::tempdir().unwrap();
    let net = write(dir.path(), "alarm.json", ALARM);
    let o = qlbn(&[
        "infer", "--network", &net, "--target", "Burglar", "--evidence", "JohnCalls=t",
        "--mode", "classical",
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "Burglar t 0.1333 f 0.8667\n");
}

#[test]
fn infer_quantum_zero_phases_matches_classical() {
    let dir = tempfile::tempdir().unwrap();
    let net = write(dir.path(), "alarm.json", ALARM);
    let o = qlbn(&[
        "infer", "--network", &net, "--target", "Burglar", "--evidence", "JohnCalls=t",
        "--mode", "quantum", "--phases", "zero",
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "Burglar t 0.1333 f 0.8667\n");
}

#[test]
fn infer_quantum_reads_explicit_phase_file() {
    let dir = tempfile::tempdir().unwrap();
    let net = write(dir.path(), "chain.json", CHAIN);
    // Opposite phases on the two terms of each block give |ψ1 − ψ2|².
    let phases = write(
        dir.path(),
        "phases.json",
        r#"[{"outcome":"f","phases":[0.0,3.141592653589793]},
            {"outcome":"t","phases":[0.0,3.141592653589793]}]"#,
    );
    let spec = format!("file:{phases}");
    let o = qlbn(&[
        "infer", "--network", &net, "--target", "B", "--evidence", "C=t", "--mode", "quantum",
        "--phases", &spec,
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let f = ((0.4f64 * 0.8 * 0.5).sqrt() - (0.6f64 * 0.3 * 0.9).sqrt()).powi(2);
    let t = ((0.4f64 * 0.2 * 0.5).sqrt() - (0.6f64 * 0.7 * 0.9).sqrt()).powi(2);
    let expected = format!(
        "B t {} f {}\n",
        qlbn::report::format_probability(t / (f + t)),
        qlbn::report::format_probability(f / (f + t))
    );
    assert_eq!(stdout(&o), expected);
}

#[test]
fn infer_rejects_unknown_state_with_status_one() {
    let dir = tempfile::tempdir().unwrap();
    let net = write(dir.path(), "alarm.json", ALARM);
    let o = qlbn(&["infer", "--network", &net, "--target", "Burglar", "--evidence", "JohnCalls=maybe"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("maybe"));
}

#[test]
fn validate_reports_ok_and_findings() {
    let dir = tempfile::tempdir().unwrap();
    let good = write(dir.path(), "alarm.json", ALARM);
    let o = qlbn(&["validate", &good]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("ok (5 variables, 2 sync pairs)"));

    let bad = write(
        dir.path(),
        "bad.json",
        r#"{"variables":[{"name":"A","states":["f","t"]},{"name":"B","states":["f","t"]}],
            "cpts":[{"child":"A","parents":["B"],"rows":[
                      {"given":{"B":"f"},"dist":{"f":0.5,"t":0.6}},
                      {"given":{"B":"t"},"dist":{"f":0.5,"t":0.5}}]},
                    {"child":"B","parents":["A"],"rows":[
                      {"given":{"A":"f"},"dist":{"f":0.5,"t":0.5}},
                      {"given":{"A":"t"},"dist":{"f":0.5,"t":0.5}}]}]}"#,
    );
    let o = qlbn(&["validate", &bad]);
    assert_eq!(o.status.code(), Some(1));
    let text = stdout(&o);
    assert!(text.contains("2 finding(s)"), "{text}");
    assert!(text.contains("cycle"), "{text}");
    assert!(text.contains("row sum"), "{text}");
}

#[test]
fn validate_reports_syntax_position() {
    let dir = tempfile::tempdir().unwrap();
    let bad = write(dir.path(), "broken.json", "{\n  \"variables\": [,]\n}");
    let o = qlbn(&["validate", &bad]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 2"));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(qlbn(&["infer", "--target", "X"]).status.code(), Some(2));
    assert_eq!(qlbn(&["frobnicate"]).status.code(), Some(2));
    let dir = tempfile::tempdir().unwrap();
    let net = write(dir.path(), "alarm.json", ALARM);
    let o = qlbn(&["infer", "--network", &net, "--target", "Burglar", "--mode", "quantum", "--phases", "wobbly"]);
    assert_eq!(o.status.code(), Some(2));
    assert_eq!(qlbn(&["--help"]).status.code(), Some(0));
}

#[test]
fn seeded_sweep_is_byte_identical() {
    let dir = tempfile::tempdir().unwrap();
    let net = write(dir.path(), "alarm.json", ALARM);
    let args = ["sweep", "--network", &net, "--target", "Burglar", "--evidence", "JohnCalls=t", "--seed", "7", "--samples", "500"];
    let a = qlbn(&args);
    let b = qlbn(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let text = stdout(&a);
    assert!(text.starts_with("target,state,probe_id,probe_kind,value\n"));
    assert!(text.contains(",aligned,"));
    assert!(text.contains(",sync,"));
    assert!(text.contains(",sample,"));

    let c = qlbn(&["sweep", "--network", &net, "--target", "Burglar", "--evidence", "JohnCalls=t", "--seed", "8", "--samples", "500"]);
    assert_ne!(a.stdout, c.stdout);
}

#[test]
fn sweep_summary_and_exhaustive_mode() {
    let dir = tempfile::tempdir().unwrap();
    let net = write(dir.path(), "chain.json", CHAIN);
    let out = dir.path().join("sweep.csv");
    let o = qlbn(&["sweep", "--network", &net, "--target", "C", "--out", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("C (exhaustive,"), "{}", stdout(&o));
    assert!(fs::read_to_string(&out).unwrap().contains(",lattice,"));
}

#[test]
fn report_csv_is_deterministic_and_round_trips() {
    let dir = tempfile::tempdir().unwrap();
    let net = write(dir.path(), "alarm.json", ALARM);
    let csv_a = dir.path().join("a.csv");
    let csv_b = dir.path().join("b.csv");
    let a = qlbn(&["report", "--network", &net, "--out", csv_a.to_str().unwrap()]);
    let b = qlbn(&["report", "--network", &net, "--out", csv_b.to_str().unwrap()]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(fs::read(&csv_a).unwrap(), fs::read(&csv_b).unwrap());

    let table = stdout(&a);
    assert!(table.contains("CLASSICAL"));
    assert!(table.contains("QUANTUM"));
    assert!(table.contains("(none)"));

    let report = qlbn::ComparisonReport::from_csv(fs::File::open(&csv_a).unwrap()).unwrap();
    assert_eq!(report.cells.len(), 30);
}

#[test]
fn report_table_order_flags() {
    let dir = tempfile::tempdir().unwrap();
    let net = write(dir.path(), "alarm.json", ALARM);
    let o = qlbn(&[
        "report", "--network", &net, "--phases", "zero", "--no-prior",
        "--rows", "JohnCalls,MaryCalls,Earthquake,Burglar,Alarm",
        "--columns", "Alarm,Earthquake,Burglar,JohnCalls,MaryCalls",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let table = stdout(&o);
    assert!(!table.contains("(none)"));
    assert!(table.contains("0.1333"));
}
