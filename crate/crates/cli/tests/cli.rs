use std::fs;
use std::process::{Command, Output};

fn opcalc(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_opcalc")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

const FIRST_HARMONIC: &str =
    r#"{"periods":[6.283185307179586,6.283185307179586],"terms":[{"j":1,"k":0,"re":1.0,"im":0.0}]}"#;

#[test]
fn besov_of_first_harmonic_prints_one() {
    let dir = tempfile::tempdir().unwrap();
    let f = dir.path().join("f.json");
    fs::write(&f, FIRST_HARMONIC).unwrap();
    let o = opcalc(&["besov", "--trigpoly", f.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "1");
}

#[test]
fn counterexample_ratios_follow_growth_law() {
    let o = opcalc(&["counterexample", "--N", "4,16,64", "--p", "1,2,4,inf"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let text = stdout(&o);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("family,N,p,epsilon,measured,predicted,bound,verdict"));
    let mut rows = 0;
    for line in lines {
        let cols: Vec<&str> = line.split(',').collect();
        let n: f64 = cols[1].parse().unwrap();
        let p: f64 = if cols[2] == "inf" { f64::INFINITY } else { cols[2].parse().unwrap() };
        let measured: f64 = cols[4].parse().unwrap();
        let law = n.powf(0.5 - 1.0 / p);
        assert!((measured - law).abs() <= 1e-9 * law, "{line}");
        assert_eq!(cols[7], "pass");
        rows += 1;
    }
    assert_eq!(rows, 12);
}

#[test]
fn verify_identity_passes() {
    let o = opcalc(&["verify", "7.1", "--dims", "6", "--trials", "50", "--seed", "7"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let text = stdout(&o);
    assert_eq!(text.lines().count(), 51);
    for line in text.lines().skip(1) {
        let cols: Vec<&str> = line.split(',').collect();
        for c in &cols[4..7] {
            assert!(c.parse::<f64>().unwrap() <= 1e-8, "{line}");
        }
    }
}

#[test]
fn unreachable_tolerance_exits_one() {
    let o = opcalc(&["verify", "10.2", "--dims", "4", "--trials", "20", "--tol", "0"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn usage_errors_exit_two_and_name_flag() {
    let o = opcalc(&["counterexample", "--N", "1"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("--N"));

    let o = opcalc(&["scan", "--p", "-1"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("--p"));

    let o = opcalc(&["verify", "7.4"]);
    assert_eq!(o.status.code(), Some(2));

    let o = opcalc(&["frobnicate"]);
    assert_eq!(o.status.code(), Some(2));

    let o = opcalc(&["besov", "--trigpoly", "/nonexistent/f.json"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("--trigpoly"));
}

#[test]
fn outputs_are_written_and_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("run.json");
    fs::write(&cfg, r#"{"n_list":[3,5],"p_list":[2,"inf"],"seed":11,"trials":6}"#).unwrap();
    let mut outs = Vec::new();
    for k in 0..2 {
        let out = dir.path().join(format!("out{k}"));
        let o = opcalc(&[
            "scan",
            "--family",
            "random-trigpoly",
            "--config",
            cfg.to_str().unwrap(),
            "--out",
            out.to_str().unwrap(),
        ]);
        assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
        let file = fs::read_to_string(out.join("scan-random-trigpoly.csv")).unwrap();
        assert_eq!(file, stdout(&o));
        outs.push(file);
    }
    assert_eq!(outs[0], outs[1]);
    assert_eq!(outs[0].lines().count(), 5);
}

#[test]
fn empty_list_in_config_is_refused() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("run.json");
    fs::write(&cfg, r#"{"n_list":[]}"#).unwrap();
    let o = opcalc(&["counterexample", "--config", cfg.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("--N"));
}

#[test]
fn decompose_and_apply_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.json");
    let f = dir.path().join("f.json");
    fs::write(&a, r#"{"rows":2,"cols":2,"re":[1,0,0,2],"im":[0,0,0,0]}"#).unwrap();
    fs::write(&f, FIRST_HARMONIC).unwrap();
    let o = opcalc(&["decompose", "--matrix", a.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("\"points\""));
    let o = opcalc(&["apply", "--f", f.to_str().unwrap(), "--a", a.to_str().unwrap(), "--b", a.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let v = opcalc::matcore::matrix_from_json(&stdout(&o)).unwrap();
    assert!((v[(0, 0)].re - 1f64.cos()).abs() < 1e-14);
    assert!((v[(1, 1)].im - 2f64.sin()).abs() < 1e-14);
}

#[test]
fn non_hermitian_input_is_an_input_error() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.json");
    fs::write(&a, r#"{"rows":2,"cols":2,"re":[1,1,0,2],"im":[0,0,0,0]}"#).unwrap();
    let o = opcalc(&["decompose", "--matrix", a.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("--matrix"));
}
