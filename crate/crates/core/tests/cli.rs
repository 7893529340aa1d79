//! Golden runs of the command-line interface: exit-code contract, output
//! formats and byte determinism.

use assert_cmd::Command;
use predicates::prelude::*;

fn cmd() -> Command {
    Command::cargo_bin("starlike").unwrap()
}

#[test]
fn classify_preset_examples_are_members() {
    cmd()
        .args([
            "classify", "--preset", "f1", "--class", "SSC", "--r", "0.999", "--m", "256",
        ])
        .assert()
        .success()
        .stdout(predicate::str::contains("\"verdict\": \"holds\""));
    cmd()
        .args(["classify", "--preset", "f2", "--class", "SSC", "--m", "128"])
        .assert()
        .success();
}

#[test]
fn classify_identity_from_coefficient_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("f.json");
    std::fs::write(&path, "[[0.0,0.0],[1.0,0.0]]").unwrap();
    for class in ["S*", "SSC"] {
        cmd()
            .args([
                "classify",
                "--f",
                path.to_str().unwrap(),
                "--class",
                class,
                "--m",
                "128",
            ])
            .assert()
            .success();
    }
    cmd()
        .args([
            "classify",
            "--f",
            path.to_str().unwrap(),
            "--class",
            "S*[a]",
            "--alpha",
            "0.4",
            "--m",
            "128",
        ])
        .assert()
        .success();
}

#[test]
fn classify_counterexample_exits_two() {
    // z Phi(2,6;z) is not strongly starlike of tiny order
    cmd()
        .args([
            "classify", "--preset", "kummer", "--class", "S*[a]", "--alpha", "0.05", "--m", "256",
        ])
        .assert()
        .code(2);
}

#[test]
fn classify_bad_inputs_exit_four() {
    cmd()
        .args(["classify", "--preset", "f1", "--class", "bogus"])
        .assert()
        .code(4);
    cmd()
        .args(["classify", "--preset", "nope", "--class", "SSC"])
        .assert()
        .code(4);
    cmd().args(["classify", "--class", "SSC"]).assert().code(4);
    cmd()
        .args(["classify", "--preset", "f1", "--class", "SSC", "--radii", "0.9,1.5"])
        .assert()
        .code(4);
    cmd()
        .args(["classify", "--preset", "f1", "--class", "SSC", "--r", "0.5", "--radii", "0.9,0.99"])
        .assert()
        .code(4);
    // clap usage errors map to 4 as well
    cmd().args(["classify", "--junkflag"]).assert().code(4);
    cmd().args(["frobnicate"]).assert().code(4);
}

#[test]
fn special_eval_reference_points() {
    cmd()
        .args([
            "special", "eval", "--kind", "kummer", "--a", "2", "--c", "6", "--z", "0",
        ])
        .assert()
        .success()
        .stdout(predicate::str::contains("\"terms_used\": 3"))
        .stdout(predicate::str::contains("1.0"));
    cmd()
        .args([
            "special", "eval", "--kind", "bessel", "--p", "2", "--b", "2", "--c", "6", "--z",
            "0.3+0.1i",
        ])
        .assert()
        .success();
    cmd()
        .args([
            "special", "eval", "--kind", "kummer", "--a", "2", "--c", "6", "--z", "waffle",
        ])
        .assert()
        .code(4);
}

#[test]
fn special_series_coefficients() {
    let output = cmd()
        .args([
            "special", "series", "--kind", "kummer", "--a", "2", "--c", "6", "--order", "4",
        ])
        .output()
        .unwrap();
    assert!(output.status.success());
    let pairs: Vec<[f64; 2]> = serde_json::from_slice(&output.stdout).unwrap();
    assert_eq!(pairs.len(), 5);
    assert_eq!(pairs[0], [1.0, 0.0]);
    assert!((pairs[1][0] - 1.0 / 3.0).abs() < 1e-15);
    assert!((pairs[2][0] - 1.0 / 14.0).abs() < 1e-15);
}

#[test]
fn special_series_round_trips_into_classify() {
    // z * u_p series written by one command is readable by the other
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("u.json");
    let output = cmd()
        .args([
            "special", "series", "--kind", "bessel", "--p", "2", "--b", "2", "--c", "6", "--order",
            "40",
        ])
        .output()
        .unwrap();
    let pairs: Vec<[f64; 2]> = serde_json::from_slice(&output.stdout).unwrap();
    // prepend a zero coefficient: f = z * u
    let mut shifted = vec![[0.0, 0.0]];
    shifted.extend(pairs);
    std::fs::write(&path, serde_json::to_string(&shifted).unwrap()).unwrap();
    cmd()
        .args([
            "classify",
            "--f",
            path.to_str().unwrap(),
            "--class",
            "S*[a]",
            "--alpha",
            "0.9",
            "--m",
            "128",
        ])
        .assert()
        .success();
}

#[test]
fn threshold_values_and_determinism() {
    let run = || {
        cmd()
            .args(["threshold", "--theorem", "3.1", "--alpha", "1"])
            .output()
            .unwrap()
    };
    let first = run();
    assert!(first.status.success());
    let value: serde_json::Value = serde_json::from_slice(&first.stdout).unwrap();
    let analytic = value["analytic"].as_f64().unwrap();
    let gap = value["gap"].as_f64().unwrap();
    assert!((analytic - 1.6949731712249416).abs() < 1e-12);
    assert!(gap <= 1e-4);
    // byte-identical on a second run
    let second = run();
    assert_eq!(first.stdout, second.stdout);
}

#[test]
fn threshold_numeric_only_family() {
    let output = cmd()
        .args(["threshold", "--theorem", "3.2", "--alpha", "0.5"])
        .output()
        .unwrap();
    assert!(output.status.success());
    let value: serde_json::Value = serde_json::from_slice(&output.stdout).unwrap();
    assert!(value["analytic"].is_null());
    assert!(value["brute"].as_f64().unwrap() > 0.0);
    cmd()
        .args(["threshold", "--theorem", "9.9", "--alpha", "0.5"])
        .assert()
        .code(4);
}

#[test]
fn verify_exit_codes_follow_verdict() {
    cmd()
        .args([
            "verify",
            "--theorem",
            "2.1",
            "--preset",
            "kummer",
            "--a",
            "2",
            "--c",
            "6",
            "--alpha",
            "0.45",
            "--samples",
            "256",
        ])
        .assert()
        .success()
        .stdout(predicate::str::contains("\"verdict\": \"holds\""));
    cmd()
        .args([
            "verify",
            "--theorem",
            "2.1",
            "--preset",
            "bessel",
            "--p",
            "2",
            "--b",
            "2",
            "--c",
            "6",
            "--alpha",
            "0.65",
            "--samples",
            "256",
        ])
        .assert()
        .success();
    // below the sharp order the hypothesis margin goes negative
    cmd()
        .args([
            "verify",
            "--theorem",
            "2.1",
            "--preset",
            "kummer",
            "--a",
            "2",
            "--c",
            "6",
            "--alpha",
            "0.3",
            "--samples",
            "256",
        ])
        .assert()
        .code(2);
    cmd()
        .args(["verify", "--theorem", "3.2", "--alpha", "1", "--beta", "4"])
        .assert()
        .success();
    cmd()
        .args([
            "verify",
            "--theorem",
            "3.2",
            "--alpha",
            "1",
            "--beta",
            "3.99",
        ])
        .assert()
        .code(2);
}

#[test]
fn curves_region_golden_first_row() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("car.csv");
    cmd()
        .args([
            "curves",
            "--region",
            "car",
            "--samples",
            "512",
            "--out",
            path.to_str().unwrap(),
        ])
        .assert()
        .success();
    let text = std::fs::read_to_string(&path).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next().unwrap(), "t,u,v");
    let first = lines.next().unwrap();
    let fields: Vec<&str> = first.split(',').collect();
    assert_eq!(fields[0], "-3.14159265359e0");
    let u: f64 = fields[1].parse().unwrap();
    assert!((u - 1.0 / 3.0).abs() < 1e-11);
    assert_eq!(text.lines().count(), 513);
    assert!(!text.contains('\r'));
}

#[test]
fn curves_figures_write_files_and_stay_inside() {
    let dir = tempfile::tempdir().unwrap();
    cmd()
        .args([
            "curves",
            "--figure",
            "fig1",
            "--out",
            dir.path().to_str().unwrap(),
            "--samples",
            "256",
        ])
        .assert()
        .success();
    for name in ["fig1_cardioid.csv", "fig1_q1.csv", "fig1_q2.csv"] {
        assert!(dir.path().join(name).exists(), "{name} missing");
    }
    cmd()
        .args([
            "curves",
            "--figure",
            "fig2",
            "--out",
            dir.path().to_str().unwrap(),
            "--samples",
            "128",
        ])
        .assert()
        .success();
    cmd()
        .args([
            "curves",
            "--figure",
            "fig3",
            "--out",
            dir.path().to_str().unwrap(),
            "--samples",
            "128",
        ])
        .assert()
        .success();
    for name in [
        "fig2_sector.csv",
        "fig2_image.csv",
        "fig3_sector.csv",
        "fig3_image.csv",
    ] {
        assert!(dir.path().join(name).exists(), "{name} missing");
    }
    // determinism: rewriting fig1 produces byte-identical curves
    let before = std::fs::read(dir.path().join("fig1_q1.csv")).unwrap();
    cmd()
        .args([
            "curves",
            "--figure",
            "fig1",
            "--out",
            dir.path().to_str().unwrap(),
            "--samples",
            "256",
        ])
        .assert()
        .success();
    let after = std::fs::read(dir.path().join("fig1_q1.csv")).unwrap();
    assert_eq!(before, after);
}

#[test]
fn config_file_with_flag_override() {
    let dir = tempfile::tempdir().unwrap();
    let config = dir.path().join("config.json");
    std::fs::write(&config, r#"{"samples": 128, "radii": [0.5, 0.9]}"#).unwrap();
    cmd()
        .args([
            "classify",
            "--preset",
            "f1",
            "--class",
            "SSC",
            "--config",
            config.to_str().unwrap(),
        ])
        .assert()
        .success()
        .stdout(predicate::str::contains("\"samples_per_circle\": 128"));
    cmd()
        .args([
            "classify",
            "--preset",
            "f1",
            "--class",
            "SSC",
            "--config",
            config.to_str().unwrap(),
            "--samples",
            "256",
        ])
        .assert()
        .success()
        .stdout(predicate::str::contains("\"samples_per_circle\": 256"));
    // malformed config
    std::fs::write(&config, "{nope").unwrap();
    cmd()
        .args([
            "classify",
            "--preset",
            "f1",
            "--class",
            "SSC",
            "--config",
            config.to_str().unwrap(),
        ])
        .assert()
        .code(4);
}

#[test]
fn threshold_trace_dumps_predicate() {
    let output = cmd()
        .args(["threshold", "--theorem", "3.1", "--alpha", "0.5", "--trace", "--tgrid", "256"])
        .output()
        .unwrap();
    assert!(output.status.success());
    let value: serde_json::Value = serde_json::from_slice(&output.stdout).unwrap();
    let trace = value["predicate_trace"].as_array().unwrap();
    assert!(trace.len() > 200);
    // at the brute threshold the predicate is nonnegative on the whole grid
    for pair in trace {
        let q = pair[1].as_f64().unwrap();
        assert!(q >= -1e-6, "negative predicate value {q} in trace");
    }
}

#[test]
fn curves_fig2_with_explicit_order() {
    let dir = tempfile::tempdir().unwrap();
    cmd()
        .args([
            "curves", "--figure", "fig2", "--a", "2", "--c", "6", "--alpha", "0.4182",
            "--out", dir.path().to_str().unwrap(), "--samples", "128",
        ])
        .assert()
        .success();
    let rays = std::fs::read_to_string(dir.path().join("fig2_sector.csv")).unwrap();
    // alpha just above 1/sqrt(6): ray slope matches tan(alpha pi/2)
    let row: Vec<f64> = rays.lines().nth(1).unwrap().split(',').map(|x| x.parse().unwrap()).collect();
    let slope = (row[2] / row[1]).abs();
    assert!((slope - (0.4182 * std::f64::consts::FRAC_PI_2).tan().abs()).abs() < 1e-9);
}

#[test]
fn csv_report_format() {
    cmd()
        .args([
            "threshold",
            "--theorem",
            "3.1",
            "--alpha",
            "1",
            "--format",
            "csv",
        ])
        .assert()
        .success()
        .stdout(predicate::str::starts_with("key,value"))
        .stdout(predicate::str::contains("analytic,1.6949731712249416"));
}
