//! End-to-end tests of the command-line binary: flags, exit codes, json
//! schema, and byte determinism of verify and render output.

use assert_cmd::Command;
use predicates::prelude::*;
use serde_json::Value;

fn arbelos() -> Command {
    Command::cargo_bin("arbelos").expect("binary builds")
}

fn stdout_of(args: &[&str]) -> String {
    let output = arbelos().args(args).output().expect("command runs");
    assert!(
        output.status.success(),
        "command {args:?} failed: {}",
        String::from_utf8_lossy(&output.stderr)
    );
    String::from_utf8(output.stdout).expect("stdout is utf-8")
}

fn json_of(args: &[&str]) -> Value {
    serde_json::from_str(&stdout_of(args)).expect("stdout is json")
}

#[test]
fn compute_json_matches_the_worked_example() {
    let text = stdout_of(&["compute", "--R", "1", "--T", "0.6", "--format", "json"]);
    let json: Value = serde_json::from_str(&text).unwrap();
    assert_eq!(json["r1"].as_f64().unwrap(), 0.9);
    let expected_r2 = arbelos::dimensionless::complete_state(0.6, arbelos::Branch::Plus)
        .unwrap()
        .r2();
    assert_eq!(json["r2"].as_f64().unwrap(), expected_r2);
    let knife = json["area_knife"].as_f64().unwrap();
    assert!((knife - 0.2827433388230814).abs() < 1e-15);

    // Field order is part of the contract.
    let keys = [
        "\"R\"",
        "\"T\"",
        "\"t\"",
        "\"r1\"",
        "\"r2\"",
        "\"area_C\"",
        "\"area_C1\"",
        "\"area_C2\"",
        "\"area_knife\"",
    ];
    let mut last = 0;
    for key in keys {
        let at = text.find(key).unwrap_or_else(|| panic!("{key} missing"));
        assert!(at >= last, "{key} out of order");
        last = at;
    }
}

#[test]
fn compute_human_output_shows_seven_digit_values() {
    arbelos()
        .args(["compute", "--R", "1", "--T", "0.6"])
        .assert()
        .success()
        .stdout(predicate::str::contains("area_knife  0.2827433"))
        .stdout(predicate::str::contains("r1          0.9"));
}

#[test]
fn compute_warns_on_a_degenerate_chord() {
    let output = arbelos()
        .args(["compute", "--R", "1", "--T", "0", "--format", "json"])
        .output()
        .unwrap();
    assert!(output.status.success());
    let json: Value = serde_json::from_slice(&output.stdout).unwrap();
    assert_eq!(json["area_C2"].as_f64().unwrap(), 0.0);
    assert_eq!(json["r2"].as_f64().unwrap(), 0.0);
    let stderr = String::from_utf8_lossy(&output.stderr);
    assert!(
        stderr.contains("degenerate: C2 vanishes"),
        "stderr: {stderr}"
    );
}

#[test]
fn compute_rejects_an_oversized_chord() {
    arbelos()
        .args(["compute", "--R", "1", "--T", "2"])
        .assert()
        .code(2)
        .stderr(predicate::str::contains("chord 2 outside admissible range"));
}

#[test]
fn solve_reports_the_plus_branch_radii() {
    arbelos()
        .args(["solve", "--R", "2", "--T", "1"])
        .assert()
        .success()
        .stdout(predicate::str::contains("1.866025"))
        .stdout(predicate::str::contains("0.1339746"));
}

#[test]
fn solve_minus_branch_swaps_the_pair() {
    let plus = json_of(&["solve", "--R", "2", "--T", "1", "--format", "json"]);
    let minus = json_of(&[
        "solve", "--R", "2", "--T", "1", "--branch", "minus", "--format", "json",
    ]);
    assert_eq!(plus["R1"], minus["R2"]);
    assert_eq!(plus["R2"], minus["R1"]);
    assert_eq!(minus["branch"].as_str().unwrap(), "minus");
}

#[test]
fn solve_tangent_chord_gives_equal_radii() {
    let json = json_of(&["solve", "--R", "2", "--T", "2", "--format", "json"]);
    assert_eq!(json["R1"].as_f64().unwrap(), 1.0);
    assert_eq!(json["R2"].as_f64().unwrap(), 1.0);
}

#[test]
fn verify_passes_and_exits_zero() {
    let json = json_of(&[
        "verify",
        "--R",
        "1",
        "--T",
        "0.6",
        "--method",
        "mc",
        "--samples",
        "200000",
        "--seed",
        "42",
        "--format",
        "json",
    ]);
    assert!(json["pass"].as_bool().unwrap());
    assert_eq!(json["regions"].as_array().unwrap().len(), 4);
    let labels: Vec<&str> = json["regions"]
        .as_array()
        .unwrap()
        .iter()
        .map(|region| region["region"].as_str().unwrap())
        .collect();
    assert_eq!(labels, ["knife", "C1", "C2", "C"]);
}

#[test]
fn verify_grid_method_passes() {
    arbelos()
        .args([
            "verify",
            "--R",
            "1",
            "--T",
            "1",
            "--method",
            "grid",
            "--resolution",
            "256",
        ])
        .assert()
        .success()
        .stdout(predicate::str::contains("overall: pass"));
}

#[test]
fn verify_with_starved_sampling_exits_one() {
    // One sample cannot land within the closed-form tolerance, so the
    // verification itself fails while the invocation is still valid.
    arbelos()
        .args([
            "verify",
            "--R",
            "1",
            "--T",
            "0.6",
            "--samples",
            "1",
            "--seed",
            "0",
        ])
        .assert()
        .code(1)
        .stdout(predicate::str::contains("overall: FAIL"));
}

#[test]
fn verify_degenerate_chord_exits_two() {
    arbelos()
        .args(["verify", "--R", "1", "--T", "0"])
        .assert()
        .code(2)
        .stderr(predicate::str::contains("strictly positive chord"));
}

#[test]
fn verify_json_is_byte_identical_across_runs() {
    let args = [
        "verify",
        "--R",
        "1",
        "--T",
        "0.6",
        "--samples",
        "200000",
        "--seed",
        "42",
        "--format",
        "json",
    ];
    assert_eq!(stdout_of(&args), stdout_of(&args));
}

#[test]
fn render_to_stdout_matches_the_golden_file() {
    let svg = stdout_of(&["render", "--R", "1", "--n", "0", "--out", "-"]);
    assert_eq!(svg, include_str!("golden/r1_n0.svg"));
}

#[test]
fn render_writes_a_deterministic_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("fig.svg");
    let path_arg = path.to_str().unwrap();

    for _ in 0..2 {
        arbelos()
            .args([
                "render", "--R", "5", "--n", "3", "--shade", "--out", path_arg,
            ])
            .assert()
            .success();
        let written = std::fs::read_to_string(&path).unwrap();
        assert_eq!(written, include_str!("golden/r5_n3_shaded.svg"));
    }
}

#[test]
fn render_tangent_figure_matches_the_golden_file() {
    let svg = stdout_of(&["render", "--R", "1", "--n", "1", "--out", "-"]);
    assert_eq!(svg, include_str!("golden/r1_n1.svg"));
}

#[test]
fn render_rejects_an_offset_beyond_the_radius() {
    arbelos()
        .args(["render", "--R", "1", "--n", "2", "--out", "-"])
        .assert()
        .code(2)
        .stderr(predicate::str::contains("diameter"));
}

#[test]
fn render_accepts_a_negative_offset() {
    let svg = stdout_of(&["render", "--R", "1", "--n", "-0.5", "--out", "-"]);
    assert_eq!(svg.matches("<path").count(), 3);
}

#[test]
fn sweep_tabulates_the_dimensionless_solution() {
    let rows = json_of(&["sweep", "--steps", "10", "--format", "json"]);
    let rows = rows.as_array().unwrap();
    assert_eq!(rows.len(), 11);

    let row = &rows[6];
    assert_eq!(row["t"].as_f64().unwrap(), 0.6);
    assert_eq!(row["r1"].as_f64().unwrap(), 0.9);

    let last = &rows[10];
    assert_eq!(last["t"].as_f64().unwrap(), 1.0);
    assert_eq!(last["r1"].as_f64().unwrap(), 0.5);
    assert_eq!(last["r2"].as_f64().unwrap(), 0.5);
    assert_eq!(last["a_C1"].as_f64().unwrap(), std::f64::consts::FRAC_PI_8);
    assert_eq!(last["a_C1"], last["a_C2"]);

    for row in rows {
        let r1 = row["r1"].as_f64().unwrap();
        let r2 = row["r2"].as_f64().unwrap();
        assert_eq!(r1 + r2, 1.0);
    }
}

#[test]
fn sweep_with_two_steps_hits_the_midpoint() {
    let rows = json_of(&["sweep", "--steps", "2", "--format", "json"]);
    let t: Vec<f64> = rows
        .as_array()
        .unwrap()
        .iter()
        .map(|row| row["t"].as_f64().unwrap())
        .collect();
    assert_eq!(t, [0.0, 0.5, 1.0]);
}

#[test]
fn sweep_rejects_fewer_than_two_steps() {
    arbelos().args(["sweep", "--steps", "1"]).assert().code(2);
}

#[test]
fn help_and_version_exit_cleanly() {
    arbelos().arg("--help").assert().success();
    arbelos().arg("--version").assert().success();
    arbelos().args(["compute", "--help"]).assert().success();
}
