//! Black-box tests of the binary: exit codes, report payloads, determinism
//! and the report round trip.

use futaki_cli::schema::ReportFile;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_futaki"))
}

fn scenario(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("../../scenarios")
        .join(name)
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).expect("utf8 stdout")
}

#[test]
fn fano_fivefold_scenario_degenerates_to_zero_invariant() {
    let path = scenario("fano5fold_degeneration.json");
    let output = run(&["compute", path.to_str().unwrap(), "--degenerate"]);
    assert!(output.status.success());
    let report: ReportFile = serde_json::from_str(&stdout(&output)).unwrap();
    assert_eq!(report.futaki, "0");
    assert_eq!(report.alpha_sum, "0");
    assert_eq!(report.mu.as_deref(), Some("0"));
    assert_eq!(report.is_product, Some(false));
    assert_eq!(
        report.section_weights,
        Some(vec!["0".into(), "-2".into(), "2".into()])
    );
}

#[test]
fn quintic_generic_scenario_gives_three_halves() {
    let path = scenario("quintic_delpezzo.json");
    let output = run(&["compute", path.to_str().unwrap(), "--degenerate"]);
    assert!(output.status.success());
    let report: ReportFile = serde_json::from_str(&stdout(&output)).unwrap();
    assert_eq!(report.futaki, "3/2");
}

#[test]
fn weights_only_scenario_supports_every_line_formula() {
    let path = scenario("quadric_p3.json");
    for formula in ["auto", "cor44", "thm41", "general", "all"] {
        let output = run(&["compute", path.to_str().unwrap(), "--formula", formula]);
        assert!(output.status.success(), "formula {formula}");
        let report: ReportFile = serde_json::from_str(&stdout(&output)).unwrap();
        assert_eq!(report.futaki, "2", "formula {formula}");
    }
}

#[test]
fn report_roundtrips_and_is_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let path = scenario("quintic_delpezzo.json");
    let out1 = dir.path().join("a.json");
    let out2 = dir.path().join("b.json");
    for out in [&out1, &out2] {
        let output = run(&[
            "compute",
            path.to_str().unwrap(),
            "--degenerate",
            "--report",
            out.to_str().unwrap(),
        ]);
        assert!(output.status.success());
    }
    let bytes1 = std::fs::read(&out1).unwrap();
    let bytes2 = std::fs::read(&out2).unwrap();
    assert_eq!(bytes1, bytes2, "same scenario and seed give identical bytes");

    let parsed: ReportFile = serde_json::from_slice(&bytes1).unwrap();
    assert_eq!(parsed.to_json().as_bytes(), &bytes1[..], "round trip is lossless");
}

#[test]
fn malformed_scenarios_exit_two() {
    let dir = tempfile::tempdir().unwrap();
    // wrong weight count
    let bad = dir.path().join("bad.json");
    std::fs::write(
        &bad,
        r#"{
  "ambient": { "type": "grassmannian", "k": 2, "N": 5 },
  "polarization": { "type": "det_quotient_power", "value": 1 },
  "one_ps": { "weights": [-2, -1, 0, 1], "sl": false },
  "bundle": { "type": "line_powers", "powers": [1, 1, 1] },
  "sections": { "weights": [0, 0, 0] }
}"#,
    )
    .unwrap();
    let output = run(&["compute", bad.to_str().unwrap()]);
    assert_eq!(output.status.code(), Some(2));

    // not even the right shape
    let garbage = dir.path().join("garbage.json");
    std::fs::write(&garbage, "{\"nope\": 1}").unwrap();
    let output = run(&["compute", garbage.to_str().unwrap()]);
    assert_eq!(output.status.code(), Some(2));
}

#[test]
fn incompatible_linearization_exits_one() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("incompat.json");
    // q = 4 breaks (det E)^q = L^p on G(2,5)
    std::fs::write(
        &bad,
        r#"{
  "ambient": { "type": "grassmannian", "k": 2, "N": 5 },
  "polarization": { "type": "anticanonical" },
  "one_ps": { "weights": [-2, -1, 0, 1, 2], "sl": true },
  "bundle": { "type": "exterior_quotient", "ell": 3, "copies": 3, "p": 1, "q": 4 },
  "sections": { "weights": [-3, -2, -1] }
}"#,
    )
    .unwrap();
    let output = run(&["compute", bad.to_str().unwrap(), "--formula", "thm31"]);
    assert_eq!(output.status.code(), Some(1));
}

#[test]
fn vector_family_formulas_agree_on_the_quintic_data() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("vector.json");
    std::fs::write(
        &file,
        r#"{
  "ambient": { "type": "grassmannian", "k": 2, "N": 5 },
  "polarization": { "type": "anticanonical" },
  "one_ps": { "weights": [-2, -1, 0, 1, 2], "sl": true },
  "bundle": { "type": "exterior_quotient", "ell": 3, "copies": 3, "p": 1, "q": 5 },
  "sections": { "weights": [-3, -2, -1] }
}"#,
    )
    .unwrap();
    let output = run(&["compute", file.to_str().unwrap(), "--formula", "all"]);
    assert!(output.status.success());
    let report: ReportFile = serde_json::from_str(&stdout(&output)).unwrap();
    assert_eq!(report.futaki, "3/2");
    // the merged report carries the weight-proportional constants
    assert_eq!(report.c.as_deref(), Some("1/40"));
    assert_eq!(report.t.as_deref(), Some("10"));
}

#[test]
fn verify_exit_codes() {
    let output = run(&["verify", "lemma51", "--trials", "5", "--seed", "7"]);
    assert!(output.status.success());
    assert!(stdout(&output).contains("0 failed"));

    let output = run(&["verify", "bogus"]);
    assert_eq!(output.status.code(), Some(2));
}

#[test]
fn search_campaigns() {
    let output = run(&["search", "delpezzo", "--bound", "0"]);
    assert!(output.status.success());
    assert!(stdout(&output).contains("0 rows"));

    let output = run(&["search", "delpezzo", "--bound", "2"]);
    assert!(output.status.success());
    let text = stdout(&output);
    assert!(text.lines().all(|l| !l.contains("false")));

    let output = run(&[
        "search", "prop63", "--k", "2", "--N", "5", "--ell", "3", "--d", "3", "--samples", "3",
    ]);
    assert!(output.status.success());
    assert!(stdout(&output).contains("3 runs"));
}
