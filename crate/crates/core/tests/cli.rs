mod common;

use std::process::Command as Process;

use clap::Parser;
use common::*;
use curve_zeta::cli::{run, Outcome, RunConfig};
use curve_zeta::report::{ClassifyReport, EllReport, OracleReport, ValidateReport, ZetaReport};
use curve_zeta::zeta::BoundAudit;

fn cli(args: &[&str]) -> Outcome {
    let argv = std::iter::once("curve-zeta").chain(args.iter().copied());
    run(RunConfig::try_parse_from(argv).expect("arguments parse"))
}

fn path(name: &str) -> String {
    data(name).display().to_string()
}

#[test]
fn zeta_of_the_node() {
    let out = cli(&["zeta", &path("node.json"), "--degree", "2"]);
    assert_eq!(out.code, 0);
    assert_eq!(out.stdout, "1 + (q - 1) t^2\n");
    assert_eq!(cli(&["zeta", &path("node.json"), "--degree", "2", "--q", "3"]).stdout, "1 + 2 t^2\n");
}

#[test]
fn validate_reports_the_violating_pair() {
    let out = cli(&["validate", &path("broken_inf.json")]);
    assert_eq!(out.code, 1);
    assert!(out.stdout.contains("axioms: violated"), "{}", out.stdout);
    assert!(out.stdout.contains("S2: [(1,2), (2,1), (1,1)]"), "{}", out.stdout);

    let ok = cli(&["validate", &path("tacnode.json")]);
    assert_eq!(ok.code, 0);
    assert!(ok.stdout.contains("maximal points: [(0,0), (1,1), (2,2)]"), "{}", ok.stdout);
}

#[test]
fn oracle_epsilon_on_the_node() {
    let out = cli(&["oracle", &path("node_algebra.json"), "--check", "epsilon"]);
    assert_eq!(out.code, 0, "{}", out.stderr);
    assert!(out.stdout.starts_with("all points agree (q=2)\n"), "{}", out.stdout);
}

#[test]
fn oracle_detects_a_wrong_semigroup() {
    let out = cli(&["oracle", &path("tacnode_algebra.json"), "--check", "ell", "--against", &path("node.json")]);
    assert_eq!(out.code, 1);
    assert!(out.stdout.contains("points disagree"), "{}", out.stdout);
}

#[test]
fn every_oracle_check_agrees_on_the_node() {
    for check in ["semigroup", "ell", "epsilon", "zeta"] {
        let out = cli(&["oracle", &path("node_algebra.json"), "--check", check]);
        assert_eq!(out.code, 0, "{check}: {}", out.stdout);
    }
}

#[test]
fn small_field_warning_goes_to_stderr() {
    let dir = std::env::temp_dir().join(format!("curve-zeta-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let file = dir.join("triple_point_p2.json");
    let doc = read("triple_point_algebra.json").replace("\"p\": 3", "\"p\": 2");
    assert_ne!(doc, read("triple_point_algebra.json"), "fixture layout changed");
    std::fs::write(&file, doc).unwrap();
    let out = cli(&["validate", file.to_str().unwrap()]);
    assert_eq!(out.code, 1);
    assert!(out.stderr.starts_with("warning: field size p = 2"), "{}", out.stderr);
    assert!(out.stdout.contains("conductor: unknown"), "{}", out.stdout);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn malformed_input_exits_two() {
    let dir = std::env::temp_dir().join(format!("curve-zeta-bad-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let file = dir.join("bad.json");
    std::fs::write(&file, "{ \"branches\": 2,\n  \"conductor\": [1, 1],\n  \"points\": [[0, 0] \n}").unwrap();
    let out = cli(&["validate", file.to_str().unwrap()]);
    assert_eq!(out.code, 2);
    assert!(out.stderr.contains("bad.json") && out.stderr.contains("line"), "{}", out.stderr);
    let missing = cli(&["zeta", "/nonexistent/doc.json", "--degree", "1"]);
    assert_eq!(missing.code, 2);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn dimension_errors_exit_two() {
    let out = cli(&["classify", &path("node.json"), "--box", "1", "1", "1"]);
    assert_eq!(out.code, 2);
    assert!(out.stderr.starts_with("error:"), "{}", out.stderr);
}

#[test]
fn conflicting_flags_are_rejected() {
    let argv = ["curve-zeta", "zeta", "node.json", "--degree", "2", "--q", "2", "--symbolic"];
    assert!(RunConfig::try_parse_from(argv).is_err());
    assert!(RunConfig::try_parse_from(["curve-zeta", "ell", "node.json"]).is_err());
}

#[test]
fn reports_are_deterministic() {
    let runs: [&[&str]; 4] = [
        &["classify", &path("tacnode.json")],
        &["ell", &path("tacnode.json"), "--max", "4", "4"],
        &["bounds-audit", &path("node.json")],
        &["oracle", &path("cusp_algebra.json"), "--check", "zeta"],
    ];
    for args in runs {
        let first = cli(args);
        assert_eq!(first.code, 0, "{args:?}: {}", first.stderr);
        assert_eq!(first, cli(args), "{args:?}");
    }
}

#[test]
fn json_reports_round_trip() {
    fn back<T: serde::de::DeserializeOwned + serde::Serialize>(stdout: &str) {
        let value: T = serde_json::from_str(stdout).unwrap();
        let again = serde_json::to_string_pretty(&value).unwrap() + "\n";
        assert_eq!(again, stdout);
    }
    back::<ValidateReport>(&cli(&["--json", "validate", &path("node.json")]).stdout);
    back::<ValidateReport>(&cli(&["validate", &path("broken_pivot.json"), "--json"]).stdout);
    back::<ClassifyReport>(&cli(&["--json", "classify", &path("node.json")]).stdout);
    back::<EllReport>(&cli(&["--json", "ell", &path("cusp.json"), "--max", "6"]).stdout);
    back::<ZetaReport>(&cli(&["--json", "zeta", &path("tacnode.json"), "--degree", "6", "--q", "3"]).stdout);
    back::<BoundAudit>(&cli(&["--json", "bounds-audit", &path("tacnode.json"), "--q", "2,7"]).stdout);
    back::<OracleReport>(&cli(&["--json", "oracle", &path("node_algebra.json"), "--check", "ell"]).stdout);
}

#[test]
fn audit_json_row_for_the_node() {
    let out = cli(&["--json", "bounds-audit", &path("node.json"), "--q", "2", "--box", "3", "3"]);
    let value: serde_json::Value = serde_json::from_str(&out.stdout).unwrap();
    let row = value["rows"].as_array().unwrap().iter().find(|r| r["point"] == serde_json::json!([1, 1])).unwrap();
    assert_eq!(row["epsilon"], "q - 1");
    assert_eq!(row["holds_nonmax_bound"], true);
    assert!(value["rows"].as_array().unwrap().iter().all(|r| r["load_holds"] == true));
}

#[test]
fn binary_matches_the_library() {
    let bin = env!("CARGO_BIN_EXE_curve-zeta");
    let out = Process::new(bin).args(["zeta", &path("node.json"), "--degree", "2"]).output().unwrap();
    assert!(out.status.success());
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "1 + (q - 1) t^2\n");

    let out = Process::new(bin).args(["validate", &path("broken_pivot.json")]).output().unwrap();
    assert_eq!(out.status.code(), Some(1));

    let out = Process::new(bin).args(["zeta", "missing.json", "--degree", "1"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8(out.stderr).unwrap().starts_with("error:"));
}
