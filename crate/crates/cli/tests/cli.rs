//! End-to-end runs of the `tcluster` binary.

use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn data(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("data")
        .join(name)
        .display()
        .to_string()
}

fn tcluster(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_tcluster"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn ok(args: &[&str]) -> String {
    let o = tcluster(args);
    assert_eq!(o.status.code(), Some(0), "{args:?}: {}", stderr(&o));
    stdout(&o)
}

#[test]
fn build_kronecker_report() {
    let out = ok(&["build", &data("kronecker.json"), "--t", "2,1,1"]);
    assert!(out.contains("r = 7"), "{out}");
    assert!(out.contains("d_Δ: (23,6,1 | 14,3 | 11,4)"), "{out}");
    let json: Value = serde_json::from_str(&ok(&[
        "build",
        &data("kronecker.json"),
        "--t",
        "2,1,1",
        "--format",
        "json",
    ]))
    .unwrap();
    assert_eq!(json["vertices"].as_array().unwrap().len(), 7);
    assert_eq!(json["dims"]["(1,2)"], serde_json::json!([9, 6, 2]));
    let dot = ok(&["build", &data("kronecker.json"), "--t", "2,1,1", "--format", "dot"]);
    assert!(dot.starts_with("digraph"));
    assert_eq!(dot.matches("style=dashed").count(), 4);
}

#[test]
fn build_with_zero_levels_has_one_vertex_per_quiver_vertex() {
    let json: Value = serde_json::from_str(&ok(&[
        "build",
        &data("five_vertex.json"),
        "--t",
        "0,0,0,0,0",
        "--format",
        "json",
    ]))
    .unwrap();
    assert_eq!(json["vertices"].as_array().unwrap().len(), 5);
}

#[test]
fn invalid_levels_exit_with_input_error() {
    let o = tcluster(&["build", &data("kronecker.json"), "--t", "1,1,3"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("terminal constraint"), "{}", stderr(&o));
    let o = tcluster(&["build", "/nonexistent/quiver.json", "--t", "1"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn explicit_ordering_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("ord.json");
    std::fs::write(&path, "[[1,0],[2,0],[1,1],[3,0],[2,1],[1,2],[3,1]]").unwrap();
    let arg = format!("file:{}", path.display());
    let out = ok(&["build", &data("kronecker.json"), "--t", "2,1,1", "--ordering", &arg]);
    assert!(out.contains("ordering: (1,0) < (2,0) < (1,1)"), "{out}");
    std::fs::write(&path, "[[1,2],[2,0],[1,1],[3,0],[2,1],[1,0],[3,1]]").unwrap();
    let o = tcluster(&["build", &data("kronecker.json"), "--t", "2,1,1", "--ordering", &arg]);
    assert_eq!(o.status.code(), Some(2), "{}", stdout(&o));
}

#[test]
fn mutate_rank_two_seed() {
    let out = ok(&["mutate", "--seed", &data("rank2.json"), "1"]);
    assert!(out.contains("y1' = (y2 + 1)/y1"), "{out}");
}

#[test]
fn mutate_kronecker_tracks_dimension_vectors() {
    let out = ok(&[
        "mutate",
        "--quiver",
        &data("kronecker.json"),
        "--t",
        "2,1,1",
        "T_{1,[1,2]}",
    ]);
    assert!(out.contains("dim: (0,4,13 | 2,8 | 0,2)"), "{out}");
    assert!(out.contains("Δ-dim: (0,0,1 | 2,0 | 0,0)"), "{out}");
}

#[test]
fn mutating_frozen_or_unknown_positions_is_an_input_error() {
    // Position 3 carries T_{1,[0,2]}, which is frozen.
    let o = tcluster(&["mutate", "--quiver", &data("kronecker.json"), "--t", "2,1,1", "1[0,2]"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("frozen"), "{}", stderr(&o));
    let o = tcluster(&["mutate", "--seed", &data("rank2.json"), "3"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn saved_seeds_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let saved = dir.path().join("seed.json");
    let saved_s = saved.display().to_string();
    ok(&[
        "mutate",
        "--seed",
        &data("rank2.json"),
        "1",
        "2",
        "--save-seed",
        &saved_s,
    ]);
    // Continuing from the saved seed equals mutating in one go.
    let split = ok(&["mutate", "--seed", &saved_s, "1", "--format", "json"]);
    let whole = ok(&[
        "mutate",
        "--seed",
        &data("rank2.json"),
        "1",
        "2",
        "1",
        "--format",
        "json",
    ]);
    let (split, whole): (Value, Value) = (
        serde_json::from_str(&split).unwrap(),
        serde_json::from_str(&whole).unwrap(),
    );
    assert_eq!(split["seed"], whole["seed"]);
}

#[test]
fn path_step_counts() {
    let out = ok(&["path", &data("five_vertex.json"), "--t", "3,2,3,1,2", "--no-expand"]);
    assert!(out.starts_with("steps: 19\n"), "{out}");
    assert!(out.contains("max-dominance: yes"));
    let out = ok(&[
        "path",
        &data("e8.json"),
        "--t",
        "14,14,14,14,14,14,14,14",
        "--no-expand",
    ]);
    assert!(out.starts_with("steps: 840\n"), "{out}");
    let out = ok(&["path", &data("kronecker.json"), "--t", "0,0,0", "--no-expand"]);
    assert!(out.starts_with("steps: 0\n"), "{out}");
}

#[test]
fn path_with_variables_reports_identities() {
    let out = ok(&["path", &data("kronecker.json"), "--t", "2,1,1"]);
    assert!(out.contains("step 1: "), "{out}");
    assert!(out.contains("identity: "));
    assert!(out.contains("variable: "));
    assert!(out.contains("steps: 5"), "{out}");
}

#[test]
fn large_outputs_go_to_files() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("g6.txt");
    let out = ok(&[
        "euler",
        &data("kronecker.json"),
        "--t",
        "2,1,1",
        "--k",
        "5",
        "--out",
        &file.display().to_string(),
    ]);
    assert!(out.starts_with("g_T5: 402 words"), "{out}");
    let written = std::fs::read_to_string(&file).unwrap();
    assert_eq!(written.matches('w').count(), 402);
}

#[test]
fn euler_series() {
    let out = ok(&["euler", &data("kronecker.json"), "--t", "2,1,1", "--k", "2"]);
    assert_eq!(out.trim(), "2·w[2,1,1]");
    let out = ok(&["euler", &data("kronecker.json"), "--t", "2,1,1", "--k", "1"]);
    assert_eq!(out.trim(), "w[1]");
    let json: Value = serde_json::from_str(&ok(&[
        "euler",
        &data("kronecker.json"),
        "--t",
        "2,1,1",
        "--k",
        "5",
        "--format",
        "json",
    ]))
    .unwrap();
    assert_eq!(json["words"], 402);
    assert_eq!(json["series"].as_object().unwrap().len(), 402);
    let o = tcluster(&["euler", &data("kronecker.json"), "--t", "2,1,1", "--k", "8"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn minors_verification() {
    let out = ok(&["minors", "--n", "4"]);
    assert!(out.trim_end().ends_with("PASS"), "{out}");
    assert!(out.contains("T_{4,[0,3]} -> Δ_{2345}"), "{out}");
    let out = ok(&["minors", "--n", "2"]);
    assert!(out.trim_end().ends_with("PASS"), "{out}");
}

#[test]
fn corrupted_golden_table_fails_with_a_diff() {
    let dir = tempfile::tempdir().unwrap();
    let golden = dir.path().join("golden.json");
    let table = ok(&["minors", "--n", "3", "--mode", "eta", "--format", "json"]);
    std::fs::write(&golden, &table).unwrap();
    let g = golden.display().to_string();
    ok(&["minors", "--n", "3", "--golden", &g]);

    let mut v: Value = serde_json::from_str(&table).unwrap();
    v["eta"]["T_{3,[0,1]}"] = Value::String("x1".into());
    std::fs::write(&golden, v.to_string()).unwrap();
    let o = tcluster(&["minors", "--n", "3", "--golden", &g]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).trim_end().ends_with("FAIL"));
    let err = stderr(&o);
    assert!(err.contains("T_{3,[0,1]}") && err.contains("- x1\n+ "), "{err}");
}

#[test]
fn check_manifest() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("manifest.json");
    let o = tcluster(&["--check", "--manifest", &path.display().to_string()]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let m: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(m["failed"], 0);
    assert!(m["checks"].as_array().unwrap().iter().all(|c| c["status"] == "pass"));
}

#[test]
fn usage_errors() {
    assert_eq!(tcluster(&[]).status.code(), Some(2));
    assert_eq!(tcluster(&["build"]).status.code(), Some(2));
    assert_eq!(tcluster(&["minors", "--n", "1"]).status.code(), Some(2));
    let o = tcluster(&[
        "euler",
        &data("kronecker.json"),
        "--t",
        "2,1,1",
        "--k",
        "1",
        "--format",
        "dot",
    ]);
    assert_eq!(o.status.code(), Some(2));
}
