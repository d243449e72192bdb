//! Black-box tests of the binary: exit codes, JSON shapes, the atlas file,
//! and the enumeration guard.

use std::path::Path;
use std::process::Command;

use linkage::chambers::ChamberAtlas;
use serde_json::Value;

fn run_with(args: &[&str], envs: &[(&str, &str)]) -> (i32, String) {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_linkage"));
    cmd.args(args).env_remove("LINKAGE_MAX_N");
    for (k, v) in envs {
        cmd.env(k, v);
    }
    let out = cmd.output().unwrap();
    (out.status.code().unwrap(), String::from_utf8(out.stdout).unwrap())
}

fn run(args: &[&str]) -> (i32, String) {
    run_with(args, &[])
}

fn json(args: &[&str]) -> (i32, Value) {
    let (code, stdout) = run(args);
    let value = serde_json::from_str(&stdout)
        .unwrap_or_else(|e| panic!("bad JSON from {args:?}: {e}\n{stdout}"));
    (code, value)
}

#[test]
fn analyze_reports_full_profile() {
    let (code, v) = json(&["analyze", "--vector", "1,1,1,1,1,4", "--d", "5"]);
    assert_eq!(code, 0);
    assert_eq!(v["n"], 6);
    assert_eq!(v["generic"], true);
    assert_eq!(v["sorted"], "1,1,1,1,1,4");
    assert_eq!(v["a_vector"], serde_json::json!([1, 0, 0, 0]));
    assert_eq!(v["regular"]["3"], true);
    assert_eq!(v["regular"]["5"], true);
    assert_eq!(v["d_regular"], true);
    assert_eq!(v["dim_moduli"], 9);
    assert_eq!(v["codim_strata"]["2"], 3);
    assert_eq!(v["codim_strata"]["3"], 6);
    assert_eq!(v["fingerprint"]["n"], 6);
    assert_eq!(v["fingerprint"]["levels"][0], serde_json::json!(["20"]));
}

#[test]
fn analyze_without_d_omits_moduli_figures() {
    let (code, v) = json(&["analyze", "--vector", "2,1,1,1,2"]);
    assert_eq!(code, 0);
    assert_eq!(v["sorted"], "1,1,1,2,2");
    assert_eq!(v["permutation"].as_array().unwrap().len(), 5);
    assert!(v.get("d").is_none());
    assert!(v.get("d_regular").is_none());
    assert!(v.get("dim_moduli").is_none());
}

#[test]
fn wall_vector_exits_3_with_witness() {
    let (code, v) = json(&["analyze", "--vector", "1,1,1,1"]);
    assert_eq!(code, 3);
    assert!(v["error"].as_str().unwrap().contains("tight"));
    assert_eq!(v["witness"], "{1,4}");
}

#[test]
fn unparseable_vectors_exit_2() {
    assert_eq!(json(&["analyze", "--vector", "1,1,x"]).0, 2);
    assert_eq!(json(&["analyze", "--vector", "1,1"]).0, 2);
    assert_eq!(json(&["ring", "--vector", "1,0,1,1,1,1,1", "--d", "5"]).0, 2);
}

#[test]
fn usage_errors_exit_2_and_help_exits_0() {
    let (code, stdout) = run(&["frobnicate"]);
    assert_eq!(code, 2);
    assert_eq!(stdout, "");
    assert_eq!(run(&["--help"]).0, 0);
    assert_eq!(run(&["analyze"]).0, 2);
}

#[test]
fn ring_report_shape() {
    let (code, v) = json(&["ring", "--vector", "1,1,1,1,1,1,1,1,1", "--d", "5"]);
    assert_eq!(code, 0);
    assert_eq!(v["generators"].as_array().unwrap().len(), 9);
    assert_eq!(v["generators"][0], "R");
    assert_eq!(v["generators"][1], "X{1}");
    assert_eq!(v["truncation"], 4);
    assert_eq!(v["graded_dimensions"], serde_json::json!([1, 9, 37, 93, 93]));
    assert_eq!(v["upper_bound_from_degree"], 3);
    assert_eq!(v["face_ring_dimensions"], serde_json::json!([1, 8, 28, 56, 0]));
    assert_eq!(v["euler_candidates"], serde_json::json!(["R"]));

    // at n = d+2 both the bound and the uniqueness regime are out of reach
    let (code, v) = json(&["ring", "--vector", "1,1,1,1,1,1,3", "--d", "5"]);
    assert_eq!(code, 0);
    assert_eq!(v["truncation"], 2);
    assert_eq!(v["upper_bound_from_degree"], Value::Null);
    assert_eq!(v["euler_candidates"], Value::Null);
}

#[test]
fn ring_error_paths() {
    // even and low dimensions have no model of this kind
    assert_eq!(json(&["ring", "--vector", "1,1,1,1,1,1,1,1,1", "--d", "4"]).0, 4);
    assert_eq!(json(&["ring", "--vector", "1,1,1,1,1,1,1,1,1", "--d", "3"]).0, 4);
    // domain errors
    assert_eq!(json(&["ring", "--vector", "1,1,1,1,1,3", "--d", "5"]).0, 1);
    assert_eq!(json(&["ring", "--vector", "1,1,1,1,1,1,1", "--d", "5"]).0, 1);
    // wall
    let (code, v) = json(&["ring", "--vector", "1,1,1,1,1,1,1,1", "--d", "5"]);
    assert_eq!(code, 3);
    assert!(v["witness"].is_string());
}

#[test]
fn compare_reports() {
    let (code, v) = json(&["compare", "--a", "1,1,1,2", "--b", "2,1,1,1"]);
    assert_eq!(code, 0);
    assert_eq!(v["same_chamber_up_to_permutation"], true);
    assert_eq!(v["ring_comparison"], Value::Null);
    assert!(v["ring_note"].as_str().unwrap().contains("at least 7 bars"));

    let (code, v) = json(&["compare", "--a", "1,1,1,1,1,1,3", "--b", "1,1,1,1,1,1,5", "--d", "5"]);
    assert_eq!(code, 0);
    assert_eq!(v["same_chamber_up_to_permutation"], false);
    assert_eq!(v["ring_comparison"], "Different");
    assert_eq!(v["detail"]["first_differing_level"], 1);
    assert!(v.get("ring_note").is_none());

    assert_eq!(json(&["compare", "--a", "1,1,1,1", "--b", "1,1,1,2"]).0, 3);
}

#[test]
fn perversities_report() {
    let (code, v) = json(&["perversities", "--n", "9", "--d", "5"]);
    assert_eq!(code, 0);
    assert_eq!(v["dim_moduli"], 21);
    assert_eq!(v["strata"].as_array().unwrap().len(), 2);
    assert_eq!(v["perversities"].as_array().unwrap().len(), 4);
    assert_eq!(v["bar_levels"].as_array().unwrap().len(), 4);
    for level in v["bar_levels"].as_array().unwrap() {
        assert_eq!(level["inclusion_allowable"], true);
        assert_eq!(level["projection_allowable"], true);
    }
    assert_eq!(json(&["perversities", "--n", "4", "--d", "5"]).0, 1);
}

#[test]
fn enumerate_writes_the_atlas() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("n4.atlas");
    let (code, v) = json(&["enumerate", "--n", "4", "--out", path.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_eq!(v["chambers"], 3);

    let text = std::fs::read_to_string(&path).unwrap();
    assert!(text.starts_with("LINKAGE-ATLAS v1 n=4\n"));
    assert_eq!(text.lines().count(), 4);
    assert_eq!(ChamberAtlas::load(&path).unwrap().records().len(), 3);
}

#[test]
fn atlas_bytes_are_reproducible() {
    let dir = tempfile::tempdir().unwrap();
    let (first, second) = (dir.path().join("a"), dir.path().join("b"));
    assert_eq!(run(&["enumerate", "--n", "5", "--out", first.to_str().unwrap()]).0, 0);
    assert_eq!(run(&["enumerate", "--n", "5", "--out", second.to_str().unwrap()]).0, 0);
    assert_eq!(std::fs::read(&first).unwrap(), std::fs::read(&second).unwrap());
}

#[test]
fn guard_limits_enumeration() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("big.atlas");
    let out = out.to_str().unwrap();
    assert_eq!(json(&["enumerate", "--n", "9", "--out", out]).0, 5);
    assert_eq!(json(&["enumerate", "--n", "3", "--out", out]).0, 1);

    let args = ["enumerate", "--n", "5", "--out", out];
    let (code, stdout) = run_with(&args, &[("LINKAGE_MAX_N", "4")]);
    assert_eq!(code, 5);
    assert!(stdout.contains("guard"));
    let (code, _) = run_with(&args, &[("LINKAGE_MAX_N", "six")]);
    assert_eq!(code, 1);
    assert_eq!(run_with(&args, &[("LINKAGE_MAX_N", "6")]).0, 0);
}

fn annotate(path: &Path, ds: &str) -> (i32, String) {
    run(&["annotate", "--atlas", path.to_str().unwrap(), "--d", ds])
}

#[test]
fn annotate_rewrites_in_place() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("n4.atlas");
    assert_eq!(run(&["enumerate", "--n", "4", "--out", path.to_str().unwrap()]).0, 0);

    let (code, stdout) = annotate(&path, "3,5");
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&stdout).unwrap();
    assert_eq!(v["annotated_d"], serde_json::json!([3, 5]));
    let atlas = ChamberAtlas::load(&path).unwrap();
    for rec in atlas.records() {
        assert!(rec.regularity.contains_key(&3) && rec.regularity.contains_key(&5));
    }

    // same flags in, same bytes out
    let bytes = std::fs::read(&path).unwrap();
    assert_eq!(annotate(&path, "3,5").0, 0);
    assert_eq!(std::fs::read(&path).unwrap(), bytes);

    assert_eq!(annotate(&path, "1").0, 1);

    // a duplicated record violates the canonical order and is refused
    let text = std::fs::read_to_string(&path).unwrap();
    let last = text.lines().last().unwrap().to_owned();
    std::fs::write(&path, text + &last + "\n").unwrap();
    assert_eq!(annotate(&path, "3").0, 2);
}

#[test]
fn pretty_flag_changes_layout_not_content() {
    let compact = json(&["analyze", "--vector", "1,1,1,1,1,4", "--d", "5"]);
    let (code, stdout) = run(&["analyze", "--vector", "1,1,1,1,1,4", "--d", "5", "--pretty"]);
    assert_eq!(code, 0);
    assert!(stdout.lines().count() > 1);
    let pretty: Value = serde_json::from_str(&stdout).unwrap();
    assert_eq!(pretty, compact.1);
}
