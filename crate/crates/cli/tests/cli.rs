use std::path::PathBuf;
use std::process::Command;

use serde_json::Value;

fn fixture(name: &str) -> String {
    let p: PathBuf = [env!("CARGO_MANIFEST_DIR"), "..", "..", "fixtures", &format!("{name}.json")].iter().collect();
    p.to_string_lossy().into_owned()
}

fn golden(name: &str) -> String {
    let p: PathBuf = [env!("CARGO_MANIFEST_DIR"), "tests", "golden", name].iter().collect();
    std::fs::read_to_string(p).unwrap()
}

fn run(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_logarr")).args(args).output().expect("binary runs");
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8_lossy(&out.stdout).into_owned(),
        String::from_utf8_lossy(&out.stderr).into_owned(),
    )
}

fn run_json(args: &[&str]) -> (i32, Value) {
    let (code, stdout, stderr) = run(args);
    let v = serde_json::from_str(&stdout).unwrap_or_else(|e| panic!("{e}: {stdout} {stderr}"));
    (code, v)
}

#[test]
fn info_three_lines_matches_golden() {
    let (code, stdout, _) = run(&["info", &fixture("3lines")]);
    assert_eq!(code, 0);
    assert_eq!(stdout, golden("3lines_info.txt"));
    assert!(stdout.contains("chi: t^2 - 3*t + 2"));
    assert!(stdout.contains("tutte: x^2 + x + y"));
}

#[test]
fn info_boolean_and_braid() {
    let (code, v) = run_json(&["info", &fixture("boolean3"), "--json"]);
    assert_eq!(code, 0);
    assert_eq!(v["witnesses"]["beta"], "0");
    assert_eq!(v["witnesses"]["bridges"], serde_json::json!([0, 1, 2]));

    let (_, v) = run_json(&["info", &fixture("braid4"), "--json"]);
    assert_eq!(v["witnesses"]["essential_rank"], 3);
    assert_eq!(v["witnesses"]["essential"], false);
    assert_eq!(v["witnesses"]["chi"], "t^3 - 6*t^2 + 11*t - 6");
}

#[test]
fn verify_main_matches_golden() {
    let (code, stdout, _) = run(&["verify", "main", &fixture("3lines"), "--json", "--pretty"]);
    assert_eq!(code, 0);
    assert_eq!(stdout, golden("3lines_main.json"));
}

#[test]
fn verify_hs_leading_on_ziegler() {
    let (code, v) = run_json(&["verify", "hs-leading", &fixture("ziegler1"), "--json"]);
    assert_eq!(code, 0);
    let leading = &v["lhs"]["leading"];
    assert_eq!((&leading["1"], &leading["2"], &leading["3"]), (&"15".into(), &"6".into(), &"1".into()));
}

#[test]
fn verify_recurrence_on_every_hyperplane() {
    let (code, v) = run_json(&["verify", "recurrence", &fixture("3lines"), "--json"]);
    assert_eq!(code, 0);
    let parts = v["witnesses"]["parts"].as_array().unwrap();
    assert_eq!(parts.len(), 3);
    assert!(parts.iter().all(|p| p["status"] == "pass"));
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["verify", "monic", &fixture("boolean2")]).0, 3);
    let (code, _, stderr) = run(&["verify", "nonsense", &fixture("3lines")]);
    assert_eq!(code, 2);
    assert!(stderr.contains("unknown check"));
    let (code, _, stderr) = run(&["info", "/nonexistent/file.json"]);
    assert_eq!(code, 2);
    assert!(stderr.contains("/nonexistent/file.json"));

    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, "{\n  \"name\": \"x\",\n  \"matrix\": [[1, 0],\n").unwrap();
    let (code, _, stderr) = run(&["verify", "main", bad.to_str().unwrap()]);
    assert_eq!(code, 2);
    assert!(stderr.contains("line"), "{stderr}");
}

#[test]
fn corpus_boolean_has_zero_class() {
    let (code, v) = run_json(&["corpus", "boolean4", "--check", "main", "--json"]);
    assert_eq!(code, 0);
    let main = v["reports"].as_array().unwrap().iter().find(|r| r["check"] == "main").unwrap();
    assert_eq!(main["lhs"]["class"], "0");
}

#[test]
fn corpus_ziegler_pair_differs_by_one_term() {
    let (code, v) = run_json(&["corpus", "ziegler", "--check", "main", "--json"]);
    assert_eq!(code, 0);
    let cmp = v["reports"].as_array().unwrap().iter().find(|r| r["check"] == "compare").unwrap();
    assert_eq!(cmp["status"], "pass");
    assert_eq!(cmp["witnesses"]["k_equal"], false);
    let d = &cmp["witnesses"]["difference"];
    assert_eq!(d["numerator"], "t^4*u");
    assert_eq!((d["t_power"].as_u64(), d["u_power"].as_u64()), (Some(0), Some(8)));
}

#[test]
fn corpus_from_directory_is_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    for name in ["3lines", "pencil4", "bridge"] {
        std::fs::copy(fixture(name), dir.path().join(format!("{name}.json"))).unwrap();
    }
    let d = dir.path().to_str().unwrap();
    let (c1, out1, _) = run(&["corpus", "--fixture-dir", d, "--json"]);
    let (c2, out2, _) = run(&["corpus", "--fixture-dir", d, "--json", "--parallel"]);
    assert_eq!((c1, c2), (0, 0));
    assert_eq!(out1, out2);
    let v: Value = serde_json::from_str(&out1).unwrap();
    assert_eq!(v["fixtures"], serde_json::json!(["3lines", "bridge", "pencil4"]));
    assert_eq!(v["summary"]["fail"], 0);
}

#[test]
fn timing_is_opt_in() {
    let (_, plain, _) = run(&["verify", "beta", &fixture("3lines"), "--json"]);
    let (_, timed, _) = run(&["verify", "beta", &fixture("3lines"), "--json", "--timing"]);
    assert!(!plain.contains("elapsed_ms"));
    assert!(timed.contains("elapsed_ms"));
}
