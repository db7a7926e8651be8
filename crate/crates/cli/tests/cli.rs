use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn bin() -> Command {
    let mut c = Command::new(env!("CARGO_BIN_EXE_qspectra"));
    c.env_remove("QSPECTRA_DATA");
    c
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

fn collection(name: &str) -> String {
    let root = Path::new(env!("CARGO_MANIFEST_DIR")).join("../../collections");
    root.join(name).to_string_lossy().into_owned()
}

fn shipped_data() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../core/data")
}

#[test]
fn report_projective() {
    let o = run(&["report", "P3"]);
    assert_eq!(o.status.code(), Some(0));
    let md = stdout(&o);
    assert!(md.contains("| k = length / m | 1 |"));
    assert!(md.contains("| length of QS^o (kappa = 0) | 0 |"));
    assert!(stderr(&o).contains("\"elapsed_ms\""));
}

#[test]
fn report_json_is_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.json");
    let b = dir.path().join("b.json");
    for p in [&a, &b] {
        let o = run(&["report", "IG(2,6)", "--json", p.to_str().unwrap()]);
        assert_eq!(o.status.code(), Some(0));
    }
    let text = std::fs::read_to_string(&a).unwrap();
    assert_eq!(text, std::fs::read_to_string(&b).unwrap());
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    let s = &v["spectrum"];
    assert_eq!(s["dim_total"], 12);
    assert_eq!(s["orbit_count_by_length"]["value"], 2);
    assert_eq!(s["zero_part"]["hilbert_function"], serde_json::json!([1, 1]));
    assert_eq!(v["jacobi_comparison"]["full_match"], true);
    assert!(!text.contains("elapsed"));
}

#[test]
fn report_g24() {
    let o = run(&["report", "G(2,4)", "--json", "-"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["spectrum"]["orbit_count_by_points"]["value"], 1);
    assert_eq!(v["spectrum"]["zero_part"]["geometric_points"], 2);
    assert_eq!(v["spectrum"]["zero_part"]["hilbert_function"], serde_json::json!([2]));
}

#[test]
fn unknown_variety() {
    let o = run(&["report", "G(4,2)"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("IG(2,10)"));
}

#[test]
fn check_minimal_with_bwb() {
    let o = run(&["check", &collection("minimal_g24.json"), "--bwb"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let md = stdout(&o);
    assert!(md.contains("0 failures, 0 inconclusive"));
    assert!(!md.contains("| fail |"));
}

#[test]
fn check_kapranov_reports_without_failing() {
    let path = collection("kapranov_g24.json");
    let o = run(&["check", &path, "--json", "-"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["numerology"]["rect_length"], 0);
    assert_eq!(v["numerology"]["residual_expected"], 6);
    assert_eq!(run(&["check", &path, "--strict"]).status.code(), Some(2));
}

#[test]
fn check_builtin_isotropic() {
    let o = run(&["check", "builtin:kuznetsov_ig2(4)", "--bwb", "--strict"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
}

#[test]
fn check_input_errors() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad_sigma.json");
    std::fs::write(
        &bad,
        r#"{"variety":"G(2,4)","fano_index":4,"starting_block":["O","U*"],"support":[1,2,2,2]}"#,
    )
    .unwrap();
    let o = run(&["check", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("support partition not non-increasing"));

    let broken = dir.path().join("broken.json");
    std::fs::write(&broken, "{\n  \"variety\": \"P2\",\n  oops\n}").unwrap();
    let o = run(&["check", broken.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("broken.json:3:"), "{}", stderr(&o));

    let bundle = dir.path().join("bundle.json");
    std::fs::write(
        &bundle,
        r#"{"variety":"G(2,4)","fano_index":4,"starting_block":["O","V*"],"support":[2,2,1,1]}"#,
    )
    .unwrap();
    assert_eq!(
        run(&["check", bundle.to_str().unwrap(), "--bwb"]).status.code(),
        Some(1)
    );
    assert_eq!(run(&["check", "/nonexistent/file.json"]).status.code(), Some(1));
}

#[test]
fn check_without_backend_warns() {
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path().join("a2.json");
    std::fs::write(
        &p,
        r#"{"variety":"A2","fano_index":1,"starting_block":["E"],"support":[1]}"#,
    )
    .unwrap();
    let o = run(&["check", p.to_str().unwrap(), "--bwb"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stderr(&o).contains("warning: no Borel-Weil-Bott backend"));
}

#[test]
fn selftest_filter() {
    let o = run(&["selftest", "--filter", "lefschetz"]);
    assert_eq!(o.status.code(), Some(0));
    let md = stdout(&o);
    assert!(md.contains("builtin_numerology"));
    assert!(!md.contains("cayley_hamilton"));
    assert_eq!(run(&["selftest", "--filter", "nope"]).status.code(), Some(1));
}

fn perturbed_data_dir() -> tempfile::TempDir {
    let dir = tempfile::tempdir().unwrap();
    for entry in std::fs::read_dir(shipped_data()).unwrap() {
        let entry = entry.unwrap();
        std::fs::copy(entry.path(), dir.path().join(entry.file_name())).unwrap();
    }
    let target = dir.path().join("ig_2_6.json");
    let text = std::fs::read_to_string(&target).unwrap();
    let broken = text.replacen("[1,1,3,1,1]", "[1,1,3,2,1]", 1);
    assert_ne!(text, broken);
    std::fs::write(&target, broken).unwrap();
    dir
}

#[test]
fn selftest_catches_perturbed_data() {
    let dir = perturbed_data_dir();
    let o = run(&[
        "selftest",
        "--filter",
        "algebra",
        "--data",
        dir.path().to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("validate_algebra failed"));

    let o = bin()
        .args(["selftest", "--filter", "algebra"])
        .env("QSPECTRA_DATA", dir.path())
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn usage_errors() {
    assert_eq!(run(&[]).status.code(), Some(1));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(1));
    assert_eq!(run(&["--help"]).status.code(), Some(0));
}
