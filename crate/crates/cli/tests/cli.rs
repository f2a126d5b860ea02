use std::process::{Command, Output};

fn pclink(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_pclink")).args(args).env_remove("PCLINK_CACHE").output().unwrap()
}

fn stdout(args: &[&str]) -> String {
    let out = pclink(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn word_rank() {
    assert_eq!(stdout(&["word", "rank", "000100"]).trim(), "3");
    assert_eq!(stdout(&["word", "orbit", "00101", "--family", "ring"]).trim(), r#"["00101","01011","10100","11010"]"#);
}

#[test]
fn hopf_link_jones() {
    assert_eq!(stdout(&["jones", "--family", "ring", "--word", "11"]).trim(), r#"[[-10,"-1"],[-2,"-1"]]"#);
}

#[test]
fn ring_reversal_pair_gives_identical_output() {
    let a = stdout(&["jones", "--family", "ring", "--word", "0101"]);
    let b = stdout(&["jones", "--family", "ring", "--word", "1010"]);
    assert_eq!(a, b);
    assert_ne!(a, stdout(&["jones", "--family", "ring", "--word", "0011"]));
}

#[test]
fn boot_census_counts() {
    let v: serde_json::Value = serde_json::from_str(&stdout(&["census", "--family", "boot", "--n", "12"])).unwrap();
    assert_eq!(v["orbit_count"], 4096);
    assert_eq!(v["total_words"], 4096);
    let v: serde_json::Value =
        serde_json::from_str(&stdout(&["census", "--family", "boot", "--n", "12", "--unoriented"])).unwrap();
    assert_eq!(v["orbit_count"], 2048);
}

#[test]
fn census_csv_partition() {
    let csv = stdout(&["census", "--family", "ring", "--n", "3", "--with-jones", "--format", "csv"]);
    let lines: Vec<&str> = csv.lines().collect();
    assert_eq!(lines[0], "word,orbit_id,jones_cell_id");
    assert_eq!(lines.len(), 9);
}

#[test]
fn bad_input_fails() {
    let out = pclink(&["word", "rank", "0102"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("malformed word"));
    assert!(!pclink(&["--no-such-flag"]).status.success());
    assert!(!pclink(&["census", "--family", "flower", "--n", "5"]).status.success());
}

#[test]
fn verify_reports_the_failed_check() {
    let out = pclink(&["verify"]);
    assert_eq!(out.status.code(), Some(3));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let checks = v["checks"].as_array().unwrap();
    let status = |name: &str| checks.iter().find(|c| c["name"] == name).unwrap()["status"].clone();
    assert_eq!(status("ring4-jones-partition"), "pass");
    assert_eq!(status("boot6-singletons"), "fail");
    assert_eq!(status("boot6-reversal-pair"), "pass");
    assert_eq!(status("flower6-cell"), "pass");
}

#[test]
fn shadow_pd_text() {
    let text = stdout(&["shadow", "--family", "ring", "--word", "01", "--format", "text"]);
    assert_eq!(text.lines().filter(|l| l.starts_with("X(")).count(), 2);
    let v: serde_json::Value = serde_json::from_str(&stdout(&["shadow", "--family", "flower", "--n", "4"])).unwrap();
    assert!(v.is_object());
}

#[test]
fn cache_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("cache.jsonl");
    let p = path.to_str().unwrap();
    let first = stdout(&["--cache", p, "jones", "--family", "boot", "--n", "3"]);
    let written = std::fs::read(&path).unwrap();
    assert_eq!(written.iter().filter(|&&b| b == b'\n').count(), 8);
    let second = stdout(&["--cache", p, "jones", "--family", "boot", "--n", "3"]);
    assert_eq!(first, second);
    assert_eq!(std::fs::read(&path).unwrap(), written);

    let env = Command::new(env!("CARGO_BIN_EXE_pclink"))
        .args(["jones", "--family", "boot", "--n", "3"])
        .env("PCLINK_CACHE", p)
        .output()
        .unwrap();
    assert_eq!(String::from_utf8(env.stdout).unwrap(), first);
    assert_eq!(std::fs::read(&path).unwrap(), written);
}

#[test]
fn worker_count_does_not_change_output() {
    let args = ["census", "--family", "flower", "--n", "4", "--with-jones", "--format", "csv"];
    let one = stdout(&[&["--workers", "1"], &args[..]].concat());
    let four = stdout(&[&["--workers", "4"], &args[..]].concat());
    assert_eq!(one, four);
}
