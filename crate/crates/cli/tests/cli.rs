//! End-to-end tests of the `towerlab` binary: exit codes, exact rational
//! output, JSON schema and round-tripping, and determinism across `--jobs`.

use std::process::{Command, Output};

fn towerlab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_towerlab"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf-8 stdout")
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).expect("utf-8 stderr")
}

#[test]
fn verify_ce2_prints_the_exact_criterion() {
    let out = towerlab(&["verify", "cE2"]);
    assert_eq!(out.status.code(), Some(0), "stderr: {}", stderr(&out));
    let text = stdout(&out);
    assert!(text.contains("-1/10"), "{}", text);
    assert!(text.contains("summary: 10/10 checks passed"), "{}", text);
    // Exactness: no decimal rendering anywhere.
    assert!(!text.contains("-0.1"), "{}", text);
}

#[test]
fn verify_rejects_inadmissible_parameters() {
    let out = towerlab(&["verify", "cD2-a-case1-sub1", "-p", "r=7", "-p", "a=4"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("odd"), "{}", stderr(&out));

    let out = towerlab(&["verify", "no-such-family"]);
    assert_eq!(out.status.code(), Some(2));

    let out = towerlab(&["verify", "cE2", "-p", "l=x"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_reports_the_delta_entries() {
    let out = towerlab(&[
        "verify", "cAn-sub1", "-p", "n=2", "-p", "b=1", "-p", "a=5", "-p", "d=1", "-p", "r1=3",
    ]);
    assert_eq!(out.status.code(), Some(0), "stderr: {}", stderr(&out));
    let text = stdout(&out);
    assert!(text.contains("delta1 = 1, delta2 = 4"), "{}", text);
}

#[test]
fn verify_json_has_the_versioned_schema() {
    let out = towerlab(&["verify", "cE2", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["schema_version"], "1");
    assert_eq!(doc["family"], "cE2");
    let checks = doc["checks"].as_array().unwrap();
    assert!(!checks.is_empty());
    for c in checks {
        assert_eq!(c["status"], "pass");
        for key in ["name", "lhs", "rhs"] {
            assert!(c[key].is_string());
        }
    }
    assert!(stdout(&out).contains("-1/10"));
    // Round trip: parse(serialize(parse(x))) = parse(x).
    let again: serde_json::Value =
        serde_json::from_str(&serde_json::to_string(&doc).unwrap()).unwrap();
    assert_eq!(doc, again);
}

#[test]
fn scan_is_byte_identical_across_jobs() {
    let base = ["scan", "cD2-a4-case1", "-p", "l=1..25"];
    let one = towerlab(&[&base[..], &["--jobs", "1"]].concat());
    let four = towerlab(&[&base[..], &["--jobs", "4"]].concat());
    assert_eq!(one.status.code(), Some(0));
    assert_eq!(one.stdout, four.stdout);
    let text = stdout(&one);
    assert!(text.contains("summary: 25 verified, 0 skipped, 0 failed"), "{}", text);
}

#[test]
fn scan_bound_defaults_every_range() {
    let out = towerlab(&["scan", "cAn-sub1", "--bound", "6", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0), "stderr: {}", stderr(&out));
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["schema_version"], "1");
    assert_eq!(doc["ranges"]["n"], serde_json::json!([2, 6]));
    assert_eq!(doc["ranges"]["r1"], serde_json::json!([1, 6]));
    assert!(doc["verified"].as_u64().unwrap() > 0);
    assert!(doc["skipped"].as_u64().unwrap() > 0);
    assert_eq!(doc["failed"], 0);
}

#[test]
fn scan_requires_ranges_for_every_parameter() {
    let out = towerlab(&["scan", "cD2-a4-case1"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("missing parameter"), "{}", stderr(&out));
}

#[test]
fn list_shows_the_whole_catalog() {
    let out = towerlab(&["list"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    for id in [
        "cD2-a4-case1",
        "cD2-a-case1-sub2",
        "cE2",
        "cD2-d1-case3",
        "cAn-sub1",
        "gorenstein-1ab",
    ] {
        assert!(text.contains(id), "missing {} in:\n{}", id, text);
    }

    let out = towerlab(&["list", "cD2-a4-case1"]);
    let text = stdout(&out);
    assert!(text.contains("(6l+1, 10l+1, 1, 12l+2, 4l)"), "{}", text);

    let out = towerlab(&["list", "--format", "json"]);
    let docs: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(docs.as_array().unwrap().len(), 13);
}

#[test]
fn reverse_prints_both_towers() {
    let out = towerlab(&[
        "reverse",
        "--gen",
        "0,1/2,1/2,1/2",
        "--v1",
        "3,2,1,4",
        "--chart",
        "1",
        "--v2",
        "1,3/2,1/2,3/2",
    ]);
    assert_eq!(out.status.code(), Some(0), "stderr: {}", stderr(&out));
    let text = stdout(&out);
    assert!(text.contains("(1/6)(2, 5, 1, 1)"), "{}", text);
    assert!(text.contains("(1/3)(5, 4, 1, 6)"), "{}", text);
    // Chart auto-detection gives the same output.
    let auto = towerlab(&[
        "reverse",
        "--gen",
        "0,1/2,1/2,1/2",
        "--v1",
        "3,2,1,4",
        "--v2",
        "1,3/2,1/2,3/2",
    ]);
    assert_eq!(auto.stdout, out.stdout);
}

#[test]
fn reverse_rejects_non_interchangeable_pairs() {
    let out = towerlab(&["reverse", "--v1", "1,2", "--v2", "2,4"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(
        stderr(&out).contains("not interchangeable"),
        "{}",
        stderr(&out)
    );
}

#[test]
fn reverse_rejects_malformed_vectors() {
    let out = towerlab(&["reverse", "--v1", "1,x", "--v2", "1,1"]);
    assert_eq!(out.status.code(), Some(2));
}
