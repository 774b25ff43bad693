use std::process::{Command, Output};

use serde_json::Value;

fn halfline(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_halfline"))
        .args(args)
        .output()
        .expect("spawn halfline")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> (i32, Value) {
    let mut full = vec!["--json"];
    full.extend_from_slice(args);
    let out = halfline(&full);
    (
        out.status.code().unwrap(),
        serde_json::from_slice(&out.stdout).unwrap(),
    )
}

#[test]
fn classify_certain_composite() {
    let out = halfline(&["classify", "7310037"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("CertainComposite"));
    assert!(text.contains("does not satisfy pn = pn0 + 30n"));
    assert!(text.contains("definitely a composite number"));
    assert!(text.contains("(-3981331.50; -6130712.88)"));
}

#[test]
fn classify_candidate_prime_json() {
    let (code, v) = json(&["classify", "8751629"]);
    assert_eq!(code, 0);
    assert_eq!(v["class"]["class"], "candidate");
    assert_eq!(v["class"]["base"], 29);
    assert_eq!(v["class"]["multiplier"], 291720);
    assert_eq!(v["prime"], true);
    assert_eq!(v["ray_kind"], "thick");
    assert!((v["point"]["x"].as_f64().unwrap() - 7654347.19).abs() <= 0.5);
}

#[test]
fn classify_text_for_candidate() {
    let text = stdout(&halfline(&["classify", "8751629"]));
    assert!(text.contains("Candidate(29, 291720)"));
    assert!(text.contains("(8751629 - 29) / 30 = 291720"));
    assert!(text.contains("oracle     prime"));
}

#[test]
fn verify_million_is_clean() {
    let (code, v) = json(&["verify", "--max", "1000000"]);
    assert_eq!(code, 0);
    assert_eq!(v["violations"], 0);
    assert_eq!(v["conclusions"]["primes_checked"], 78495);
    assert_eq!(v["rays"]["degrees_hit"].as_array().unwrap().len(), 96);
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(halfline(&["verify", "--bogus"]).status.code(), Some(2));
    assert_eq!(halfline(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(halfline(&["classify", "seven"]).status.code(), Some(2));
    assert_eq!(halfline(&["classify", "0"]).status.code(), Some(2));
    assert_eq!(halfline(&[]).status.code(), Some(2));
    assert_eq!(halfline(&["--help"]).status.code(), Some(0));
}

#[test]
fn rhythm_report() {
    let (code, v) = json(&["rhythm", "--blocks", "1000"]);
    assert_eq!(code, 0);
    assert_eq!(
        v["canonical_parcels"],
        serde_json::json!([3, 5, 1, 5, 3, 1, 3, 1])
    );
    assert_eq!(v["canonical_groups"], serde_json::json!([1, 2, 1, 2, 2]));
    assert_eq!(v["report"]["blocks_checked"], 1001);
    assert!(v["report"]["first_violation"].is_null());
    let text = stdout(&halfline(&["rhythm", "--blocks", "3"]));
    assert!(text.contains("3-5-1-5-3-1-3-1"));
}

#[test]
fn twins_flag_realized_pairs() {
    let (code, v) = json(&["twins", "--max", "109"]);
    assert_eq!(code, 0);
    let rows = v.as_array().unwrap();
    let ps: Vec<u64> = rows.iter().map(|r| r["p"].as_u64().unwrap()).collect();
    assert_eq!(ps, [59, 71, 77, 89, 101, 107]);
    let realized: Vec<bool> = rows
        .iter()
        .map(|r| r["twin_prime"].as_bool().unwrap())
        .collect();
    assert_eq!(realized, [true, true, false, false, true, true]);
}

#[test]
fn spectrum_writes_csv() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("spectrum.csv");
    let (code, v) = json(&[
        "spectrum",
        "--start",
        "50",
        "--count",
        "4096",
        "-o",
        path.to_str().unwrap(),
    ]);
    assert_eq!(code, 0);
    assert!(v["indicator_period"].is_null());
    assert_eq!(v["candidate_gap_period"], 8);
    assert!(v["dominant_share"].as_f64().unwrap() <= 0.5);
    let csv = std::fs::read_to_string(&path).unwrap();
    assert_eq!(csv.lines().next(), Some("frequency_index,power"));
    assert_eq!(csv.lines().count(), 4097);
}

#[test]
fn spectrum_rejects_long_period() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("s.csv");
    let out = halfline(&[
        "spectrum",
        "--count",
        "100",
        "--max-period",
        "60",
        "-o",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn plots_are_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.svg");
    let b = dir.path().join("b.svg");
    for path in [&a, &b] {
        let out = halfline(&[
            "plot",
            "--kind",
            "rays",
            "--max",
            "720",
            "-o",
            path.to_str().unwrap(),
        ]);
        assert_eq!(out.status.code(), Some(0));
    }
    assert_eq!(std::fs::read(&a).unwrap(), std::fs::read(&b).unwrap());
    let svg = std::fs::read_to_string(&a).unwrap();
    assert_eq!(svg.matches(r#"class="pt "#).count(), 720);

    let cycle = dir.path().join("cycle.svg");
    halfline(&["plot", "--kind", "cycle", "-o", cycle.to_str().unwrap()]);
    let svg = std::fs::read_to_string(&cycle).unwrap();
    assert_eq!(svg.matches(r#"class="marker square""#).count(), 2);

    let primes = dir.path().join("primes.svg");
    halfline(&["plot", "--kind", "primes", "-o", primes.to_str().unwrap()]);
    let svg = std::fs::read_to_string(&primes).unwrap();
    assert_eq!(svg.matches(r#"class="marker cross""#).count(), 0);

    let points = dir.path().join("points.csv");
    halfline(&[
        "plot",
        "--kind",
        "points",
        "--max",
        "10",
        "-o",
        points.to_str().unwrap(),
    ]);
    assert_eq!(
        std::fs::read_to_string(&points).unwrap().lines().count(),
        11
    );
}

#[test]
fn unwritable_output_exits_one() {
    let out = halfline(&["plot", "--kind", "cycle", "-o", "/nonexistent-dir/x.svg"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("/nonexistent-dir/x.svg"));
}

#[test]
fn bench_table_structure() {
    let (code, v) = json(&["bench", "--limit", "100000"]);
    assert_eq!(code, 0);
    assert_eq!(v["sieves_agree"], true);
    let methods: Vec<&str> = v["rows"]
        .as_array()
        .unwrap()
        .iter()
        .map(|r| r["method"].as_str().unwrap())
        .collect();
    assert_eq!(methods, ["sieve", "wheel_sieve", "candidate_filter"]);
    let text = stdout(&halfline(&["bench", "--limit", "100000"]));
    assert!(text.contains("sieves agree: yes"));
}
