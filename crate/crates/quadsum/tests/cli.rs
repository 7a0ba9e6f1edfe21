use std::process::{Command, Output};

use quadsum::json::WitnessRecord;
use quadsum_core::lookup;

fn quadsum(args: &[&str]) -> Output {
    let cache = tempfile::tempdir().unwrap();
    Command::new(env!("CARGO_BIN_EXE_quadsum"))
        .args(args)
        .env("OEIS_CACHE_DIR", cache.path())
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn represent_prints_a_revalidating_witness() {
    let o = quadsum(&["--json", "represent", "C1.1i", "111"]);
    assert_eq!(o.status.code(), Some(0));
    let rec: WitnessRecord = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!(rec.values, [9, 1, 5, 2]);
    assert!(rec.revalidate(&lookup("C1.1i").unwrap().statement).unwrap());

    let o = quadsum(&["--json", "represent", "T1.1iv", "107"]);
    assert_eq!(o.status.code(), Some(0));
    let rec: WitnessRecord = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!(rec.values.iter().sum::<i64>(), 1);
    assert!(rec
        .revalidate(&lookup("T1.1iv").unwrap().statement)
        .unwrap());
}

#[test]
fn represent_exit_codes() {
    assert_eq!(
        quadsum(&["represent", "T1.1iii-unsigned", "56"])
            .status
            .code(),
        Some(2)
    );
    let o = quadsum(&["represent", "T1.1iii-unsigned-noexcept", "56"]);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(stdout(&o).trim(), "none");
    assert_eq!(
        quadsum(&["represent", "no-such-id", "5"]).status.code(),
        Some(2)
    );
    assert_eq!(quadsum(&["represent", "T1.1ii"]).status.code(), Some(2));
    assert_eq!(
        quadsum(&["represent", "T1.1ii", "abc"]).status.code(),
        Some(2)
    );
    assert_eq!(quadsum(&["bogus"]).status.code(), Some(2));
    assert_eq!(quadsum(&["--help"]).status.code(), Some(0));
}

#[test]
fn verify_reports() {
    let o = quadsum(&["--json", "--workers", "4", "verify", "C4.10", "0", "10000"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert!(v["first_counterexample"].is_null());
    assert_eq!(v["checked_count"], 9999);

    let o = quadsum(&["--json", "verify", "C4.10-noexcept", "0", "100"]);
    assert_eq!(o.status.code(), Some(1));
    let v: serde_json::Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!(v["first_counterexample"], 71);

    assert_eq!(
        quadsum(&["verify", "C4.10", "10", "5"]).status.code(),
        Some(2)
    );
    assert_eq!(
        quadsum(&["--workers", "0", "verify", "C4.10", "1", "5"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn verify_progress_goes_to_stderr() {
    let o = quadsum(&["--json", "verify", "T1.1ii", "1", "200000"]);
    assert_eq!(o.status.code(), Some(0));
    let err = String::from_utf8(o.stderr.clone()).unwrap();
    assert!(
        err.contains("100000 n scanned") && err.contains("200000 n scanned"),
        "{err}"
    );
    assert_eq!(stdout(&o).lines().count(), 1);
}

#[test]
fn verify_24_conjecture_desk_range() {
    let o = quadsum(&["verify", "C4.7i", "1", "100000"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
}

#[test]
fn seq_lines() {
    let o = quadsum(&["seq", "C4.15i", "0", "30"]);
    assert_eq!(o.status.code(), Some(0));
    let ones: Vec<i64> = stdout(&o)
        .lines()
        .filter_map(|l| {
            let (n, c) = l.split_once(' ').unwrap();
            (c == "1").then(|| n.parse().unwrap())
        })
        .collect();
    assert_eq!(ones, [0, 1, 3, 5, 7, 14, 15, 16, 25, 30]);

    let o = quadsum(&["--json", "seq", "T1.1iv", "14", "14"]);
    let v: serde_json::Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert!(v["count"].as_u64().unwrap() >= 1);

    assert_eq!(
        quadsum(&["seq", "unknown-id", "0", "10"]).status.code(),
        Some(2)
    );
    let o = quadsum(&["seq", "C4.7i", "0", "10"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8(o.stderr.clone())
        .unwrap()
        .contains("convention"));
}

#[test]
fn oeis_check_offline() {
    let o = quadsum(&["--offline", "oeis-check", "T1.1iv", "A281494", "50"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).contains("50 terms match"));
    assert_eq!(
        quadsum(&["--offline", "oeis-check", "C4.15i", "A275344", "80"])
            .status
            .code(),
        Some(0)
    );
    assert_eq!(
        quadsum(&["--offline", "oeis-check", "C4.15ii", "A299924", "50"])
            .status
            .code(),
        Some(0)
    );
    // conventions that are not pinned down are refused
    assert_eq!(
        quadsum(&["--offline", "oeis-check", "C4.7i", "A281494", "5"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        quadsum(&["--offline", "oeis-check", "R1.3a", "A299825", "5"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        quadsum(&["--offline", "oeis-check", "T1.1iv", "A28149", "5"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn identity_check_codes() {
    assert_eq!(
        quadsum(&["identity-check", "10000", "42"]).status.code(),
        Some(0)
    );
    assert_eq!(
        quadsum(&["identity-check", "1", "0"]).status.code(),
        Some(0)
    );
    assert_eq!(
        quadsum(&["--seed", "9", "identity-check", "50"])
            .status
            .code(),
        Some(0)
    );
    assert_eq!(
        quadsum(&["identity-check", "500", "3", "--tamper"])
            .status
            .code(),
        Some(1)
    );
    assert_eq!(quadsum(&["identity-check", "0"]).status.code(), Some(2));
}

#[test]
fn list_and_classify() {
    let o = quadsum(&["--json", "list"]);
    assert_eq!(o.status.code(), Some(0));
    let lines: Vec<serde_json::Value> = stdout(&o)
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect();
    assert!(lines
        .iter()
        .any(|v| v["id"] == "C4.7i" && v["locus"] == "Conjecture 4.7(i)"));
    assert_eq!(lines.len(), quadsum_core::registry().len());

    let o = quadsum(&[
        "--json",
        "classify-quad",
        "7",
        "3",
        "2",
        "1",
        "--bound",
        "500",
    ]);
    let v: serde_json::Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!(v["listed"], true);
    assert!(v["first_failure"].is_null());
    assert_eq!(
        quadsum(&["classify-quad", "4", "4", "0", "0"])
            .status
            .code(),
        Some(2)
    );
}
