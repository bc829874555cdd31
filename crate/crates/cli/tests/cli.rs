//! End-to-end behaviour of the `mckay` binary.

use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_mckay"))
        .args(args)
        .output()
        .expect("runs the binary")
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert_eq!(
        out.status.code(),
        Some(0),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn list_rows() {
    let text = stdout(&["list"]);
    let lines: Vec<&str> = text.lines().collect();
    for row in [
        "T<O : restricted=E6^(2), induced=F4^(1)",
        "I : A-D-E type E8^(1)",
        "C2<D2 : restricted=A2^(2), induced=A1^(1)",
    ] {
        assert!(lines.contains(&row), "missing {row:?} in\n{text}");
    }
}

#[test]
fn kostant_csv_for_c2() {
    let text = stdout(&["kostant", "--input", "C2", "--k", "4", "--format", "csv"]);
    assert_eq!(text, "0,1,0\n1,0,2\n2,3,0\n3,0,4\n4,5,0\n");
}

#[test]
fn restricted_quiver_of_c2_in_quaternions() {
    let text = stdout(&[
        "quiver",
        "--input",
        "C2<D2",
        "--mode",
        "restricted",
        "--format",
        "json",
    ]);
    let v: Value = serde_json::from_str(&text).unwrap();
    assert_eq!(v["cartan"], serde_json::json!([[2, -4], [-1, 2]]));
    assert_eq!(v["type"], "A2^(2)");
    let csv = stdout(&[
        "quiver",
        "--input",
        "C2<D2",
        "--mode",
        "restricted",
        "--format",
        "csv",
    ]);
    assert_eq!(csv, "2,-4\n-1,2\n");
}

#[test]
fn poincare_series_of_icosahedral_invariants() {
    let text = stdout(&[
        "poincare", "--input", "I", "--node", "0", "--format", "json",
    ]);
    let v: Value = serde_json::from_str(&text).unwrap();
    let num: Vec<i64> = serde_json::from_value(v["num"].clone()).unwrap();
    let mut want = vec![0; 31];
    want[0] = 1;
    want[30] = 1;
    assert_eq!(num, want);
    assert_eq!(v["exponents"], serde_json::json!({"a": 12, "b": 20}));
    let plain = stdout(&["poincare", "--input", "I", "--node", "0"]);
    assert!(plain.contains("(degree 30)"), "{plain}");
    assert!(plain.contains("den=(1-t^12)(1-t^20)"), "{plain}");
}

#[test]
fn verify_single_inputs() {
    let text = stdout(&["verify", "--input", "C5"]);
    assert!(
        text.lines()
            .any(|l| l.contains("bipartition: SKIPPED") && l.contains("odd cycle")),
        "{text}"
    );
    let text = stdout(&["verify", "--input", "C2<D2", "--mode", "restricted"]);
    assert!(
        text.lines().any(|l| l.contains("orbit-support: SKIPPED")),
        "{text}"
    );
    assert!(
        text.lines().any(|l| l.contains("orbit-sum: SKIPPED")),
        "{text}"
    );
    assert!(!text.contains("FAIL"), "{text}");
}

#[test]
fn verify_fast_passes() {
    let text = stdout(&["verify", "--level", "fast"]);
    assert!(
        text.trim_end().ends_with("0 failed"),
        "{}",
        text.lines().last().unwrap_or("")
    );
}

#[test]
fn bad_input_exits_with_2() {
    for args in [
        &["quiver", "--input", "Q"][..],
        &["kostant", "--input", "C3<D2"],
        &["quiver", "--input", "C4", "--mode", "induced"],
        &["poincare", "--input", "C2", "--node", "7"],
    ] {
        let out = run(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(!out.stderr.is_empty());
    }
}

#[test]
fn orbit_request_on_excluded_type_is_not_silent() {
    let out = run(&["verify", "--input", "C3"]);
    assert_eq!(out.status.code(), Some(0));
    let out = run(&[
        "poincare",
        "--input",
        "C2<D2",
        "--mode",
        "restricted",
        "--format",
        "json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert!(v["exponents"].is_null());
}

#[test]
fn output_is_deterministic() {
    for args in [
        &["list", "--format", "json"][..],
        &["kostant", "--input", "T<O", "--format", "json"],
        &["verify", "--input", "D2<T", "--format", "csv"],
    ] {
        assert_eq!(run(args).stdout, run(args).stdout, "{args:?}");
    }
}

#[test]
fn json_round_trips() {
    for args in [
        &["list", "--format", "json"][..],
        &["quiver", "--input", "O", "--format", "json"],
        &["kostant", "--input", "C4<D2", "--format", "json"],
        &["poincare", "--input", "T", "--format", "json"],
        &["verify", "--input", "T<O", "--format", "json"],
    ] {
        let text = stdout(args);
        let v: Value = serde_json::from_str(&text).unwrap();
        assert_eq!(
            serde_json::to_string_pretty(&v).unwrap() + "\n",
            text,
            "{args:?}"
        );
    }
}

#[test]
fn kostant_json_carries_both_orderings() {
    let text = stdout(&["kostant", "--input", "T<O", "--k", "6", "--format", "json"]);
    let v: Value = serde_json::from_str(&text).unwrap();
    let perm: Vec<usize> = serde_json::from_value(v["canonical_permutation"].clone()).unwrap();
    let native: Vec<Vec<i64>> = serde_json::from_value(v["xk"].clone()).unwrap();
    let canonical: Vec<Vec<i64>> = serde_json::from_value(v["xk_canonical"].clone()).unwrap();
    assert_eq!(native.len(), 7);
    for (x, c) in native.iter().zip(&canonical) {
        for (i, &p) in perm.iter().enumerate() {
            assert_eq!(x[i], c[p]);
        }
    }
}
