use std::path::Path;
use std::process::Command;

use clap::Parser;
use pairmds::code::CodeSpec;
use pairmds::families::{build_family, FamilyName};
use pairmds_cli::{run, Cli, Report, TableReport};

const BIN: &str = env!("CARGO_BIN_EXE_pairmds");

fn run_args(args: &[&str]) -> (i32, String, String) {
    let cli = Cli::try_parse_from(std::iter::once("pairmds").chain(args.iter().copied())).unwrap();
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = run(cli, &mut out, &mut err);
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

fn write_spec(dir: &Path, name: FamilyName, p: u64) -> String {
    let spec = CodeSpec::from_code(&build_family(name, p).unwrap());
    let path = dir.join(format!("{name}-{p}.json"));
    std::fs::write(&path, serde_json::to_string(&spec).unwrap()).unwrap();
    path.to_str().unwrap().to_string()
}

#[test]
fn family_report_values() {
    let (code, out, _) = run_args(&[
        "family",
        "--name",
        "thm1",
        "--p",
        "5",
        "--threads",
        "1",
        "--json",
        "-",
    ]);
    assert_eq!(code, 0);
    let report: Report = serde_json::from_str(&out).unwrap();
    assert_eq!(report.schema, 1);
    assert_eq!(
        (report.code.n, report.code.k, report.hamming.d_h),
        (20, 15, 4)
    );
    assert_eq!(report.d_p(), Some(7));
    assert_eq!(report.verdicts.pair_mds, Some(true));
    assert!(!report.verdicts.hamming_mds);
    assert!(report.mismatches.is_empty());
    assert!(out.starts_with("{\n  \"schema\": 1,"));
}

#[test]
fn bad_congruence_is_a_usage_error() {
    let (code, out, err) = run_args(&["family", "--name", "thm2", "--p", "7"]);
    assert_eq!(code, 2);
    assert!(out.is_empty());
    assert!(err.contains("p = 1 mod 5"), "{err}");
    let status = Command::new(BIN)
        .args(["family", "--name", "thm5", "--p", "7"])
        .output()
        .unwrap();
    assert_eq!(status.status.code(), Some(2));
}

#[test]
fn verify_accepts_and_rejects() {
    let dir = tempfile::tempdir().unwrap();
    let spec = write_spec(dir.path(), FamilyName::Thm2, 11);
    let (code, out, _) = run_args(&["verify", &spec, "--dp", "7", "-q"]);
    assert_eq!(code, 0, "{out}");
    assert!(out.contains("result    verified"));

    let (code, out, err) = run_args(&["verify", &spec, "--dp", "8", "-q"]);
    assert_eq!(code, 1);
    assert!(err.contains("DimensionMismatch"), "{err}");
    assert!(
        out.contains("mismatch  k: expected 49, computed 50"),
        "{out}"
    );

    let (code, _, _) = run_args(&["verify", &spec, "--dp", "500"]);
    assert_eq!(code, 2);
}

#[test]
fn verify_with_brute_force_agrees() {
    let dir = tempfile::tempdir().unwrap();
    let spec = write_spec(dir.path(), FamilyName::Thm1, 3);
    let json = dir.path().join("report.json");
    let (code, _, _) = run_args(&[
        "verify",
        &spec,
        "--dp",
        "7",
        "--brute-force",
        "--json",
        json.to_str().unwrap(),
    ]);
    assert_eq!(code, 0);
    let report: Report = serde_json::from_str(&std::fs::read_to_string(&json).unwrap()).unwrap();
    let bf = report.brute_force.clone().unwrap();
    assert_eq!(bf.d_p.and_then(|d| d.finite()), Some(7));
    assert_eq!(report.d_p(), Some(7));
}

#[test]
fn malformed_specs_exit_two() {
    let dir = tempfile::tempdir().unwrap();
    let cases = [
        ("garbage.json", "{not json"),
        (
            "notprime.json",
            r#"{"p": 9, "n": 6, "eta": 1, "factors": []}"#,
        ),
        (
            "notdivisor.json",
            r#"{"p": 3, "n": 6, "eta": 1, "factors": [{"coeffs": "1,0,1", "mult": 3}]}"#,
        ),
    ];
    for (name, body) in cases {
        let path = dir.path().join(name);
        std::fs::write(&path, body).unwrap();
        let (code, _, err) = run_args(&["dp", path.to_str().unwrap()]);
        assert_eq!(code, 2, "{name}: {err}");
        assert!(err.starts_with("error: "));
    }
    let (code, _, _) = run_args(&["dh", "/nonexistent/spec.json"]);
    assert_eq!(code, 2);
}

#[test]
fn reports_round_trip_byte_for_byte() {
    let dir = tempfile::tempdir().unwrap();
    let spec = write_spec(dir.path(), FamilyName::Thm3, 11);
    for args in [
        vec!["dp", spec.as_str(), "--json", "-", "-q"],
        vec!["dh", spec.as_str(), "--json", "-"],
        vec!["family", "--name", "thm1", "--p", "3", "--json", "-", "-q"],
        vec!["verify", spec.as_str(), "--dp", "8", "--json", "-", "-q"],
    ] {
        let (code, out, _) = run_args(&args);
        assert_eq!(code, 0, "{args:?}");
        let parsed: Report = serde_json::from_str(&out).unwrap();
        assert_eq!(parsed.to_json(), out);
    }
    let (_, out, _) = run_args(&["table", "--quick", "--json", "-", "-q"]);
    let parsed: TableReport = serde_json::from_str(&out).unwrap();
    assert_eq!(parsed.to_json(), out);
}

#[test]
fn dh_command() {
    let dir = tempfile::tempdir().unwrap();
    let spec = write_spec(dir.path(), FamilyName::Thm1, 3);
    let (code, out, _) = run_args(&["dh", &spec, "--brute-force", "--json", "-"]);
    assert_eq!(code, 0);
    let r: Report = serde_json::from_str(&out).unwrap();
    assert_eq!(r.hamming.d_h, 4);
    assert_eq!(r.hamming.levels.len(), 3);
    assert!(r.pair.is_none());
    assert_eq!(r.brute_force.unwrap().d_h.and_then(|d| d.finite()), Some(4));
}

#[test]
fn progress_goes_to_stderr_only() {
    let out = Command::new(BIN)
        .args([
            "family",
            "--name",
            "thm3",
            "--p",
            "11",
            "--threads",
            "2",
            "--json",
            "-",
        ])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let stderr = String::from_utf8(out.stderr).unwrap();
    assert!(
        stderr.contains("class w=4 r=1: 55 patterns, excluded"),
        "{stderr}"
    );
    let report: Report = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(report.d_p(), Some(8));
}

#[test]
fn thread_count_does_not_change_the_certificate() {
    let a = run_args(&[
        "family",
        "--name",
        "thm2",
        "--p",
        "11",
        "--threads",
        "1",
        "--json",
        "-",
        "-q",
    ]);
    let b = run_args(&[
        "family",
        "--name",
        "thm2",
        "--p",
        "11",
        "--threads",
        "3",
        "--json",
        "-",
        "-q",
    ]);
    let ra: Report = serde_json::from_str(&a.1).unwrap();
    let rb: Report = serde_json::from_str(&b.1).unwrap();
    assert_eq!(ra.pair, rb.pair);
    assert_eq!(
        run_args(&["family", "--name", "thm1", "--p", "3", "--threads", "0"]).0,
        2
    );
}

#[test]
fn quick_table() {
    let (code, out, _) = run_args(&["table", "--quick", "-q"]);
    assert_eq!(code, 0);
    assert!(out.contains("4/4 rows pass"), "{out}");
    let rows = out.lines().filter(|l| l.starts_with("thm")).count();
    assert_eq!(rows, 4);
    assert!(out.lines().nth(1).unwrap().trim_end().ends_with('s'));
}

#[test]
fn full_table() {
    let (code, out, _) = run_args(&["table", "-q", "--json", "-"]);
    assert_eq!(code, 0);
    let table: TableReport = serde_json::from_str(&out).unwrap();
    let rows: Vec<(FamilyName, u64, Option<usize>)> =
        table.rows.iter().map(|r| (r.family, r.p, r.d_p)).collect();
    assert_eq!(
        rows,
        vec![
            (FamilyName::Thm1, 3, Some(7)),
            (FamilyName::Thm1, 5, Some(7)),
            (FamilyName::Thm1, 13, Some(7)),
            (FamilyName::Thm2, 11, Some(7)),
            (FamilyName::Thm2, 31, Some(7)),
            (FamilyName::Thm3, 11, Some(8)),
            (FamilyName::Thm3, 31, Some(8)),
        ]
    );
    assert!(table.rows.iter().all(|r| r.pass));
}
