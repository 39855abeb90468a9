//! Command-line contract: exit codes, report schema, golden reports and
//! scheduling-independent output.

use std::path::PathBuf;

use wilker::cli::{run_with_io, EXIT_MISMATCH, EXIT_OK, EXIT_UNKNOWN, EXIT_USAGE};

fn manifest(rel: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join(rel).display().to_string()
}

fn run(args: &[&str]) -> (i32, String, String) {
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = run_with_io(args.iter().copied(), &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn fixture(name: &str) -> String {
    manifest(&format!("tests/fixtures/{name}.ineq"))
}

fn temp_path(name: &str) -> PathBuf {
    std::env::temp_dir().join(format!("wilker-cli-{}-{name}", std::process::id()))
}

#[test]
fn exit_0_when_every_claim_matches() {
    let (code, out, _) = run(&["prove", "--corpus", &fixture("proved"), "--format", "json"]);
    assert_eq!(code, EXIT_OK);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["claims"].as_array().unwrap().len(), 2);
}

#[test]
fn exit_1_on_contradicted_expectation() {
    let (code, out, _) = run(&["prove", "--corpus", &fixture("mismatch")]);
    assert_eq!(code, EXIT_MISMATCH, "{out}");
}

#[test]
fn exit_2_on_undecided_claim() {
    let (code, out, _) = run(&["prove", "--corpus", &fixture("unknown"), "--max-depth", "12"]);
    assert_eq!(code, EXIT_UNKNOWN, "{out}");
    assert!(out.contains("Unknown"));
}

#[test]
fn mismatch_outranks_unknown() {
    let (code, _, _) = run(&["prove", "--corpus", &fixture("mixed"), "--max-depth", "12"]);
    assert_eq!(code, EXIT_MISMATCH);
}

#[test]
fn exit_3_on_usage_and_input_errors() {
    let cases: &[&[&str]] = &[
        &["prove", "--corpus", "nosuch.ineq"],
        &["prove", "--bogus"],
        &["frobnicate"],
        &["prove", "--precision", "32"],
        &["prove", "--eps", "0"],
        &["prove", "--eps", "one"],
        &["prove", "--name", "NO_SUCH_CLAIM"],
        &["series", "--id", "NOPE"],
        &["series", "--id", "COT", "--format", "json"],
        &["sequences", "--id", "S_NOPE", "--mode", "positive", "--nmax", "5"],
        &["identities", "--id", "ID_NOPE", "--nmax", "5"],
        &["limits", "--theorem", "T3.3", "--endpoint", "right"],
        &["scan", "--theorem", "T3.9"],
    ];
    for args in cases {
        let (code, _, err) = run(args);
        assert_eq!(code, EXIT_USAGE, "{args:?}");
        assert!(!err.is_empty(), "{args:?} left no diagnostic");
    }
    let (code, _, err) = run(&["prove", "--corpus", &fixture("malformed")]);
    assert_eq!(code, EXIT_USAGE);
    assert!(err.contains("BROKEN"), "{err}");
}

#[test]
fn prove_writes_json_report() {
    let path = temp_path("thm31.json");
    let p = path.display().to_string();
    let (code, _, _) = run(&["prove", "--corpus", &manifest("corpus/paper.ineq"), "--name", "THM31_LO", "--eps", "1e-3", "--out", &p]);
    assert_eq!(code, EXIT_OK);
    let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    std::fs::remove_file(&path).ok();
    for key in ["version", "config", "claims"] {
        assert!(v.get(key).is_some(), "missing {key}");
    }
    let claim = &v["claims"][0];
    for key in ["name", "status", "witness", "leaves", "max_depth", "sharp", "findings", "ms"] {
        assert!(claim.get(key).is_some(), "missing claims[].{key}");
    }
    assert_eq!(claim["status"], "Proved");
    assert_eq!(claim["sharp"]["paper_value"], "1/60");
    assert_eq!(claim["sharp"]["match"], true);
    assert!(claim["ms"].is_null());
}

#[test]
fn timing_fills_ms() {
    let (_, out, _) = run(&["prove", "--name", "HUY_TRIG", "--format", "json", "--timing"]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert!(v["claims"][0]["ms"].is_number());
}

#[test]
fn refutation_report_carries_witness() {
    let (code, out, _) = run(&["prove", "--name", "THM33", "--x-max", "10", "--format", "json"]);
    assert_eq!(code, EXIT_OK);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    let w = &v["claims"][0]["witness"];
    for key in ["lo", "hi", "midpoint_value"] {
        assert!(w[key].is_string(), "witness.{key}");
    }
}

#[test]
fn sequence_violation_is_the_expected_outcome() {
    let (code, out, _) = run(&["sequences", "--id", "S_T33_C", "--mode", "increasing", "--nmax", "500", "--format", "json"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("first_violation n=2 value=-3/140"), "{out}");
}

#[test]
fn bernoulli_csv_ends_with_b12() {
    let (code, out, _) = run(&["bernoulli", "--upto", "12"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(out.lines().next(), Some("n,value"));
    assert_eq!(out.lines().last(), Some("12,-691/2730"));
}

#[test]
fn series_csv_header() {
    let (code, out, _) = run(&["series", "--id", "X_OVER_SIN", "--nmax", "3"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(out, "n,exponent,coefficient\n1,2,1/6\n2,4,7/360\n3,6,31/15120\n");
}

#[test]
fn reports_are_deterministic_across_thread_counts() {
    let args = |t: &'static str| ["prove", "--name", "THM3*", "--name", "WILKER*", "--format", "json", "--threads", t];
    let (c1, one, _) = run(&args("1"));
    let (c4, four, _) = run(&args("4"));
    let (_, again, _) = run(&args("4"));
    assert_eq!((c1, c4), (EXIT_OK, EXIT_OK));
    assert_eq!(one, four);
    assert_eq!(four, again);
}

/// Byte-for-byte report snapshots; regenerate with `UPDATE_GOLDEN=1`.
#[test]
fn golden_reports() {
    let cases: &[(&str, &[&str])] = &[
        ("sequences.json", &["sequences", "--format", "json"]),
        ("identities.json", &["identities", "--format", "json"]),
        ("limits.json", &["limits", "--format", "json"]),
        ("bernoulli.csv", &["bernoulli", "--upto", "30"]),
        ("series_csc3.csv", &["series", "--id", "CSC3", "--nmax", "10"]),
        ("prove_theorems.json", &["prove", "--name", "THM3*", "--format", "json"]),
    ];
    let update = std::env::var_os("UPDATE_GOLDEN").is_some();
    for (file, args) in cases {
        let (_, out, err) = run(args);
        assert!(err.is_empty(), "{file}: {err}");
        let path = manifest(&format!("tests/golden/{file}"));
        if update {
            std::fs::write(&path, &out).unwrap();
            continue;
        }
        let want = std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{path}: {e}"));
        assert_eq!(out, want, "{file} drifted from its golden copy");
    }
}
