use std::process::Command;

use nichols_cli::{run, EXIT_LIMIT, EXIT_OK, EXIT_USAGE};
use nichols_core::criteria::{pair_verdict, RepSpec};
use nichols_core::perm::CycleType;
use serde_json::Value;

fn nichols(args: &[&str]) -> nichols_cli::Output {
    run(std::iter::once("nichols").chain(args.iter().copied()))
}

fn golden(name: &str) -> String {
    let path = format!("{}/tests/golden/{name}", env!("CARGO_MANIFEST_DIR"));
    std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{path}: {e}"))
}

#[test]
fn tables_match_golden_files() {
    for (which, fmt, file) in [
        ("s3", "text", "table_s3.txt"),
        ("s3", "json", "table_s3.json"),
        ("s4", "text", "table_s4.txt"),
        ("s4", "json", "table_s4.json"),
    ] {
        let out = nichols(&["table", which, "--format", fmt]);
        assert_eq!(out.code, EXIT_OK);
        assert_eq!(out.stdout, golden(file), "{file}");
    }
}

#[test]
fn cli_verdicts_equal_library_verdicts() {
    let cases = [
        (4, "2^2", "d4:rho2"),
        (3, "2 1", "sgn"),
        (6, "2 1^4", "sgn*eps"),
        (4, "4", "chi4"),
        (5, "3", "chi3*sgn"),
        (7, "2^2 3", "d4:(1,-1)*eps"),
    ];
    for (n, t, r) in cases {
        let out = nichols(&["verdict", "-n", &n.to_string(), "-t", t, "-r", r, "--format", "json"]);
        assert_eq!(out.code, EXIT_OK, "{t} {r}: {}", out.stderr);
        let cli: Value = serde_json::from_str(&out.stdout).unwrap();
        let ty = CycleType::parse(t, n).unwrap();
        let mut lib = pair_verdict(n, &ty, &RepSpec::Label(r.parse().unwrap())).unwrap().to_json();
        lib["query"] = cli["query"].clone();
        assert_eq!(cli, lib, "{t} {r}");
    }
}

#[test]
fn worked_examples() {
    let out = nichols(&["verdict", "-n", "4", "-t", "2^2", "-r", "d4:rho2", "--format", "json"]);
    let v: Value = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(v["outcome"], "infinite");
    let last = v["trace"].as_array().unwrap().last().unwrap();
    assert_eq!(last["rule"], "diagonal-cartan");
    assert!(last["note"].as_str().unwrap().contains("affine A2^(1)"));

    let out = nichols(&["verdict", "-n", "3", "-t", "2 1", "-r", "sgn", "--format", "json"]);
    let v: Value = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!((v["outcome"].as_str(), v["dim"].as_u64()), (Some("known-finite"), Some(12)));

    let out = nichols(&["verdict", "-n", "6", "-t", "2 1^4", "-r", "sgn*eps"]);
    assert_eq!(out.code, EXIT_OK);
    assert!(out.stdout.contains("no implemented criterion applies"));
}

#[test]
fn hilbert_and_braiding_outputs() {
    let out = nichols(&["hilbert", "-n", "3", "-t", "2", "-r", "sgn", "--dmax", "5", "--format", "json"]);
    let v: Value = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(v["dims"], serde_json::json!([1, 3, 4, 3, 1, 0]));
    assert_eq!(v["total"], 12);

    let out = nichols(&["braiding", "-n", "3", "-t", "2", "-r", "sgn", "--format", "json"]);
    let v: Value = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(v["dim"], 3);
    assert_eq!(v["entries"].as_array().unwrap().len(), 9);
    assert_eq!(v["schema_version"], nichols_core::criteria::SCHEMA_VERSION);
}

#[test]
fn orbit_scan_and_centralizer() {
    let out = nichols(&["orbit", "-n", "5", "--format", "json"]);
    let v: Value = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(v["orbits"].as_array().unwrap().len(), 7);

    let out = nichols(&["centralizer", "-n", "4", "-t", "2", "--format", "json"]);
    let v: Value = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(v["order"], "4");
    assert_eq!(v["labels_complete"], true);
    assert_eq!(v["irreducible_labels"].as_array().unwrap().len(), 4);
    assert_eq!(v["blocks"][0]["cycles"], serde_json::json!([[1, 2]]));
    assert_eq!(v["blocks"][1]["cycles"], serde_json::json!([[3], [4]]));
}

#[test]
fn exit_codes() {
    assert_eq!(nichols(&["verdict", "-n", "3", "-t", "5", "-r", "sgn"]).code, EXIT_USAGE);
    assert_eq!(nichols(&["verdict", "-n", "3", "-t", "2", "-r", "nope"]).code, EXIT_USAGE);
    assert_eq!(nichols(&["verdict", "-n", "3", "-t", "2", "-r", "chi4"]).code, EXIT_USAGE);
    assert_eq!(nichols(&["frobnicate"]).code, EXIT_USAGE);
    assert_eq!(nichols(&["table", "s5"]).code, EXIT_USAGE);
    let over = nichols(&["hilbert", "-n", "3", "-t", "2", "-r", "sgn", "--dmax", "5", "--budget", "100"]);
    assert_eq!(over.code, EXIT_LIMIT);
    assert!(over.stderr.contains("[1, 3, 4, 3, 1]"), "{}", over.stderr);
    assert_eq!(nichols(&["braiding", "-n", "8", "-t", "2", "-r", "sgn", "--budget", "10"]).code, EXIT_LIMIT);
    assert_eq!(nichols(&["--help"]).code, EXIT_OK);
}

#[test]
fn binary_honours_budget_variable() {
    let bin = env!("CARGO_BIN_EXE_nichols");
    let status = Command::new(bin)
        .args(["hilbert", "-n", "3", "-t", "2", "-r", "sgn", "--dmax", "5"])
        .env("NICHOLS_BUDGET", "100")
        .output()
        .unwrap();
    assert_eq!(status.status.code(), Some(EXIT_LIMIT));

    let ok = Command::new(bin)
        .args(["hilbert", "-n", "3", "-t", "2", "-r", "sgn", "--dmax", "5", "--budget", "1000"])
        .env("NICHOLS_BUDGET", "100")
        .output()
        .unwrap();
    assert_eq!(ok.status.code(), Some(EXIT_OK));
    assert!(String::from_utf8_lossy(&ok.stdout).contains("dims: 1 3 4 3 1 0"));
}

#[test]
fn output_is_deterministic() {
    let args = ["verdict", "-n", "4", "-t", "2^2", "-r", "d4:rho2", "--format", "json"];
    assert_eq!(nichols(&args), nichols(&args));
}
