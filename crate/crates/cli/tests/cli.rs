use std::io::Write;
use std::process::{Command, Output};

fn tabtype(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_tabtype")).args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn ok(args: &[&str]) -> String {
    let out = tabtype(args);
    assert_eq!(out.status.code(), Some(0), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    stdout(&out)
}

#[test]
fn exchanged_permutation_type_with_count() {
    assert_eq!(
        ok(&["perm-type", "--perm", "3,2,1", "--exchange", "--count"]),
        "{\"shape\":[[1,1],[1,2],[2,1]],\"count\":2}\n"
    );
}

#[test]
fn balanced_and_standard_counts() {
    assert_eq!(ok(&["balanced", "--shape", "2,2", "--count"]), "2\n");
    assert_eq!(ok(&["standard", "--shape", "3,2", "--count"]), "5\n");
    let listed: serde_json::Value = serde_json::from_str(&ok(&["balanced", "--shape", "2,2"])).unwrap();
    assert_eq!(listed.as_array().unwrap().len(), 2);
}

#[test]
fn oracle_suite_passes() {
    let text = ok(&["verify", "--suite", "oracle", "--max-n", "5"]);
    assert!(text.lines().count() >= 6);
    assert!(text.lines().all(|l| l.contains("PASS")));
    assert!(text.contains("S_5 (120 cases)"));
}

#[test]
fn validation_errors_exit_2() {
    for args in [
        &["perm-type", "--perm", "1,1"][..],
        &["balanced", "--shape", "1,2", "--count"],
        &["count", "--in", "{\"boxes\":[[1,1,3]]}"],
        &["partial", "--perm", "2,1,4,3"],
        &["partial", "--perm", "3,2,1", "--fixed", "(0,1)"],
        &["verify", "--suite", "nonsense"],
        &["count"],
    ] {
        let out = tabtype(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(!out.stderr.is_empty());
    }
}

#[test]
fn truncated_enumeration_exits_3() {
    let out = tabtype(&["enum", "--perm", "3,2,1", "--limit", "1"]);
    assert_eq!(out.status.code(), Some(3));
    let listed: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(listed.as_array().unwrap().len(), 1);
    assert_eq!(ok(&["enum", "--perm", "3,2,1", "--limit", "2"]).matches("boxes").count(), 2);
}

#[test]
fn enum_output_round_trips_through_type_of() {
    let listed: Vec<serde_json::Value> = serde_json::from_str(&ok(&["enum", "--perm", "4,2,3,1"])).unwrap();
    assert_eq!(listed.len().to_string(), ok(&["count", "--perm", "4,2,3,1"]).trim());
    let ty = ok(&["perm-type", "--perm", "4,2,3,1"]);
    for t in listed {
        assert_eq!(ok(&["type-of", "--in", &t.to_string()]), ty);
    }
}

#[test]
fn type_input_from_file_and_exchange() {
    let ty = ok(&["perm-type", "--perm", "1,4,3,2"]);
    let mut file = tempfile::NamedTempFile::new().unwrap();
    file.write_all(ty.as_bytes()).unwrap();
    let path = file.path().to_str().unwrap();
    assert_eq!(ok(&["count", "--in", path]), "2\n");
    let exchanged = ok(&["exchange", "--in", path]);
    assert_eq!(exchanged, ok(&["perm-type", "--perm", "1,4,3,2", "--exchange"]));
    assert_eq!(ok(&["count", "--in", exchanged.trim()]), "2\n");
    let out = tabtype(&["exchange", "--in", path, "--trace"]);
    let trace = String::from_utf8(out.stderr).unwrap();
    assert!(trace.contains("erase empty rows"));
    assert!(trace.contains("erase empty columns"));
}

#[test]
fn s_lambda_output_round_trips() {
    let text = ok(&["s-lambda", "--shape", "8,7,7,7,3,3,1"]);
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(v["k"], 10);
    assert_eq!(v["bridge"], true);
    assert_eq!(v["sigma"].as_array().unwrap().len(), 11);
    assert_eq!(ok(&["s-lambda", "--in", text.trim()]), text);
    assert!(ok(&["s-lambda", "--shape", "2,1", "--render"]).contains("sigma = [3,2,1]"));
}

#[test]
fn partial_fill_report() {
    let v: serde_json::Value = serde_json::from_str(&ok(&["partial", "--perm", "3,2,1", "--fixed", "(1,2)"])).unwrap();
    assert_eq!(v["count"], 1);
    assert_eq!(v["witness"], serde_json::json!([2, 3, 1]));
    assert_eq!(v["witness_reduced_words"], 1);
    assert_eq!(v["nice"], serde_json::json!([1, 1]));
    let v: serde_json::Value = serde_json::from_str(&ok(&["partial", "--perm", "3,2,1", "--fixed", "(1,1)"])).unwrap();
    assert_eq!(v["count"], 0);
    assert!(v["witness"].is_null());
}

#[test]
fn schur_polynomials() {
    let sst = ok(&["schur", "--perm", "3,2,1", "--exchange", "--vars", "2"]);
    assert_eq!(sst, "{\"m\":2,\"terms\":[{\"exps\":[1,2],\"coef\":1},{\"exps\":[2,1],\"coef\":1}]}\n");
    assert_eq!(ok(&["schur", "--shape", "2,1", "--vars", "2"]), sst);
    assert_eq!(ok(&["schur", "--shape", "2", "--vars", "2", "--render"]), "x1^2 + x1*x2 + x2^2\n");
}

#[test]
fn budget_is_enforced() {
    let out = Command::new(env!("CARGO_BIN_EXE_tabtype"))
        .args(["schur", "--shape", "2,2", "--perm", "3,2,1"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    let out = Command::new(env!("CARGO_BIN_EXE_tabtype"))
        .args(["schur", "--perm", "4,3,2,1", "--exchange", "--vars", "3"])
        .env("TABTYPE_BUDGET", "10")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("limit"));
}

#[test]
fn stats_and_vexillary() {
    assert_eq!(ok(&["stats", "--shape", "2,1"]), "{\"types\":3,\"total\":6,\"mean\":\"2\",\"variance\":\"0\"}\n");
    let v: serde_json::Value = serde_json::from_str(&ok(&["stats", "--in", "{\"boxes\":[[1,1],[2,2]]}"])).unwrap();
    assert_eq!(v["total"], 2);
    let v: serde_json::Value = serde_json::from_str(&ok(&["vexillary", "--perm", "2,1,4,3"])).unwrap();
    assert_eq!(v["vexillary"], false);
    assert_eq!(v["reduced_words"], 2);
}

#[test]
fn rendering() {
    assert_eq!(ok(&["perm-type", "--perm", "3,2,1", "--render"]), "1 0\n0 .\n");
    assert_eq!(ok(&["standard", "--shape", "2", "--render"]), "1 2\n");
}

#[test]
fn output_is_deterministic() {
    let args = ["enum", "--perm", "2,4,3,1", "--exchange"];
    assert_eq!(ok(&args), ok(&args));
}
