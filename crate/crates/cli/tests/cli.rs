use std::process::{Command, Output};

use serde_json::Value;

fn selfconj(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_selfconj")).args(args).env_clear().output().expect("binary runs")
}

fn records(out: &Output) -> Vec<Value> {
    String::from_utf8(out.stdout.clone())
        .unwrap()
        .lines()
        .map(|l| serde_json::from_str(l).expect("one JSON object per line"))
        .collect()
}

#[test]
fn identical_runs_are_byte_identical() {
    let a = selfconj(&["check"]);
    let b = selfconj(&["check"]);
    assert!(!a.stdout.is_empty());
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(a.status.code(), b.status.code());
}

#[test]
fn out_file_matches_stdout() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.jsonl");
    let to_file = selfconj(&["check", "--suite", "halfspin", "--out", path.to_str().unwrap()]);
    let to_stdout = selfconj(&["check", "--suite", "halfspin"]);
    assert!(to_file.stdout.is_empty());
    assert_eq!(std::fs::read(&path).unwrap(), to_stdout.stdout);
}

#[test]
fn records_carry_every_field_and_are_sorted() {
    let out = selfconj(&["check"]);
    let recs = records(&out);
    let ids: Vec<&str> = recs.iter().map(|r| r["id"].as_str().unwrap()).collect();
    let mut sorted = ids.clone();
    sorted.sort_unstable();
    assert_eq!(ids, sorted);
    for r in &recs {
        for key in ["id", "anchor", "status", "residual", "tolerance", "bound", "measured"] {
            assert!(r.get(key).is_some(), "{key} missing in {r}");
        }
        assert!(["pass", "fail", "reported"].contains(&r["status"].as_str().unwrap()));
    }
}

#[test]
fn exit_status_reflects_failures() {
    let halfspin = selfconj(&["check", "--suite", "halfspin"]);
    assert_eq!(halfspin.status.code(), Some(0));
    assert!(records(&halfspin).iter().all(|r| r["status"] != "fail"));

    let fock = selfconj(&["check", "--suite", "fock"]);
    assert_eq!(fock.status.code(), Some(1));
    let failed: Vec<_> = records(&fock).into_iter().filter(|r| r["status"] == "fail").collect();
    assert_eq!(failed.len(), 1);
    assert_eq!(failed[0]["id"], "fock.no_simultaneous_eigenvector");
}

#[test]
fn usage_errors_exit_with_two() {
    for args in [
        &["check", "--tol", "-1"][..],
        &["check", "--tol", "0"],
        &["check", "--mass", "0"],
        &["check", "--grid", "1@bad"],
        &["check", "--suite", "nope"],
        &["check", "--format", "xml"],
        &["table", "lambda", "--momentum", "1,2"],
        &["table", "sideways"],
        &[],
    ] {
        let out = selfconj(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(out.stdout.is_empty(), "{args:?}");
    }
}

#[test]
fn suite_selection_filters_ids() {
    let out = selfconj(&["check", "--suite", "fock"]);
    let ids: Vec<String> = records(&out).iter().map(|r| r["id"].as_str().unwrap().to_owned()).collect();
    let expect: Vec<String> =
        selfconj::suite::check_ids(selfconj::suite::Suite::Fock).into_iter().map(String::from).collect();
    assert_eq!(ids, expect);

    let two = selfconj(&["check", "--suite", "spin1", "--suite", "fieldops"]);
    assert!(records(&two).iter().all(|r| {
        let id = r["id"].as_str().unwrap();
        id.starts_with("spin1.") || id.starts_with("fieldops.")
    }));
}

#[test]
fn text_format_summarizes() {
    let out = selfconj(&["check", "--suite", "spin1", "--format", "text"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.lines().last().unwrap().ends_with("1 failed"));
    assert!(text.contains("FAIL spin1.component_identities"));
}

#[test]
fn config_flags_reach_the_suites() {
    let out = selfconj(&["check", "--suite", "halfspin", "--mass", "0.5,2", "--grid", "1.5@0.3:0.2"]);
    assert_eq!(out.status.code(), Some(0));
    let recs = records(&out);
    let cc = recs.iter().find(|r| r["id"] == "halfspin.charge_conjugation_eigen").unwrap();
    assert_eq!(cc["measured"]["momenta"], 4);

    // the connection matrix is tied to zero rest phases
    let phased = records(&selfconj(&["check", "--suite", "halfspin", "--theta1", "0.4"]));
    let conn = phased.iter().find(|r| r["id"] == "halfspin.connection_matrix").unwrap();
    assert_eq!(conn["status"], "fail");
    let cc = phased.iter().find(|r| r["id"] == "halfspin.charge_conjugation_eigen").unwrap();
    assert_eq!(cc["status"], "pass");
}

#[test]
fn mr_table_on_z_axis_has_zero_longitudinal_u_plus() {
    let out = selfconj(&["table", "mr", "--momentum", "0,0,1"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    let row = text.lines().find(|l| l.starts_with("U+_longitudinal ")).unwrap();
    assert!(row.split_whitespace().skip(1).all(|x| x.parse::<f64>().unwrap() == 0.0));
    assert_eq!(text.lines().next().unwrap().split_whitespace().count(), 13);
}
