use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;
use tempfile::TempDir;

fn chromlab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_chromlab"))
        .args(args)
        .env_remove("CHROMLAB_CAP")
        .output()
        .expect("binary runs")
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let path = dir.join(name);
    fs::write(&path, text).unwrap();
    path.to_str().unwrap().to_owned()
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).unwrap()
}

fn records(out: &Output) -> Vec<Value> {
    stdout(out)
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect()
}

#[test]
fn compute_triangle() {
    let dir = TempDir::new().unwrap();
    let input = write(dir.path(), "k3.g6", "Bw\n");
    let out = chromlab(&["compute", "--input", &input, "--output", "records"]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let r = records(&out);
    assert_eq!(r.len(), 1);
    assert_eq!(
        (&r[0]["chi"], &r[0]["chi_L"], &r[0]["chi_D"]),
        (&3.into(), &3.into(), &3.into())
    );
    for field in [
        "n",
        "edges",
        "chi",
        "chi_L",
        "chi_D",
        "dim",
        "diam",
        "aut_order",
        "witnesses",
    ] {
        assert!(r[0].get(field).is_some(), "missing {field}");
    }
}

#[test]
fn compute_path_from_edge_list() {
    let dir = TempDir::new().unwrap();
    let input = write(dir.path(), "p7.txt", "7\n0 1\n1 2\n2 3\n3 4\n4 5\n5 6\n");
    let out = chromlab(&[
        "compute", "--input", &input, "--format", "edges", "--output", "records",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let r = &records(&out)[0];
    assert_eq!(
        [&r["chi"], &r["chi_L"], &r["chi_D"], &r["dim"]],
        [
            &Value::from(2),
            &Value::from(3),
            &Value::from(3),
            &Value::from(1)
        ]
    );
}

#[test]
fn empty_input_is_not_an_error() {
    let dir = TempDir::new().unwrap();
    let input = write(dir.path(), "empty.g6", "");
    let out = chromlab(&["compute", "--input", &input, "--output", "records"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).is_empty());
}

#[test]
fn parse_errors_name_the_line() {
    let dir = TempDir::new().unwrap();
    let input = write(dir.path(), "bad.g6", "Bw\n\nC~~\n");
    let out = chromlab(&["compute", "--input", &input]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("line 3"), "{}", stderr(&out));
    assert!(stdout(&out).is_empty());

    let input = write(dir.path(), "bad.txt", "3\n0 1\n1 x\n");
    let out = chromlab(&["compute", "--input", &input, "--format", "edges"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("line 3"), "{}", stderr(&out));
}

#[test]
fn cap_overflow_names_the_graph() {
    let out = chromlab(&["compute", "--family", "path", "--params", "17"]);
    assert_eq!(out.status.code(), Some(3));
    assert!(stderr(&out).contains("path(17)"), "{}", stderr(&out));

    let out = chromlab(&["verify", "--family", "spider", "--params", "4,4"]);
    assert_eq!(out.status.code(), Some(3));
    assert!(stderr(&out).contains("spider(4,4)"));

    let out = chromlab(&[
        "compute", "--family", "path", "--params", "17", "--cap", "17", "--output", "records",
    ]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn cap_from_environment() {
    let out = Command::new(env!("CARGO_BIN_EXE_chromlab"))
        .args(["compute", "--family", "cycle", "--params", "5"])
        .env("CHROMLAB_CAP", "4")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn verify_p7_example() {
    let dir = TempDir::new().unwrap();
    let g6 = chromlab(&["construct", "--family", "path", "--params", "7"]);
    let input = write(dir.path(), "p7.g6", &stdout(&g6));
    let out = chromlab(&[
        "verify",
        "--input",
        &input,
        "--theorem",
        "Ex-P7",
        "--output",
        "records",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let r = records(&out);
    assert_eq!(r.len(), 1);
    assert_eq!(r[0]["theorem_id"], "Ex-P7");
    assert_eq!(r[0]["status"], "holds");
    assert_eq!(r[0]["evidence"]["code"], serde_json::json!([1, 0, 1]));
}

#[test]
fn verify_spiders() {
    let out = chromlab(&[
        "verify",
        "--family",
        "spider",
        "--params",
        "3,4",
        "--theorem",
        "T-f1",
        "--output",
        "records",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let r = &records(&out)[0];
    assert_eq!(
        (
            &r["status"],
            &r["evidence"]["chi_D"],
            &r["evidence"]["chi_L"]
        ),
        (&"holds".into(), &3.into(), &4.into())
    );

    // The five-color claim for this spider does not hold; the refutation is
    // flagged, so the run still succeeds with a warning.
    let out = chromlab(&[
        "verify",
        "--family",
        "spider",
        "--params",
        "3,5",
        "--theorem",
        "T-f1",
        "--output",
        "records",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let r = &records(&out)[0];
    assert_eq!(
        (&r["status"], &r["flag"], &r["evidence"]["chi_L"]),
        (&"violated".into(), &"open-question".into(), &4.into())
    );
    assert!(stderr(&out).contains("warning"));
}

#[test]
fn sweep_five_holds_except_flagged() {
    let out = chromlab(&["verify", "--sweep", "5", "--output", "records"]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let r = records(&out);
    let graphs: std::collections::HashSet<&str> =
        r.iter().map(|v| v["graph_key"].as_str().unwrap()).collect();
    assert_eq!(graphs.len(), 1 + 1 + 2 + 6 + 21);
    for v in &r {
        if v["status"] == "violated" {
            assert_eq!(v["flag"], "open-question", "{v}");
        }
    }
    assert!(stderr(&out).contains("warning: T-trees-3 on CR"));
}

#[test]
fn workers_do_not_change_output() {
    let one = chromlab(&[
        "verify",
        "--sweep",
        "5",
        "--output",
        "records",
        "--workers",
        "1",
    ]);
    let many = chromlab(&[
        "verify",
        "--sweep",
        "5",
        "--output",
        "records",
        "--workers",
        "8",
    ]);
    assert_eq!(one.stdout, many.stdout);
    let zero = chromlab(&["verify", "--sweep", "5", "--workers", "0"]);
    assert_eq!(zero.status.code(), Some(2));
}

#[test]
fn tree_survey_and_census() {
    let out = chromlab(&["verify", "--sweep", "9", "--trees", "--output", "records"]);
    assert_eq!(out.status.code(), Some(0));
    let r = records(&out);
    assert_eq!(r.len(), 95);
    let flagged = r.iter().filter(|v| v["flag"] == "open-question").count();
    assert_eq!(flagged, 4);

    let out = chromlab(&["verify", "--sweep", "5", "--census", "--output", "records"]);
    assert_eq!(out.status.code(), Some(0));
    for s in records(&out) {
        assert_eq!(s["flags"]["chi3"], true);
        assert_eq!(
            (&s["report"]["chi_D"], &s["report"]["chi_L"]),
            (&3.into(), &3.into())
        );
    }
}

#[test]
fn enumerate_and_construct() {
    let out = chromlab(&["enumerate", "--sweep", "6"]);
    assert_eq!(stdout(&out).lines().count(), 143);
    let out = chromlab(&["enumerate", "--sweep", "9", "--trees"]);
    assert_eq!(stdout(&out).lines().count(), 95);
    let out = chromlab(&["enumerate", "--sweep", "8"]);
    assert_eq!(out.status.code(), Some(3));

    let out = chromlab(&[
        "construct",
        "--family",
        "spider",
        "--params",
        "3,5",
        "--format",
        "edges",
    ]);
    let text = stdout(&out);
    assert!(text.starts_with("11\n"));
    assert_eq!(text.lines().count(), 11);
    let out = chromlab(&["construct", "--family", "spider", "--params", "3,6"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn out_flag_writes_file() {
    let dir = TempDir::new().unwrap();
    let path = dir.path().join("reports.jsonl");
    let out = chromlab(&[
        "compute",
        "--family",
        "cycle",
        "--params",
        "5",
        "--output",
        "records",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).is_empty());
    let text = fs::read_to_string(path).unwrap();
    let v: Value = serde_json::from_str(text.trim()).unwrap();
    assert_eq!(v["aut_order"], 10);
}

#[test]
fn exactly_one_source() {
    let out = chromlab(&["compute"]);
    assert_eq!(out.status.code(), Some(2));
    let out = chromlab(&[
        "verify", "--sweep", "3", "--family", "path", "--params", "3",
    ]);
    assert_eq!(out.status.code(), Some(2));
}
