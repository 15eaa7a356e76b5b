use std::process::{Command, Output};

use schubert_cli::{analyze, Report};

fn schubert(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_schubert")).args(args).output().expect("binary runs")
}

fn stdout(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).expect("utf-8 output")
}

#[test]
fn json_report_round_trips() {
    let output = schubert(&["analyze", "5,10,7,2,9,8,1,6,3,4", "--format", "json"]);
    assert!(output.status.success());
    let report: Report = serde_json::from_str(&stdout(&output)).unwrap();
    let again: Report = serde_json::from_str(&serde_json::to_string(&report).unwrap()).unwrap();
    assert_eq!(report, again);
    let fresh = analyze(&report.w);
    assert_eq!(report.components, fresh.components);
    assert_eq!(report.quasi_resolutions, fresh.quasi_resolutions);
    assert_eq!(report.components.len(), 9);
}

#[test]
fn json_schema_field_names() {
    let output = schubert(&["analyze", "3 4 1 2", "--format", "json"]);
    let value: serde_json::Value = serde_json::from_str(&stdout(&output)).unwrap();
    assert_eq!(value["w"], serde_json::json!([3, 4, 1, 2]));
    assert_eq!(value["smooth"], false);
    let row = &value["components"][0];
    assert_eq!(row["v"], serde_json::json!([1, 3, 2, 4]));
    assert_eq!(row["type"], "C");
    assert_eq!((row["rows"].as_u64(), row["cols"].as_u64()), (Some(2), Some(2)));
    assert_eq!(row["dim"], 3);
    assert_eq!(row["codim"], 3);
    assert_eq!(row["kl"], serde_json::json!([1, 1]));
    assert_eq!(row["mult"], 2);
    assert!(value["meta"]["elapsed_us"].is_u64());

    let output = schubert(&["analyze", "5,10,7,2,9,8,1,6,3,4", "--format", "json"]);
    let value: serde_json::Value = serde_json::from_str(&stdout(&output)).unwrap();
    let quadric = value["components"].as_array().unwrap().iter().find(|c| c["type"] == "K").unwrap();
    assert_eq!(quadric["dim"], 5);
    assert!(quadric.get("rows").is_none());
    assert_eq!(quadric["kl"], serde_json::json!([1, 0, 1]));
}

#[test]
fn table_output_is_stable() {
    let first = stdout(&schubert(&["analyze", "5,10,7,2,9,8,1,6,3,4"]));
    let second = stdout(&schubert(&["analyze", "5,10,7,2,9,8,1,6,3,4"]));
    assert_eq!(first, second);
    assert!(first.contains("(5,7,2,1,10,9,8,6,3,4)  C_{3,3}  5  1+q+q^2  6"));
    assert!(first.contains("(5,10,3,2,9,7,1,6,4,8)  K_5      5  1+q^2    2"));
    assert_eq!(first.lines().count(), 12);
}

#[test]
fn smooth_and_single_component() {
    let out = stdout(&schubert(&["analyze", "1,2,3"]));
    assert_eq!(out, "(1,2,3): smooth\n");
    let out = stdout(&schubert(&["analyze", "(3,4,1,2)"]));
    assert!(out.contains("(1,3,2,4)  C_{2,2}  3  1+q  2"));
}

#[test]
fn quasires_output_and_errors() {
    let out = schubert(&["quasires", "6,7,5,1,8,4,2,3"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("frame [1,2,7,8]  h=3"));
    assert_eq!(text.matches("(6,7,5,1,4,3,2,8)").count(), 1);
    assert_eq!(text.lines().count(), 2 + 2 + 6);
    let out = stdout(&schubert(&["quasires", "6,4,2,7,1,5,3"]));
    assert!(out.contains("h=1") && out.contains("mixed [b'=4, c'=5]"));
    assert_eq!(schubert(&["quasires", "1,2,3,4"]).status.code(), Some(2));
}

#[test]
fn input_errors_exit_with_two() {
    assert_eq!(schubert(&["analyze", "1,1,2"]).status.code(), Some(2));
    assert_eq!(schubert(&["analyze", "1,x"]).status.code(), Some(2));
    assert_eq!(schubert(&["verify", "--n", "8", "--all"]).status.code(), Some(2));
    assert_eq!(schubert(&["verify", "--n", "5"]).status.code(), Some(2));
}

#[test]
fn smooth_and_oracle_commands() {
    let out = stdout(&schubert(&["smooth", "4,2,3,1"]));
    assert!(out.starts_with("(4,2,3,1): singular") && out.contains("4231 at [1,2,3,4]"));
    let out = schubert(&["oracle", "4,5,1,2,3", "--format", "json"]);
    assert!(out.status.success());
    let value: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(value["agree"], true);
}

#[test]
fn verify_small_groups() {
    let out = schubert(&["verify", "--n", "5", "--all"]);
    assert!(out.status.success(), "{}", stdout(&out));
    assert!(!stdout(&out).contains("FAIL"));
    let out = schubert(&["verify", "--n", "7", "--sample", "20", "--seed", "3", "--format", "json"]);
    assert!(out.status.success());
    let value: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(value["suites"][0]["tested"], 20);
}
