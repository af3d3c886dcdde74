use std::process::{Command, Output};

use unigen::format::{parse_field, parse_matrix};

fn unigen(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_unigen"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn build_table_parameter() {
    let o = unigen(&[
        "build",
        "--q",
        "3",
        "--n",
        "6",
        "--modulus",
        "2,1,1",
        "--a",
        "t",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("order_x: 2\norder_y: 3\n"), "{text}");
    assert!(text.contains("cond_iii: true"));
}

#[test]
fn build_q2() {
    let o = unigen(&["build", "--q", "2", "--format", "structured"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["field"], "2^2:1,1,1");
    assert_eq!(v["order_x"], 2);
    // matrices re-parse from their rows
    let field = parse_field(v["field"].as_str().unwrap()).unwrap();
    let rows: Vec<String> = v["x"]
        .as_array()
        .unwrap()
        .iter()
        .map(|r| {
            r.as_array()
                .unwrap()
                .iter()
                .map(|t| t.as_str().unwrap())
                .collect::<Vec<_>>()
                .join(", ")
        })
        .collect();
    let x = parse_matrix(&field, &rows.join("\n")).unwrap();
    assert!(x.mul(&x, &field).is_identity(&field));
}

#[test]
fn unsupported_shape_exits_2() {
    let o = unigen(&["build", "--q", "3", "--n", "8"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("unsupported: n=8, q=3"));
    assert!(o.stdout.is_empty());
}

#[test]
fn invalid_parameter_prints_report() {
    let o = unigen(&["build", "--q", "5", "--a", "3"]);
    assert_eq!(o.status.code(), Some(2));
    let err = String::from_utf8_lossy(&o.stderr);
    assert!(err.contains("not_in_subfield: false"), "{err}");
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(unigen(&["build"]).status.code(), Some(2));
    assert_eq!(unigen(&["build", "--q", "6"]).status.code(), Some(2));
    assert_eq!(unigen(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(
        unigen(&["certify", "--q", "5", "--modulus", "1,0,1"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(unigen(&["count", "--q", "1031"]).status.code(), Some(2));
}

#[test]
fn certify_q2_passes() {
    let o = unigen(&["certify", "--q", "2", "--n", "6"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("passed: true"));
    assert!(
        text.contains("xy: 11\n    [x,y]: 9\n    [x,y]^2xy: 21\n"),
        "{text}"
    );
}

#[test]
fn certify_subfield_parameter_fails() {
    let o = unigen(&["certify", "--q", "3", "--a", "1", "--format", "structured"]);
    assert_eq!(o.status.code(), Some(1));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["passed"], false);
    assert_eq!(v["checks"][0]["not_in_subfield"], false);
}

#[test]
fn table_and_identities() {
    let o = unigen(&["table"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).ends_with("11/11 rows pass\n"));
    let o = unigen(&["identities"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.starts_with("PASS  res_alpha_beta"), "{text}");
    assert_eq!(text.lines().filter(|l| l.starts_with("PASS")).count(), 8);
}

#[test]
fn search_and_count() {
    let o = unigen(&["search", "--p", "2", "--f", "2"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("found: true"));
    assert_eq!(unigen(&["search", "--q", "2"]).status.code(), Some(1));
    let o = unigen(&["count", "--q", "23", "--format", "structured"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["failures"], 114);
    assert_eq!(v["primitives"], 160);
}

#[test]
fn out_file_and_footer() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("cert.txt");
    let p = path.to_str().unwrap();
    let o = unigen(&["certify", "--q", "4", "--out", p, "--footer"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    let with_footer = std::fs::read_to_string(&path).unwrap();
    let body = stdout(&unigen(&["certify", "--q", "4"]));
    assert!(with_footer.starts_with(&body));
    assert!(with_footer[body.len()..].starts_with("# generated_unix_time: "));
}

#[test]
fn structured_output_is_byte_identical() {
    let args = ["certify", "--q", "5", "--n", "7", "--format", "structured"];
    let a = unigen(&args);
    let b = unigen(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
}
