use std::path::Path;
use std::process::{Command, Output};

fn equik(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_equik"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).expect("utf-8 output")
}

fn write(dir: &Path, name: &str, body: &str) -> String {
    let path = dir.join(name);
    std::fs::write(&path, body).unwrap();
    path.to_str().unwrap().to_string()
}

#[test]
fn z2_bound_line() {
    let o = equik(&["rokhlin", "z2", "--m", "2"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "lower 2 (witness Z_2), upper 6 (join k=7)\n");
}

#[test]
fn join_ktheory_with_oracle() {
    let o = equik(&["join", "ktheory", "--set-size", "3", "--copies", "2", "--verify-oracle"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "K0 rank 1, K1 rank 4; oracle: consistent\n");
}

#[test]
fn z5_filtration_quotients() {
    let o = equik(&["rep", "ideal-powers", "--group", "z5", "--max", "3"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    for m in 1..=3 {
        assert!(text.contains(&format!("I^{m}/I^{} = Z_5", m + 1)), "{text}");
        assert!(text.contains(&format!("I^{m} (rank 4):")));
    }
}

#[test]
fn exit_codes() {
    assert_eq!(equik(&["rep", "lambda", "--p", "4"]).status.code(), Some(3));
    assert_eq!(equik(&["rep", "lambda", "--p", "7"]).status.code(), Some(0));
    assert_eq!(equik(&["rokhlin", "commutative", "--group", "z1", "--k", "2"]).status.code(), Some(2));
    assert_eq!(equik(&["rokhlin", "commutative", "--group", "su2", "--k", "2"]).status.code(), Some(3));
    assert_eq!(equik(&["rokhlin", "product-z2", "--m", "1", "--group", "z4"]).status.code(), Some(2));
    assert_eq!(equik(&["group", "tensor", "Z_0x", "Z"]).status.code(), Some(2));
    assert_eq!(equik(&["join", "ktheory", "--set-size", "0", "--copies", "2"]).status.code(), Some(2));
    assert_eq!(equik(&["no-such-command"]).status.code(), Some(2));
    assert_eq!(equik(&["validate", "/nonexistent/report.json"]).status.code(), Some(2));
}

#[test]
fn group_operations() {
    assert_eq!(stdout(&equik(&["group", "tensor", "Z^2 + Z_4", "Z_6"])), "Z_2 ⊕ Z_6 ⊕ Z_6\n");
    assert_eq!(stdout(&equik(&["group", "tor", "Z_4", "Z_6"])), "Z_2\n");
}

#[test]
fn snf_of_matrix_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = write(
        dir.path(),
        "m.json",
        r#"{"rows": 2, "cols": 2, "entries": ["2", "4", "6", "8"]}"#,
    );
    let o = equik(&["--json", "linalg", "snf", &path]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["invariant_factors"], serde_json::json!(["2", "4"]));

    let bad = write(dir.path(), "bad.json", r#"{"rows": 2, "cols": 2, "entries": ["1"]}"#);
    assert_eq!(equik(&["linalg", "hnf", &bad]).status.code(), Some(2));
}

#[test]
fn json_reports_round_trip_and_validate() {
    let dir = tempfile::tempdir().unwrap();
    let cases: &[&[&str]] = &[
        &["rokhlin", "z2", "--m", "2"],
        &["rokhlin", "circle", "--d", "2"],
        &["rokhlin", "product-z2", "--m", "1", "--group", "z3"],
        &["rokhlin", "circle-product", "--d", "1", "--group", "z3"],
        &["rokhlin", "z6-collapse", "--d", "1"],
        &["rokhlin", "commutative", "--group", "z2", "--k", "3"],
        &["rokhlin", "finite", "--group", "z3", "--n", "1"],
        &["rokhlin", "finite", "--group", "s3", "--n", "1"],
    ];
    let mut files = Vec::new();
    for (i, args) in cases.iter().enumerate() {
        let mut full = vec!["--json"];
        full.extend_from_slice(args);
        let o = equik(&full);
        assert_eq!(o.status.code(), Some(0), "{args:?}");
        let path = write(dir.path(), &format!("r{i}.json"), &stdout(&o));
        let v = equik(&["validate", &path]);
        assert_eq!(v.status.code(), Some(0), "{args:?}: {}", stdout(&v));
        assert!(stdout(&v).starts_with("valid: "));
        files.push(path);
    }
    for rule in ["sum", "min"] {
        let o = equik(&["--json", "rokhlin", "tensor-rule", "--rule", rule, &files[0], &files[1]]);
        assert_eq!(o.status.code(), Some(0));
        let path = write(dir.path(), &format!("{rule}.json"), &stdout(&o));
        assert_eq!(equik(&["validate", &path]).status.code(), Some(0));
    }
}

#[test]
fn forged_report_fails_validation() {
    let dir = tempfile::tempdir().unwrap();
    let good = stdout(&equik(&["--json", "rokhlin", "z2", "--m", "2"]));
    let forged = good.replacen("\"upper\": \"6\"", "\"upper\": \"5\"", 1);
    assert_ne!(good, forged);
    let path = write(dir.path(), "forged.json", &forged);
    let o = equik(&["validate", &path]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).starts_with("invalid: "));
    // Forged inputs are also refused by the tensor rules.
    let o = equik(&["rokhlin", "tensor-rule", "--rule", "sum", &path, &path]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn output_is_deterministic() {
    let cases: &[&[&str]] = &[
        &["--json", "rokhlin", "z6-collapse", "--d", "2"],
        &["join", "homology", "--set-size", "3", "--copies", "3"],
        &["--json", "rep", "ideal-powers", "--group", "z2xz3", "--max", "2"],
        &["linalg", "--help"],
    ];
    for args in cases {
        let a = equik(args);
        let b = equik(args);
        assert_eq!(a.stdout, b.stdout, "{args:?}");
    }
}

#[test]
fn meta_goes_to_stderr_only() {
    let plain = equik(&["rokhlin", "z2", "--m", "1"]);
    let meta = equik(&["--meta", "rokhlin", "z2", "--m", "1"]);
    assert_eq!(plain.stdout, meta.stdout);
    assert!(String::from_utf8_lossy(&meta.stderr).starts_with("meta: "));
    assert!(plain.stderr.is_empty());
}

#[test]
fn homology_table_rendering() {
    let o = equik(&["join", "homology", "--set-size", "2", "--copies", "3"]);
    assert_eq!(stdout(&o), "H0 = 0\nH1 = 0\nH2 = Z\n");
}
