//! End-to-end tests of the `maxis` binary: pipe composition, exit codes,
//! and output formats.

use std::io::Write;
use std::process::{Command, Output, Stdio};

fn maxis(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_maxis"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary spawns");
    child
        .stdin
        .as_mut()
        .unwrap()
        .write_all(stdin.as_bytes())
        .unwrap();
    child.wait_with_output().unwrap()
}

fn stdout_of(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn stderr_of(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).unwrap()
}

#[test]
fn construct_then_count_f52() {
    let constructed = maxis(&["construct", "--kind", "F", "--n", "5", "--alpha", "2"], "");
    assert!(constructed.status.success());
    let graph6 = stdout_of(&constructed);
    assert_eq!(graph6.lines().count(), 1);

    let counted = maxis(&["count"], &graph6);
    assert!(counted.status.success());
    assert_eq!(stdout_of(&counted).trim(), "5 2 5");
}

#[test]
fn construct_family_emits_all_members() {
    let out = maxis(
        &["construct", "--kind", "family", "--n", "5", "--alpha", "2"],
        "",
    );
    assert!(out.status.success());
    assert_eq!(stdout_of(&out).lines().count(), 2);

    let out = maxis(
        &["construct", "--kind", "family", "--n", "7", "--alpha", "4"],
        "",
    );
    assert_eq!(stdout_of(&out).lines().count(), 3);
}

#[test]
fn construct_clique_star_from_sizes() {
    let star = maxis(
        &["construct", "--kind", "clique-star", "--sizes", "3,2,2"],
        "",
    );
    assert!(star.status.success());
    let f73 = maxis(&["construct", "--kind", "F", "--n", "7", "--alpha", "3"], "");
    assert_eq!(stdout_of(&star), stdout_of(&f73));
}

#[test]
fn count_per_vertex_and_enumerate() {
    let p4 = maxis(&["construct", "--kind", "F", "--n", "4", "--alpha", "2"], "");
    let out = maxis(&["count", "--per-vertex", "--enumerate"], &stdout_of(&p4));
    assert!(out.status.success());
    let text = stdout_of(&out);
    let mut lines = text.lines();
    // F(4,2) is P4 in hub labeling: x0=0 adjacent to 1 and 2; leaves 1,3... per-vertex counts sum to alpha*num
    let header = lines.next().unwrap();
    let fields: Vec<&str> = header.split_whitespace().collect();
    assert_eq!(fields[0], "4");
    assert_eq!(fields[1], "2");
    assert_eq!(fields[2], "3");
    let pv: Vec<u32> = fields[3..].iter().map(|s| s.parse().unwrap()).collect();
    assert_eq!(pv.iter().sum::<u32>(), 6);
    assert_eq!(lines.count(), 3); // one line per maximum independent set
}

#[test]
fn count_empty_input() {
    let out = maxis(&["count"], "");
    assert!(out.status.success());
    assert!(stdout_of(&out).is_empty());
}

#[test]
fn malformed_graph6_aborts_with_line_number() {
    let out = maxis(&["count"], "@\nnot-graph6\n");
    assert_eq!(out.status.code(), Some(3));
    assert!(stderr_of(&out).contains("line 2"));

    let lenient = maxis(&["count", "--skip-malformed"], "@\nnot-graph6!\n@\n");
    assert!(lenient.status.success());
    assert_eq!(stdout_of(&lenient).lines().count(), 2);
    assert!(stderr_of(&lenient).contains("skipping line 2"));
}

#[test]
fn classify_reports_kind_and_cutvertices() {
    let f52 = maxis(&["construct", "--kind", "F", "--n", "5", "--alpha", "2"], "");
    let out = maxis(&["classify", "--n", "5", "--alpha", "2"], &stdout_of(&f52));
    assert!(out.status.success());
    assert_eq!(stdout_of(&out).trim(), "F-extremal\t0");

    let star = maxis(
        &["construct", "--kind", "clique-star", "--sizes", "2,1,1,1"],
        "",
    );
    let out = maxis(&["classify", "--n", "5", "--alpha", "4"], &stdout_of(&star));
    assert!(out.status.success());
    let text = stdout_of(&out);
    assert!(text.starts_with("family-member\t"), "{text}");
}

#[test]
fn classify_rejects_inconsistent_alpha() {
    let f52 = maxis(&["construct", "--kind", "F", "--n", "5", "--alpha", "2"], "");
    let out = maxis(&["classify", "--n", "5", "--alpha", "3"], &stdout_of(&f52));
    assert_eq!(out.status.code(), Some(3));
    assert!(stderr_of(&out).contains("independence number"));
}

#[test]
fn transform_emits_step_lines_and_composes() {
    // C4 saturates in one step; stdout must stay pipeable graph6
    let c4 = "Cl\n";
    let out = maxis(&["transform", "twin-saturate"], c4);
    assert!(out.status.success());
    let text = stdout_of(&out);
    assert_eq!(text.lines().count(), 1);
    assert!(stderr_of(&out).contains("alpha=2"));

    let counted = maxis(&["count"], &text);
    assert_eq!(stdout_of(&counted).trim(), "4 2 2");

    // a stable graph passes through unchanged
    let k4 = maxis(&["construct", "--kind", "F", "--n", "4", "--alpha", "1"], "");
    let out = maxis(&["transform", "twin-saturate"], &stdout_of(&k4));
    assert_eq!(stdout_of(&out), stdout_of(&k4));
}

#[test]
fn transform_unknown_name_exits_5() {
    let out = maxis(&["transform", "shrink"], "");
    assert_eq!(out.status.code(), Some(5));
    assert!(stderr_of(&out).contains("twin-saturate"));
}

#[test]
fn verify_theorem2_small_passes() {
    let out = maxis(&["verify", "theorem2", "--n", "4", "--alpha", "2"], "");
    assert!(out.status.success());
    let json: serde_json::Value = serde_json::from_str(&stdout_of(&out)).unwrap();
    let report = &json.as_array().unwrap()[0];
    assert_eq!(report["observed_max"], 3);
    assert_eq!(report["pass"], true);
    // P4, C4, the paw, and the diamond are the connected 4-vertex graphs with alpha 2
    assert_eq!(report["graphs_examined"], 4);
}

#[test]
fn verify_csv_format() {
    let out = maxis(&["verify", "theorem2", "--n", "5", "--format", "csv"], "");
    assert!(out.status.success());
    let text = stdout_of(&out);
    assert!(text.starts_with("n,alpha,g,f,family_size,observed_max,pass\n"));
    assert!(text.contains("5,2,6,5,2,5,true"));
}

#[test]
fn verify_lemma3_json_only() {
    let out = maxis(&["verify", "lemma3", "--n", "5"], "");
    assert!(out.status.success());
    let json: serde_json::Value = serde_json::from_str(&stdout_of(&out)).unwrap();
    assert_eq!(json["pass"], true);
    assert_eq!(json["violations"].as_array().unwrap().len(), 0);

    let out = maxis(&["verify", "lemma3", "--n", "5", "--format", "csv"], "");
    assert_eq!(out.status.code(), Some(5));
}

#[test]
fn verify_accepts_catalog_input() {
    let dir = std::env::temp_dir().join(format!("maxis-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("n5.g6");

    // a catalog holding the extremal family members for every alpha; the
    // (5,2) stratum already attains its maximum within it
    let mut catalog = String::new();
    for alpha in 1..5 {
        let members = maxis(
            &[
                "construct",
                "--kind",
                "family",
                "--n",
                "5",
                "--alpha",
                &alpha.to_string(),
            ],
            "",
        );
        catalog.push_str(&stdout_of(&members));
    }
    std::fs::write(&path, catalog).unwrap();

    let out = maxis(
        &[
            "verify",
            "theorem2",
            "--n",
            "5",
            "--alpha",
            "2",
            "--input",
            path.to_str().unwrap(),
        ],
        "",
    );
    assert!(out.status.success(), "stderr: {}", stderr_of(&out));
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn verify_rejects_missing_alpha_value() {
    let out = maxis(&["verify", "theorem2", "--n", "5", "--alpha", "9"], "");
    assert_eq!(out.status.code(), Some(4));
}

#[test]
fn table_csv_and_json() {
    let out = maxis(&["table", "--max-n", "5"], "");
    assert!(out.status.success());
    let text = stdout_of(&out);
    assert!(text.starts_with("n,alpha,g,f,family_size\n"));
    assert!(text.contains("5,2,6,5,2\n"));

    let out = maxis(&["table", "--max-n", "14", "--format", "json"], "");
    let json: serde_json::Value = serde_json::from_str(&stdout_of(&out)).unwrap();
    let row = json
        .as_array()
        .unwrap()
        .iter()
        .find(|r| r["n"] == 14 && r["alpha"] == 4)
        .unwrap();
    assert_eq!(row["g"], 144);
    assert_eq!(row["f"], 120);
}

#[test]
fn usage_errors_exit_2() {
    let out = maxis(&["count", "--no-such-flag"], "");
    assert_eq!(out.status.code(), Some(2));
    let out = maxis(&["frobnicate"], "");
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn unknown_construction_kind_exits_5() {
    let out = maxis(&["construct", "--kind", "turan", "--n", "5", "--alpha", "2"], "");
    assert_eq!(out.status.code(), Some(5));
    assert!(stderr_of(&out).contains("clique-star"));
}

#[test]
fn pipes_stream_line_by_line() {
    // three graphs through construct | transform | count
    let mut input = String::new();
    for alpha in [1, 2, 3] {
        let g = maxis(
            &["construct", "--kind", "F", "--n", "6", "--alpha", &alpha.to_string()],
            "",
        );
        input.push_str(&stdout_of(&g));
    }
    let transformed = maxis(&["transform", "reduce-edges"], &input);
    assert!(transformed.status.success());
    let counted = maxis(&["count"], &stdout_of(&transformed));
    assert!(counted.status.success());
    assert_eq!(stdout_of(&counted).lines().count(), 3);
}
