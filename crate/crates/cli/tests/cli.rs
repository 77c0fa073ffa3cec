//! End-to-end tests against the built binary: report content, the exit-code
//! contract, format rejections, and byte-for-byte determinism.

use std::path::Path;
use std::process::{Command, Output};

use tempfile::TempDir;

const T1_TEXT: &str = "\
universe: a b c d
kind: tolerance
edge: a b
edge: a c
edge: b c
edge: c d
";

const T2_TEXT: &str = "\
universe: a b c d
kind: tolerance
edge: a b
edge: b c
edge: c d
";

const T3_COVERING: &str = "\
universe: a b c d e f g
kind: covering
set: a b d e
set: b c d f
set: d e f g
";

fn write(dir: &TempDir, name: &str, contents: &str) -> std::path::PathBuf {
    let path = dir.path().join(name);
    std::fs::write(&path, contents).unwrap();
    path
}

fn tolrel(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_tolrel"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn run_ok(args: &[&str]) -> String {
    let out = tolrel(args);
    assert!(
        out.status.success(),
        "expected success for {args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

fn run_err(args: &[&str], code: i32) -> String {
    let out = tolrel(args);
    assert_eq!(
        out.status.code(),
        Some(code),
        "expected exit {code} for {args:?}: stdout={} stderr={}",
        String::from_utf8_lossy(&out.stdout),
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stderr).unwrap()
}

fn json(path: &Path) -> serde_json::Value {
    let stdout = run_ok(&["analyze", path.to_str().unwrap()]);
    serde_json::from_str(&stdout).expect("valid JSON report")
}

#[test]
fn analyze_triangle_with_tail() {
    let dir = TempDir::new().unwrap();
    let path = write(&dir, "t1.rel", T1_TEXT);
    let report = json(&path);

    assert_eq!(report["blocks"], serde_json::json!([["a", "b", "c"], ["c", "d"]]));
    assert_eq!(report["minimal_elements"], serde_json::json!(["a", "b", "d"]));
    assert_eq!(
        report["irredundant_covering"],
        serde_json::json!([["a", "b", "c"], ["c", "d"]])
    );
    assert_eq!(report["helly"]["at_most_two"], serde_json::json!(true));
    assert_eq!(report["helly"]["number"], serde_json::json!(2));
    assert_eq!(report["coincides_with_product"], serde_json::json!(true));
    assert_eq!(report["theorems"]["main"]["consistent"], serde_json::json!(true));
}

#[test]
fn analyze_path_of_four() {
    let dir = TempDir::new().unwrap();
    let path = write(&dir, "t2.rel", T2_TEXT);
    let report = json(&path);

    assert_eq!(
        report["canonical_bases"],
        serde_json::json!([[["a", "b"], ["b", "c"], ["c", "d"]]])
    );
    assert_eq!(report["irredundant_covering"], serde_json::Value::Null);
    assert_eq!(report["theorems"]["main"], serde_json::Value::Null);
    assert_eq!(
        report["theorems"]["characterization"]["consistent"],
        serde_json::json!(true)
    );
}

#[test]
fn analyze_covering_flags_extra_block() {
    let dir = TempDir::new().unwrap();
    let path = write(&dir, "t3.cov", T3_COVERING);
    let report = json(&path);

    assert_eq!(report["kind"], serde_json::json!("covering"));
    assert_eq!(report["covering"]["is_irredundant"], serde_json::json!(true));
    assert_eq!(report["covering"]["is_normal"], serde_json::json!(false));
    assert_eq!(
        report["covering"]["members_all_blocks"],
        serde_json::json!(true)
    );
    assert_eq!(
        report["covering"]["extra_blocks"],
        serde_json::json!([["b", "d", "e", "f"]])
    );
    assert_eq!(report["helly"]["at_most_two"], serde_json::json!(false));
    assert_eq!(report["helly"]["number"], serde_json::json!(3));
}

#[test]
fn analyze_accepts_json_input() {
    let dir = TempDir::new().unwrap();
    let path = write(
        &dir,
        "t1.json",
        r#"{"universe":["a","b","c","d"],"kind":"tolerance",
            "edges":[["a","b"],["a","c"],["b","c"],["c","d"]]}"#,
    );
    let report = json(&path);
    assert_eq!(report["blocks"], serde_json::json!([["a", "b", "c"], ["c", "d"]]));
}

#[test]
fn analyze_oracle_mode_agrees() {
    let dir = TempDir::new().unwrap();
    let path = write(&dir, "t3.cov", T3_COVERING);
    let stdout = run_ok(&["analyze", path.to_str().unwrap(), "--oracle"]);
    let report: serde_json::Value = serde_json::from_str(&stdout).unwrap();
    assert_eq!(report["oracle"]["blocks_agree"], serde_json::json!(true));
    assert_eq!(
        report["oracle"]["definable_families_agree"],
        serde_json::json!(true)
    );
    assert_eq!(report["oracle"]["duality_holds"], serde_json::json!(true));
    assert_eq!(report["oracle"]["normality_agrees"], serde_json::json!(true));
}

#[test]
fn reports_are_byte_identical_across_runs() {
    let dir = TempDir::new().unwrap();
    let path = write(&dir, "t3.cov", T3_COVERING);
    let args = ["analyze", path.to_str().unwrap()];
    assert_eq!(run_ok(&args), run_ok(&args));
    let table_args = ["analyze", path.to_str().unwrap(), "--report", "table"];
    assert_eq!(run_ok(&table_args), run_ok(&table_args));
}

#[test]
fn parse_rejections_exit_two() {
    let dir = TempDir::new().unwrap();
    let cases = [
        ("missing_universe.rel", "kind: tolerance\n"),
        ("missing_kind.rel", "universe: a b\n"),
        ("bad_arity.rel", "universe: a b\nkind: tolerance\nedge: a\n"),
        ("wrong_body.rel", "universe: a b\nkind: tolerance\nset: a\n"),
        ("bad_kind.rel", "universe: a b\nkind: nonsense\n"),
        ("no_colon.rel", "universe: a b\nkind: tolerance\ngibberish\n"),
        ("empty.rel", ""),
    ];
    for (name, contents) in cases {
        let path = write(&dir, name, contents);
        run_err(&["analyze", path.to_str().unwrap()], 2);
    }

    let path = write(
        &dir,
        "unknown_field.json",
        r#"{"universe":["a"],"kind":"tolerance","bogus":1}"#,
    );
    run_err(&["analyze", path.to_str().unwrap()], 2);

    run_err(&["analyze", "/definitely/not/here.rel"], 2);
}

#[test]
fn validation_rejections_exit_three() {
    let dir = TempDir::new().unwrap();

    let unknown_label = write(
        &dir,
        "unknown_label.rel",
        "universe: a b\nkind: tolerance\nedge: a z\n",
    );
    let stderr = run_err(&["analyze", unknown_label.to_str().unwrap()], 3);
    assert!(stderr.contains("unknown label"));

    let duplicate_label = write(
        &dir,
        "duplicate_label.rel",
        "universe: a a\nkind: tolerance\n",
    );
    run_err(&["analyze", duplicate_label.to_str().unwrap()], 3);

    let whitespace_label = write(
        &dir,
        "whitespace_label.json",
        r#"{"universe":["a b"],"kind":"tolerance"}"#,
    );
    run_err(&["analyze", whitespace_label.to_str().unwrap()], 3);

    let not_covering = write(
        &dir,
        "not_covering.cov",
        "universe: a b\nkind: covering\nset: a\n",
    );
    run_err(&["analyze", not_covering.to_str().unwrap()], 3);

    let empty_member = write(
        &dir,
        "empty_member.json",
        r#"{"universe":["a"],"kind":"covering","sets":[[]]}"#,
    );
    run_err(&["analyze", empty_member.to_str().unwrap()], 3);

    let duplicate_member = write(
        &dir,
        "duplicate_member.cov",
        "universe: a b\nkind: covering\nset: a b\nset: b a\n",
    );
    run_err(&["analyze", duplicate_member.to_str().unwrap()], 3);

    // analyze only accepts tolerance and covering files.
    let quasiorder = write(
        &dir,
        "order.rel",
        "universe: a b\nkind: quasiorder\nedge: a b\n",
    );
    run_err(&["analyze", quasiorder.to_str().unwrap()], 3);

    // Intransitive quasiorder without --closure.
    let intransitive = write(
        &dir,
        "intransitive.rel",
        "universe: a b c\nkind: quasiorder\nedge: a b\nedge: b c\n",
    );
    run_err(
        &["export-dot", intransitive.to_str().unwrap(), "--what", "hasse"],
        3,
    );
    run_ok(&[
        "export-dot",
        intransitive.to_str().unwrap(),
        "--what",
        "hasse",
        "--closure",
    ]);

    // Lattice sanity hints must match.
    let bad_bottom = write(
        &dir,
        "bad_bottom.lat",
        "universe: x y\nkind: lattice\ncover: x y\nbottom: y\n",
    );
    run_err(
        &["export-dot", bad_bottom.to_str().unwrap(), "--what", "hasse"],
        3,
    );

    // Not a lattice: two maximal elements.
    let no_join = write(
        &dir,
        "no_join.lat",
        "universe: o x y\nkind: lattice\ncover: o x\ncover: o y\n",
    );
    run_err(
        &["export-dot", no_join.to_str().unwrap(), "--what", "hasse"],
        3,
    );
}

#[test]
fn resource_caps_exit_four() {
    let dir = TempDir::new().unwrap();
    let path = write(&dir, "t1.rel", T1_TEXT);
    let stderr = run_err(&["analyze", path.to_str().unwrap(), "--block-cap", "1"], 4);
    assert!(stderr.contains("cap"), "{stderr}");

    run_err(&["verify", "d1d2", "--n", "9"], 4);
}

#[test]
fn verify_suites_run() {
    let stdout = run_ok(&["verify", "examples"]);
    assert!(stdout.contains("suite examples: pass"));

    let stdout = run_ok(&["verify", "helly", "--n", "3"]);
    assert!(stdout.contains("pass — 34 instances"));

    let stdout = run_ok(&["verify", "blocks-oracle", "--n", "8", "--samples", "20"]);
    assert!(stdout.contains("20 instances"));

    run_err(&["verify", "not-a-suite"], 2);
}

#[test]
fn export_dot_outputs() {
    let dir = TempDir::new().unwrap();

    let identity = write(&dir, "id.rel", "universe: a b\nkind: tolerance\n");
    let dot = run_ok(&["export-dot", identity.to_str().unwrap(), "--what", "graph"]);
    assert_eq!(dot, "graph tolerance {\n  \"a\";\n  \"b\";\n}\n");

    let t1 = write(&dir, "t1.rel", T1_TEXT);
    let graph = run_ok(&["export-dot", t1.to_str().unwrap(), "--what", "graph"]);
    assert_eq!(graph.matches(" -- ").count(), 4);
    assert!(!graph.contains("\"a\" -- \"a\""));

    let hasse = run_ok(&["export-dot", t1.to_str().unwrap(), "--what", "hasse"]);
    assert!(hasse.contains("\"a\" -> \"b\" [dir=none, style=dashed];"));
    assert!(hasse.contains("\"a\" -> \"c\";"));
    assert!(hasse.contains("\"b\" -> \"c\";"));
    assert!(hasse.contains("\"d\" -> \"c\";"));

    let lattice = run_ok(&["export-dot", t1.to_str().unwrap(), "--what", "lattice"]);
    assert!(lattice.contains("\"{}\" -> \"{a b c}\";"));
    assert!(lattice.contains("\"{c d}\" -> \"{a b c d}\";"));

    // Deterministic output.
    assert_eq!(
        run_ok(&["export-dot", t1.to_str().unwrap(), "--what", "hasse"]),
        hasse
    );

    let square = write(
        &dir,
        "square.lat",
        "universe: 0 p q 1\nkind: lattice\ncover: 0 p\ncover: 0 q\ncover: p 1\ncover: q 1\nbottom: 0\ntop: 1\n",
    );
    let dot = run_ok(&["export-dot", square.to_str().unwrap(), "--what", "hasse"]);
    assert_eq!(dot.matches(" -> ").count(), 4);
    let bowtie = run_ok(&["export-dot", square.to_str().unwrap(), "--what", "graph"]);
    assert!(bowtie.contains("\"1\" -- \"p\";"));
    assert!(bowtie.contains("\"1\" -- \"q\";"));
    assert!(!bowtie.contains("\"p\" -- \"q\";"));
}

#[test]
fn covering_analysis_matches_tolerance_analysis() {
    // The same relation through its covering and through its edge list.
    let dir = TempDir::new().unwrap();
    let as_covering = write(
        &dir,
        "h1.cov",
        "universe: a b c d\nkind: covering\nset: a b c\nset: c d\n",
    );
    let as_tolerance = write(&dir, "t1.rel", T1_TEXT);
    let a = json(&as_covering);
    let b = json(&as_tolerance);
    assert_eq!(a["blocks"], b["blocks"]);
    assert_eq!(a["neighborhoods"], b["neighborhoods"]);
    assert_eq!(a["minimal_elements"], b["minimal_elements"]);
}
