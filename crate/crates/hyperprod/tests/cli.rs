use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Stdio};

use serde_json::Value;
use tempfile::TempDir;

const K2: &str = r#"{"vertices":[0,1],"edges":[[0,1]]}"#;
const E3: &str = r#"{"vertices":[0,1,2],"edges":[[0,1,2]]}"#;
const C4: &str = r#"{"vertices":[0,1,2,3],"edges":[[0,1],[1,2],[2,3],[0,3]]}"#;
const T3: &str = r#"{"vertices":["a","b","c"],"edges":[["a","b"],["b","c"],["a","c"]]}"#;

struct Workspace {
    dir: TempDir,
}

impl Workspace {
    fn new() -> Self {
        Workspace { dir: tempfile::tempdir().unwrap() }
    }

    fn file(&self, name: &str, body: &str) -> String {
        let path = self.dir.path().join(name);
        std::fs::write(&path, body).unwrap();
        path.display().to_string()
    }

    fn path(&self, name: &str) -> PathBuf {
        self.dir.path().join(name)
    }
}

fn run(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("hyperprod").chain(args.iter().copied());
    let code = hyperprod::cli::run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn json(text: &str) -> Value {
    serde_json::from_str(text).unwrap()
}

#[test]
fn cartesian_product_of_two_k2_is_c4() {
    let ws = Workspace::new();
    let k2 = ws.file("k2.json", K2);
    let (code, out, _) = run(&["product", "--kind", "cartesian", &k2, &k2]);
    assert_eq!(code, 0);
    let doc = json(&out);
    assert_eq!(doc["vertices"].as_array().unwrap().len(), 4);
    assert_eq!(doc["edges"].as_array().unwrap().len(), 4);
    assert_eq!(doc["vertices"][1], serde_json::json!([0, 1]));
}

#[test]
fn factor_c4_gives_two_k2() {
    let ws = Workspace::new();
    let c4 = ws.file("c4.json", C4);
    let (code, out, _) = run(&["factor", "--kind", "cartesian", &c4]);
    assert_eq!(code, 0);
    let doc = json(&out);
    let factors = doc["factors"].as_array().unwrap();
    assert_eq!(factors.len(), 2);
    for f in factors {
        assert_eq!(f, &json(K2));
    }
    assert_eq!(doc["coordinates"].as_array().unwrap().len(), 4);
    assert_eq!(doc["method"], "pipeline");
}

#[test]
fn mismatched_ranks_are_a_domain_error() {
    let ws = Workspace::new();
    let (k2, e3) = (ws.file("k2.json", K2), ws.file("e3.json", E3));
    let (code, out, err) = run(&["product", "--kind", "direct-r", &k2, &e3]);
    assert_eq!(code, 1);
    assert!(out.is_empty());
    assert!(err.contains("rank mismatch"), "{err}");
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(run(&[]).0, 2);
    assert_eq!(run(&["frobnicate"]).0, 2);
    assert_eq!(run(&["product", "--kind", "cartesian", "only-one.json"]).0, 2);
    assert_eq!(run(&["invariant", "no-such-invariant", "x.json"]).0, 2);
}

#[test]
fn unknown_kind_and_missing_file_are_domain_errors() {
    let ws = Workspace::new();
    let k2 = ws.file("k2.json", K2);
    assert_eq!(run(&["product", "--kind", "bogus", &k2, &k2]).0, 1);
    assert_eq!(run(&["dual", "/definitely/not/here.json"]).0, 1);
    let broken = ws.file("broken.json", "{\"vertices\": [0], \"edges\": [[5]]}");
    let (code, _, err) = run(&["dual", &broken]);
    assert_eq!(code, 1);
    assert!(err.contains("unknown vertex"), "{err}");
}

#[test]
fn invariants_report_exact_values() {
    let ws = Workspace::new();
    let t3 = ws.file("t3.json", T3);
    let (code, out, _) = run(&["invariant", "tau-star", &t3]);
    assert_eq!(code, 0);
    let doc = json(&out);
    assert_eq!(doc["value"], "3/2");
    assert_eq!(doc["exact"], true);
    assert_eq!(json(&run(&["invariant", "chi", &t3]).1)["value"], 3);
    assert_eq!(json(&run(&["invariant", "rho", &t3]).1)["value"], "inf");
    let all = json(&run(&["invariant", "all", &t3]).1);
    assert_eq!(all["tau"]["value"], 2);
}

#[test]
fn identical_invocations_are_byte_identical() {
    let ws = Workspace::new();
    let (t3, c4) = (ws.file("t3.json", T3), ws.file("c4.json", C4));
    for args in [
        vec!["product", "--kind", "square", &t3, &c4],
        vec!["product", "--kind", "lex", &c4, &t3],
        vec!["section", "--l2", &t3],
        vec!["gen", "--vertices", "3..6", "--edges", "2..4", "--seed", "9"],
        vec!["check", "--suite", "chromatic-cartesian", "--trials", "5", "--seed", "3"],
    ] {
        let first = run(&args);
        assert_eq!(first.0, 0, "{args:?}: {}", first.2);
        assert_eq!(first, run(&args), "{args:?}");
    }
}

#[test]
fn product_output_feeds_section_factor_and_invariant() {
    let ws = Workspace::new();
    let (k2, t3) = (ws.file("k2.json", K2), ws.file("t3.json", T3));
    let product = ws.path("prism.json");
    let prism = product.display().to_string();
    assert_eq!(run(&["--output", &prism, "product", "--kind", "cartesian", &k2, &t3]).0, 0);

    let (code, out, _) = run(&["factor", &prism]);
    assert_eq!(code, 0);
    assert_eq!(json(&out)["factors"].as_array().unwrap().len(), 2);

    let (code, out, _) = run(&["section", "--l2", &prism]);
    assert_eq!(code, 0);
    let section = ws.file("section.json", &out);
    let (code, out, _) = run(&["invert-section", &section]);
    assert_eq!(code, 0);
    assert_eq!(json(&out), json(&std::fs::read_to_string(&product).unwrap()));

    let (code, out, _) = run(&["invariant", "chi", &prism]);
    assert_eq!(code, 0);
    assert_eq!(json(&out)["value"], 3);
}

#[test]
fn iso_reports_a_mapping() {
    let ws = Workspace::new();
    let c4 = ws.file("c4.json", C4);
    let k2 = ws.file("k2.json", K2);
    let (_, product, _) = run(&["product", "--kind", "cartesian", &k2, &k2]);
    let square = ws.file("sq.json", &product);
    let doc = json(&run(&["iso", &c4, &square]).1);
    assert_eq!(doc["isomorphic"], true);
    assert_eq!(doc["mapping"].as_array().unwrap().len(), 4);
    let doc = json(&run(&["iso", &c4, &k2]).1);
    assert_eq!(doc["isomorphic"], false);
    assert!(doc["mapping"].is_null());
}

#[test]
fn check_prints_a_table_and_json() {
    let (code, out, err) = run(&["check", "--suite", "matching-covering-chain", "--trials", "30", "--seed", "5"]);
    assert_eq!(code, 0);
    assert!(err.contains("matching-covering-chain"));
    let doc = json(&out);
    assert_eq!(doc["reports"][0]["outcome"], "PASS");
    assert_eq!(doc["reports"][0]["pass"], 30);
    assert_eq!(run(&["check", "--suite", "no-such-suite"]).0, 1);
}

#[test]
fn binary_reads_standard_input() {
    let mut child = Command::new(env!("CARGO_BIN_EXE_hyperprod"))
        .args(["dual", "-"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(E3.as_bytes()).unwrap();
    let output = child.wait_with_output().unwrap();
    assert!(output.status.success());
    let doc = json(&String::from_utf8(output.stdout).unwrap());
    assert_eq!(doc, serde_json::json!({ "vertices": [0], "edges": [[0]] }));

    let status = Command::new(env!("CARGO_BIN_EXE_hyperprod"))
        .arg("nonsense")
        .stderr(Stdio::null())
        .status()
        .unwrap();
    assert_eq!(status.code(), Some(2));
}

#[test]
fn directed_kinds_take_directed_documents() {
    let ws = Workspace::new();
    let arc = ws.file("arc.json", r#"{"vertices":[0,1],"arcs":[{"tail":[0],"head":[1]}]}"#);
    let (code, out, err) = run(&["product", "--kind", "directed-cartesian", &arc, &arc]);
    assert_eq!(code, 0, "{err}");
    assert_eq!(json(&out)["arcs"].as_array().unwrap().len(), 4);
}

#[test]
fn impossible_generation_requests_time_out() {
    let (code, out, err) = run(&["gen", "--vertices", "2", "--edges", "1", "--edge-size", "3"]);
    assert_eq!(code, 1);
    assert!(out.is_empty());
    assert!(err.contains("error:"), "{err}");
}
