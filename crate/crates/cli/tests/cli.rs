use std::fs;
use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;
use tempfile::TempDir;

fn bicompat(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_bicompat"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exit code")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf-8 output")
}

fn json_lines(out: &Output) -> Vec<Value> {
    stdout(out)
        .lines()
        .map(|l| serde_json::from_str(l).expect("one JSON object per line"))
        .collect()
}

struct Files(TempDir);

impl Files {
    fn new() -> Self {
        Files(tempfile::tempdir().unwrap())
    }

    fn write(&self, name: &str, text: &str) -> PathBuf {
        let p = self.0.path().join(name);
        fs::write(&p, text).unwrap();
        p
    }

    /// Runs `gen` and stores its output.
    fn gen(&self, name: &str, args: &[&str]) -> String {
        let mut full = vec!["gen"];
        full.extend_from_slice(args);
        let out = bicompat(&full);
        assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
        self.write(name, &stdout(&out)).to_str().unwrap().to_string()
    }
}

#[test]
fn generated_files_parse_back() {
    let f = Files::new();
    let band = f.gen("band.json", &["band", "--rows", "2", "--cols", "3", "--field", "F3"]);
    let v: Value = serde_json::from_str(&fs::read_to_string(&band).unwrap()).unwrap();
    assert_eq!(v["dim"], 6);
    assert_eq!(v["field"], serde_json::json!({"Fp": 3}));
    let out = bicompat(&["--machine", "invariants", "--algebra", &band]);
    assert_eq!(code(&out), 0);
    assert_eq!(json_lines(&out)[0]["value"], true);
}

#[test]
fn check_exit_codes_follow_the_verdicts() {
    let f = Files::new();
    let a = f.gen("a.json", &["example", "--name", "3dim"]);
    let s = f.gen("s.json", &["example", "--name", "3dim", "--product", "star"]);
    let swap = bicompat(&["check", "--algebra", &a, "--product", &s, "--kinds", "swap-matching"]);
    assert_eq!(code(&swap), 0);
    assert!(stdout(&swap).contains("swap-matching: holds"));
    let id = bicompat(&[
        "--machine",
        "check",
        "--algebra",
        &a,
        "--product",
        &s,
        "--kinds",
        "id-matching",
    ]);
    assert_eq!(code(&id), 1);
    let report = &json_lines(&id)[0];
    assert_eq!(report["holds"], false);
    assert!(report["witness"].is_object());
}

#[test]
fn input_errors_exit_with_two() {
    let f = Files::new();
    let bad = f.write("bad.json", "{ not json");
    let a = f.gen("a.json", &["matrix", "--n", "2"]);
    let out = bicompat(&["check", "--algebra", bad.to_str().unwrap(), "--product", &a]);
    assert_eq!(code(&out), 2);
    assert!(String::from_utf8_lossy(&out.stderr).starts_with("error:"));
    assert_eq!(code(&bicompat(&["gen", "matrix", "--n", "2", "--field", "F4"])), 2);
    assert_eq!(
        code(&bicompat(&["check", "--algebra", "/nonexistent", "--product", &a])),
        2
    );
}

#[test]
fn shape_errors_exit_with_three() {
    let f = Files::new();
    let m2 = f.gen("m2.json", &["matrix", "--n", "2"]);
    let z3 = f.gen("z3.json", &["zero", "--n", "3"]);
    let m2f5 = f.gen("m2f5.json", &["matrix", "--n", "2", "--field", "F5"]);
    assert_eq!(code(&bicompat(&["check", "--algebra", &m2, "--product", &z3])), 3);
    assert_eq!(code(&bicompat(&["check", "--algebra", &m2, "--product", &m2f5])), 3);
}

#[test]
fn non_associative_base_exits_with_four() {
    let f = Files::new();
    // e0·e0 = e1 and e1·e0 = e0, so (e0·e0)·e0 = e0 while e0·(e0·e0) = 0.
    let base = f.write(
        "base.json",
        r#"{"dim": 2, "field": "Q", "table": [[0, 0, 1, "1"], [1, 0, 0, "1"]]}"#,
    );
    let z = f.gen("z.json", &["zero", "--n", "2"]);
    let out = bicompat(&["check", "--algebra", base.to_str().unwrap(), "--product", &z]);
    assert_eq!(code(&out), 4, "{}", String::from_utf8_lossy(&out.stderr));
}

#[test]
fn solve_dimensions() {
    let f = Files::new();
    let band = f.gen("band.json", &["band", "--rows", "2", "--cols", "2"]);
    let m2 = f.gen("m2.json", &["matrix", "--n", "2"]);
    let dim = |a: &str, kind: &str| {
        let out = bicompat(&["--machine", "solve", "--algebra", a, "--kind", kind]);
        assert_eq!(code(&out), 0);
        json_lines(&out)[0]["dim"].as_u64().unwrap()
    };
    assert_eq!(dim(&band, "id-matching"), 4);
    assert_eq!(dim(&band, "totally-compatible"), 1);
    assert_eq!(dim(&m2, "swap-matching"), 1);
}

#[test]
fn solve_reports_do_not_depend_on_workers() {
    let f = Files::new();
    let a = f.gen("a.json", &["example", "--name", "6dim"]);
    let run = |w: &str| {
        let out = bicompat(&[
            "--machine",
            "solve",
            "--algebra",
            &a,
            "--kind",
            "compatible",
            "--workers",
            w,
        ]);
        assert_eq!(code(&out), 0);
        out.stdout
    };
    assert_eq!(run("1"), run("3"));
}

#[test]
fn invariants_of_small_algebras() {
    let f = Files::new();
    let band = f.gen("band.json", &["band", "--rows", "2", "--cols", "2"]);
    let lines = json_lines(&bicompat(&["--machine", "invariants", "--algebra", &band]));
    let find = |name: &str| lines.iter().find(|l| l["invariant"] == name).unwrap().clone();
    assert_eq!(find("annihilator")["dim"], 1);
    assert_eq!(find("centroid")["dim"], 1);

    let m2 = f.gen("m2.json", &["matrix", "--n", "2"]);
    let out = stdout(&bicompat(&["invariants", "--algebra", &m2]));
    assert!(out.contains("two-sided unit"), "{out}");
    assert!(out.contains("two-sided unit     E11 + E22"), "{out}");

    let zero = f.write("zero.json", r#"{"dim": 2, "field": {"Fp": 2}, "table": []}"#);
    let lines = json_lines(&bicompat(&[
        "--machine",
        "invariants",
        "--algebra",
        zero.to_str().unwrap(),
    ]));
    let ann = lines.iter().find(|l| l["invariant"] == "annihilator").unwrap();
    assert_eq!(ann["dim"], 2);
}

#[test]
fn free_commands() {
    let f = Files::new();
    let concat = f.write(
        "concat.json",
        r#"{"vars": "xy", "field": "Q", "table": {"x,x": [["xx", "1"]], "x,y": [["xy", "1"]], "y,x": [["yx", "1"]], "y,y": [["yy", "1"]]}}"#,
    );
    let concat = concat.to_str().unwrap();
    assert_eq!(code(&bicompat(&["free", "check-star", "--star", concat])), 0);
    let out = bicompat(&[
        "--machine",
        "free",
        "extend",
        "--star",
        concat,
        "--a",
        r#"[["x","2"]]"#,
        "--b",
        r#"[["y","1"]]"#,
    ]);
    assert_eq!(code(&out), 0);
    assert_eq!(json_lines(&out)[0]["product"], serde_json::json!([["xy", "2"]]));
    assert_eq!(
        code(&bicompat(&["free", "verify", "--star", concat, "--degree", "4"])),
        0
    );

    let bad = f.write(
        "bad.json",
        r#"{"vars": "xy", "field": "Q", "table": {"x,x": [["x", "1"]], "x,y": [["x", "1"]], "y,x": [["yx", "1"]], "y,y": [["yy", "1"]]}}"#,
    );
    let bad = bad.to_str().unwrap();
    let out = bicompat(&["--machine", "free", "check-star", "--star", bad]);
    assert_eq!(code(&out), 1);
    assert_eq!(json_lines(&out)[0]["pass"], false);
    assert_eq!(code(&bicompat(&["free", "verify", "--star", bad, "--degree", "3"])), 4);

    let out = bicompat(&[
        "--machine",
        "free",
        "centroid-dim",
        "--kind",
        "commutative",
        "--vars",
        "x",
        "--degree",
        "3",
    ]);
    assert_eq!(json_lines(&out)[0]["dim"], 3);
}

#[test]
fn suite_selection() {
    let out = bicompat(&["--machine", "paper", "--only", "prop-3.8"]);
    assert_eq!(code(&out), 0);
    let lines = json_lines(&out);
    assert_eq!(lines.len(), 1);
    assert_eq!(lines[0]["id"], "prop-3.8");
    assert_eq!(lines[0]["pass"], true);
    assert_eq!(code(&bicompat(&["paper", "--only", "no-such-entry"])), 2);
    let listed = stdout(&bicompat(&["paper", "--list"]));
    assert!(listed.lines().count() > 20);
}
