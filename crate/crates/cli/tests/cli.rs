use std::process::{Command, Output};

use mlqkit::mlq::MultilineQueue;
use mlqkit::poly::QXPolynomial;
use mlqkit::tableaux::Tableau;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_mlqkit")).args(args).output().expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap().trim_end().to_string()
}

fn code(args: &[&str]) -> i32 {
    run(args).status.code().unwrap()
}

#[test]
fn statistics() {
    assert_eq!(stdout(&["stat", "maj", "n=6;1,2,3,4|1,3,5,6|2,3|3,5"]), "5");
    assert_eq!(stdout(&["stat", "charge", "3 3 4 2 2 3 2 2 1 1 1 1 1 2 3 4"]), "3");
    assert_eq!(stdout(&["stat", "maj-g", "n=4;2,3|1,4|2,3,4"]), "2");
    assert_eq!(stdout(&["stat", "energy", "n=4;2,3|1,4|2,3,4"]), "2");
    assert_eq!(stdout(&["stat", "charge", "1 1 1 1 2 3 4 / 2 2 2 4 4 5 / 3 3 5"]), "7");
    assert_eq!(stdout(&["stat", "cocharge", "1 1 1 1 2 3 4 / 2 2 2 4 4 5 / 3 3 5"]), "20");
    assert_eq!(stdout(&["stat", "charge-g", "1 4 3 3 2 1 2 4 2 4 2"]), "4");
    assert_eq!(stdout(&["stat", "maj", r#"{"n":6,"rows":[[1,2,3,4],[1,3,5,6],[2,3],[3,5]]}"#]), "5");
    assert_eq!(stdout(&["stat", "coquinv", "n=2;1 2"]), "0");
    assert_eq!(stdout(&["stat", "maj-filling", "n=2;1 2"]), "0");
}

#[test]
fn collapse_round_trip() {
    let input = "n=5;1,3,4|1,4,5|2,5|1,3|4";
    let out = stdout(&["collapse", input]);
    let (queue, recorder) = out.split_once('\n').unwrap();
    assert_eq!(recorder, "1 1 1 2 / 2 2 3 5 / 3 4 / 4");
    let q: MultilineQueue = queue.parse().unwrap();
    assert_eq!(q.shape().to_string(), "4,3,2,2");
    recorder.parse::<Tableau>().unwrap();
    assert_eq!(stdout(&["collapse", "--inverse", queue, recorder]), input);
    let json = stdout(&["--json", "collapse", input]);
    let v: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert_eq!(MultilineQueue::from_json(&v["queue"].to_string()).unwrap(), q);
    assert_eq!(code(&["collapse", "--inverse", "n=2;1,2", "1 1 / 2"]), 2);
}

#[test]
fn mrsk_round_trip() {
    for input in ["n=4;1,3|2,3,4|1|2,4", "n=4;1,2,3,4|-|4|1,3", "n=4;2|1,4|3|1,2,3,4"] {
        let out = stdout(&["mrsk", input]);
        let (left, down) = out.split_once('\n').unwrap();
        let l: MultilineQueue = left.parse().unwrap();
        let d: MultilineQueue = down.parse().unwrap();
        assert_eq!(l.shape(), d.shape().conjugate());
        assert_eq!(stdout(&["mrsk", "--inverse", left, down]), input);
    }
}

#[test]
fn tableau_queue_conversions() {
    let m = stdout(&["to-mlq", "1 1 2 / 2", "--n", "3"]);
    assert_eq!(stdout(&["to-tableau", &m]), "1 1 2 / 2");
    assert_eq!(code(&["to-tableau", "n=6;1,2,3,4|1,3,5,6|2,3|3,5"]), 2);
    let all = stdout(&["enumerate", "mlq0", "--shape", "2,1", "--n", "3"]);
    assert_eq!(all.lines().count(), 8);
    assert_eq!(stdout(&["enumerate", "ssyt", "--shape", "2,1", "--n", "3"]).lines().count(), 8);
    assert_eq!(stdout(&["enumerate", "mlq", "--shape", "2,1", "--n", "3"]).lines().count(), 9);
}

#[test]
fn polynomials() {
    let p = stdout(&["poly", "qwhittaker", "--shape", "2", "--n", "2"]);
    assert_eq!(p, "x1^2 + x1*x2 + q*x1*x2 + x2^2");
    assert_eq!(QXPolynomial::parse_with_n(&p, 2).unwrap().to_string(), p);
    assert_eq!(stdout(&["poly", "schur", "--shape", "1", "--n", "3"]), "x1 + x2 + x3");
    assert_eq!(stdout(&["poly", "kostka", "--lam", "2,1", "--mu", "1,1,1"]), "q + q^2");
    assert_eq!(stdout(&["poly", "gmlq", "--alpha", "0,1,1", "--n", "2"]), p);
    assert_eq!(stdout(&["poly", "gmlq", "--alpha", "2", "--n", "2"]), "x1*x2");
    assert_eq!(stdout(&["poly", "qwhittaker", "--shape", "2", "--n", "2", "--q", "0"]), "x1^2 + x1*x2 + x2^2");
    let json = stdout(&["--json", "poly", "qwhittaker", "--shape", "2,1", "--n", "3"]);
    let back = QXPolynomial::from_json(&json).unwrap();
    assert_eq!(back.to_string(), stdout(&["poly", "qwhittaker", "--shape", "2,1", "--n", "3"]));
}

#[test]
fn bounds_and_errors() {
    assert_eq!(code(&["poly", "schur", "--shape", "7", "--n", "2"]), 3);
    assert_eq!(code(&["poly", "schur", "--shape", "7", "--n", "2", "--max-size", "7"]), 0);
    assert_eq!(code(&["poly", "schur", "--shape", "2,3", "--n", "2"]), 2);
    assert_eq!(code(&["poly", "schur", "--n", "2"]), 2);
    assert_eq!(code(&["stat", "maj", "garbage"]), 2);
    assert_eq!(code(&["verify", "bogus"]), 2);
    assert_eq!(code(&["verify", "cauchy", "--n", "5", "--l", "5"]), 3);
    assert_eq!(code(&["frobnicate"]), 2);
    let out = Command::new(env!("CARGO_BIN_EXE_mlqkit"))
        .args(["poly", "qwhittaker", "--shape", "2,1", "--n", "3"])
        .env("MLQKIT_MAX_TERMS", "2")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&out.stderr).contains("MLQKIT_MAX_TERMS"));
}

#[test]
fn verify_suites() {
    let r = stdout(&["verify", "maj-cw", "--max-size", "6", "--max-n", "4"]);
    assert!(r.ends_with("s)") && r.contains("suite maj-cw: pass"), "{r}");
    assert!(stdout(&["verify", "cauchy", "--n", "2", "--l", "2"]).contains("pass"));
    assert!(stdout(&["verify", "kostka-3way", "--max-size", "6"]).contains("pass"));
    let json = stdout(&["--json", "verify", "braid", "--n", "3", "--l", "3", "--jobs", "2"]);
    let v: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert_eq!(v["suite"], "braid");
    assert!(v["checks"].as_array().unwrap().iter().all(|c| c["passed"] == true));
}
