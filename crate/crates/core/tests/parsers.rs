use std::fs;
use std::path::Path;

use mlqkit::base::{Composition, Partition, Word};
use mlqkit::mlq::MultilineQueue;
use mlqkit::poly::QXPolynomial;
use mlqkit::tableaux::{SkewTableau, Tableau};
use proptest::prelude::*;

fn round_trips(target: &str, s: &str) {
    match target {
        "mlq_text" => {
            if let Ok(m) = s.parse::<MultilineQueue>() {
                assert_eq!(m.to_string().parse::<MultilineQueue>().unwrap(), m);
            }
        }
        "mlq_json" => {
            if let Ok(m) = MultilineQueue::from_json(s) {
                assert_eq!(MultilineQueue::from_json(&m.to_json()).unwrap(), m);
            }
        }
        "word" => {
            if let Ok(w) = s.parse::<Word>() {
                assert_eq!(w.to_string().parse::<Word>().unwrap(), w);
            }
        }
        "partition" => {
            if let Ok(p) = s.parse::<Partition>() {
                assert_eq!(p.to_string().parse::<Partition>().unwrap(), p);
            }
        }
        "composition" => {
            if let Ok(c) = s.parse::<Composition>() {
                assert_eq!(c.to_string().parse::<Composition>().unwrap(), c);
            }
        }
        "tableau" => {
            if let Ok(t) = s.parse::<Tableau>() {
                assert_eq!(t.to_string().parse::<Tableau>().unwrap(), t);
                assert_eq!(Tableau::from_json(&t.to_json()).unwrap(), t);
            }
            let _ = Tableau::from_json(s);
            if let Ok(t) = s.parse::<SkewTableau>() {
                assert_eq!(t.to_string().parse::<SkewTableau>().unwrap(), t);
            }
        }
        "polynomial" => {
            if let Ok(p) = s.parse::<QXPolynomial>() {
                assert_eq!(QXPolynomial::parse_with_n(&p.to_string(), p.n()).unwrap(), p);
                assert_eq!(QXPolynomial::from_json(&p.to_json()).unwrap(), p);
            }
            let _ = QXPolynomial::from_json(s);
        }
        other => panic!("no parser for {other}"),
    }
}

#[test]
fn fuzz_seeds_round_trip() {
    let root = Path::new(env!("CARGO_MANIFEST_DIR")).join("../../fuzz/corpus");
    let mut seen = 0;
    for dir in fs::read_dir(&root).unwrap() {
        let dir = dir.unwrap().path();
        let target = dir.file_name().unwrap().to_str().unwrap().to_string();
        for f in fs::read_dir(&dir).unwrap() {
            let bytes = fs::read(f.unwrap().path()).unwrap();
            if let Ok(s) = std::str::from_utf8(&bytes) {
                round_trips(&target, s);
                seen += 1;
            }
        }
    }
    assert!(seen >= 7);
}

const TARGETS: [&str; 7] = ["mlq_text", "mlq_json", "word", "partition", "composition", "tableau", "polynomial"];

proptest! {
    #[test]
    fn parsers_never_panic(s in "[0-9n=;,|\\-. /\\[\\]{}\"a-z:+*^]{0,40}") {
        for t in TARGETS {
            round_trips(t, &s);
        }
    }

    #[test]
    fn structured_inputs_round_trip(s in "(n=[1-6];)?([1-6](,[1-6]){0,3}\\|){0,3}[1-6]?") {
        round_trips("mlq_text", &s);
    }

    #[test]
    fn polynomial_like_inputs(s in "-?([0-9]{1,3}\\*)?(q(\\^[0-9])?\\*)?x[1-4](\\^[0-9])?( [+-] [0-9]{1,2}\\*x[1-4]){0,3}") {
        round_trips("polynomial", &s);
    }
}
