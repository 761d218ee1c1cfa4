use std::process::ExitCode;
use std::time::{Duration, Instant};

use mlqkit::base::{Partition, Word};
use mlqkit::charge::{charge_generalized, charge_word, cocharge_word};
use mlqkit::collapse::collapse_rho;
use mlqkit::mlq::{energy_h, energy_table, fm_label, gmlq_step, maj, maj_g, MultilineQueue, PairingMultiset};
use mlqkit::poly::dual_cauchy_check;
use mlqkit::tableaux::{ssyt_charge, Tableau};
use mlqkit::verify::{run_suite, Bounds, RunReport};

fn q(s: &str) -> MultilineQueue {
    s.parse().expect("queue text")
}

fn w(s: &str) -> Word {
    s.parse().expect("word text")
}

fn golden() -> Result<(), String> {
    let check = |ok: bool, what: &str| if ok { Ok(()) } else { Err(what.to_string()) };
    let label = q("n=6;1,2,3,4|1,3,5,6|2,3|3,5");
    let (_, pairs) = fm_label(&label).map_err(|e| e.to_string())?;
    let expect = PairingMultiset::from_triples(&[
        (4, 4, 0),
        (4, 4, 1),
        (3, 4, 0),
        (3, 4, 0),
        (2, 4, 0),
        (2, 4, 1),
        (2, 2, 0),
        (2, 2, 1),
    ]);
    check(maj(&label) == Ok(5), "maj of the labelling example")?;
    check(pairs == expect, "pairing multiset of the labelling example")?;
    check(charge_word(&w("3 3 4 2 2 3 2 2 1 1 1 1 1 2 3 4")) == Ok(3), "charge of the operator example")?;
    let t: Tableau = "1 1 1 1 2 3 4 / 2 2 2 4 4 5 / 3 3 5".parse().map_err(|e: mlqkit::Error| e.to_string())?;
    check(ssyt_charge(&t) == Ok(7), "charge of the tableau")?;
    check(cocharge_word(&mlqkit::tableaux::rrw(&t)) == Ok(20), "cocharge of the tableau")?;
    check(charge_generalized(&w("1 4 3 3 2 1 2 4 2 4 2")) == 4, "generalized charge")?;
    let b = q("n=5;1,3,4|1,4,5|2,5|1,3|4");
    let r = collapse_rho(&b);
    check(r.queue.shape() == Partition::new(vec![4, 3, 2, 2]).expect("partition"), "collapsed shape")?;
    check(r.recorder.to_string() == "1 1 1 2 / 2 2 3 5 / 3 4 / 4", "recording tableau")?;
    check(ssyt_charge(&r.recorder) == Ok(4) && maj(&b) == Ok(4), "charge of the recording tableau")?;
    let g = q("n=4;2,3|1,4|2,3,4");
    check(maj_g(&g) == 2 && energy_h(&g) == 2, "maj_G and energy of the GMLQ example")?;
    let table: Vec<_> = energy_table(&g).into_iter().filter(|&(_, v)| v > 0).collect();
    check(table == vec![((2, 3), 1), ((3, 3), 1)], "energy table")?;
    let (row, _, _) = gmlq_step(&[2, 5, 4, 2, 4, 2], &[1, 5], 6);
    check(row == vec![4, 3, 1, 1, 5, 1], "GMLQ row labelling")?;
    Ok(())
}

fn suite(name: &str, bounds: Bounds) -> Result<(), String> {
    let r: RunReport = run_suite(name, &bounds).map_err(|e| e.to_string())?;
    if r.passed() {
        Ok(())
    } else {
        Err(r.to_string())
    }
}

fn bounds(max_size: usize, max_n: usize, n: usize, l: usize) -> Bounds {
    Bounds { max_size, max_n, n, l, jobs: None }
}

fn main() -> ExitCode {
    type Check = Box<dyn Fn() -> Result<(), String>>;
    let criteria: Vec<(&str, u64, Check)> = vec![
        ("worked examples", 1, Box::new(golden)),
        ("maj = charge(cw) = charge(ρ_Q), |λ| ≤ 6, n ≤ 4", 60, Box::new(|| suite("maj-cw", bounds(6, 4, 0, 0)))),
        ("e* idempotence, commutation, braid over 𝕄(3,4)", 30, Box::new(|| suite("braid", bounds(0, 0, 4, 3)))),
        ("ρ and mRSK bijections over 𝕄(3,3), 𝕄(4,3)", 60, Box::new(|| suite("collapse-bijection", bounds(0, 0, 3, 4)))),
        ("four-way q-Whittaker equality, |λ| ≤ 6, n ≤ 4", 300, Box::new(|| suite("qwhittaker-4way", bounds(6, 4, 0, 0)))),
        ("Kostka-Foulkes three-way equality, |λ| ≤ 7", 120, Box::new(|| suite("kostka-3way", bounds(7, 0, 0, 0)))),
        (
            "dual Cauchy via mRSK for (2,2), (3,2), (3,3)",
            60,
            Box::new(|| {
                for (n, l) in [(2, 2), (3, 2), (3, 3)] {
                    if !dual_cauchy_check(n, l).map_err(|e| e.to_string())? {
                        return Err(format!("fails at n={n} L={l}"));
                    }
                }
                Ok(())
            }),
        ),
        ("σ_i suite over GMLQs, ≤ 3 rows, n ≤ 4", 120, Box::new(|| suite("sigma", bounds(0, 0, 4, 3)))),
        (
            "SSYT bijection, insertion, rectification, LR",
            180,
            Box::new(|| {
                suite("ssyt-bijection", bounds(5, 3, 0, 0))?;
                suite("skew-lr", bounds(5, 3, 0, 0))?;
                suite("skew-lr", bounds(6, 3, 0, 0))
            }),
        ),
        ("stationary counts, |λ| ≤ 5, n ≤ 5", 30, Box::new(|| suite("stationary", bounds(5, 5, 0, 0)))),
    ];
    let mut failed = 0;
    for (k, (name, budget, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = f();
        let took = start.elapsed();
        let in_time = took <= Duration::from_secs(*budget);
        let ok = outcome.is_ok() && in_time;
        if !ok {
            failed += 1;
        }
        println!(
            "criterion {:>2}: {} {name} ({:.2} s, budget {budget} s)",
            k + 1,
            if ok { "PASS" } else { "FAIL" },
            took.as_secs_f64()
        );
        if let Err(e) = outcome {
            println!("    {}", e.replace('\n', "\n    "));
        } else if !in_time {
            println!("    over the time budget");
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
