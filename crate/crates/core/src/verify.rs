//! Exhaustive identity checks over bounded instance sets.
//!
//! Each suite builds its instances, runs every check over them in parallel
//! and reports the first counterexample in enumeration order, so reports do
//! not depend on scheduling.

use std::collections::BTreeSet;
use std::fmt;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use crate::base::{Partition, Word};
use crate::charge::{charge_generalized, charge_letters, charge_via_operators, charge_word};
use crate::collapse::{collapse_inverse, collapse_rho, drop_e_star, mrsk, mrsk_inverse};
use crate::error::{Error, Result};
use crate::fillings::{coquinv, enumerate_coquinv_free, filling_of_mlq, maj_filling, mlq_of_filling};
use crate::matching::s_letters;
use crate::mlq::{
    binom, column_word, count_mlq, energy_h, enumerate_matrices, enumerate_mlq, gmlq_label, maj, maj_g, projection,
    sigma, stationary_counts, MultilineQueue,
};
use crate::poly::{
    dual_cauchy_check, is_symmetric, kostka_charge, kostka_foulkes, q_whittaker_charge_expansion, q_whittaker_coquinv,
    q_whittaker_gmlq, q_whittaker_mlq, schur_ssyt, QXPolynomial,
};
use crate::tableaux::{
    column_insert, enumerate_skew_ssyt, enumerate_ssyt, insert_into_mlq, jdt_rectify, lr_coefficient, mlq_of_tableau,
    mult_mlq, rectify_via_mlq, row_insert, skew_mlq_of, skew_tableau_of, ssyt_charge, tab_of_mlq, collapse_word,
    SkewTableau, Tableau,
};

pub const SUITES: &[&str] = &[
    "charge",
    "maj-cw",
    "collapse-bijection",
    "braid",
    "sigma",
    "gmlq-formula",
    "kostka-3way",
    "qwhittaker-4way",
    "cauchy",
    "ssyt-bijection",
    "skew-lr",
    "coquinv",
    "stationary",
];

/// Size bounds. `max_size` bounds |λ| or word length, `max_n` the alphabet;
/// `l` × `n` bounds the matrix dimensions of the matrix suites.
#[derive(Debug, Clone, Serialize)]
pub struct Bounds {
    pub max_size: usize,
    pub max_n: usize,
    pub n: usize,
    pub l: usize,
    pub jobs: Option<usize>,
}

impl Default for Bounds {
    fn default() -> Self {
        Bounds { max_size: 6, max_n: 4, n: 3, l: 3, jobs: None }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct CheckResult {
    pub name: String,
    pub instances: usize,
    pub passed: bool,
    pub counterexample: Option<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct RunReport {
    pub command: String,
    pub suite: String,
    pub instances: usize,
    pub wall_seconds: f64,
    pub checks: Vec<CheckResult>,
}

impl RunReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("serializable")
    }
}

impl fmt::Display for RunReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.command)?;
        for c in &self.checks {
            writeln!(f, "  {:<4} {:<44} {:>8} instances", if c.passed { "ok" } else { "FAIL" }, c.name, c.instances)?;
            if let Some(x) = &c.counterexample {
                writeln!(f, "       counterexample: {x}")?;
            }
        }
        write!(
            f,
            "suite {}: {} ({} instances, {:.2} s)",
            self.suite,
            if self.passed() { "pass" } else { "FAIL" },
            self.instances,
            self.wall_seconds
        )
    }
}

type Outcome = std::result::Result<(), String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Outcome {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn lib<T>(r: Result<T>) -> std::result::Result<T, String> {
    r.map_err(|e| e.to_string())
}

fn run_check<T: Sync>(
    name: &str,
    items: &[T],
    show: impl Fn(&T) -> String + Sync,
    f: impl Fn(&T) -> Outcome + Sync,
) -> CheckResult {
    let fail = items
        .par_iter()
        .enumerate()
        .filter_map(|(k, x)| f(x).err().map(|e| (k, e)))
        .min_by_key(|(k, _)| *k);
    CheckResult {
        name: name.to_string(),
        instances: items.len(),
        passed: fail.is_none(),
        counterexample: fail.map(|(k, e)| format!("{}: {e}", show(&items[k]))),
    }
}

fn command_echo(suite: &str, b: &Bounds) -> String {
    let mut s = format!("verify {suite}");
    match suite {
        "collapse-bijection" | "braid" | "sigma" | "cauchy" => s += &format!(" --n {} --l {}", b.n, b.l),
        _ => s += &format!(" --max-size {} --max-n {}", b.max_size, b.max_n),
    }
    if let Some(j) = b.jobs {
        s += &format!(" --jobs {j}");
    }
    s
}

/// Runs a suite on a pool of `bounds.jobs` workers.
pub fn run_suite(suite: &str, bounds: &Bounds) -> Result<RunReport> {
    if !SUITES.contains(&suite) {
        return Err(Error::UnknownSuite(suite.to_string()));
    }
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(j) = bounds.jobs {
        builder = builder.num_threads(j.max(1));
    }
    let pool = builder.build().map_err(|e| Error::BoundExceeded(format!("thread pool: {e}")))?;
    let start = Instant::now();
    let checks = pool.install(|| match suite {
        "charge" => suite_charge(bounds),
        "maj-cw" => suite_maj_cw(bounds),
        "collapse-bijection" => suite_collapse(bounds),
        "braid" => suite_braid(bounds),
        "sigma" => suite_sigma(bounds),
        "gmlq-formula" => suite_gmlq(bounds),
        "kostka-3way" => suite_kostka(bounds),
        "qwhittaker-4way" => suite_qwhittaker(bounds),
        "cauchy" => suite_cauchy(bounds),
        "ssyt-bijection" => suite_ssyt(bounds),
        "skew-lr" => suite_skew_lr(bounds),
        "coquinv" => suite_coquinv(bounds),
        _ => suite_stationary(bounds),
    })?;
    Ok(RunReport {
        command: command_echo(suite, bounds),
        suite: suite.to_string(),
        instances: checks.iter().map(|c| c.instances).sum(),
        wall_seconds: start.elapsed().as_secs_f64(),
        checks,
    })
}

fn words(max_len: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = vec![vec![]];
    let mut layer = vec![vec![]];
    for _ in 0..max_len {
        layer = layer
            .into_iter()
            .flat_map(|v: Vec<usize>| {
                (1..=k).map(move |a| {
                    let mut u = v.clone();
                    u.push(a);
                    u
                })
            })
            .collect();
        out.extend(layer.iter().cloned());
    }
    out
}

fn has_partition_content(w: &[usize]) -> bool {
    Word::new(w.to_vec()).map(|x| x.content().is_partition()).unwrap_or(false)
}

#[allow(clippy::ptr_arg)]
fn show_word(w: &Vec<usize>) -> String {
    Word::new(w.to_vec()).map(|x| x.to_string()).unwrap_or_default()
}

fn show_mlq(m: &MultilineQueue) -> String {
    m.to_string()
}

/// (λ, n) with |λ| ≤ max_size, ℓ(λ) ≤ n ≤ max_n.
fn shapes(max_size: usize, max_n: usize) -> Vec<(Partition, usize)> {
    let mut out = Vec::new();
    for lam in Partition::all_up_to(max_size) {
        for n in lam.len().max(1)..=max_n {
            out.push((lam.clone(), n));
        }
    }
    out
}

fn show_shape(x: &(Partition, usize)) -> String {
    format!("λ={} n={}", x.0, x.1)
}

fn straight_queues(max_size: usize, max_n: usize) -> Vec<MultilineQueue> {
    shapes(max_size, max_n).into_par_iter().flat_map_iter(|(lam, n)| enumerate_mlq(&lam, n).expect("fits")).collect()
}

fn matrices(l: usize, n: usize) -> Vec<MultilineQueue> {
    let mut out = Vec::new();
    for rows in 1..=l {
        for cols in 1..=n {
            out.extend(enumerate_matrices(rows, cols));
        }
    }
    out
}

fn suite_charge(b: &Bounds) -> Result<Vec<CheckResult>> {
    let all = words(b.max_size, b.max_n);
    let part: Vec<Vec<usize>> = all.iter().filter(|w| has_partition_content(w)).cloned().collect();
    let w = |v: &Vec<usize>| Word::new(v.clone()).expect("positive letters");
    Ok(vec![
        run_check("charge by subwords = charge by operators", &part, show_word, |v| {
            let (a, c) = (lib(charge_word(&w(v)))?, lib(charge_via_operators(&w(v)))?);
            ensure(a == c, || format!("{a} vs {c}"))
        }),
        run_check("charge ≤ n(content)", &part, show_word, |v| {
            let c = lib(charge_word(&w(v)))?;
            let bound = w(v).content().sort_to_partition().n_stat();
            ensure(c <= bound, || format!("{c} > {bound}"))
        }),
        run_check("charge_G = charge on partition content", &part, show_word, |v| {
            let (a, c) = (charge_generalized(&w(v)), lib(charge_word(&w(v)))?);
            ensure(a == c, || format!("{a} vs {c}"))
        }),
        run_check("charge_G invariant under s_i", &all, show_word, |v| {
            let g = charge_generalized(&w(v));
            for i in 1..b.max_n {
                let s = charge_generalized(&w(&s_letters(v, i)));
                ensure(s == g, || format!("s_{i} gives {s}, expected {g}"))?;
            }
            Ok(())
        }),
    ])
}

fn suite_maj_cw(b: &Bounds) -> Result<Vec<CheckResult>> {
    let qs = straight_queues(b.max_size, b.max_n);
    Ok(vec![
        run_check("maj = charge(cw)", &qs, show_mlq, |m| {
            let (a, c) = (lib(maj(m))?, lib(charge_letters(column_word(m).letters()))?);
            ensure(a == c, || format!("maj {a}, charge {c}"))
        }),
        run_check("maj = charge(ρ_Q)", &qs, show_mlq, |m| {
            let (a, c) = (lib(maj(m))?, lib(ssyt_charge(&collapse_rho(m).recorder))?);
            ensure(a == c, || format!("maj {a}, charge {c}"))
        }),
    ])
}

fn padded(m: &MultilineQueue, rows: usize) -> MultilineQueue {
    let mut r = m.rows().to_vec();
    r.resize(rows.max(r.len()), Vec::new());
    MultilineQueue::new(m.n(), r).expect("same columns")
}

fn suite_collapse(b: &Bounds) -> Result<Vec<CheckResult>> {
    let ms = matrices(b.l, b.n);
    let mut pairs: Vec<(MultilineQueue, Tableau)> = Vec::new();
    let mut mrsk_pairs: Vec<(MultilineQueue, MultilineQueue)> = Vec::new();
    let mut count_mismatch = Vec::new();
    for rows in 1..=b.l {
        for cols in 1..=b.n {
            let mut total: u128 = 0;
            for lam in Partition::all_up_to(rows * cols) {
                if lam.len() > cols || lam.first() > rows {
                    continue;
                }
                let downs: Vec<_> = enumerate_mlq(&lam, cols)?.filter(|m| maj(m) == Ok(0)).collect();
                let lefts: Vec<_> = enumerate_mlq(&lam.conjugate(), rows)?.filter(|m| maj(m) == Ok(0)).collect();
                let tabs = enumerate_ssyt(&lam.conjugate(), rows);
                total += (downs.len() * tabs.len()) as u128;
                for d in &downs {
                    for t in &tabs {
                        pairs.push((padded(d, rows), t.clone()));
                    }
                    for l in &lefts {
                        mrsk_pairs.push((padded(l, cols), padded(d, rows)));
                    }
                }
            }
            if total != 1u128 << (rows * cols) {
                count_mismatch.push((rows, cols, total));
            }
        }
    }
    let dims: Vec<(usize, usize)> = (1..=b.l).flat_map(|r| (1..=b.n).map(move |c| (r, c))).collect();
    let show_pair = |x: &(MultilineQueue, Tableau)| format!("N={} Q={}", x.0, x.1);
    let show_mrsk = |x: &(MultilineQueue, MultilineQueue)| format!("left={} down={}", x.0, x.1);
    Ok(vec![
        run_check("ρ_N(B) nonwrapping with x^B = x^ρ_N(B)", &ms, show_mlq, |m| {
            let r = collapse_rho(m);
            ensure(maj(&r.queue) == Ok(0), || format!("ρ_N = {} wraps", r.queue))?;
            ensure(r.queue.column_content() == m.column_content(), || format!("ρ_N = {}", r.queue))
        }),
        run_check("ρ_Q(B) = row insertion of cw(B)", &ms, show_mlq, |m| {
            let r = collapse_rho(m).recorder;
            let i = row_insert(&column_word(m));
            ensure(r == i, || format!("{r} vs {i}"))
        }),
        run_check("ρ⁻¹ ∘ ρ = id", &ms, show_mlq, |m| {
            let r = collapse_rho(m);
            let back = lib(collapse_inverse(&r.queue, &r.recorder))?;
            ensure(&padded(&back, m.num_rows()) == m, || format!("returned {back}"))
        }),
        run_check("ρ ∘ ρ⁻¹ = id", &pairs, show_pair, |(n, q)| {
            let bm = lib(collapse_inverse(n, q))?;
            let r = collapse_rho(&bm);
            ensure(r.queue.trimmed() == n.trimmed() && &r.recorder == q, || format!("via {bm}"))
        }),
        run_check("Σ |MLQ₀(λ,n)|·|SSYT(λ′,L)| = 2^{nL}", &dims, |d| format!("L={} n={}", d.0, d.1), |d| {
            match count_mismatch.iter().find(|x| (x.0, x.1) == *d) {
                Some(x) => Err(format!("{} pairs", x.2)),
                None => Ok(()),
            }
        }),
        run_check("mRSK⁻¹ ∘ mRSK = id, shapes conjugate", &ms, show_mlq, |m| {
            let p = mrsk(m);
            ensure(p.left.shape() == p.down.shape().conjugate(), || format!("shapes {} {}", p.left.shape(), p.down.shape()))?;
            let back = lib(mrsk_inverse(&p.left, &p.down))?;
            ensure(&back == m, || format!("returned {back}"))
        }),
        run_check("mRSK ∘ mRSK⁻¹ = id", &mrsk_pairs, show_mrsk, |(l, d)| {
            let bm = lib(mrsk_inverse(l, d))?;
            let p = mrsk(&bm);
            ensure(&p.left == l && &p.down == d, || format!("via {bm}"))
        }),
    ])
}

fn suite_braid(b: &Bounds) -> Result<Vec<CheckResult>> {
    let ms = matrices(b.l, b.n);
    let e = |m: &MultilineQueue, i: usize| drop_e_star(m, i).expect("row in range");
    Ok(vec![
        run_check("e*_i e*_i = e*_i", &ms, show_mlq, |m| {
            for i in 1..m.num_rows() {
                ensure(e(&e(m, i), i) == e(m, i), || format!("i={i}"))?;
            }
            Ok(())
        }),
        run_check("e*_i e*_j = e*_j e*_i for |i-j| ≥ 2", &ms, show_mlq, |m| {
            for i in 1..m.num_rows() {
                for j in i + 2..m.num_rows() {
                    ensure(e(&e(m, i), j) == e(&e(m, j), i), || format!("i={i} j={j}"))?;
                }
            }
            Ok(())
        }),
        run_check("e*_i e*_{i+1} e*_i = e*_{i+1} e*_i e*_{i+1}", &ms, show_mlq, |m| {
            for i in 1..m.num_rows().saturating_sub(1) {
                let a = e(&e(&e(m, i), i + 1), i);
                let c = e(&e(&e(m, i + 1), i), i + 1);
                ensure(a == c, || format!("i={i}: {a} vs {c}"))?;
            }
            Ok(())
        }),
    ])
}

fn suite_sigma(b: &Bounds) -> Result<Vec<CheckResult>> {
    let ms = matrices(b.l, b.n);
    let s = |m: &MultilineQueue, i: usize| sigma(m, i).expect("row in range");
    Ok(vec![
        run_check("σ_i² = id, σ_i swaps row sizes", &ms, show_mlq, |m| {
            for i in 1..m.num_rows() {
                let x = s(m, i);
                ensure(&s(&x, i) == m, || format!("i={i}"))?;
                ensure(x.row_sizes() == m.row_sizes().swapped(i), || format!("i={i} gives {x}"))?;
            }
            Ok(())
        }),
        run_check("Coxeter relations", &ms, show_mlq, |m| {
            let l = m.num_rows();
            for i in 1..l {
                for j in i + 2..l {
                    ensure(s(&s(m, i), j) == s(&s(m, j), i), || format!("i={i} j={j}"))?;
                }
                if i + 1 < l {
                    let a = s(&s(&s(m, i), i + 1), i);
                    let c = s(&s(&s(m, i + 1), i), i + 1);
                    ensure(a == c, || format!("braid at i={i}"))?;
                }
            }
            Ok(())
        }),
        run_check("σ_i keeps labels off row i+1", &ms, show_mlq, |m| {
            let lm = gmlq_label(m);
            for i in 1..m.num_rows() {
                let ls = gmlq_label(&s(m, i));
                for r in (1..=m.num_rows()).filter(|&r| r != i + 1) {
                    ensure(ls.row_labels(r) == lm.row_labels(r), || format!("i={i} row {r}"))?;
                }
            }
            Ok(())
        }),
        run_check("σ_i keeps maj_G and the projection", &ms, show_mlq, |m| {
            for i in 1..m.num_rows() {
                let x = s(m, i);
                ensure(maj_g(&x) == maj_g(m), || format!("maj_G changes under σ_{i}"))?;
                ensure(projection(&x) == projection(m), || format!("projection changes under σ_{i}"))?;
            }
            Ok(())
        }),
        run_check("ρ_N ∘ σ_i = ρ_N", &ms, show_mlq, |m| {
            let r = collapse_rho(m).queue;
            for i in 1..m.num_rows() {
                ensure(collapse_rho(&s(m, i)).queue == r, || format!("i={i}"))?;
            }
            Ok(())
        }),
        run_check("maj_G = H = charge_G(cw)", &ms, show_mlq, |m| {
            let g = maj_g(m);
            let h = energy_h(m) as i64;
            let c = charge_generalized(&column_word(m)) as i64;
            ensure(g == h && g == c, || format!("maj_G {g}, H {h}, charge_G {c}"))
        }),
    ])
}

fn suite_gmlq(b: &Bounds) -> Result<Vec<CheckResult>> {
    let items = shapes(b.max_size, b.max_n);
    Ok(vec![run_check("P_λ by GMLQs of every rearrangement of λ′", &items, show_shape, |(lam, n)| {
        let a = lib(q_whittaker_mlq(lam, *n))?;
        for alpha in lam.conjugate().as_composition().rearrangements() {
            let g = lib(q_whittaker_gmlq(&alpha, *n))?;
            ensure(g == a, || format!("α={alpha}: {g} vs {a}"))?;
        }
        Ok(())
    })])
}

fn suite_kostka(b: &Bounds) -> Result<Vec<CheckResult>> {
    let pairs: Vec<(Partition, Partition)> = (0..=b.max_size)
        .flat_map(|k| {
            let ps = Partition::all_of_size(k);
            ps.iter().flat_map(|l| ps.iter().map(move |m| (l.clone(), m.clone()))).collect::<Vec<_>>()
        })
        .collect();
    let show = |x: &(Partition, Partition)| format!("λ={} μ={}", x.0, x.1);
    let p = |v: &[usize]| Partition::new(v.to_vec()).expect("partition");
    let spots = vec![(p(&[2, 1]), p(&[1, 1, 1]), "q + q^2"), (p(&[2]), p(&[1, 1]), "q")];
    Ok(vec![
        run_check("charge = lattice queues = rotated queues", &pairs, show, |(l, m)| {
            lib(kostka_foulkes(l, m)).map(|_| ())
        }),
        run_check("K_λλ = 1, support in dominance order", &pairs, show, |(l, m)| {
            let k = lib(kostka_charge(l, m))?;
            if l == m {
                ensure(k == QXPolynomial::one(0), || format!("K = {k}"))?;
            }
            ensure(k.is_zero() || m.dominance_leq(l).unwrap_or(false), || format!("K = {k} off support"))?;
            ensure(k.all_coefficients_nonnegative(), || format!("K = {k}"))
        }),
        run_check("spot values", &spots, |x| format!("λ={} μ={}", x.0, x.1), |(l, m, want)| {
            let k = lib(kostka_foulkes(l, m))?;
            ensure(k.to_string() == *want, || format!("K = {k}, expected {want}"))
        }),
    ])
}

fn suite_qwhittaker(b: &Bounds) -> Result<Vec<CheckResult>> {
    let items = shapes(b.max_size, b.max_n);
    let polys: Vec<std::result::Result<QXPolynomial, String>> =
        items.par_iter().map(|(lam, n)| lib(q_whittaker_mlq(lam, *n))).collect();
    let with: Vec<((Partition, usize), std::result::Result<QXPolynomial, String>)> =
        items.into_iter().zip(polys).collect();
    let show = |x: &((Partition, usize), std::result::Result<QXPolynomial, String>)| show_shape(&x.0);
    let base = |x: &((Partition, usize), std::result::Result<QXPolynomial, String>)| x.1.clone();
    Ok(vec![
        run_check("MLQ sum = Σ K_{λ′μ′}(q) s_λ", &with, show, |x| {
            let a = base(x)?;
            let c = lib(q_whittaker_charge_expansion(&x.0 .0, x.0 .1))?;
            ensure(a == c, || format!("{a} vs {c}"))
        }),
        run_check("MLQ sum = GMLQ sums", &with, show, |x| {
            let a = base(x)?;
            for alpha in x.0 .0.conjugate().as_composition().rearrangements() {
                let g = lib(q_whittaker_gmlq(&alpha, x.0 .1))?;
                ensure(g == a, || format!("α={alpha}: {g}"))?;
            }
            Ok(())
        }),
        run_check("MLQ sum = coquinv-free filling sum", &with, show, |x| {
            let a = base(x)?;
            let c = lib(q_whittaker_coquinv(&x.0 .0, x.0 .1))?;
            ensure(a == c, || format!("{a} vs {c}"))
        }),
        run_check("q = 0 gives s_λ", &with, show, |x| {
            let a = base(x)?.eval_q(0);
            let s = lib(schur_ssyt(&x.0 .0, x.0 .1))?;
            ensure(a == s, || format!("{a} vs {s}"))
        }),
        run_check("symmetric with nonnegative coefficients", &with, show, |x| {
            let a = base(x)?;
            ensure(is_symmetric(&a) && a.all_coefficients_nonnegative(), || a.to_string())
        }),
    ])
}

fn suite_cauchy(b: &Bounds) -> Result<Vec<CheckResult>> {
    let dims: Vec<(usize, usize)> = (1..=b.n).flat_map(|n| (1..=b.l).map(move |l| (n, l))).collect();
    Ok(vec![run_check("Σ s_λ(x) s_λ′(y) = Π(1 + x_i y_j) via mRSK", &dims, |d| format!("n={} L={}", d.0, d.1), |d| {
        ensure(lib(dual_cauchy_check(d.0, d.1))?, || "identity or term matching fails".into())
    })])
}

fn suite_ssyt(b: &Bounds) -> Result<Vec<CheckResult>> {
    let items = shapes(b.max_size, b.max_n);
    let ws: Vec<Vec<usize>> = words(b.max_size, b.max_n);
    let k = b.max_n;
    Ok(vec![
        run_check("tab ∘ mlq = id on SSYT(λ, n)", &items, show_shape, |(lam, n)| {
            for t in enumerate_ssyt(lam, *n) {
                let m = lib(mlq_of_tableau(&t, *n))?;
                ensure(maj(&m) == Ok(0) && &m.shape() == lam, || format!("T={t} gives {m}"))?;
                let back = lib(tab_of_mlq(&m))?;
                ensure(back == t, || format!("T={t} returns {back}"))?;
            }
            Ok(())
        }),
        run_check("mlq ∘ tab = id on MLQ₀(λ, n)", &items, show_shape, |(lam, n)| {
            let mut count = 0;
            for m in lib(enumerate_mlq(lam, *n))?.filter(|m| maj(m) == Ok(0)) {
                count += 1;
                let back = lib(mlq_of_tableau(&lib(tab_of_mlq(&m))?, *n))?;
                ensure(back == m.trimmed(), || format!("M={m} returns {back}"))?;
            }
            let t = enumerate_ssyt(lam, *n).len();
            ensure(count == t, || format!("{count} queues, {t} tableaux"))
        }),
        run_check("tab(collapse(w)) = Icol(w)", &ws, show_word, |w| {
            let t = lib(tab_of_mlq(&collapse_word(w, k)))?;
            let i = column_insert(&Word::new(w.clone()).expect("positive"));
            ensure(t == i, || format!("{t} vs {i}"))
        }),
        run_check("insertion morphism k → M", &ws, show_word, |w| {
            let m = lib(mlq_of_tableau(&column_insert(&Word::new(w.clone()).expect("positive")), k))?;
            for x in 1..=k {
                let mut v = w.clone();
                v.push(x);
                let direct = lib(mlq_of_tableau(&column_insert(&Word::new(v).expect("positive")), k))?;
                let ins = lib(insert_into_mlq(&m, x))?;
                ensure(direct == ins, || format!("k={x}: {ins} vs {direct}"))?;
            }
            Ok(())
        }),
    ])
}

fn suite_skew_lr(b: &Bounds) -> Result<Vec<CheckResult>> {
    let n = b.max_n;
    let mut skews: Vec<SkewTableau> = Vec::new();
    let mut triples: Vec<(Partition, Partition, Partition)> = Vec::new();
    for lam in Partition::all_up_to(b.max_size + 1) {
        for mu in Partition::all_up_to(lam.size()) {
            if !lam.contains(&mu) || lam.size() - mu.size() > b.max_size {
                continue;
            }
            skews.extend(enumerate_skew_ssyt(&lam, &mu, n.min(3), None));
            for nu in Partition::all_of_size(lam.size() - mu.size()) {
                triples.push((lam.clone(), mu.clone(), nu));
            }
        }
    }
    let mut products: Vec<(Partition, Partition)> = Vec::new();
    for a in Partition::all_up_to(b.max_size) {
        for c in Partition::all_up_to(b.max_size - a.size()) {
            if a.len() <= n && c.len() <= n {
                products.push((a.clone(), c));
            }
        }
    }
    let show_skew = |s: &SkewTableau| s.to_string();
    Ok(vec![
        run_check("rectification via queues = jeu de taquin", &skews, show_skew, |s| {
            let (a, c) = (rectify_via_mlq(s), jdt_rectify(s));
            ensure(a == c, || format!("{a} vs {c}"))
        }),
        run_check("skew tableau ↔ bicoloured queue", &skews, show_skew, |s| {
            let m = lib(skew_mlq_of(s, n.min(3)))?;
            ensure(m.is_valid(), || "invalid bicoloured queue".into())?;
            let back = lib(skew_tableau_of(&m))?;
            ensure(&back == s, || format!("returns {back}"))
        }),
        run_check("LR counts agree", &triples, |t| format!("{}/{}, {}", t.0, t.1, t.2), |(l, m, v)| {
            lib(lr_coefficient(l, m, v)).map(|_| ())
        }),
        run_check("s_λ s_μ = Σ c^ν_λμ s_ν on queue products", &products, |x| format!("λ={} μ={} n={n}", x.0, x.1), |(l, m)| {
            let m1s: Vec<_> = enumerate_ssyt(l, n).iter().map(|t| mlq_of_tableau(t, n).expect("fits")).collect();
            let m2s: Vec<_> = enumerate_ssyt(m, n).iter().map(|t| mlq_of_tableau(t, n).expect("fits")).collect();
            let mut by_shape = std::collections::BTreeMap::<Partition, usize>::new();
            for a in &m1s {
                for c in &m2s {
                    *by_shape.entry(lib(mult_mlq(a, c))?.queue.shape()).or_default() += 1;
                }
            }
            for nu in Partition::all_of_size(l.size() + m.size()) {
                let c = lib(lr_coefficient(l, m, &nu))? as usize;
                let want = c * enumerate_ssyt(&nu, n).len();
                let got = by_shape.get(&nu).copied().unwrap_or(0);
                ensure(got == want, || format!("ν={nu}: {got} products, expected {want}"))?;
            }
            Ok(())
        }),
    ])
}

fn suite_coquinv(b: &Bounds) -> Result<Vec<CheckResult>> {
    let qs = straight_queues(b.max_size, b.max_n);
    let items = shapes(b.max_size, b.max_n);
    Ok(vec![
        run_check("queue → coquinv-free filling → queue", &qs, show_mlq, |m| {
            let f = lib(filling_of_mlq(m))?;
            ensure(coquinv(&f) == 0, || format!("coquinv of {f} is {}", coquinv(&f)))?;
            let mf = maj_filling(&f);
            let mm = lib(maj(m))?;
            ensure(mf == mm, || format!("maj {mf} of {f}, expected {mm}"))?;
            let back = lib(mlq_of_filling(&f))?;
            ensure(&back == m, || format!("returns {back}"))
        }),
        run_check("|coquinv-free fillings| = |MLQ(λ, n)|", &items, show_shape, |(lam, n)| {
            let got = lib(enumerate_coquinv_free(lam, *n))?.len() as u128;
            let want = count_mlq(lam, *n);
            ensure(got == want, || format!("{got} vs {want}"))
        }),
    ])
}

fn suite_stationary(b: &Bounds) -> Result<Vec<CheckResult>> {
    let items = shapes(b.max_size, b.max_n);
    Ok(vec![
        run_check("Σ counts = Π binom(n, λ′_j)", &items, show_shape, |(lam, n)| {
            let c = lib(stationary_counts(lam, *n))?;
            let total: u128 = c.values().map(|&v| v as u128).sum();
            let want: u128 = lam.conjugate().parts().iter().map(|&k| binom(*n, k)).product();
            ensure(total == want, || format!("{total} vs {want}"))
        }),
        run_check("counts invariant under cyclic rotation", &items, show_shape, |(lam, n)| {
            let c = lib(stationary_counts(lam, *n))?;
            let states: BTreeSet<_> = c.keys().cloned().collect();
            for (state, k) in &c {
                let mut rot = state.clone();
                rot.rotate_left(1);
                ensure(states.contains(&rot) && c[&rot] == *k, || format!("state {state:?}"))?;
            }
            Ok(())
        }),
    ])
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small() -> Bounds {
        Bounds { max_size: 3, max_n: 3, n: 2, l: 2, jobs: Some(2) }
    }

    #[test]
    fn every_suite_passes_small() {
        for s in SUITES {
            let r = run_suite(s, &small()).unwrap();
            assert!(r.passed(), "{r}");
            assert!(r.instances > 0, "{s}");
        }
    }

    #[test]
    fn unknown_suite() {
        assert!(matches!(run_suite("bogus", &small()), Err(Error::UnknownSuite(_))));
    }

    #[test]
    fn counterexample_is_first_failure() {
        let items: Vec<usize> = (0..100).collect();
        let r = run_check("even", &items, |x| x.to_string(), |x| ensure(x % 2 == 0 || *x < 37, || "odd".into()));
        assert!(!r.passed);
        assert_eq!(r.counterexample.as_deref(), Some("37: odd"));
        let r = run_check("all", &items, |x| x.to_string(), |_| Ok(()));
        assert!(r.passed && r.counterexample.is_none());
    }

    #[test]
    fn report_formats() {
        let r = run_suite("cauchy", &small()).unwrap();
        assert!(r.to_string().starts_with("verify cauchy --n 2 --l 2 --jobs 2"));
        let v: serde_json::Value = serde_json::from_str(&r.to_json()).unwrap();
        assert_eq!(v["suite"], "cauchy");
    }
}
