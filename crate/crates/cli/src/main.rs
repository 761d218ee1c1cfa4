use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use mlqkit::base::{Composition, Partition, Word};
use mlqkit::charge::{charge_generalized, charge_word, cocharge_word};
use mlqkit::collapse::{collapse_inverse, collapse_rho, mrsk, mrsk_inverse};
use mlqkit::fillings::{coquinv, maj_filling, ColumnFilling};
use mlqkit::mlq::{energy_h, enumerate_mlq, maj, maj_g, MultilineQueue};
use mlqkit::poly::{kostka_foulkes, q_whittaker_gmlq, q_whittaker_mlq, schur, QXPolynomial};
use mlqkit::tableaux::{enumerate_ssyt, mlq_of_tableau, ssyt_charge, tab_of_mlq, Tableau};
use mlqkit::verify::{run_suite, Bounds, SUITES};
use mlqkit::Error;

/// Hard ceilings; larger requests are refused instead of run.
const CEIL_SIZE: usize = 10;
const CEIL_N: usize = 8;
const CEIL_CELLS: usize = 16;

#[derive(Parser)]
#[command(name = "mlqkit", version, about = "Multiline queues, collapsing and q-Whittaker polynomials")]
struct Cli {
    /// Print JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, ValueEnum)]
enum Stat {
    Maj,
    MajG,
    Charge,
    ChargeG,
    Cocharge,
    Energy,
    Coquinv,
    MajFilling,
}

#[derive(Clone, Copy, ValueEnum)]
enum PolyKind {
    Schur,
    Qwhittaker,
    Gmlq,
    Kostka,
}

#[derive(Clone, Copy, ValueEnum)]
enum EnumKind {
    Mlq,
    Mlq0,
    Ssyt,
}

#[derive(Subcommand)]
enum Cmd {
    /// Compute a statistic of a queue, word, tableau or filling.
    Stat { stat: Stat, input: String },
    /// Collapse a queue to (ρ_N, ρ_Q), or rebuild it with --inverse QUEUE TABLEAU.
    Collapse {
        #[arg(long)]
        inverse: bool,
        inputs: Vec<String>,
    },
    /// mRSK pair (left, down) of a binary matrix, or its inverse with --inverse LEFT DOWN.
    Mrsk {
        #[arg(long)]
        inverse: bool,
        inputs: Vec<String>,
    },
    /// Nonwrapping queue of a tableau.
    ToMlq {
        tableau: String,
        #[arg(long)]
        n: usize,
    },
    /// Tableau of a nonwrapping queue.
    ToTableau { queue: String },
    /// List queues, nonwrapping queues or tableaux of a shape.
    Enumerate {
        kind: EnumKind,
        #[arg(long)]
        shape: String,
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        limits: Limits,
    },
    /// Generating functions and Kostka-Foulkes polynomials.
    Poly {
        kind: PolyKind,
        #[arg(long)]
        shape: Option<String>,
        #[arg(long)]
        alpha: Option<String>,
        #[arg(long)]
        lam: Option<String>,
        #[arg(long)]
        mu: Option<String>,
        #[arg(long)]
        n: Option<usize>,
        /// Evaluate at this value of q.
        #[arg(long)]
        q: Option<i64>,
        #[command(flatten)]
        limits: Limits,
    },
    /// Run an identity suite.
    Verify {
        suite: String,
        #[arg(long, default_value_t = 6)]
        max_size: usize,
        #[arg(long, default_value_t = 4)]
        max_n: usize,
        #[arg(long, default_value_t = 3)]
        n: usize,
        #[arg(long, default_value_t = 3)]
        l: usize,
        #[arg(long)]
        jobs: Option<usize>,
    },
}

#[derive(clap::Args)]
struct Limits {
    #[arg(long, default_value_t = 6)]
    max_size: usize,
    #[arg(long, default_value_t = 4)]
    max_n: usize,
}

enum Failure {
    Input(String),
    Bound(String),
    Verification(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::BoundExceeded(_) => Failure::Bound(e.to_string()),
            Error::IdentityViolation(_) => Failure::Verification(e.to_string()),
            _ => Failure::Input(e.to_string()),
        }
    }
}

type Out = Result<String, Failure>;

fn input_err(msg: impl Into<String>) -> Failure {
    Failure::Input(msg.into())
}

fn is_json(s: &str) -> bool {
    matches!(s.trim_start().chars().next(), Some('{') | Some('['))
}

fn parse_queue(s: &str) -> Result<MultilineQueue, Failure> {
    Ok(if is_json(s) { MultilineQueue::from_json(s)? } else { s.parse()? })
}

fn parse_tableau(s: &str) -> Result<Tableau, Failure> {
    Ok(if is_json(s) { Tableau::from_json(s)? } else { s.parse()? })
}

fn parse_filling(s: &str) -> Result<ColumnFilling, Failure> {
    Ok(if is_json(s) { ColumnFilling::from_json(s)? } else { s.parse()? })
}

fn parse_partition(s: &str) -> Result<Partition, Failure> {
    Ok(s.parse()?)
}

fn parse_composition(s: &str) -> Result<Composition, Failure> {
    Ok(s.parse()?)
}

fn within(size: usize, n: usize, limits: &Limits) -> Result<(), Failure> {
    if size > limits.max_size || n > limits.max_n {
        return Err(Failure::Bound(format!(
            "size {size} with n = {n} exceeds --max-size {} / --max-n {}",
            limits.max_size, limits.max_n
        )));
    }
    if limits.max_size > CEIL_SIZE || limits.max_n > CEIL_N {
        return Err(Failure::Bound(format!("limits above the ceiling {CEIL_SIZE} / {CEIL_N}")));
    }
    Ok(())
}

fn json_pair(a: (&str, String), b: (&str, String)) -> String {
    let va: serde_json::Value = serde_json::from_str(&a.1).expect("valid json");
    let vb: serde_json::Value = serde_json::from_str(&b.1).expect("valid json");
    serde_json::json!({ a.0: va, b.0: vb }).to_string()
}

fn stat(stat: Stat, input: &str) -> Out {
    let v = match stat {
        Stat::Maj => maj(&parse_queue(input)?)? as i64,
        Stat::MajG => maj_g(&parse_queue(input)?),
        Stat::Energy => energy_h(&parse_queue(input)?) as i64,
        Stat::Charge if input.contains('/') => ssyt_charge(&parse_tableau(input)?)? as i64,
        Stat::Charge => charge_word(&input.parse::<Word>()?)? as i64,
        Stat::ChargeG => charge_generalized(&input.parse::<Word>()?) as i64,
        Stat::Cocharge if input.contains('/') => cocharge_word(&mlqkit::tableaux::rrw(&parse_tableau(input)?))? as i64,
        Stat::Cocharge => cocharge_word(&input.parse::<Word>()?)? as i64,
        Stat::Coquinv => coquinv(&parse_filling(input)?) as i64,
        Stat::MajFilling => maj_filling(&parse_filling(input)?) as i64,
    };
    Ok(v.to_string())
}

fn collapse(inverse: bool, inputs: &[String], json: bool) -> Out {
    if inverse {
        let [queue, recorder] = inputs else {
            return Err(input_err("collapse --inverse takes QUEUE TABLEAU"));
        };
        let b = collapse_inverse(&parse_queue(queue)?, &parse_tableau(recorder)?)?;
        return Ok(if json { b.to_json() } else { b.to_string() });
    }
    let [input] = inputs else {
        return Err(input_err("collapse takes one queue"));
    };
    let r = collapse_rho(&parse_queue(input)?);
    Ok(if json {
        json_pair(("queue", r.queue.to_json()), ("recorder", r.recorder.to_json()))
    } else {
        format!("{}\n{}", r.queue, r.recorder)
    })
}

fn mrsk_cmd(inverse: bool, inputs: &[String], json: bool) -> Out {
    if inverse {
        let [left, down] = inputs else {
            return Err(input_err("mrsk --inverse takes LEFT DOWN"));
        };
        let b = mrsk_inverse(&parse_queue(left)?, &parse_queue(down)?)?;
        return Ok(if json { b.to_json() } else { b.to_string() });
    }
    let [input] = inputs else {
        return Err(input_err("mrsk takes one matrix"));
    };
    let p = mrsk(&parse_queue(input)?);
    Ok(if json {
        json_pair(("left", p.left.to_json()), ("down", p.down.to_json()))
    } else {
        format!("{}\n{}", p.left, p.down)
    })
}

fn enumerate(kind: EnumKind, shape: &str, n: usize, limits: &Limits, json: bool) -> Out {
    let lam = parse_partition(shape)?;
    within(lam.size(), n, limits)?;
    let lines: Vec<String> = match kind {
        EnumKind::Mlq | EnumKind::Mlq0 => enumerate_mlq(&lam, n)?
            .filter(|m| matches!(kind, EnumKind::Mlq) || maj(m) == Ok(0))
            .map(|m| if json { m.to_json() } else { m.to_string() })
            .collect(),
        EnumKind::Ssyt => {
            enumerate_ssyt(&lam, n).iter().map(|t| if json { t.to_json() } else { t.to_string() }).collect()
        }
    };
    Ok(if json { format!("[{}]", lines.join(",")) } else { lines.join("\n") })
}

#[allow(clippy::too_many_arguments)]
fn poly(
    kind: PolyKind,
    shape: Option<&str>,
    alpha: Option<&str>,
    lam: Option<&str>,
    mu: Option<&str>,
    n: Option<usize>,
    q: Option<i64>,
    limits: &Limits,
    json: bool,
) -> Out {
    let need_n = || n.ok_or_else(|| input_err("--n is required"));
    let need_shape = || shape.ok_or_else(|| input_err("--shape is required")).and_then(parse_partition);
    let p: QXPolynomial = match kind {
        PolyKind::Schur => {
            let (lam, n) = (need_shape()?, need_n()?);
            within(lam.size(), n, limits)?;
            schur(&lam, n)?
        }
        PolyKind::Qwhittaker => {
            let (lam, n) = (need_shape()?, need_n()?);
            within(lam.size(), n, limits)?;
            q_whittaker_mlq(&lam, n)?
        }
        PolyKind::Gmlq => {
            let alpha = parse_composition(alpha.ok_or_else(|| input_err("--alpha is required"))?)?;
            let n = need_n()?;
            within(alpha.size(), n, limits)?;
            q_whittaker_gmlq(&alpha, n)?
        }
        PolyKind::Kostka => {
            let lam = parse_partition(lam.ok_or_else(|| input_err("--lam is required"))?)?;
            let mu = parse_partition(mu.ok_or_else(|| input_err("--mu is required"))?)?;
            within(lam.size(), 0, limits)?;
            kostka_foulkes(&lam, &mu)?
        }
    };
    let p = match q {
        Some(v) => p.eval_q(v),
        None => p,
    };
    Ok(if json { p.to_json() } else { p.to_string() })
}

fn verify(suite: &str, bounds: Bounds, json: bool) -> Out {
    if !SUITES.contains(&suite) {
        return Err(input_err(format!("unknown suite {suite:?}; expected one of {}", SUITES.join(", "))));
    }
    if bounds.max_size > CEIL_SIZE || bounds.max_n > CEIL_N || bounds.n * bounds.l > CEIL_CELLS {
        return Err(Failure::Bound(format!(
            "bounds above the ceiling: max-size ≤ {CEIL_SIZE}, max-n ≤ {CEIL_N}, n·l ≤ {CEIL_CELLS}"
        )));
    }
    let r = run_suite(suite, &bounds)?;
    let text = if json { r.to_json() } else { r.to_string() };
    if r.passed() {
        Ok(text)
    } else {
        Err(Failure::Verification(text))
    }
}

fn run(cli: Cli) -> Out {
    let json = cli.json;
    match cli.cmd {
        Cmd::Stat { stat: s, input } => stat(s, &input),
        Cmd::Collapse { inverse, inputs } => collapse(inverse, &inputs, json),
        Cmd::Mrsk { inverse, inputs } => mrsk_cmd(inverse, &inputs, json),
        Cmd::ToMlq { tableau, n } => {
            let m = mlq_of_tableau(&parse_tableau(&tableau)?, n)?;
            Ok(if json { m.to_json() } else { m.to_string() })
        }
        Cmd::ToTableau { queue } => {
            let t = tab_of_mlq(&parse_queue(&queue)?)?;
            Ok(if json { t.to_json() } else { t.to_string() })
        }
        Cmd::Enumerate { kind, shape, n, limits } => enumerate(kind, &shape, n, &limits, json),
        Cmd::Poly { kind, shape, alpha, lam, mu, n, q, limits } => {
            poly(kind, shape.as_deref(), alpha.as_deref(), lam.as_deref(), mu.as_deref(), n, q, &limits, json)
        }
        Cmd::Verify { suite, max_size, max_n, n, l, jobs } => {
            verify(&suite, Bounds { max_size, max_n, n, l, jobs }, json)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(s) => {
            println!("{s}");
            ExitCode::SUCCESS
        }
        Err(Failure::Verification(s)) => {
            println!("{s}");
            ExitCode::from(1)
        }
        Err(Failure::Input(s)) => {
            eprintln!("error: {s}");
            ExitCode::from(2)
        }
        Err(Failure::Bound(s)) => {
            eprintln!("error: {s}");
            ExitCode::from(3)
        }
    }
}
