//! Command-line front end: parse diagrams and parameters, run any
//! verification suite, emit human tables or machine JSON reports.

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::json;

use pbrauer::algebra::{self, Element};
use pbrauer::cell::{self, DeltaModule};
use pbrauer::degenerate;
use pbrauer::diagram::{Diagram, DEFAULT_ENUMERATE_BOUND};
use pbrauer::morita::{self, Side};
use pbrauer::scalar::{parse_rational, Rational};
use pbrauer::schur_weyl;
use pbrauer::symmetric::{partitions_of, IntPartition};
use pbrauer::young::{self, YoungMatrix};
use pbrauer::Error;

const REPORT_SCHEMA: &str = "pbrauer-report/1";

#[derive(Parser)]
#[command(name = "pbrauer", version, about = "Exact partial Brauer algebra toolkit")]
struct Cli {
    /// Emit a machine-readable JSON report
    #[arg(long, global = true)]
    json: bool,
    /// Seed for the randomized property checks
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compose two diagrams: prints the straightening scalar and result
    Mult {
        #[arg(long)]
        n: Option<u32>,
        left: String,
        right: String,
    },
    /// List all diagrams of one rank (cap with PBRAUER_MAX_RANK)
    Enumerate {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        brauer: bool,
    },
    /// Specht module dimensions for every shape at one rank
    Dims {
        #[arg(long)]
        n: u32,
    },
    /// Gram form report for one shape: dimension, determinant, ranks
    Gram {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        lambda: String,
        #[arg(long, default_value = "13/7")]
        delta: String,
        #[arg(long = "delta-prime", default_value = "5/3")]
        delta_prime: String,
        /// Largest dimension for which the symbolic determinant is printed
        #[arg(long = "max-dim", default_value_t = 8)]
        max_dim: usize,
    },
    /// Simple-module dimensions (Gram ranks) at a parameter point
    SimpleDims {
        #[arg(long)]
        n: u32,
        #[arg(long, default_value = "13/7")]
        delta: String,
        #[arg(long = "delta-prime", default_value = "5/3")]
        delta_prime: String,
    },
    /// Run a verification suite; exit 0 only if every check passes
    Verify {
        #[command(subcommand)]
        suite: Suite,
    },
    /// Tensor-space representation: rank, injectivity, commutant
    SchurWeyl {
        #[arg(long)]
        m: u32,
        #[arg(long)]
        k: u32,
        #[arg(long)]
        skip_commutant: bool,
    },
}

#[derive(Subcommand)]
enum Suite {
    /// Every defining relation, symbolically
    Presentation {
        #[arg(long)]
        n: u32,
    },
    /// Truncation isomorphisms, trace-ideal identities and memberships
    Morita {
        #[arg(long)]
        n: u32,
    },
    /// Branching dimension identities and restriction invariance
    Branching {
        #[arg(long)]
        n: u32,
    },
    /// Degenerate parameter structure
    Degenerate {
        #[arg(long)]
        n: u32,
        #[arg(long, value_enum)]
        mode: DegenerateMode,
    },
    /// The decorated-basis product law
    Decorated {
        #[arg(long)]
        n: u32,
        /// Sampled pairs at ranks where exhaustion is too large
        #[arg(long, default_value_t = 500)]
        pairs: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum DegenerateMode {
    Dp0,
    D1,
}

#[derive(Serialize)]
struct CheckLine {
    id: String,
    pass: bool,
    detail: String,
}

struct Report {
    command: String,
    seed: u64,
    checks: Vec<CheckLine>,
    extra: serde_json::Value,
}

impl Report {
    fn new(command: &str, seed: u64) -> Report {
        Report {
            command: command.to_string(),
            seed,
            checks: Vec::new(),
            extra: serde_json::Value::Null,
        }
    }

    fn push(&mut self, id: impl Into<String>, pass: bool, detail: impl Into<String>) {
        self.checks.push(CheckLine { id: id.into(), pass, detail: detail.into() });
    }

    fn ok(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    fn emit(&mut self, as_json: bool) {
        self.checks.sort_by(|a, b| a.id.cmp(&b.id));
        if as_json {
            let payload = json!({
                "schema": REPORT_SCHEMA,
                "command": self.command,
                "seed": self.seed,
                "checks": self.checks,
                "extra": self.extra,
                "ok": self.ok(),
            });
            println!("{}", serde_json::to_string_pretty(&payload).expect("serializable"));
        } else {
            for c in &self.checks {
                println!("{} - {}{}", if c.pass { "PASS" } else { "FAIL" }, c.id, {
                    if c.detail.is_empty() {
                        String::new()
                    } else {
                        format!(": {}", c.detail)
                    }
                });
            }
            println!("{}", if self.ok() { "all checks passed" } else { "CHECK FAILURES" });
        }
    }
}

fn seeded_points(seed: u64, count: usize) -> Vec<(Rational, Rational)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();
    while out.len() < count {
        let dn: i64 = rng.gen_range(2..40);
        let dd: i64 = rng.gen_range(1..12);
        let pn: i64 = rng.gen_range(1..40);
        let pd: i64 = rng.gen_range(1..12);
        let delta = parse_rational(&format!("{dn}/{dd}")).expect("valid literal");
        let dp = parse_rational(&format!("{pn}/{pd}")).expect("valid literal");
        // avoid the degenerate loci: loop parameter 1, string parameter 0
        if delta == parse_rational("1").unwrap() {
            continue;
        }
        out.push((delta, dp));
    }
    out
}

fn generic_point() -> (Rational, Rational) {
    (parse_rational("13/7").unwrap(), parse_rational("5/3").unwrap())
}

fn run(cli: &Cli) -> Result<bool, Error> {
    match &cli.command {
        Command::Mult { n, left, right } => {
            let a = Diagram::parse(left)?;
            let b = Diagram::parse(right)?;
            if let Some(n) = n {
                if a.rank() != *n || b.rank() != *n {
                    return Err(Error::Parse(format!(
                        "expected rank {n}, parsed ranks {} and {}",
                        a.rank(),
                        b.rank()
                    )));
                }
            }
            let r = a.compose(&b)?;
            let scalar = pbrauer::Scalar::straightening(r.loops, r.strings);
            if cli.json {
                let payload = json!({
                    "schema": REPORT_SCHEMA,
                    "command": "mult",
                    "loops": r.loops,
                    "strings": r.strings,
                    "scalar": scalar.to_string(),
                    "diagram": r.diagram,
                });
                println!("{}", serde_json::to_string_pretty(&payload).expect("serializable"));
            } else {
                println!("{scalar} * {{{}}}", r.diagram);
            }
            Ok(true)
        }
        Command::Enumerate { n, brauer } => {
            let bound = std::env::var("PBRAUER_MAX_RANK")
                .ok()
                .and_then(|v| v.parse().ok())
                .unwrap_or(DEFAULT_ENUMERATE_BOUND);
            let all = Diagram::enumerate_bounded(*n, *brauer, bound)?;
            if cli.json {
                let payload = json!({
                    "schema": REPORT_SCHEMA,
                    "command": "enumerate",
                    "n": n,
                    "brauer": brauer,
                    "count": all.len(),
                    "diagrams": all,
                });
                println!("{}", serde_json::to_string_pretty(&payload).expect("serializable"));
            } else {
                for d in &all {
                    println!("{d}");
                }
                println!("count: {}", all.len());
            }
            Ok(true)
        }
        Command::Dims { n } => {
            let mut rows = Vec::new();
            let mut square_sum: u128 = 0;
            for k in 0..=*n {
                for lambda in partitions_of(k) {
                    let dim = cell::delta_dim(*n, &lambda);
                    square_sum += dim * dim;
                    rows.push((lambda.to_string(), dim));
                }
            }
            let expected = Diagram::count(*n, false);
            if cli.json {
                let payload = json!({
                    "schema": REPORT_SCHEMA,
                    "command": "dims",
                    "n": n,
                    "dims": rows.iter().map(|(l, d)| json!({"lambda": l, "dim": d.to_string()}))
                        .collect::<Vec<_>>(),
                    "square_sum": square_sum.to_string(),
                    "algebra_dim": expected.to_string(),
                    "ok": square_sum == expected,
                });
                println!("{}", serde_json::to_string_pretty(&payload).expect("serializable"));
            } else {
                for (l, d) in &rows {
                    println!("{l:>10}  {d}");
                }
                println!("sum of squares: {square_sum} (algebra dimension {expected})");
            }
            Ok(square_sum == expected)
        }
        Command::Gram { n, lambda, delta, delta_prime, max_dim } => {
            let lambda = IntPartition::parse(lambda)?;
            let delta = parse_rational(delta)?;
            let dp = parse_rational(delta_prime)?;
            let module = DeltaModule::new(*n, &lambda)?;
            let dim = module.dim();
            let det_symbolic = if dim <= *max_dim {
                Some(cell::scalar_matrix_det(&module.gram()?)?.to_string())
            } else {
                None
            };
            let eval = module.gram_eval(&delta, &dp)?;
            let rank = eval.rank();
            let det_at_point = if dim <= 24 { Some(eval.det().to_string()) } else { None };
            if cli.json {
                let payload = json!({
                    "schema": REPORT_SCHEMA,
                    "command": "gram",
                    "n": n,
                    "lambda": lambda.to_string(),
                    "dimension": dim,
                    "det_symbolic": det_symbolic,
                    "point": {"delta": delta.to_string(), "delta_prime": dp.to_string()},
                    "rank_at_point": rank,
                    "det_at_point": det_at_point,
                });
                println!("{}", serde_json::to_string_pretty(&payload).expect("serializable"));
            } else {
                println!("shape {lambda} at rank {n}: dimension {dim}");
                if let Some(d) = det_symbolic {
                    println!("symbolic determinant: {d}");
                }
                println!("rank at ({delta}, {dp}): {rank}");
                if let Some(d) = det_at_point {
                    println!("determinant at the point: {d}");
                }
            }
            Ok(true)
        }
        Command::SimpleDims { n, delta, delta_prime } => {
            let delta = parse_rational(delta)?;
            let dp = parse_rational(delta_prime)?;
            let dims = cell::simple_dims(*n, &delta, &dp)?;
            if cli.json {
                let payload = json!({
                    "schema": REPORT_SCHEMA,
                    "command": "simple-dims",
                    "n": n,
                    "point": {"delta": delta.to_string(), "delta_prime": dp.to_string()},
                    "dims": dims.iter().map(|(l, r)| json!({"lambda": l.to_string(), "dim": r}))
                        .collect::<Vec<_>>(),
                });
                println!("{}", serde_json::to_string_pretty(&payload).expect("serializable"));
            } else {
                for (l, r) in &dims {
                    println!("{:>10}  {r}", l.to_string());
                }
            }
            Ok(true)
        }
        Command::Verify { suite } => {
            let mut report = match suite {
                Suite::Presentation { n } => verify_presentation(*n, cli.seed)?,
                Suite::Morita { n } => verify_morita(*n, cli.seed)?,
                Suite::Branching { n } => verify_branching(*n, cli.seed)?,
                Suite::Degenerate { n, mode } => verify_degenerate(*n, *mode, cli.seed)?,
                Suite::Decorated { n, pairs } => verify_decorated(*n, *pairs, cli.seed)?,
            };
            report.emit(cli.json);
            Ok(report.ok())
        }
        Command::SchurWeyl { m, k, skip_commutant } => {
            let mut report = Report::new("schur-weyl", cli.seed);
            let hom = schur_weyl::homomorphism_check(*m, *k, cli.seed)?;
            report.push(
                "homomorphism",
                hom.ok(),
                format!("{} diagram pairs, {} relation instances checked",
                    hom.pairs_checked,
                    hom.relation_failures.len()),
            );
            let inj = schur_weyl::injectivity_rank(*m, *k)?;
            report.push(
                "image-rank",
                *m > *k || inj.injective,
                format!("rank {} of expected {}", inj.rank, inj.expected),
            );
            report.push(
                "centralizing",
                schur_weyl::images_commute_with_group(*m, *k)?,
                "diagram images commute with the orthogonal generators",
            );
            let commutant = if *skip_commutant {
                None
            } else {
                match schur_weyl::commutant_dim(*m, *k) {
                    Ok(c) => {
                        if *m <= *k {
                            report.push(
                                "commutant",
                                c.dim_commutant == c.dim_image,
                                format!("dimension {} vs image {}", c.dim_commutant, c.dim_image),
                            );
                        }
                        Some(c.dim_commutant)
                    }
                    Err(Error::TooLarge(_)) => None,
                    Err(e) => return Err(e),
                }
            };
            report.extra = json!({
                "rank": inj.rank,
                "expected": inj.expected,
                "injective": inj.injective,
                "commutant_dim": commutant,
            });
            report.emit(cli.json);
            Ok(report.ok())
        }
    }
}

fn verify_presentation(n: u32, seed: u64) -> Result<Report, Error> {
    let mut report = Report::new("verify presentation", seed);
    for c in algebra::presentation_check(n)? {
        report.push(format!("relation {}", c.relation), c.holds, "");
    }
    Ok(report)
}

fn verify_decorated(n: u32, pairs: usize, seed: u64) -> Result<Report, Error> {
    let mut report = Report::new("verify decorated", seed);
    let all = Diagram::enumerate(n, false)?;
    if n <= 2 {
        let mut ok = true;
        for a in &all {
            for b in &all {
                ok &= algebra::decorated_law_holds(a, b)?;
            }
        }
        report.push("product-law", ok, format!("exhaustive over {} pairs", all.len().pow(2)));
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut ok = true;
        for _ in 0..pairs {
            let a = &all[rng.gen_range(0..all.len())];
            let b = &all[rng.gen_range(0..all.len())];
            ok &= algebra::decorated_law_holds(a, b)?;
        }
        report.push("product-law", ok, format!("{pairs} sampled pairs"));
    }
    let (one_e, one_o) = algebra::parity_idempotents(n)?;
    let sum_ok = one_e.add(&one_o) == Element::one(n);
    let idem_ok = one_e.multiply(&one_e)? == one_e
        && one_o.multiply(&one_o)? == one_o
        && one_e.multiply(&one_o)?.is_zero();
    report.push("parity-idempotents", sum_ok && idem_ok, "orthogonal, sum to the identity");
    Ok(report)
}

fn verify_morita(n: u32, seed: u64) -> Result<Report, Error> {
    let mut report = Report::new("verify morita", seed);
    let even = morita::even_truncation_check(n)?;
    report.push(
        "even-truncation",
        even.ok(),
        format!("{} surviving diagrams", even.basis_size),
    );
    let odd = morita::odd_truncation_check(n)?;
    report.push("odd-truncation", odd.ok(), format!("{} surviving diagrams", odd.basis_size));
    for k in 0..=n / 2 {
        report.push(
            format!("even-trace-identity k={k}"),
            morita::fig_even_identity(n, k)?,
            "",
        );
    }
    let mut k = 0;
    while 2 * k + 1 <= n {
        report.push(format!("odd-trace-identity k={k}"), morita::fig_odd_identity(n, k)?, "");
        k += 1;
    }
    if n <= 4 {
        let (delta, dp) = generic_point();
        for kk in 0..=n {
            for lambda in partitions_of(kk) {
                for side in [Side::Even, Side::Odd] {
                    if side == Side::Odd && n == 0 {
                        continue;
                    }
                    let r = morita::specht_image_check(n, &lambda, side, &delta, &dp)?;
                    report.push(
                        format!("specht-image {side:?} lambda={lambda}"),
                        r.holds,
                        format!("truncated {} vs brauer {}", r.truncated_dim, r.brauer_dim),
                    );
                }
            }
        }
    }
    if n <= 3 {
        let mut points = vec![generic_point()];
        points.extend(seeded_points(seed, 2));
        for (pi, (delta, dp)) in points.iter().enumerate() {
            let uh = algebra::u_hat(n);
            let om = algebra::omega_x(n, &[1])?;
            let mut ok = true;
            for size in 0..=n {
                let xs: Vec<u32> = (1..=size).collect();
                let target = algebra::omega_x(n, &xs)?;
                let idem = if size % 2 == 0 { &uh } else { &om };
                ok &= algebra::ideal_membership(&target, idem, delta, dp)?;
            }
            report.push(
                format!("trace-ideal-membership point{pi}"),
                ok,
                format!("delta={delta}, delta'={dp}"),
            );
        }
    }
    Ok(report)
}

fn verify_branching(n: u32, seed: u64) -> Result<Report, Error> {
    let mut report = Report::new("verify branching", seed);
    let y = YoungMatrix::new(n);
    for k in 0..=n {
        for lambda in partitions_of(k) {
            let b = young::branching_check(n, &lambda)?;
            report.push(
                format!("branching lambda={lambda}"),
                b.holds,
                format!("{} = {} + {} + {}", b.total, b.same_shape, b.removed_box, b.added_box),
            );
            let via_matrix = y.dim_via_matrix(n, &lambda)?;
            let direct = cell::delta_dim(n, &lambda);
            report.push(
                format!("walk-count lambda={lambda}"),
                via_matrix.to_string() == direct.to_string(),
                format!("matrix {via_matrix} vs half-diagram formula {direct}"),
            );
        }
    }
    if n <= 3 && n >= 1 {
        for (pi, (delta, dp)) in seeded_points(seed, 3).iter().enumerate() {
            let mut ok = true;
            for k in 0..=n {
                for lambda in partitions_of(k) {
                    ok &= young::restriction_invariance_check(n, &lambda, delta, dp)?;
                }
            }
            report.push(format!("restriction-invariance point{pi}"), ok, "");
        }
    }
    Ok(report)
}

fn verify_degenerate(n: u32, mode: DegenerateMode, seed: u64) -> Result<Report, Error> {
    let mut report = Report::new("verify degenerate", seed);
    match mode {
        DegenerateMode::Dp0 => {
            if n <= 3 {
                let nil = degenerate::nilpotency_check(n)?;
                report.push(
                    "singleton-ideal-nilpotency",
                    nil.ok(),
                    "ideal, vanishing power, nonzero lower power",
                );
            }
            let q = degenerate::quotient_iso_check(n)?;
            report.push(
                "brauer-quotient",
                q.mismatches.is_empty(),
                format!("{} products checked", q.pairs_checked),
            );
            for k in 0..=n {
                for lambda in partitions_of(k) {
                    for l in degenerate::layer_values(n, k) {
                        let r = degenerate::theorem505_check(n, &lambda, l)?;
                        report.push(
                            format!("layer-decomposition lambda={lambda} l={l}"),
                            r.dims_match && r.filtration_invariant,
                            format!("{} vs {}", r.layer_dim, r.brauer_side),
                        );
                    }
                }
            }
        }
        DegenerateMode::D1 => {
            let r = degenerate::rescale_iso_check(n.min(3), n == 2)?;
            report.push(
                "rescaling-relations",
                r.relation_failures.is_empty(),
                "generator relations transport",
            );
            if n == 2 {
                report.push(
                    "rescaling-basis",
                    r.basis_failures.is_empty(),
                    format!("{} basis pairs", r.basis_pairs_checked),
                );
            }
            for case in degenerate::delta_one_membership(n)? {
                report.push(case.description.clone(), case.holds, "");
            }
        }
    }
    Ok(report)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
