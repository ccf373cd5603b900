//! `divalloc` — evaluate allocation mechanisms, verify their
//! properties, and run the LP and certificate tooling.
//!
//! Exit codes: 0 = pass, 1 = a verification check failed, 2 =
//! usage/config error.

mod config;

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::json;

use divalloc::core::{
    competitive_ratio_at, even_split_mechanism, first_best, social_welfare, MechanismHandle,
    UtilityVector,
};
use divalloc::multi_item::{
    averaged_pa_mechanism, pa_max_mechanism, pa_mechanism, pa_ratio_certificate,
    AVERAGE_EXPONENT, AVERAGE_WEIGHTS,
};
use divalloc::two_item::{
    dictator_fixture_symmetric, five_sixths_mechanism, partial_f1, partial_f2,
    partial_family_mechanism, QRTables, SymmetricTwoItemMechanism,
};
use divalloc::{dip, lp, verify, Error, Result};

/// Default seed for all random sampling; pass `--seed` to change it.
const DEFAULT_SEED: u64 = 17;

#[derive(Parser)]
#[command(
    name = "divalloc",
    version,
    about = "Strategyproof no-money allocation mechanisms: evaluation, verification, and LP bounds"
)]
struct Cli {
    /// key=value config file with '#' comments; flags override entries
    #[arg(long, global = true, value_name = "FILE")]
    config: Option<PathBuf>,

    /// Seed for all random sampling (default 17)
    #[arg(long, global = true)]
    seed: Option<u64>,

    /// Worker threads for grid scans (default: all cores); never
    /// changes reported values, only wall-clock time
    #[arg(long, global = true)]
    workers: Option<usize>,

    /// Also write the JSON/CSV report to this file
    #[arg(long, global = true, value_name = "FILE")]
    out: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate a mechanism at one bid profile
    Eval(EvalArgs),
    /// Check strategyproofness, convexity, or competitive ratio
    #[command(subcommand)]
    Verify(VerifyCmd),
    /// Build, solve, or extract the guarantee LPs
    #[command(subcommand)]
    Lp(LpCmd),
    /// Check or search for an impossibility-bound certificate
    #[command(subcommand)]
    Bound(BoundCmd),
    /// Dynamic increasing-price schedule tooling
    #[command(subcommand)]
    Dip(DipCmd),
    /// Competitive-ratio certificate for the averaged product mechanism
    PaCert(PaCertArgs),
}

#[derive(Args)]
struct MechArgs {
    /// One of: five-sixths, partial-qr, pa:<c>, pa-max, pa-avg,
    /// even-split, dip-five-sixths, dictator-fixture
    #[arg(long)]
    mechanism: Option<String>,

    /// Q/R table CSV (required for partial-qr)
    #[arg(long, value_name = "FILE")]
    qr_csv: Option<PathBuf>,

    /// Q/R metadata file (required for partial-qr)
    #[arg(long, value_name = "FILE")]
    qr_meta: Option<PathBuf>,
}

#[derive(Args)]
struct EvalArgs {
    #[command(flatten)]
    mech: MechArgs,

    /// Agent 1's bid for item 1 (two-item shorthand for --u1 t,1-t)
    #[arg(long)]
    t1: Option<f64>,

    /// Agent 2's bid for item 1
    #[arg(long)]
    t2: Option<f64>,

    /// Agent 1's utility vector, comma-separated, summing to 1
    #[arg(long, value_name = "LIST")]
    u1: Option<String>,

    /// Agent 2's utility vector, comma-separated, summing to 1
    #[arg(long, value_name = "LIST")]
    u2: Option<String>,
}

#[derive(Subcommand)]
enum VerifyCmd {
    /// Direct no-profitable-misreport check
    Sp(SpArgs),
    /// Convexity + subgradient characterization (two-item mechanisms)
    Rochet(GridArgs),
    /// Derivative coupling condition (two-item mechanisms)
    Sufficient(GridArgs),
    /// Worst-case welfare ratio against the first-best
    Ratio(RatioArgs),
}

#[derive(Args)]
struct SpArgs {
    #[command(flatten)]
    mech: MechArgs,

    /// Bid grid resolution for the exhaustive two-item check
    #[arg(long)]
    grid: Option<usize>,

    /// Regret above this counts as a violation
    #[arg(long)]
    tol: Option<f64>,

    /// Use seeded sampling with this many true profiles instead of a grid
    #[arg(long)]
    samples: Option<usize>,

    /// Number of items for the sampled check
    #[arg(long)]
    m: Option<usize>,

    /// Misreports tried per misreport family in the sampled check
    #[arg(long)]
    misreports: Option<usize>,
}

#[derive(Args)]
struct GridArgs {
    #[command(flatten)]
    mech: MechArgs,

    /// Bid grid resolution
    #[arg(long)]
    grid: Option<usize>,

    /// Violation tolerance
    #[arg(long)]
    tol: Option<f64>,
}

#[derive(Args)]
struct RatioArgs {
    #[command(flatten)]
    mech: MechArgs,

    /// Bid grid resolution for the two-item scan
    #[arg(long)]
    grid: Option<usize>,

    /// Use seeded sampling with this many profiles instead of a grid
    #[arg(long)]
    samples: Option<usize>,

    /// Number of items for the sampled scan
    #[arg(long)]
    m: Option<usize>,

    /// Fail (exit 1) if the measured minimum ratio is below this
    #[arg(long)]
    at_least: Option<f64>,
}

#[derive(Subcommand)]
enum LpCmd {
    /// Write an LP instance to a file
    Build(LpBuildArgs),
    /// Solve an LP and report the optimum
    Solve(LpSolveArgs),
    /// Solve the Q/R design LP and save the extracted tables
    Qr(LpQrArgs),
}

#[derive(Args)]
struct LpBuildArgs {
    /// Grid LP variant: full or partial
    #[arg(long)]
    kind: Option<String>,

    /// Grid resolution
    #[arg(long)]
    n: Option<usize>,

    /// Restrict truthfulness rows to adjacent misreports
    #[arg(long)]
    prune: bool,

    /// Output LP file
    #[arg(long, value_name = "FILE")]
    file: Option<PathBuf>,
}

#[derive(Args)]
struct LpSolveArgs {
    /// Grid LP variant: full or partial (ignored with --in)
    #[arg(long)]
    kind: Option<String>,

    /// Grid resolution (ignored with --in)
    #[arg(long)]
    n: Option<usize>,

    /// Restrict truthfulness rows to adjacent misreports
    #[arg(long)]
    prune: bool,

    /// Solve a previously exported LP file instead of building one
    #[arg(long = "in", value_name = "FILE")]
    input: Option<PathBuf>,
}

#[derive(Args)]
struct LpQrArgs {
    /// Grid resolution
    #[arg(long)]
    n: Option<usize>,

    /// Feasibility margin, or "auto" for 2.92/(2n)
    #[arg(long)]
    delta: Option<String>,

    /// Output CSV for the Q/R tables
    #[arg(long, value_name = "FILE")]
    csv: Option<PathBuf>,

    /// Output metadata file for the Q/R tables
    #[arg(long, value_name = "FILE")]
    meta: Option<PathBuf>,
}

#[derive(Subcommand)]
enum BoundCmd {
    /// Check one certificate's two strict inequalities
    Check(BoundCheckArgs),
    /// Search for the smallest h admitting a certificate
    Search(BoundSearchArgs),
}

#[derive(Args)]
struct BoundCheckArgs {
    /// Claimed ratio bound h
    #[arg(long)]
    h: Option<f64>,

    /// Allocation threshold q*
    #[arg(long)]
    q: Option<f64>,

    /// Witness bid t1' for inequality (a)
    #[arg(long)]
    t1p: Option<f64>,

    /// Witness bid t1'' for inequality (b)
    #[arg(long)]
    t1pp: Option<f64>,
}

#[derive(Args)]
struct BoundSearchArgs {
    /// Lower end of the h search range
    #[arg(long)]
    h_lo: Option<f64>,

    /// Upper end of the h search range
    #[arg(long)]
    h_hi: Option<f64>,

    /// Resolution of the witness-bid grids
    #[arg(long)]
    t_steps: Option<usize>,

    /// Target accuracy of the returned h
    #[arg(long)]
    h_tol: Option<f64>,
}

#[derive(Subcommand)]
enum DipCmd {
    /// Sample the per-item price curves as CSV (item,y,price)
    Prices(DipPricesArgs),
}

#[derive(Args)]
struct DipPricesArgs {
    /// Opponent's bid for item 1
    #[arg(long)]
    t2: Option<f64>,

    /// Sample points per item
    #[arg(long)]
    samples: Option<usize>,
}

#[derive(Args)]
struct PaCertArgs {
    /// Product exponent c
    #[arg(long)]
    c: Option<f64>,

    /// Weight of the exponent-c product mechanism
    #[arg(long)]
    w0: Option<f64>,

    /// Weight of the exponent-1/c product mechanism
    #[arg(long)]
    w1: Option<f64>,

    /// Weight of the max-of-product-and-even-split mechanism
    #[arg(long)]
    w2: Option<f64>,

    /// Certificate grid step, e.g. "1/200" or "0.005"
    #[arg(long)]
    grid_step: Option<String>,

    /// Also dump every grid point's bound as CSV (u1,u2,bound)
    #[arg(long, value_name = "FILE")]
    csv: Option<PathBuf>,

    /// Fail (exit 1) if the corrected bound is below this
    #[arg(long)]
    at_least: Option<f64>,

    /// Fail (exit 1) if the raw grid minimum is below this
    #[arg(long)]
    at_least_raw: Option<f64>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(2)
        }
    }
}

/// A mechanism plus, when available, its symmetric two-item form
/// needed by the convexity checks.
enum Mech {
    Sym(SymmetricTwoItemMechanism),
    Handle(MechanismHandle),
}

impl Mech {
    fn handle(&self) -> MechanismHandle {
        match self {
            Mech::Sym(m) => m.to_handle(),
            Mech::Handle(h) => h.clone(),
        }
    }

    fn symmetric(&self) -> Result<&SymmetricTwoItemMechanism> {
        match self {
            Mech::Sym(m) => Ok(m),
            Mech::Handle(h) => Err(Error::InvalidInput(format!(
                "{} is not a symmetric two-item mechanism; this check needs one",
                h.label()
            ))),
        }
    }
}

fn build_mechanism(args: &MechArgs, cfg: &config::Config) -> Result<Mech> {
    let id = cfg
        .resolve_opt(args.mechanism.clone(), "mechanism")?
        .ok_or_else(|| Error::InvalidInput("missing --mechanism".into()))?;
    match id.as_str() {
        "five-sixths" => Ok(Mech::Sym(five_sixths_mechanism())),
        "dictator-fixture" => Ok(Mech::Sym(dictator_fixture_symmetric())),
        "partial-qr" => {
            let csv = cfg
                .resolve_opt(args.qr_csv.clone(), "qr_csv")?
                .ok_or_else(|| Error::InvalidInput("partial-qr needs --qr-csv".into()))?;
            let meta = cfg
                .resolve_opt(args.qr_meta.clone(), "qr_meta")?
                .ok_or_else(|| Error::InvalidInput("partial-qr needs --qr-meta".into()))?;
            let qr = QRTables::load(&csv, &meta)?;
            Ok(Mech::Sym(partial_family_mechanism(&partial_f1(), &partial_f2(), &qr)?))
        }
        "pa-max" => Ok(Mech::Handle(pa_max_mechanism())),
        "pa-avg" => Ok(Mech::Handle(averaged_pa_mechanism()?)),
        "even-split" => Ok(Mech::Handle(even_split_mechanism())),
        "dip-five-sixths" => Ok(Mech::Handle(dip::five_sixths_dip_mechanism())),
        other => {
            if let Some(c) = other.strip_prefix("pa:") {
                let c: f64 = c
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad exponent in {other:?}")))?;
                Ok(Mech::Handle(pa_mechanism(c)?))
            } else {
                Err(Error::InvalidInput(format!("unknown mechanism {other:?}")))
            }
        }
    }
}

fn parse_utility_list(raw: &str) -> Result<UtilityVector> {
    let entries = raw
        .split(',')
        .map(|s| {
            s.trim()
                .parse::<f64>()
                .map_err(|_| Error::Parse(format!("bad utility entry {s:?}")))
        })
        .collect::<Result<Vec<_>>>()?;
    UtilityVector::new(entries)
}

/// Parses "a/b" fractions or plain floats.
fn parse_step(raw: &str) -> Result<f64> {
    if let Some((num, den)) = raw.split_once('/') {
        let num: f64 = num.trim().parse().map_err(|_| Error::Parse(format!("bad step {raw:?}")))?;
        let den: f64 = den.trim().parse().map_err(|_| Error::Parse(format!("bad step {raw:?}")))?;
        if den == 0.0 {
            return Err(Error::Parse(format!("bad step {raw:?}")));
        }
        Ok(num / den)
    } else {
        raw.trim().parse().map_err(|_| Error::Parse(format!("bad step {raw:?}")))
    }
}

/// Writes to stdout, treating a closed pipe (e.g. `| head`) as success.
fn print_or_pipe(text: &str) -> Result<()> {
    use std::io::Write;
    match std::io::stdout().write_all(text.as_bytes()) {
        Err(e) if e.kind() == std::io::ErrorKind::BrokenPipe => Ok(()),
        other => Ok(other?),
    }
}

fn emit(report: &serde_json::Value, out: Option<&Path>) -> Result<()> {
    let text = serde_json::to_string_pretty(report)
        .map_err(|e| Error::Parse(format!("serialization failed: {e}")))?
        + "\n";
    print_or_pipe(&text)?;
    if let Some(path) = out {
        std::fs::write(path, text)?;
    }
    Ok(())
}

fn emit_text(text: &str, out: Option<&Path>) -> Result<()> {
    print_or_pipe(text)?;
    if let Some(path) = out {
        std::fs::write(path, text)?;
    }
    Ok(())
}

fn pass_fail(passed: bool) -> ExitCode {
    if passed {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn run(cli: Cli) -> Result<ExitCode> {
    let cfg = config::Config::load(cli.config.as_deref())?;
    let seed = cfg.resolve(cli.seed, "seed", DEFAULT_SEED)?;
    let workers = cfg.resolve_opt(cli.workers, "workers")?;
    if let Some(k) = workers {
        // results are order-independent reductions, so this only
        // changes wall-clock time; ignore "already initialized"
        let _ = rayon::ThreadPoolBuilder::new().num_threads(k).build_global();
    }
    let out = cli.out.as_deref();

    match cli.command {
        Command::Eval(args) => cmd_eval(args, &cfg, out),
        Command::Verify(cmd) => cmd_verify(cmd, &cfg, seed, out),
        Command::Lp(cmd) => cmd_lp(cmd, &cfg, out),
        Command::Bound(cmd) => cmd_bound(cmd, &cfg, out),
        Command::Dip(DipCmd::Prices(args)) => cmd_dip_prices(args, &cfg, out),
        Command::PaCert(args) => cmd_pa_cert(args, &cfg, out),
    }
}

fn cmd_eval(args: EvalArgs, cfg: &config::Config, out: Option<&Path>) -> Result<ExitCode> {
    let mech = build_mechanism(&args.mech, cfg)?.handle();
    let t1 = cfg.resolve_opt(args.t1, "t1")?;
    let t2 = cfg.resolve_opt(args.t2, "t2")?;
    let u1_raw = cfg.resolve_opt(args.u1.clone(), "u1")?;
    let u2_raw = cfg.resolve_opt(args.u2.clone(), "u2")?;
    let (u1, u2) = match (t1, t2, u1_raw, u2_raw) {
        (Some(t1), Some(t2), None, None) => {
            (UtilityVector::two_item(t1)?, UtilityVector::two_item(t2)?)
        }
        (None, None, Some(a), Some(b)) => (parse_utility_list(&a)?, parse_utility_list(&b)?),
        _ => {
            return Err(Error::InvalidInput(
                "give either --t1 and --t2, or --u1 and --u2".into(),
            ))
        }
    };
    let alloc = mech.allocate(&u1, &u2)?;
    let sw = social_welfare(&mech, &u1, &u2)?;
    let (opt, _) = first_best(&u1, &u2)?;
    let ratio = competitive_ratio_at(&mech, &u1, &u2)?;
    emit(
        &json!({
            "mechanism": mech.label(),
            "agent1": alloc.agent(0),
            "agent2": alloc.agent(1),
            "u1_value": u1.value_of(alloc.agent(0)),
            "u2_value": u2.value_of(alloc.agent(1)),
            "social_welfare": sw,
            "first_best": opt,
            "ratio": ratio,
        }),
        out,
    )?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_verify(
    cmd: VerifyCmd,
    cfg: &config::Config,
    seed: u64,
    out: Option<&Path>,
) -> Result<ExitCode> {
    match cmd {
        VerifyCmd::Sp(args) => {
            let mech = build_mechanism(&args.mech, cfg)?;
            let tol = cfg.resolve(args.tol, "tol", 1e-9)?;
            let samples = cfg.resolve_opt(args.samples, "samples")?;
            let report = match samples {
                Some(samples) => {
                    let m = cfg.resolve(args.m, "m", 2)?;
                    let misreports = cfg.resolve(args.misreports, "misreports", 24)?;
                    verify::check_sp_sampled(&mech.handle(), m, samples, misreports, seed, tol)?
                }
                None => {
                    let grid = cfg.resolve(args.grid, "grid", 200)?;
                    verify::check_sp_direct(&mech.handle(), grid, tol)?
                }
            };
            let passed = report.passed;
            emit(&json!({"kind": "sp", "report": report}), out)?;
            Ok(pass_fail(passed))
        }
        VerifyCmd::Rochet(args) => {
            let mech = build_mechanism(&args.mech, cfg)?;
            let grid = cfg.resolve(args.grid, "grid", 200)?;
            let tol = cfg.resolve(args.tol, "tol", 1e-9)?;
            let report = verify::check_rochet(mech.symmetric()?, grid, tol)?;
            let passed = report.passed;
            emit(&json!({"kind": "rochet", "report": report}), out)?;
            Ok(pass_fail(passed))
        }
        VerifyCmd::Sufficient(args) => {
            let mech = build_mechanism(&args.mech, cfg)?;
            let tol = cfg.resolve(args.tol, "tol", 1e-6)?;
            let sym = mech.symmetric()?;
            let breakpoints = sym.breakpoints().to_vec();
            let report = verify::check_sufficient_condition(sym, &breakpoints, tol)?;
            let passed = report.passed;
            emit(&json!({"kind": "sufficient", "report": report}), out)?;
            Ok(pass_fail(passed))
        }
        VerifyCmd::Ratio(args) => {
            let mech = build_mechanism(&args.mech, cfg)?.handle();
            let samples = cfg.resolve_opt(args.samples, "samples")?;
            let report = match samples {
                Some(samples) => {
                    let m = cfg.resolve(args.m, "m", 2)?;
                    verify::measure_ratio_sampled(&mech, m, samples, seed)?
                }
                None => {
                    let grid = cfg.resolve(args.grid, "grid", 1000)?;
                    verify::measure_ratio(&mech, grid)?
                }
            };
            let at_least = cfg.resolve_opt(args.at_least, "at_least")?;
            let passed = at_least.map_or(true, |bound| report.min_ratio >= bound);
            emit(&json!({"kind": "ratio", "report": report, "passed": passed}), out)?;
            Ok(pass_fail(passed))
        }
    }
}

fn parse_variant(kind: &str) -> Result<lp::GcVariant> {
    match kind {
        "full" => Ok(lp::GcVariant::Full),
        "partial" => Ok(lp::GcVariant::Partial),
        other => Err(Error::InvalidInput(format!("unknown LP kind {other:?}"))),
    }
}

fn solution_report(lp_inst: &lp::LPInstance, sol: &lp::LPSolution) -> serde_json::Value {
    let nonzeros = sol.values.iter().filter(|v| v.abs() > 1e-12).count();
    json!({
        "status": format!("{:?}", sol.status).to_lowercase(),
        "objective": sol.objective_value,
        "lambda": sol.value("lambda"),
        "variables": lp_inst.variables.len(),
        "rows": lp_inst.rows.len(),
        "nonzeros": nonzeros,
    })
}

fn cmd_lp(cmd: LpCmd, cfg: &config::Config, out: Option<&Path>) -> Result<ExitCode> {
    match cmd {
        LpCmd::Build(args) => {
            let kind = cfg.resolve(args.kind, "kind", "full".into())?;
            let n = cfg.resolve(args.n, "n", 50)?;
            let file = cfg
                .resolve_opt(args.file, "file")?
                .ok_or_else(|| Error::InvalidInput("missing --file for the LP output".into()))?;
            let inst = lp::build_gc_lp(n, parse_variant(&kind)?, args.prune)?;
            lp::export_lp(&inst, &file)?;
            emit(
                &json!({
                    "written": file.display().to_string(),
                    "variables": inst.variables.len(),
                    "rows": inst.rows.len(),
                }),
                out,
            )?;
            Ok(ExitCode::SUCCESS)
        }
        LpCmd::Solve(args) => {
            let inst = match cfg.resolve_opt(args.input, "in")? {
                Some(path) => lp::import_lp(&path)?,
                None => {
                    let kind = cfg.resolve(args.kind, "kind", "full".into())?;
                    let n = cfg.resolve(args.n, "n", 50)?;
                    lp::build_gc_lp(n, parse_variant(&kind)?, args.prune)?
                }
            };
            let backend = lp::backend_from_env()?;
            let sol = lp::solve(&inst, backend.as_ref())?;
            emit(&solution_report(&inst, &sol), out)?;
            Ok(ExitCode::SUCCESS)
        }
        LpCmd::Qr(args) => {
            let n = cfg.resolve(args.n, "n", 250)?;
            let delta_raw = cfg.resolve(args.delta, "delta", "auto".into())?;
            let delta = if delta_raw == "auto" {
                2.92 / (2.0 * n as f64)
            } else {
                delta_raw
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad delta {delta_raw:?}")))?
            };
            let inst = lp::build_qr_lp(n, delta, &partial_f1(), &partial_f2())?;
            let backend = lp::backend_from_env()?;
            let sol = lp::solve(&inst, backend.as_ref())?;
            let tables = lp::extract_qr_tables(&sol, n, delta)?;
            let mut report = solution_report(&inst, &sol);
            report["n"] = json!(n);
            report["delta"] = json!(delta);
            report["max_q"] = json!(tables.max_q());
            if let (Some(csv), Some(meta)) = (
                cfg.resolve_opt(args.csv, "csv")?,
                cfg.resolve_opt(args.meta, "meta")?,
            ) {
                tables.save(&csv, &meta)?;
                report["csv"] = json!(csv.display().to_string());
                report["meta"] = json!(meta.display().to_string());
            }
            emit(&report, out)?;
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn cmd_bound(cmd: BoundCmd, cfg: &config::Config, out: Option<&Path>) -> Result<ExitCode> {
    match cmd {
        BoundCmd::Check(args) => {
            let require = |v: Option<f64>, key: &str| -> Result<f64> {
                cfg.resolve_opt(v, key)?
                    .ok_or_else(|| Error::InvalidInput(format!("missing --{key}")))
            };
            let cert = verify::BoundCertificate {
                h: require(args.h, "h")?,
                q_star: require(args.q, "q")?,
                t1_prime: require(args.t1p, "t1p")?,
                t1_double_prime: require(args.t1pp, "t1pp")?,
            };
            let report = verify::check_bound_certificate(&cert)?;
            let valid = report.valid;
            emit(&json!({"certificate": cert, "report": report}), out)?;
            Ok(pass_fail(valid))
        }
        BoundCmd::Search(args) => {
            let defaults = verify::CertificateSearch::default();
            let search = verify::CertificateSearch {
                h_range: (
                    cfg.resolve(args.h_lo, "h_lo", defaults.h_range.0)?,
                    cfg.resolve(args.h_hi, "h_hi", defaults.h_range.1)?,
                ),
                q_range: defaults.q_range,
                t_steps: cfg.resolve(args.t_steps, "t_steps", defaults.t_steps)?,
                h_tol: cfg.resolve(args.h_tol, "h_tol", defaults.h_tol)?,
            };
            match verify::search_best_certificate(&search) {
                Some((h, cert)) => {
                    let report = verify::check_bound_certificate(&cert)?;
                    emit(&json!({"best_h": h, "certificate": cert, "report": report}), out)?;
                    Ok(ExitCode::SUCCESS)
                }
                None => {
                    emit(&json!({"best_h": null}), out)?;
                    Ok(ExitCode::from(1))
                }
            }
        }
    }
}

fn cmd_dip_prices(
    args: DipPricesArgs,
    cfg: &config::Config,
    out: Option<&Path>,
) -> Result<ExitCode> {
    let t2 = cfg
        .resolve_opt(args.t2, "t2")?
        .ok_or_else(|| Error::InvalidInput("missing --t2".into()))?;
    let samples = cfg.resolve(args.samples, "samples", 200)?;
    if samples < 2 {
        return Err(Error::InvalidInput("need at least 2 samples".into()));
    }
    let sched = dip::five_sixths_price_schedule(t2)?;
    let mut csv = String::from("item,y,price\n");
    for j in 0..sched.num_items() {
        let item = sched.item(j);
        let end = item.finite_end();
        for k in 0..=samples {
            let y = end * k as f64 / samples as f64;
            // stay inside the finite range at the right endpoint
            let price = item.price(y.min(end - 1e-12).max(0.0));
            csv.push_str(&format!("{},{},{}\n", j + 1, y, price));
        }
    }
    emit_text(&csv, out)?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_pa_cert(args: PaCertArgs, cfg: &config::Config, out: Option<&Path>) -> Result<ExitCode> {
    let c = cfg.resolve(args.c, "c", AVERAGE_EXPONENT)?;
    let weights = (
        cfg.resolve(args.w0, "w0", AVERAGE_WEIGHTS.0)?,
        cfg.resolve(args.w1, "w1", AVERAGE_WEIGHTS.1)?,
        cfg.resolve(args.w2, "w2", AVERAGE_WEIGHTS.2)?,
    );
    let step_raw = cfg.resolve(args.grid_step, "grid_step", "1/200".into())?;
    let step = parse_step(&step_raw)?;
    let csv = cfg.resolve_opt(args.csv, "csv")?;
    let cert = pa_ratio_certificate(c, weights, step, csv.as_deref())?;
    let at_least = cfg.resolve_opt(args.at_least, "at_least")?;
    let at_least_raw = cfg.resolve_opt(args.at_least_raw, "at_least_raw")?;
    let passed = at_least.map_or(true, |b| cert.corrected >= b)
        && at_least_raw.map_or(true, |b| cert.grid_min >= b);
    emit(
        &json!({
            "c": c,
            "weights": [weights.0, weights.1, weights.2],
            "grid_step": cert.grid_step,
            "grid_min": cert.grid_min,
            "corrected": cert.corrected,
            "argmin": [cert.argmin.0, cert.argmin.1],
            "passed": passed,
        }),
        out,
    )?;
    Ok(pass_fail(passed))
}
