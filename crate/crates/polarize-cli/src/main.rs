//! `polarize` — evaluate generalized polarization products, verify the
//! Cauchy-Schwarz proof chain on concrete norms, stress-search for
//! violations, and reproduce the reference values.
//!
//! Every subcommand writes one JSON run report to stdout and a
//! human-readable summary to stderr under `--pretty`. Exit codes:
//! 0 all checks passed, 1 a check failed, 2 usage or input errors.

mod reference;
mod report;

use std::collections::BTreeMap;
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand};
use serde_json::json;

use polarize::batch::batch_map;
use polarize::csb::{verify_csb_proof_with, ProofTolerances, ProofTrace};
use polarize::explorer::{explore_conjecture, max_abs_product};
use polarize::norms::{random_norm, NormDescriptor, NormFamily};
use polarize::product::polarization_product;
use polarize::seeds::child_seed;
use polarize::CVector;

use report::{CheckSummary, RunReport};

#[derive(Parser)]
#[command(name = "polarize", version, about = "Generalized polarization products on complex normed spaces")]
struct Cli {
    /// Print a human-readable summary to stderr.
    #[arg(long, global = true)]
    pretty: bool,
    /// Omit the timestamp so identical invocations emit byte-identical
    /// reports.
    #[arg(long, global = true)]
    deterministic: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate ⟨x|y⟩ under a norm and report the Cauchy-Schwarz ratio.
    Product(ProductArgs),
    /// Replay the Cauchy-Schwarz proof chain on norms over ℂ².
    VerifyCsb(VerifyArgs),
    /// Recompute the reference values against their closed forms.
    ReproducePaper,
    /// Search many random norms for Cauchy-Schwarz violations.
    Stress(StressArgs),
    /// Measure phase-homogeneity vs parallelogram-law defects.
    ExploreConjecture(ExploreArgs),
}

#[derive(Args)]
struct ProductArgs {
    /// Norm descriptor: inline JSON or a path to a JSON file.
    #[arg(long)]
    norm: String,
    /// First vector as a JSON array of [re, im] pairs.
    #[arg(long)]
    x: String,
    /// Second vector as a JSON array of [re, im] pairs.
    #[arg(long)]
    y: String,
    /// Tolerance on the Cauchy-Schwarz ratio check.
    #[arg(long, default_value_t = 1e-7)]
    tol: f64,
}

#[derive(Args)]
struct VerifyArgs {
    /// Norm descriptor (dim 2): inline JSON or a file path.
    #[arg(long, conflicts_with_all = ["family", "trials", "seed"])]
    norm: Option<String>,
    /// Sample random norms from this family instead.
    #[arg(long)]
    family: Option<FamilyChoice>,
    #[arg(long, default_value_t = 100)]
    trials: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Tolerance on single-rounding inequalities.
    #[arg(long, default_value_t = 1e-9)]
    tol: f64,
    /// Tolerance on the squared final bound.
    #[arg(long, default_value_t = 1e-7)]
    tol_final: f64,
}

#[derive(Args)]
struct StressArgs {
    #[arg(long, default_value = "any")]
    family: FamilyChoice,
    #[arg(long, default_value_t = 2)]
    dim: usize,
    #[arg(long, default_value_t = 100)]
    trials: usize,
    #[arg(long, default_value_t = 8)]
    restarts: usize,
    #[arg(long, default_value_t = 150)]
    iters: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Tolerance on the maximum Cauchy-Schwarz ratio.
    #[arg(long, default_value_t = 1e-7)]
    tol: f64,
}

#[derive(Args)]
struct ExploreArgs {
    #[arg(long, default_value_t = 100)]
    trials: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value = "any")]
    family: FamilyChoice,
}

/// A single norm family or `any` for a round-robin over all of them.
#[derive(Clone, Copy, Debug)]
enum FamilyChoice {
    Any,
    One(NormFamily),
}

impl FromStr for FamilyChoice {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        if s == "any" {
            return Ok(FamilyChoice::Any);
        }
        NormFamily::from_str(s)
            .map(FamilyChoice::One)
            .map_err(|_| {
                let names: Vec<_> = NormFamily::ALL.iter().map(|f| f.name()).collect();
                format!("unknown family {s:?}; expected any or one of {}", names.join(", "))
            })
    }
}

impl FamilyChoice {
    fn families(self, dim: usize) -> Vec<NormFamily> {
        match self {
            FamilyChoice::One(f) => vec![f],
            FamilyChoice::Any => NormFamily::ALL
                .into_iter()
                .filter(|f| *f != NormFamily::InducedC2 || dim == 2)
                .collect(),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    init_threads();
    match run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}

#[cfg(feature = "parallel")]
fn init_threads() {
    if let Ok(value) = std::env::var("POLARIZE_THREADS") {
        match value.parse::<usize>() {
            Ok(n) if n >= 1 => {
                let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
            }
            _ => eprintln!("warning: ignoring invalid POLARIZE_THREADS={value:?}"),
        }
    }
}

#[cfg(not(feature = "parallel"))]
fn init_threads() {}

fn run(cli: &Cli) -> Result<u8, String> {
    match &cli.command {
        Command::Product(args) => cmd_product(cli, args),
        Command::VerifyCsb(args) => cmd_verify_csb(cli, args),
        Command::ReproducePaper => cmd_reproduce_paper(cli),
        Command::Stress(args) => cmd_stress(cli, args),
        Command::ExploreConjecture(args) => cmd_explore_conjecture(cli, args),
    }
}

/// Inline JSON (starts with `{`) or a file path.
fn parse_norm_arg(arg: &str) -> Result<NormDescriptor, String> {
    let text = if arg.trim_start().starts_with('{') {
        arg.to_string()
    } else {
        std::fs::read_to_string(arg).map_err(|e| format!("cannot read norm file {arg:?}: {e}"))?
    };
    let descriptor: NormDescriptor =
        serde_json::from_str(&text).map_err(|e| format!("invalid norm descriptor: {e}"))?;
    descriptor
        .validate()
        .map_err(|e| format!("invalid norm descriptor: {e}"))?;
    Ok(descriptor)
}

fn parse_vector_arg(name: &str, arg: &str) -> Result<CVector, String> {
    serde_json::from_str(arg).map_err(|e| format!("invalid vector --{name}: {e}"))
}

fn cmd_product(cli: &Cli, args: &ProductArgs) -> Result<u8, String> {
    let norm = parse_norm_arg(&args.norm)?;
    let x = parse_vector_arg("x", &args.x)?;
    let y = parse_vector_arg("y", &args.y)?;

    let product = polarization_product(&norm, &x, &y).map_err(|e| e.to_string())?;
    let ratio = product.csb_ratio();

    let mut report = RunReport::new(
        "product",
        cli.deterministic,
        json!({ "norm": norm, "x": x, "y": y, "tol": args.tol }),
    );
    report.results = json!({
        "value": [product.value.re, product.value.im],
        "norm_x": product.norm_x,
        "norm_y": product.norm_y,
        "csb_ratio": ratio,
    });
    report.checks.push(CheckSummary {
        name: "csb_ratio_within_bound".into(),
        passed: ratio <= 1.0 + args.tol,
        margin: 1.0 - ratio,
    });

    if cli.pretty {
        eprintln!("⟨x|y⟩  = {:+.12} {:+.12}i", product.value.re, product.value.im);
        eprintln!("‖x‖    = {:.12}", product.norm_x);
        eprintln!("‖y‖    = {:.12}", product.norm_y);
        eprintln!("ratio  = {ratio:.12}");
    }
    Ok(report.emit())
}

fn trace_summaries(traces: &[ProofTrace]) -> (usize, usize, Vec<CheckSummary>) {
    let mut worst: BTreeMap<String, CheckSummary> = BTreeMap::new();
    let mut passed = 0;
    let mut failed = 0;
    for trace in traces {
        if trace.passed() {
            passed += 1;
        } else {
            failed += 1;
        }
        for check in &trace.checks {
            worst
                .entry(check.name.clone())
                .and_modify(|entry| {
                    if check.margin < entry.margin {
                        entry.margin = check.margin;
                    }
                    entry.passed &= check.passed;
                })
                .or_insert_with(|| CheckSummary::from(check));
        }
    }
    (passed, failed, worst.into_values().collect())
}

fn cmd_verify_csb(cli: &Cli, args: &VerifyArgs) -> Result<u8, String> {
    let tols = ProofTolerances {
        check: args.tol,
        final_bound: args.tol_final,
        ..ProofTolerances::default()
    };

    let (inputs, traces): (serde_json::Value, Vec<ProofTrace>) = match (&args.norm, args.family) {
        (Some(norm_arg), _) => {
            let norm = parse_norm_arg(norm_arg)?;
            let trace = verify_csb_proof_with(&norm, &tols).map_err(|e| e.to_string())?;
            (json!({ "norm": norm, "tol": args.tol, "tol_final": args.tol_final }), vec![trace])
        }
        (None, Some(choice)) => {
            let families = choice.families(2);
            let traces: Vec<Result<ProofTrace, String>> = batch_map(args.trials, |i| {
                let family = families[i % families.len()];
                let seed = child_seed(args.seed, i as u64);
                let norm = random_norm(family, 2, seed).map_err(|e| e.to_string())?;
                verify_csb_proof_with(&norm, &tols).map_err(|e| e.to_string())
            });
            let traces = traces.into_iter().collect::<Result<Vec<_>, _>>()?;
            (
                json!({
                    "family": families.iter().map(|f| f.name()).collect::<Vec<_>>(),
                    "trials": args.trials,
                    "seed": args.seed,
                    "tol": args.tol,
                    "tol_final": args.tol_final,
                }),
                traces,
            )
        }
        (None, None) => {
            return Err("either --norm or --family is required".into());
        }
    };

    let (passed, failed, checks) = trace_summaries(&traces);
    let mut report = RunReport::new("verify-csb", cli.deterministic, inputs);
    report.results = json!({
        "traces": traces,
        "summary": { "passed": passed, "failed": failed },
    });
    report.checks = checks;

    if cli.pretty {
        eprintln!("{passed} passed, {failed} failed");
        eprintln!("{:<28} {:>7} {:>14}", "check", "status", "worst margin");
        for check in &report.checks {
            eprintln!(
                "{:<28} {:>7} {:>14.3e}",
                check.name,
                if check.passed { "ok" } else { "FAIL" },
                check.margin
            );
        }
    }
    Ok(report.emit())
}

fn cmd_reproduce_paper(cli: &Cli) -> Result<u8, String> {
    let rows = reference::reproduce_rows().map_err(|e| e.to_string())?;

    let mut report = RunReport::new("reproduce-paper", cli.deterministic, json!({}));
    report.checks = rows
        .iter()
        .map(|row| CheckSummary {
            name: row.name.to_string(),
            passed: row.passed,
            margin: row.tolerance - row.abs_error,
        })
        .collect();
    report.results = json!({ "rows": rows });

    if cli.pretty {
        eprintln!(
            "{:<30} {:>24} {:>24} {:>12} {:>6}",
            "quantity", "reference", "computed", "|error|", "ok"
        );
        for row in &rows {
            eprintln!(
                "{:<30} {:>24} {:>24} {:>12.3e} {:>6}",
                row.name,
                row.reference.to_string(),
                row.computed.to_string(),
                row.abs_error,
                if row.passed { "yes" } else { "NO" }
            );
        }
    }
    Ok(report.emit())
}

fn cmd_stress(cli: &Cli, args: &StressArgs) -> Result<u8, String> {
    if args.trials < 1 {
        return Err("--trials must be at least 1".into());
    }
    let families = args.family.families(args.dim);
    if families.is_empty() {
        return Err(format!("no family applies at dim {}", args.dim));
    }
    if let FamilyChoice::One(NormFamily::InducedC2) = args.family {
        if args.dim != 2 {
            return Err("induced_c2 norms have dimension 2".into());
        }
    }

    let outcomes: Vec<Result<serde_json::Value, String>> = batch_map(args.trials, |i| {
        let family = families[i % families.len()];
        let seed = child_seed(args.seed, i as u64);
        let norm = random_norm(family, args.dim, seed).map_err(|e| e.to_string())?;
        let search = max_abs_product(&norm, args.restarts, args.iters, child_seed(seed, 1))
            .map_err(|e| e.to_string())?;
        Ok(json!({
            "trial": i,
            "family": family.name(),
            "seed": seed,
            "best_value": search.best_value,
            "converged": search.converged,
        }))
    });
    let outcomes = outcomes.into_iter().collect::<Result<Vec<_>, _>>()?;
    let max_ratio = outcomes
        .iter()
        .filter_map(|o| o["best_value"].as_f64())
        .fold(f64::MIN, f64::max);

    let mut report = RunReport::new(
        "stress",
        cli.deterministic,
        json!({
            "family": families.iter().map(|f| f.name()).collect::<Vec<_>>(),
            "dim": args.dim,
            "trials": args.trials,
            "restarts": args.restarts,
            "iters": args.iters,
            "seed": args.seed,
            "tol": args.tol,
        }),
    );
    report.results = json!({ "trials": outcomes, "max_ratio": max_ratio });
    report.checks.push(CheckSummary {
        name: "max_csb_ratio_within_bound".into(),
        passed: max_ratio <= 1.0 + args.tol,
        margin: 1.0 - max_ratio,
    });

    if cli.pretty {
        eprintln!(
            "{} trials over {:?}, max ratio {max_ratio:.12}",
            args.trials,
            families.iter().map(|f| f.name()).collect::<Vec<_>>()
        );
    }
    Ok(report.emit())
}

fn cmd_explore_conjecture(cli: &Cli, args: &ExploreArgs) -> Result<u8, String> {
    let families = args.family.families(2);
    let exploration =
        explore_conjecture(&families, args.trials, args.seed).map_err(|e| e.to_string())?;
    let flagged = exploration.flagged().len();

    let mut report = RunReport::new(
        "explore-conjecture",
        cli.deterministic,
        json!({
            "family": families.iter().map(|f| f.name()).collect::<Vec<_>>(),
            "trials": args.trials,
            "seed": args.seed,
        }),
    );
    // flags are findings for reproduction, not failures: no checks, so
    // the exit status stays 0 unless execution failed
    report.results = json!({ "report": exploration, "flagged": flagged });

    if cli.pretty {
        let worst_para = exploration
            .outcomes
            .iter()
            .map(|o| o.parallelogram_defect)
            .fold(0.0f64, f64::max);
        let worst_phase = exploration
            .outcomes
            .iter()
            .map(|o| o.phase_defect)
            .fold(0.0f64, f64::max);
        eprintln!(
            "{} trials, {flagged} flagged; worst parallelogram defect {worst_para:.3e}, worst phase defect {worst_phase:.3e}",
            args.trials
        );
    }
    Ok(report.emit())
}
