//! Thin command-line front end over the disclab library.
//!
//! Subcommands mirror the library's capabilities: one-shot operations
//! (`project`, `squarefn`, `extremal`, `dual`, `approx`), the named
//! verification experiments (`verify <experiment>`), and `ledger build`.
//! Every subcommand takes `--config <path>` (JSON, strict schema) and
//! `--out <dir>`; common fields can be overridden on the command line.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use disclab::boundary::default_grid_size;
use disclab::dual::{best_analytic_approx, duality_gap, IrlsOptions};
use disclab::error::{Error, Result};
use disclab::experiments::config::{ExperimentConfig, KernelSpec};
use disclab::experiments::report::{ExperimentReport, FailureRecord, Row};
use disclab::experiments::runner::{experiment_names, run_experiment};
use disclab::extremal::{solve_bergman_extremal, solve_hardy_extremal, SolverOptions};
use disclab::grid::PolarGrid;
use disclab::projections::{bergman_project, szego_project};
use disclab::squarefn::{calderon_ratios, grad_modulus_power, square_function_profile, ConeSpec};
use disclab::TaylorPoly;

#[derive(Parser)]
#[command(name = "disclab", version, about = "Hardy/Bergman space laboratory")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct Common {
    /// JSON config file; command-line flags override its fields.
    #[arg(long)]
    config: Option<PathBuf>,
    /// Output directory for CSV/JSON reports.
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long)]
    seed: Option<u64>,
    /// Angular grid size (power of two).
    #[arg(long)]
    grid_m: Option<usize>,
    /// Radial quadrature order.
    #[arg(long)]
    grid_r: Option<usize>,
    #[arg(long)]
    degree_cap: Option<usize>,
    #[arg(long)]
    tol: Option<f64>,
}

#[derive(Subcommand)]
enum Command {
    /// Bergman/Szegő projection of the configured kernel.
    Project(Common),
    /// Square-function profile of |F|^δ for the configured kernel.
    Squarefn {
        #[command(flatten)]
        common: Common,
        /// Exponent δ in G = |F|^δ.
        #[arg(long, default_value_t = 1.0)]
        delta: f64,
        #[arg(long, default_value_t = 2.0)]
        p: f64,
    },
    /// Extremal problem for the configured kernel.
    Extremal {
        #[command(flatten)]
        common: Common,
        #[arg(long, default_value_t = 2.0)]
        p: f64,
        /// bergman or hardy.
        #[arg(long, default_value = "hardy")]
        space: String,
    },
    /// Minimal-norm dual problem and duality gap for the configured kernel.
    Dual {
        #[command(flatten)]
        common: Common,
        #[arg(long, default_value_t = 2.0)]
        p: f64,
    },
    /// Best analytic approximation of the configured boundary kernel.
    Approx {
        #[command(flatten)]
        common: Common,
        #[arg(long, default_value_t = 2.0)]
        p: f64,
    },
    /// Run a named verification experiment (`verify list` prints names).
    Verify {
        experiment: String,
        #[command(flatten)]
        common: Common,
    },
    /// Constants-ledger operations.
    Ledger {
        #[command(subcommand)]
        action: LedgerAction,
    },
}

#[derive(Subcommand)]
enum LedgerAction {
    /// Estimate all ledger constants on the seeded corpus.
    Build {
        #[command(flatten)]
        common: Common,
    },
}

fn load_config(common: &Common, experiment: &str) -> Result<ExperimentConfig> {
    let mut cfg = match &common.config {
        Some(path) => ExperimentConfig::from_json(&std::fs::read_to_string(path)?)?,
        None => ExperimentConfig::named(experiment),
    };
    cfg.experiment = experiment.to_string();
    if common.seed.is_some() {
        cfg.seed = common.seed;
    }
    if common.grid_m.is_some() {
        cfg.grid_m = common.grid_m;
    }
    if common.grid_r.is_some() {
        cfg.grid_r = common.grid_r;
    }
    if common.degree_cap.is_some() {
        cfg.degree_cap = common.degree_cap;
    }
    if common.tol.is_some() {
        cfg.tol = common.tol;
    }
    if let Some(out) = &common.out {
        cfg.out_dir = Some(out.to_string_lossy().into_owned());
    }
    Ok(cfg)
}

fn out_dir(cfg: &ExperimentConfig) -> PathBuf {
    cfg.out_dir
        .as_deref()
        .map(PathBuf::from)
        .unwrap_or_else(|| PathBuf::from("reports"))
}

fn kernel_poly(cfg: &ExperimentConfig) -> Result<TaylorPoly> {
    cfg.kernel
        .clone()
        .unwrap_or(KernelSpec::Coeffs {
            values: vec![[1.0, 0.0], [0.5, 0.0]],
        })
        .to_poly()
}

fn emit(report: &ExperimentReport, cfg: &ExperimentConfig) -> Result<bool> {
    let dir = out_dir(cfg);
    report.write_files(&dir)?;
    for row in &report.rows {
        println!(
            "[{}] {} {}: lhs={:.6e} rhs={:.6e} tol={:.1e}",
            if row.pass { "pass" } else { "FAIL" },
            row.kernel_id,
            row.p.map(|p| format!("p={p}")).unwrap_or_default(),
            row.lhs,
            row.rhs,
            row.tolerance,
        );
    }
    println!(
        "{}: {} rows, {}",
        report.experiment,
        report.rows.len(),
        if report.all_pass { "all pass" } else { "FAILURES" }
    );
    println!("reports written to {}", dir.display());
    Ok(report.all_pass)
}

fn simple_report(cfg: &ExperimentConfig, rows: Vec<Row>) -> ExperimentReport {
    let mut report = ExperimentReport::new(&cfg.experiment, cfg.clone());
    for row in rows {
        report.push(row);
    }
    report
}

fn row(cfg: &ExperimentConfig, id: &str, lhs: f64, rhs: f64, tol: f64, pass: bool) -> Row {
    Row {
        experiment: cfg.experiment.clone(),
        p: cfg.p,
        q: cfg.q,
        kernel_id: id.to_string(),
        lhs,
        rhs,
        ratio: if rhs != 0.0 && rhs.is_finite() { lhs / rhs } else { 0.0 },
        tolerance: tol,
        pass,
        grid_m: cfg.grid_m.unwrap_or(0),
        grid_r: cfg.grid_r.unwrap_or(0),
        seed: cfg.seed(),
    }
}

fn run(cli: Cli) -> Result<bool> {
    match cli.command {
        Command::Project(common) => {
            let cfg = load_config(&common, "project")?;
            let k = kernel_poly(&cfg)?;
            let m = cfg.grid_m.unwrap_or_else(|| default_grid_size(k.degree()));
            let n_r = cfg.grid_r.unwrap_or(64);
            let grid = PolarGrid::new(n_r, m)?;
            // analytic input: both projections must reproduce it
            let projected = bergman_project(&k.on_grid(&grid), &grid, k.degree())?;
            let samples = disclab::BoundarySamples::from_poly(&k, m)?;
            let szego = szego_project(&samples);
            let mut rows = Vec::new();
            for n in 0..=k.degree() {
                let err = (projected.coeff(n) - k.coeff(n)).norm();
                rows.push(row(&cfg, &format!("bergman-coeff-{n}"), err, 1e-10, 1e-10, err < 1e-10));
                let err = (szego.coeff(n) - k.coeff(n)).norm();
                rows.push(row(&cfg, &format!("szego-coeff-{n}"), err, 1e-10, 1e-10, err < 1e-10));
            }
            emit(&simple_report(&cfg, rows), &cfg)
        }
        Command::Squarefn { common, delta, p } => {
            let mut cfg = load_config(&common, "squarefn")?;
            cfg.p = Some(p);
            let k = kernel_poly(&cfg)?;
            let n_r = cfg.grid_r.unwrap_or(96);
            let m = cfg.grid_m.unwrap_or(256);
            let cone = ConeSpec {
                r_min: cfg.cone_r_min.unwrap_or(0.0),
                ..Default::default()
            };
            let ratios = calderon_ratios(&k, delta, p, n_r, m, &cone)?;
            let grid = PolarGrid::annulus(n_r, m, cone.r_min)?;
            let field = grad_modulus_power(&k, delta, &grid)?;
            let profile = square_function_profile(&field, &cone);
            let s_max = profile.iter().cloned().fold(0.0, f64::max);
            let rows = vec![
                row(&cfg, "ratio-upper", ratios.ratio_upper, f64::INFINITY, 0.0, ratios.ratio_upper.is_finite()),
                row(&cfg, "s-norm", ratios.s_norm, f64::INFINITY, 0.0, true),
                row(&cfg, "g-norm", ratios.g_norm, f64::INFINITY, 0.0, true),
                row(&cfg, "s-max", s_max, f64::INFINITY, 0.0, true),
            ];
            emit(&simple_report(&cfg, rows), &cfg)
        }
        Command::Extremal { common, p, space } => {
            let mut cfg = load_config(&common, "extremal")?;
            cfg.p = Some(p);
            let k = kernel_poly(&cfg)?;
            let opts = SolverOptions {
                degree_cap: cfg.degree_cap,
                tol: cfg.tol.unwrap_or(1e-6),
                ..Default::default()
            };
            let sol = match space.as_str() {
                "bergman" => solve_bergman_extremal(&k, p, &opts)?,
                "hardy" => solve_hardy_extremal(&k, p, &opts)?,
                other => {
                    return Err(Error::Config(format!(
                        "unknown space `{other}` (expected bergman or hardy)"
                    )))
                }
            };
            let rows = vec![
                row(&cfg, "lambda", sol.lambda, f64::INFINITY, 0.0, sol.lambda > 0.0),
                row(&cfg, "residual", sol.residual, opts.tol, opts.tol, sol.converged),
                row(&cfg, "iterations", sol.iterations as f64, f64::INFINITY, 0.0, true),
            ];
            emit(&simple_report(&cfg, rows), &cfg)
        }
        Command::Dual { common, p } => {
            let mut cfg = load_config(&common, "dual")?;
            cfg.p = Some(p);
            let m = cfg.grid_m.unwrap_or(256);
            let samples = cfg
                .kernel
                .clone()
                .unwrap_or(KernelSpec::Boundary {
                    pos: vec![[1.0, 0.0]],
                    neg: vec![[0.5, 0.0]],
                })
                .to_samples(m)?;
            let outcome = duality_gap(
                &samples,
                p,
                &SolverOptions::default(),
                &IrlsOptions::default(),
            )?;
            let rows = vec![
                row(&cfg, "primal", outcome.primal.lambda, f64::INFINITY, 0.0, true),
                row(&cfg, "dual", outcome.dual.min_norm, f64::INFINITY, 0.0, true),
                row(&cfg, "gap", outcome.gap, 1e-4, 1e-4, outcome.gap < 1e-4),
                row(
                    &cfg,
                    "kernel-residual",
                    outcome.kernel_residual,
                    1e-3,
                    1e-3,
                    outcome.kernel_residual < 1e-3,
                ),
            ];
            emit(&simple_report(&cfg, rows), &cfg)
        }
        Command::Approx { common, p } => {
            let mut cfg = load_config(&common, "approx")?;
            cfg.p = Some(p);
            let m = cfg.grid_m.unwrap_or(256);
            let samples = cfg
                .kernel
                .clone()
                .unwrap_or(KernelSpec::Boundary {
                    pos: vec![[1.0, 0.0]],
                    neg: vec![[0.5, 0.0]],
                })
                .to_samples(m)?;
            let (f, distance, dual) = best_analytic_approx(&samples, p, &IrlsOptions::default())?;
            let rows = vec![
                row(&cfg, "distance", distance, f64::INFINITY, 0.0, true),
                row(&cfg, "dual-objective", dual.min_norm, f64::INFINITY, 0.0, true),
                row(&cfg, "approx-degree", f.degree() as f64, f64::INFINITY, 0.0, true),
            ];
            emit(&simple_report(&cfg, rows), &cfg)
        }
        Command::Verify { experiment, common } => {
            if experiment == "list" {
                for name in experiment_names() {
                    println!("{name}");
                }
                return Ok(true);
            }
            let cfg = load_config(&common, &experiment)?;
            let report = run_experiment(&cfg)?;
            let ok = emit(&report, &cfg)?;
            if !ok {
                let record = FailureRecord {
                    experiment: experiment.clone(),
                    failed_rows: report.rows.iter().filter(|r| !r.pass).cloned().collect(),
                    message: "one or more criteria failed".into(),
                };
                eprintln!("{}", serde_json::to_string(&record)?);
            }
            Ok(ok)
        }
        Command::Ledger { action } => {
            let LedgerAction::Build { common } = action;
            let cfg = load_config(&common, "ledger-build")?;
            let report = run_experiment(&cfg)?;
            emit(&report, &cfg)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(2),
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(1)
        }
    }
}
