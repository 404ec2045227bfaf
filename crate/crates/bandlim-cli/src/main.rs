//! Command-line front end for band-limited reconstruction experiments:
//! coefficient tables, truncation-error sweeps, seam-residual audits, and
//! single-point reconstructions, all as deterministic CSV.

mod commands;
mod config;

use anyhow::{bail, Result};
use clap::{Parser, Subcommand};
use commands::IntegrityFailure;
use config::Overrides;
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "bandlim",
    version,
    about = "Reconstruction of band-limited signals from integer samples"
)]
struct Cli {
    /// Flat "key = value" config file; flags override its entries
    #[arg(long, global = true)]
    config: Option<PathBuf>,

    /// Band edge in radians, or a pi fraction like "5pi/6"
    #[arg(long, global = true)]
    omega: Option<String>,

    /// Growth exponent (default: the signal's own)
    #[arg(long, global = true)]
    alpha: Option<f64>,

    /// Smoothness order 1..=6 (default: smallest order above alpha + 1/2)
    #[arg(long, global = true)]
    d: Option<u32>,

    /// Grid parameter override (even, pi N/(N+1) > omega)
    #[arg(long = "N", global = true)]
    n: Option<u32>,

    /// Evaluation time
    #[arg(long, global = true, allow_negative_numbers = true)]
    t: Option<f64>,

    /// Comma-separated window half-widths
    #[arg(long = "L", global = true)]
    l: Option<String>,

    /// Comma-separated methods: classical, d1, general
    #[arg(long, global = true)]
    method: Option<String>,

    /// Test signal: sinc-combo | linear-growth | tone:<omega0>:<degree>
    #[arg(long, global = true)]
    signal: Option<String>,

    /// Output CSV path (default: stdout)
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    /// Quadrature panels per transition band
    #[arg(long, global = true)]
    panels: Option<u32>,

    /// Gauss-Legendre nodes per panel (2..=64)
    #[arg(long, global = true)]
    nodes: Option<u32>,

    #[command(subcommand)]
    command: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Coefficient window table with difference and decay diagnostics
    Coeffs,
    /// Truncation-error table over every (method, L) pair
    Sweep,
    /// Seam-residual audit of the spectral splice over a tau grid
    Seams,
    /// Single-point reconstruction report at the first L
    Interp,
}

fn thread_cap() -> Result<()> {
    match std::env::var("BANDLIM_THREADS") {
        Ok(raw) => match raw.parse::<usize>() {
            Ok(n) if n >= 1 => {
                rayon::ThreadPoolBuilder::new()
                    .num_threads(n)
                    .build_global()
                    .expect("the global thread pool is built before any parallel work");
                Ok(())
            }
            _ => bail!("BANDLIM_THREADS must be a positive integer, got {raw:?}"),
        },
        Err(_) => Ok(()),
    }
}

fn run(cli: Cli) -> Result<()> {
    thread_cap()?;
    let flags = Overrides {
        omega: cli.omega,
        alpha: cli.alpha,
        d: cli.d,
        n: cli.n,
        t: cli.t,
        ls: cli.l,
        methods: cli.method,
        signal: cli.signal,
        out: cli.out,
        panels: cli.panels,
        nodes: cli.nodes,
    };
    let run_config = config::resolve(flags, cli.config.as_deref())?;
    match cli.command {
        Cmd::Coeffs => commands::cmd_coeffs(&run_config),
        Cmd::Sweep => commands::cmd_sweep(&run_config),
        Cmd::Seams => commands::cmd_seams(&run_config),
        Cmd::Interp => commands::cmd_interp(&run_config),
    }
}

fn exit_code_for(err: &anyhow::Error) -> u8 {
    if err.is::<IntegrityFailure>() {
        return 3;
    }
    if let Some(lib) = err.downcast_ref::<bandlim::Error>() {
        return match lib {
            bandlim::Error::ImaginaryResidual { .. } => 3,
            _ => 2,
        };
    }
    if err.is::<std::io::Error>() {
        return 1;
    }
    2
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(exit_code_for(&err))
        }
    }
}
