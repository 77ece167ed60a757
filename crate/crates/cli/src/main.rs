//! `lstat`: command-line front end for the L-function statistics library.
//!
//! Subcommands: `variance`, `correlate`, `hl`, `paircorr`, `model`, `coeffs`.
//! All outputs are CSV with `#` header lines echoing the full configuration.
//! Exit codes: 0 success, 2 invalid arguments, 3 data/cache integrity,
//! 4 capacity/budget exceeded.

mod commands;
mod config;
mod output;

use clap::{Args, Parser, Subcommand};
use std::path::PathBuf;
use std::process::ExitCode;

use lstat_core::Error;

#[derive(Parser, Debug)]
#[command(name = "lstat", version, about = "Arithmetic statistics of L-functions")]
struct Cli {
    /// Plain-text key=value config file supplying defaults (flags override).
    #[arg(long, global = true)]
    config: Option<PathBuf>,

    /// Coefficient cache directory (or set LSTAT_CACHE_DIR).
    #[arg(long, global = true)]
    cache_dir: Option<PathBuf>,

    /// Worker threads for the parallel scans (default: all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,

    /// Print the compute-budget estimate (memory, op count) and exit.
    #[arg(long, global = true)]
    dry_run: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Args)]
struct SpecArgs {
    /// L-function family: zeta | tau | ec.
    #[arg(long)]
    spec: String,

    /// Weierstrass tuple a1,a2,a3,a4,a6 (ec only).
    #[arg(long, allow_hyphen_values = true)]
    weierstrass: Option<String>,

    /// Elliptic-curve conductor (ec only).
    #[arg(long)]
    conductor: Option<u64>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Var^fix(X, h; F)/h over an h grid, with both regime predictions.
    Variance {
        #[command(flatten)]
        spec: SpecArgs,
        /// Sum windows over x = 1..X.
        #[arg(long)]
        x: u64,
        #[arg(long, default_value_t = 50.0)]
        h_min: f64,
        #[arg(long, default_value_t = 10_000.0)]
        h_max: f64,
        /// Geometric grid ratio (h -> ratio * h).
        #[arg(long, default_value_t = 1.1)]
        ratio: f64,
        /// Explicit comma-separated h values (overrides the geometric grid).
        #[arg(long)]
        h_list: Option<String>,
        /// Output CSV path (stdout when omitted).
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Arithmetic correlations C(r, N; F) as running averages.
    Correlate {
        #[command(flatten)]
        spec: SpecArgs,
        /// Comma-separated shifts r.
        #[arg(long)]
        r: String,
        #[arg(long)]
        n: u64,
        /// Checkpoint step.
        #[arg(long, default_value_t = 10_000)]
        step: u64,
        /// Output CSV path; multiple shifts write <stem>_r<r>.csv.
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Hardy-Littlewood singular series at shift r.
    Hl {
        #[arg(long, allow_hyphen_values = true)]
        r: i64,
        #[arg(long, default_value_t = 1_000_000)]
        cutoff: u64,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Montgomery pair-correlation statistic F(X, T) over a zeros file.
    Paircorr {
        /// File of zero ordinates, one per line.
        #[arg(long)]
        zeros: PathBuf,
        #[arg(long)]
        x: f64,
        #[arg(long)]
        t: f64,
        /// Restrict to pairs with |g_m - g_n| <= this cut (exact sum when omitted).
        #[arg(long)]
        delta_cut: Option<f64>,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Sine kernel and the zeta 2-point correlation model on an x grid.
    Model {
        /// Grid start:end:step.
        #[arg(long)]
        x_grid: String,
        /// Height T for the off-diagonal phase.
        #[arg(long, default_value_t = 1e6)]
        t: f64,
        #[arg(long, default_value_t = 100_000)]
        cutoff: u64,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Build or import a coefficient cache file.
    Coeffs {
        #[command(flatten)]
        spec: SpecArgs,
        /// Cover all primes <= limit.
        #[arg(long)]
        limit: u64,
        /// Import a legacy one-integer-per-line dump instead of computing.
        #[arg(long)]
        legacy_list: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(exit_code(&err))
        }
    }
}

fn exit_code(err: &Error) -> u8 {
    match err {
        Error::InvalidArgument(_) | Error::Domain(_) => 2,
        Error::DataIntegrity(_)
        | Error::Parse { .. }
        | Error::CorruptCache(_)
        | Error::InvariantViolation(_)
        | Error::Io(_) => 3,
        Error::Capacity(_) => 4,
    }
}

fn run(cli: Cli) -> Result<(), Error> {
    let settings = config::Settings::resolve(
        cli.config.as_deref(),
        cli.cache_dir.clone(),
        cli.threads,
    )?;
    if let Some(threads) = settings.threads {
        rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build_global()
            .map_err(|e| Error::InvalidArgument(format!("thread pool: {e}")))?;
    }
    match cli.command {
        Command::Variance {
            spec,
            x,
            h_min,
            h_max,
            ratio,
            h_list,
            output,
        } => commands::variance(
            &settings, &spec, x, h_min, h_max, ratio, h_list.as_deref(),
            output.as_deref(), cli.dry_run,
        ),
        Command::Correlate {
            spec,
            r,
            n,
            step,
            output,
        } => commands::correlate(&settings, &spec, &r, n, step, output.as_deref(), cli.dry_run),
        Command::Hl { r, cutoff, output } => {
            commands::hl(r, cutoff, output.as_deref(), cli.dry_run)
        }
        Command::Paircorr {
            zeros,
            x,
            t,
            delta_cut,
            output,
        } => commands::paircorr(&zeros, x, t, delta_cut, output.as_deref(), cli.dry_run),
        Command::Model {
            x_grid,
            t,
            cutoff,
            output,
        } => commands::model(&x_grid, t, cutoff, output.as_deref(), cli.dry_run),
        Command::Coeffs {
            spec,
            limit,
            legacy_list,
        } => commands::coeffs(&settings, &spec, limit, legacy_list.as_deref(), cli.dry_run),
    }
}
